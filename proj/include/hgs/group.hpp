#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hgs/error.hpp"

namespace hgs {

using Element = std::uint32_t;
using Table = std::vector<std::vector<Element>>;

class FiniteGroup;
inline FiniteGroup make_group_flat(std::size_t n, std::vector<Element> cells);

/// A finite group given by its Cayley table on the labels 0..n-1, with 0 the
/// identity. Instances only come out of make_group, so every live value
/// satisfies the group axioms.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(1, {0}, {0}) {}

  std::size_t order() const noexcept { return n_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return cells_[a * n_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }

  std::span<const Element> row(Element a) const noexcept {
    return {cells_.data() + a * n_, n_};
  }
  std::span<const Element> cells() const noexcept { return cells_; }
  std::span<const Element> inverses() const noexcept { return inverse_; }

  Table table() const {
    Table t(n_);
    for (std::size_t a = 0; a < n_; ++a) t[a].assign(row(static_cast<Element>(a)).begin(), row(static_cast<Element>(a)).end());
    return t;
  }

  friend bool operator==(const FiniteGroup& x, const FiniteGroup& y) { return x.cells_ == y.cells_; }
  friend bool operator<(const FiniteGroup& x, const FiniteGroup& y) { return x.cells_ < y.cells_; }

 private:
  FiniteGroup(std::size_t n, std::vector<Element> cells, std::vector<Element> inverse)
      : n_(n), cells_(std::move(cells)), inverse_(std::move(inverse)) {}

  friend FiniteGroup make_group_flat(std::size_t n, std::vector<Element> cells);

  std::size_t n_;
  std::vector<Element> cells_;
  std::vector<Element> inverse_;
};

/// A subgroup (or any element subset) stored as a strictly increasing list.
class SubgroupSet {
 public:
  SubgroupSet() : elements_{0} {}

  /// Sorts and deduplicates.
  static SubgroupSet from_elements(std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    SubgroupSet s;
    s.elements_ = std::move(elements);
    return s;
  }

  static SubgroupSet from_mask(const std::vector<char>& mask) {
    SubgroupSet s;
    s.elements_.clear();
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) s.elements_.push_back(static_cast<Element>(i));
    return s;
  }

  static SubgroupSet whole(std::size_t n) {
    SubgroupSet s;
    s.elements_.resize(n);
    std::iota(s.elements_.begin(), s.elements_.end(), Element{0});
    return s;
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  bool contains(Element a) const { return std::binary_search(elements_.begin(), elements_.end(), a); }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  std::vector<char> mask(std::size_t n) const {
    std::vector<char> m(n, 0);
    for (Element e : elements_) m[e] = 1;
    return m;
  }

  bool is_subset_of(const SubgroupSet& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
  }

  friend bool operator==(const SubgroupSet&, const SubgroupSet&) = default;
  friend auto operator<=>(const SubgroupSet& x, const SubgroupSet& y) { return x.elements_ <=> y.elements_; }

 private:
  std::vector<Element> elements_;
};

/// A map between labeled groups; images[a] is the image of a.
struct GroupMap {
  std::vector<Element> images;

  Element operator()(Element a) const { return images[a]; }
  std::size_t size() const noexcept { return images.size(); }

  static GroupMap identity(std::size_t n) {
    GroupMap m;
    m.images.resize(n);
    std::iota(m.images.begin(), m.images.end(), Element{0});
    return m;
  }

  GroupMap inverse() const {
    GroupMap m;
    m.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) m.images[images[i]] = static_cast<Element>(i);
    return m;
  }

  /// (this ∘ inner)(a) = this(inner(a)).
  GroupMap after(const GroupMap& inner) const {
    GroupMap m;
    m.images.resize(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) m.images[i] = images[inner.images[i]];
    return m;
  }

  bool is_bijective() const {
    std::vector<char> seen(images.size(), 0);
    for (Element e : images) {
      if (e >= images.size() || seen[e]) return false;
      seen[e] = 1;
    }
    return true;
  }

  friend bool operator==(const GroupMap&, const GroupMap&) = default;
  friend auto operator<=>(const GroupMap&, const GroupMap&) = default;
};

namespace detail {

inline std::string elt(std::size_t a) { return std::to_string(a); }

}  // namespace detail

/// Validates a flat row-major table and computes inverses.
inline FiniteGroup make_group_flat(std::size_t n, std::vector<Element> cells) {
  if (n == 0) detail::fail(ErrorCode::BadTable, "empty table");
  if (cells.size() != n * n) detail::fail(ErrorCode::BadTable, "table is not square");
  for (Element c : cells)
    if (c >= n) detail::fail(ErrorCode::BadTable, "entry " + detail::elt(c) + " out of range");

  auto at = [&](std::size_t a, std::size_t b) { return cells[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a)
      detail::fail(ErrorCode::NoIdentityAtZero, "0 is not an identity for element " + detail::elt(a));
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(a, b)]) detail::fail(ErrorCode::NotLatinSquare, "row " + detail::elt(a) + " repeats " + detail::elt(at(a, b)));
      seen[at(a, b)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(b, a)]) detail::fail(ErrorCode::NotLatinSquare, "column " + detail::elt(a) + " repeats " + detail::elt(at(b, a)));
      seen[at(b, a)] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          detail::fail(ErrorCode::NotAssociative, "(" + detail::elt(a) + "*" + detail::elt(b) + ")*" + detail::elt(c) +
                                                      " != " + detail::elt(a) + "*(" + detail::elt(b) + "*" + detail::elt(c) + ")");
    }
  std::vector<Element> inverse(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (at(a, b) == 0) inverse[a] = static_cast<Element>(b);
  return FiniteGroup(n, std::move(cells), std::move(inverse));
}

inline FiniteGroup make_group(const Table& table) {
  const std::size_t n = table.size();
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      detail::fail(ErrorCode::BadTable, "row " + detail::elt(a) + " has " + detail::elt(table[a].size()) + " entries, expected " + detail::elt(n));
    cells.insert(cells.end(), table[a].begin(), table[a].end());
  }
  return make_group_flat(n, std::move(cells));
}

/// Builds a group from any binary operation on 0..n-1.
template <typename Op>
FiniteGroup make_group_from(std::size_t n, Op&& op) {
  std::vector<Element> cells(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cells[a * n + b] = static_cast<Element>(op(static_cast<Element>(a), static_cast<Element>(b)));
  return make_group_flat(n, std::move(cells));
}

inline FiniteGroup trivial_group() { return make_group_flat(1, {0}); }

inline FiniteGroup opposite_group(const FiniteGroup& g) {
  return make_group_from(g.order(), [&](Element a, Element b) { return g.mul(b, a); });
}

/// Relabels g along a bijection that fixes 0: the result has
/// relabel(a)*relabel(b) = relabel(a*b).
inline FiniteGroup transport(const FiniteGroup& g, const GroupMap& relabel) {
  const GroupMap back = relabel.inverse();
  return make_group_from(g.order(), [&](Element a, Element b) { return relabel(g.mul(back(a), back(b))); });
}

inline std::size_t element_order(const FiniteGroup& g, Element a) {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = g.mul(x, a)) ++k;
  return k;
}

inline std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> out(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) out[a] = element_order(g, static_cast<Element>(a));
  return out;
}

/// Sorted multiset of element orders; an isomorphism invariant.
inline std::vector<std::size_t> order_profile(const FiniteGroup& g) {
  auto v = element_orders(g);
  std::sort(v.begin(), v.end());
  return v;
}

inline std::size_t exponent(const FiniteGroup& g) {
  std::size_t e = 1;
  for (std::size_t k : element_orders(g)) e = std::lcm(e, k);
  return e;
}

inline bool is_abelian(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

inline bool is_cyclic(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    if (element_order(g, a) == g.order()) return true;
  return false;
}

inline bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupMap& f) {
  if (f.size() != src.order()) return false;
  for (Element e : f.images)
    if (e >= dst.order()) return false;
  for (Element a = 0; a < src.order(); ++a)
    for (Element b = 0; b < src.order(); ++b)
      if (f(src.mul(a, b)) != dst.mul(f(a), f(b))) return false;
  return true;
}

inline bool is_automorphism(const FiniteGroup& g, const GroupMap& f) {
  return f.size() == g.order() && f.is_bijective() && is_homomorphism(g, g, f);
}

/// Conjugation x ↦ a x a⁻¹.
inline GroupMap inner_automorphism(const FiniteGroup& g, Element a) {
  GroupMap m;
  m.images.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) m.images[x] = g.mul(g.mul(a, x), g.inv(a));
  return m;
}

}  // namespace hgs
