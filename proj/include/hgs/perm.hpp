#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "hgs/group.hpp"
#include "hgs/morphisms.hpp"
#include "hgs/subgroups.hpp"

namespace hgs {

/// A permutation of 0..n-1 as its image array.
using Perm = std::vector<Element>;

inline Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Element{0});
  return p;
}

/// (p ∘ q)[x] = p[q[x]].
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

inline Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<Element>(x);
  return r;
}

inline bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (Element e : p) {
    if (e >= p.size() || seen[e]) return false;
    seen[e] = 1;
  }
  return true;
}

/// lcm of the cycle lengths.
inline std::size_t perm_order(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::size_t order = 1;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

inline bool is_fixed_point_free(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] == x) return false;
  return true;
}

/// λ(σ)[τ] = στ, indexed by σ.
inline std::vector<Perm> left_regular(const FiniteGroup& g) {
  std::vector<Perm> out(g.order());
  for (Element s = 0; s < g.order(); ++s) out[s].assign(g.row(s).begin(), g.row(s).end());
  return out;
}

/// ρ(σ)[τ] = τσ⁻¹, indexed by σ.
inline std::vector<Perm> right_regular(const FiniteGroup& g) {
  std::vector<Perm> out(g.order(), Perm(g.order()));
  for (Element s = 0; s < g.order(); ++s)
    for (Element t = 0; t < g.order(); ++t) out[s][t] = g.mul(t, g.inv(s));
  return out;
}

/// Calls visit(perm) for every τ ↦ a·φ(τ), a ∈ N, φ ∈ Aut(N), without storing them.
inline void for_each_holomorph_element(const FiniteGroup& n, const std::vector<GroupMap>& auts,
                                       const std::function<void(const Perm&)>& visit) {
  Perm p(n.order());
  for (Element a = 0; a < n.order(); ++a)
    for (const auto& phi : auts) {
      for (Element t = 0; t < n.order(); ++t) p[t] = n.mul(a, phi(t));
      visit(p);
    }
}

/// The holomorph of N acting on its elements, sorted and duplicate-free.
inline std::vector<Perm> holomorph(const FiniteGroup& n) {
  std::vector<Perm> out;
  for_each_holomorph_element(n, automorphisms(n), [&](const Perm& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// A regular permutation group on 0..n-1. The canonical form is the sorted list
/// of image arrays; at_point(x) is the unique member sending 0 to x.
class RegularSubgroup {
 public:
  static RegularSubgroup make(std::vector<Perm> elements) {
    const std::size_t n = elements.size();
    if (n == 0) detail::fail(ErrorCode::NotRegular, "empty permutation set");
    std::vector<Perm> by_point(n);
    std::vector<char> seen(n, 0);
    for (auto& p : elements) {
      if (p.size() != n || !is_permutation(p)) detail::fail(ErrorCode::NotRegular, "member is not a permutation of the right degree");
      if (seen[p[0]]) detail::fail(ErrorCode::NotRegular, "evaluation at 0 is not injective");
      seen[p[0]] = 1;
      by_point[p[0]] = p;
    }
    for (const auto& p : elements)
      for (const auto& q : elements) {
        Perm r = compose(p, q);
        if (by_point[r[0]] != r) detail::fail(ErrorCode::NotRegular, "set is not closed under composition");
      }
    std::sort(elements.begin(), elements.end());
    RegularSubgroup out;
    out.elements_ = std::move(elements);
    out.by_point_ = std::move(by_point);
    return out;
  }

  std::size_t degree() const noexcept { return by_point_.size(); }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const Perm& at_point(Element x) const { return by_point_[x]; }
  bool contains(const Perm& p) const { return p.size() == degree() && by_point_[p[0]] == p; }

  friend bool operator==(const RegularSubgroup& a, const RegularSubgroup& b) { return a.elements_ == b.elements_; }
  friend bool operator<(const RegularSubgroup& a, const RegularSubgroup& b) { return a.elements_ < b.elements_; }

 private:
  std::vector<Perm> elements_;
  std::vector<Perm> by_point_;
};

namespace detail {

/// Grows partial semiregular groups one point at a time: for the least point
/// not yet reached from 0, try every candidate sending 0 there, close, and
/// abandon the branch as soon as two members agree at 0. With conjugators the
/// generating set is also closed under conjugation, so every group produced is
/// normalized by them.
class RegularSearch {
 public:
  RegularSearch(std::size_t n, std::vector<std::vector<Perm>> candidates_at, std::vector<Perm> conjugators)
      : n_(n), candidates_at_(std::move(candidates_at)), conjugators_(std::move(conjugators)) {
    for (const auto& c : conjugators_) conjugator_inverses_.push_back(invert(c));
  }

  std::vector<RegularSubgroup> run() {
    found_.clear();
    visited_.clear();
    State s;
    s.by_point.assign(n_, Perm{});
    s.by_point[0] = identity_perm(n_);
    s.members = {0};
    descend(s);
    std::vector<RegularSubgroup> out;
    for (const auto& key : found_) {
      std::vector<Perm> members;
      for (std::size_t x = 0; x < n_; ++x) members.emplace_back(key.begin() + x * n_, key.begin() + (x + 1) * n_);
      out.push_back(RegularSubgroup::make(std::move(members)));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct State {
    std::vector<Perm> by_point;  // empty where no member reaches the point
    std::vector<Element> members;  // points that are covered
    std::vector<Perm> gens;
  };

  std::vector<Element> key(const State& s) const {
    std::vector<Element> k;
    k.reserve(n_ * n_);
    for (const auto& p : s.by_point) {
      if (p.empty()) k.insert(k.end(), n_, static_cast<Element>(-1));
      else k.insert(k.end(), p.begin(), p.end());
    }
    return k;
  }

  /// Adds a generator and recloses; false on a stabilizer collision.
  bool add_generator(State& s, const Perm& g) const {
    std::vector<Perm> fresh{g};
    for (std::size_t c = 0; c < conjugators_.size(); ++c)
      fresh.push_back(compose(compose(conjugators_[c], g), conjugator_inverses_[c]));
    for (auto& f : fresh) {
      const Perm& at = s.by_point[f[0]];
      if (!at.empty() && at != f) return false;
      s.gens.push_back(std::move(f));
    }
    // Re-close from scratch: right multiplication by all generators.
    for (std::size_t i = 0; i < s.members.size(); ++i) {
      const Perm cur = s.by_point[s.members[i]];
      for (const auto& gen : s.gens) {
        Perm r = compose(cur, gen);
        Perm& slot = s.by_point[r[0]];
        if (slot.empty()) {
          s.members.push_back(r[0]);
          slot = std::move(r);
        } else if (slot != r) {
          return false;
        }
      }
    }
    return true;
  }

  void descend(const State& s) {
    if (s.members.size() == n_) {
      found_.insert(key(s));
      return;
    }
    Element target = 0;
    while (!s.by_point[target].empty()) ++target;
    for (const auto& cand : candidates_at_[target]) {
      State next = s;
      if (!add_generator(next, cand)) continue;
      if (n_ % next.members.size() != 0) continue;
      if (!visited_.insert(key(next)).second) continue;
      descend(next);
    }
  }

  std::size_t n_;
  std::vector<std::vector<Perm>> candidates_at_;
  std::vector<Perm> conjugators_;
  std::vector<Perm> conjugator_inverses_;
  std::set<std::vector<Element>> visited_;
  std::set<std::vector<Element>> found_;
};

inline bool usable_generator(const Perm& p, std::size_t n) {
  return is_fixed_point_free(p) && n % perm_order(p) == 0;
}

}  // namespace detail

/// Every subgroup of Hol(N) of order |N| acting regularly, sorted canonically.
inline std::vector<RegularSubgroup> regular_subgroups_in_holomorph(const FiniteGroup& n) {
  const std::size_t k = n.order();
  std::vector<std::vector<Perm>> at(k);
  for_each_holomorph_element(n, automorphisms(n), [&](const Perm& p) {
    if (p[0] != 0 && detail::usable_generator(p, k)) at[p[0]].push_back(p);
  });
  for (auto& v : at) std::sort(v.begin(), v.end());
  return detail::RegularSearch(k, std::move(at), {}).run();
}

/// a*b = (η_a ∘ η_b)[0].
inline FiniteGroup transport_operation(const RegularSubgroup& r) {
  return make_group_from(r.degree(), [&](Element a, Element b) { return r.at_point(a)[b]; });
}

inline bool is_normalized_by(const RegularSubgroup& r, const std::vector<Perm>& perms) {
  for (const auto& l : perms) {
    const Perm li = invert(l);
    for (const auto& eta : r.elements())
      if (!r.contains(compose(compose(l, eta), li))) return false;
  }
  return true;
}

struct OracleOptions {
  std::size_t max_order = 8;
};

/// Every regular subgroup of Sym(0..n-1) normalized by λ(G), by exhaustive
/// search over fixed-point-free permutations of order dividing n.
inline std::vector<RegularSubgroup> regular_subgroups_normalized_by(const FiniteGroup& g, OracleOptions options = {}) {
  const std::size_t n = g.order();
  if (n > options.max_order)
    detail::fail(ErrorCode::OrderTooLargeForOracle, "order " + std::to_string(n) + " exceeds oracle bound " + std::to_string(options.max_order));
  std::vector<std::vector<Perm>> at(n);
  Perm p = identity_perm(n);
  do {
    if (p[0] != 0 && detail::usable_generator(p, n)) at[p[0]].push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto lambda = left_regular(g);
  auto found = detail::RegularSearch(n, std::move(at), lambda).run();
  for (const auto& r : found) detail::check_internal(is_normalized_by(r, lambda), "oracle subgroup is not normalized by λ(G)");
  return found;
}

/// a*b = ν(ν⁻¹(b) ∘ ν⁻¹(a)) with ν(η) = η[0]; together with G this is a skew brace.
inline FiniteGroup operation_from_regular_subgroup(const RegularSubgroup& r, const FiniteGroup& g) {
  if (r.degree() != g.order()) detail::fail(ErrorCode::NotRegular, "degree differs from group order");
  if (!is_normalized_by(r, left_regular(g))) detail::fail(ErrorCode::NotNormalized, "subgroup is not normalized by the left regular representation");
  return make_group_from(g.order(), [&](Element a, Element b) { return r.at_point(b)[a]; });
}

namespace detail {

/// Keeps the least member of each orbit of Aut(N) acting on sorted by conjugation.
inline std::vector<Perm> conjugation_orbit_minima(const std::vector<Perm>& sorted, const std::vector<GroupMap>& auts) {
  std::set<Perm> covered;
  std::vector<Perm> out;
  for (const auto& p : sorted) {
    if (covered.count(p)) continue;
    out.push_back(p);
    for (const auto& phi : auts) covered.insert(compose(phi.images, compose(p, phi.inverse().images)));
  }
  return out;
}

}  // namespace detail

/// Enumerates the injective homomorphisms f: G → Hol(N) with regular image.
/// visit receives f as images indexed by the elements of G; returns false to stop.
/// Each regular subgroup isomorphic to G is reached |Aut(G)| times. With
/// up_to_aut_n, only embeddings whose first generator image is least in its
/// Aut(N)-conjugacy orbit are visited; every Aut(N)-conjugacy class of regular
/// subgroups is still reached.
inline void for_each_regular_embedding(const FiniteGroup& g, const FiniteGroup& n,
                                       const std::function<bool(const std::vector<Perm>&)>& visit,
                                       bool up_to_aut_n = false) {
  if (g.order() != n.order()) return;
  const std::size_t k = g.order();
  const auto gens = greedy_generators(g);
  const auto orders = element_orders(g);
  const auto auts = automorphisms(n);
  std::vector<std::vector<Perm>> cand(gens.size());
  for_each_holomorph_element(n, auts, [&](const Perm& p) {
    if (p[0] == 0) return;
    if (!is_fixed_point_free(p)) return;
    const std::size_t o = perm_order(p);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (orders[gens[i]] == o) cand[i].push_back(p);
  });
  for (auto& v : cand) std::sort(v.begin(), v.end());
  if (up_to_aut_n && !cand.empty()) cand[0] = detail::conjugation_orbit_minima(cand[0], auts);

  bool stopped = false;
  std::vector<Perm> img(k);
  img[0] = identity_perm(k);

  std::function<void(std::size_t, const std::vector<Perm>&)> descend = [&](std::size_t level, const std::vector<Perm>& cur) {
    if (stopped) return;
    if (level == gens.size()) {
      if (!visit(cur)) stopped = true;
      return;
    }
    std::vector<char> taken(k, 0);
    for (const auto& p : cur)
      if (!p.empty()) taken[p[0]] = 1;
    for (const auto& c : cand[level]) {
      if (stopped) return;
      if (taken[c[0]]) continue;
      std::vector<Perm> next = cur;
      std::vector<char> used = taken;
      next[gens[level]] = c;
      used[c[0]] = 1;
      std::vector<Element> frontier;
      for (Element x = 0; x < k; ++x)
        if (!next[x].empty()) frontier.push_back(x);
      bool ok = true;
      for (std::size_t i = 0; i < frontier.size() && ok; ++i) {
        const Element x = frontier[i];
        for (std::size_t j = 0; j <= level && ok; ++j) {
          const Element y = g.mul(x, gens[j]);
          Perm r = compose(next[x], next[gens[j]]);
          if (next[y].empty()) {
            if (used[r[0]]) {
              ok = false;
            } else {
              used[r[0]] = 1;
              next[y] = std::move(r);
              frontier.push_back(y);
            }
          } else if (next[y] != r) {
            ok = false;
          }
        }
      }
      if (ok) descend(level + 1, next);
    }
  };
  if (gens.empty()) {
    visit(img);
    return;
  }
  descend(0, img);
}

}  // namespace hgs
