#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "hgs/group.hpp"
#include "hgs/subgroups.hpp"

namespace hgs {

namespace detail {

/// Backtracking over images of the greedy generating set of `src`. Each level
/// fixes one generator image and extends the partial map along every
/// (element, generator) edge of the generated subgroup, rejecting on the first
/// inconsistent edge. A complete consistent map is a homomorphism.
/// `visit` returns false to stop the search.
class HomSearch {
 public:
  HomSearch(const FiniteGroup& src, const FiniteGroup& dst, bool injective)
      : src_(src), dst_(dst), injective_(injective), gens_(greedy_generators(src)),
        src_orders_(element_orders(src)), dst_orders_(element_orders(dst)) {}

  void run(const std::function<bool(const GroupMap&)>& visit) {
    if (injective_ && src_.order() != dst_.order()) return;
    std::vector<Element> img(src_.order(), kUnset);
    img[0] = 0;
    stopped_ = false;
    descend(0, img, visit);
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  bool extend(std::size_t level, std::vector<Element>& img) const {
    std::vector<char> used;
    if (injective_) {
      used.assign(dst_.order(), 0);
      for (Element e : img)
        if (e != kUnset) used[e] = 1;
    }
    std::vector<Element> frontier;
    for (Element x = 0; x < src_.order(); ++x)
      if (img[x] != kUnset) frontier.push_back(x);
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const Element x = frontier[i];
      for (std::size_t j = 0; j <= level; ++j) {
        const Element g = gens_[j];
        const Element y = src_.mul(x, g);
        const Element fy = dst_.mul(img[x], img[g]);
        if (img[y] == kUnset) {
          if (injective_) {
            if (used[fy]) return false;
            used[fy] = 1;
          }
          img[y] = fy;
          frontier.push_back(y);
        } else if (img[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t level, const std::vector<Element>& img,
               const std::function<bool(const GroupMap&)>& visit) {
    if (stopped_) return;
    if (level == gens_.size()) {
      if (!visit(GroupMap{img})) stopped_ = true;
      return;
    }
    const Element g = gens_[level];
    const std::size_t k = src_orders_[g];
    for (Element c = 0; c < dst_.order() && !stopped_; ++c) {
      if (injective_ ? dst_orders_[c] != k : k % dst_orders_[c] != 0) continue;
      std::vector<Element> next = img;
      if (injective_) {
        bool taken = false;
        for (Element e : next) taken = taken || e == c;
        if (taken) continue;
      }
      next[g] = c;
      if (extend(level, next)) descend(level + 1, next, visit);
    }
  }

  const FiniteGroup& src_;
  const FiniteGroup& dst_;
  bool injective_;
  std::vector<Element> gens_;
  std::vector<std::size_t> src_orders_;
  std::vector<std::size_t> dst_orders_;
  bool stopped_ = false;
};

}  // namespace detail

/// Every homomorphism src → dst, in backtracking order.
inline std::vector<GroupMap> homomorphisms(const FiniteGroup& src, const FiniteGroup& dst) {
  std::vector<GroupMap> out;
  detail::HomSearch(src, dst, false).run([&](const GroupMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

/// The full automorphism group as explicit maps; the identity comes first.
inline std::vector<GroupMap> automorphisms(const FiniteGroup& g) {
  std::vector<GroupMap> out;
  detail::HomSearch(g, g, true).run([&](const GroupMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

/// First isomorphism in backtracking order, if any.
inline std::optional<GroupMap> isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order() || order_profile(g) != order_profile(h)) return std::nullopt;
  std::optional<GroupMap> found;
  detail::HomSearch(g, h, true).run([&](const GroupMap& m) {
    found = m;
    return false;
  });
  return found;
}

inline bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) { return isomorphism(g, h).has_value(); }

inline SubgroupSet image(const GroupMap& f, const SubgroupSet& s) {
  std::vector<Element> out;
  out.reserve(s.size());
  for (Element a : s) out.push_back(f(a));
  return SubgroupSet::from_elements(std::move(out));
}

struct DistinguishedSubgroups {
  SubgroupSet center;
  SubgroupSet norm;
  std::vector<SubgroupSet> characteristic;
  std::vector<SubgroupSet> normal;
};

inline std::vector<SubgroupSet> characteristic_subgroups(const FiniteGroup&,
                                                         const std::vector<SubgroupSet>& all,
                                                         const std::vector<GroupMap>& auts) {
  std::vector<SubgroupSet> out;
  for (const auto& s : all) {
    bool fixed = true;
    for (const auto& f : auts) {
      if (image(f, s) != s) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(s);
  }
  return out;
}

inline std::vector<SubgroupSet> characteristic_subgroups(const FiniteGroup& g) {
  return characteristic_subgroups(g, subgroups(g), automorphisms(g));
}

inline DistinguishedSubgroups distinguished_subgroups(const FiniteGroup& g) {
  const auto all = subgroups(g);
  DistinguishedSubgroups d;
  d.center = center(g);
  d.norm = SubgroupSet::whole(g.order());
  for (const auto& s : all) d.norm = intersection(d.norm, normalizer(g, s));
  d.characteristic = characteristic_subgroups(g, all, automorphisms(g));
  for (const auto& s : all)
    if (is_normal(g, s)) d.normal.push_back(s);
  return d;
}

/// φ(τ) ∈ ⟨τ⟩ for every τ. The subgroup-wise characterisation is evaluated as
/// well and the two must agree.
inline bool is_power_automorphism(const FiniteGroup& g, const GroupMap& phi) {
  if (!is_automorphism(g, phi)) detail::fail(ErrorCode::NotAutomorphism, "map is not an automorphism");
  bool elementwise = true;
  for (Element t = 0; t < g.order() && elementwise; ++t) elementwise = cyclic_subgroup(g, t).contains(phi(t));
  bool subgroupwise = true;
  for (const auto& s : subgroups(g)) {
    if (image(phi, s) != s) {
      subgroupwise = false;
      break;
    }
  }
  detail::check_internal(elementwise == subgroupwise, "power automorphism characterisations disagree");
  return elementwise;
}

}  // namespace hgs
