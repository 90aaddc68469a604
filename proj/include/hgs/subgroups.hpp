#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "hgs/group.hpp"

namespace hgs {

/// Closure of a generating list; returned as a membership mask.
inline std::vector<char> closure_mask(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<Element> members{0};
  // Right multiplication by generators reaches everything in a finite group.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element s : gens) {
      const Element y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  return in;
}

inline SubgroupSet generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  return SubgroupSet::from_mask(closure_mask(g, gens));
}

inline SubgroupSet cyclic_subgroup(const FiniteGroup& g, Element a) { return generated_subgroup(g, {a}); }

inline bool is_subgroup(const FiniteGroup& g, const SubgroupSet& s) {
  if (s.size() == 0 || !s.contains(0)) return false;
  if (s.elements().back() >= g.order()) return false;
  for (Element a : s)
    for (Element b : s)
      if (!s.contains(g.mul(a, g.inv(b)))) return false;
  return true;
}

/// Subgroup join: the subgroup generated by both.
inline SubgroupSet join(const FiniteGroup& g, const SubgroupSet& a, const SubgroupSet& b) {
  std::vector<Element> gens(a.begin(), a.end());
  gens.insert(gens.end(), b.begin(), b.end());
  return generated_subgroup(g, gens);
}

inline SubgroupSet intersection(const SubgroupSet& a, const SubgroupSet& b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SubgroupSet::from_elements(std::move(out));
}

/// All subgroups, seeded with the cyclic ones and closed under pairwise join.
/// Sorted by size, then lexicographically on the element list.
inline std::vector<SubgroupSet> subgroups(const FiniteGroup& g) {
  std::set<SubgroupSet> found;
  std::vector<SubgroupSet> list;
  for (Element a = 0; a < g.order(); ++a) {
    auto c = cyclic_subgroup(g, a);
    if (found.insert(c).second) list.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto s = join(g, list[i], list[j]);
      if (found.insert(s).second) list.push_back(std::move(s));
    }
  std::vector<SubgroupSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const SubgroupSet& x, const SubgroupSet& y) { return x.size() < y.size(); });
  return out;
}

inline bool is_normal(const FiniteGroup& g, const SubgroupSet& s) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element a : s)
      if (!s.contains(g.mul(g.mul(x, a), g.inv(x)))) return false;
  return true;
}

inline SubgroupSet normalizer(const FiniteGroup& g, const SubgroupSet& s) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Element a : s)
      if (!s.contains(g.mul(g.mul(x, a), g.inv(x)))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return SubgroupSet::from_elements(std::move(out));
}

inline SubgroupSet center(const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) out.push_back(a);
  }
  return SubgroupSet::from_elements(std::move(out));
}

/// Intersection of the normalizers of all subgroups.
inline SubgroupSet norm(const FiniteGroup& g) {
  SubgroupSet acc = SubgroupSet::whole(g.order());
  for (const auto& s : subgroups(g)) acc = intersection(acc, normalizer(g, s));
  return acc;
}

inline SubgroupSet commutator_subgroup(const FiniteGroup& g) {
  std::vector<Element> gens;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return generated_subgroup(g, gens);
}

inline std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& g) {
  std::vector<SubgroupSet> out;
  for (auto& s : subgroups(g))
    if (is_normal(g, s)) out.push_back(std::move(s));
  return out;
}

/// Repeatedly takes the lowest-index element outside the current closure.
inline std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  for (Element a = 0; a < g.order(); ++a) {
    if (in[a]) continue;
    gens.push_back(a);
    in = closure_mask(g, gens);
  }
  return gens;
}

struct Quotient {
  FiniteGroup group;
  GroupMap projection;  // from the ambient group onto the quotient labels
  std::vector<Element> representatives;  // least element of each coset
};

/// Cosets are labeled by increasing least representative, so the coset of 0 is 0.
inline Quotient quotient(const FiniteGroup& g, const SubgroupSet& normal) {
  if (!is_subgroup(g, normal)) detail::fail(ErrorCode::NotASubgroup, "quotient by a non-subgroup");
  if (!is_normal(g, normal)) detail::fail(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  const std::size_t n = g.order();
  constexpr Element unset = static_cast<Element>(-1);
  GroupMap proj;
  proj.images.assign(n, unset);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (proj.images[x] != unset) continue;
    const auto label = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element a : normal) proj.images[g.mul(x, a)] = label;
  }
  const std::size_t m = reps.size();
  auto group = make_group_from(m, [&](Element a, Element b) { return proj(g.mul(reps[a], reps[b])); });
  return {std::move(group), std::move(proj), std::move(reps)};
}

struct Subgroup {
  FiniteGroup group;
  GroupMap embedding;  // from subgroup labels into the ambient group
};

/// The subgroup as a group in its own right; label i is the i-th smallest member.
inline Subgroup subgroup_group(const FiniteGroup& g, const SubgroupSet& s) {
  if (!is_subgroup(g, s)) detail::fail(ErrorCode::NotASubgroup, "not a subgroup");
  const auto& el = s.elements();
  auto index_of = [&](Element x) {
    return static_cast<Element>(std::lower_bound(el.begin(), el.end(), x) - el.begin());
  };
  auto group = make_group_from(el.size(), [&](Element a, Element b) { return index_of(g.mul(el[a], el[b])); });
  return {std::move(group), GroupMap{el}};
}

/// True when [G,G] lies in the centre.
inline bool is_nilpotent_class_at_most_two(const FiniteGroup& g) {
  return commutator_subgroup(g).is_subset_of(center(g));
}

}  // namespace hgs
