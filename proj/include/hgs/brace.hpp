#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "hgs/group.hpp"
#include "hgs/morphisms.hpp"
#include "hgs/perm.hpp"
#include "hgs/products.hpp"
#include "hgs/subgroups.hpp"

namespace hgs {

/// Two group structures on the same labels sharing the identity 0, related by
/// σ∘(τ·κ) = (σ∘τ)·σ⁻¹·(σ∘κ). Equality is equality of both tables.
class SkewBrace {
 public:
  SkewBrace() = default;

  const FiniteGroup& dot() const noexcept { return dot_; }
  const FiniteGroup& circ() const noexcept { return circ_; }
  std::size_t order() const noexcept { return dot_.order(); }

  friend bool operator==(const SkewBrace& a, const SkewBrace& b) { return a.dot_ == b.dot_ && a.circ_ == b.circ_; }
  friend bool operator<(const SkewBrace& a, const SkewBrace& b) {
    if (a.circ_ == b.circ_) return a.dot_ < b.dot_;
    return a.circ_ < b.circ_;
  }

 private:
  SkewBrace(FiniteGroup dot, FiniteGroup circ) : dot_(std::move(dot)), circ_(std::move(circ)) {}
  friend SkewBrace make_brace(FiniteGroup dot, FiniteGroup circ);

  FiniteGroup dot_;
  FiniteGroup circ_;
};

/// First triple violating the brace law, if any.
inline std::optional<std::array<Element, 3>> brace_law_counterexample(const FiniteGroup& dot, const FiniteGroup& circ) {
  const std::size_t n = dot.order();
  for (Element s = 0; s < n; ++s) {
    const Element si = dot.inv(s);
    for (Element t = 0; t < n; ++t) {
      const Element left = dot.mul(circ.mul(s, t), si);
      for (Element k = 0; k < n; ++k)
        if (circ.mul(s, dot.mul(t, k)) != dot.mul(left, circ.mul(s, k))) return std::array<Element, 3>{s, t, k};
    }
  }
  return std::nullopt;
}

inline SkewBrace make_brace(FiniteGroup dot, FiniteGroup circ) {
  if (dot.order() != circ.order())
    detail::fail(ErrorCode::IdentityMismatch, "operations live on sets of different size");
  if (auto bad = brace_law_counterexample(dot, circ)) throw BraceLawError((*bad)[0], (*bad)[1], (*bad)[2]);
  return SkewBrace(std::move(dot), std::move(circ));
}

inline bool is_brace(const FiniteGroup& dot, const FiniteGroup& circ) {
  return dot.order() == circ.order() && !brace_law_counterexample(dot, circ);
}

inline SkewBrace trivial_brace(const FiniteGroup& g) { return make_brace(g, g); }
inline SkewBrace almost_trivial_brace(const FiniteGroup& g) { return make_brace(opposite_group(g), g); }

inline bool is_trivial(const SkewBrace& b) { return b.dot() == b.circ(); }

/// γ(σ)(τ) = σ⁻¹·(σ∘τ), stored for every σ.
struct GammaTable {
  std::vector<Perm> maps;

  const Perm& operator[](Element s) const { return maps[s]; }
  std::size_t size() const noexcept { return maps.size(); }
};

inline GammaTable gamma_unchecked(const SkewBrace& b) {
  const std::size_t n = b.order();
  GammaTable g;
  g.maps.assign(n, Perm(n));
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t) g.maps[s][t] = b.dot().mul(b.dot().inv(s), b.circ().mul(s, t));
  return g;
}

/// Every value an automorphism of the dot group and σ ↦ γ(σ) a homomorphism
/// from the circle group.
inline bool gamma_invariants_hold(const SkewBrace& b, const GammaTable& g) {
  const std::size_t n = b.order();
  for (Element s = 0; s < n; ++s)
    if (!is_automorphism(b.dot(), GroupMap{g[s]})) return false;
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t)
      if (g[b.circ().mul(s, t)] != compose(g[s], g[t])) return false;
  return true;
}

inline GammaTable gamma(const SkewBrace& b) {
  GammaTable g = gamma_unchecked(b);
  detail::check_internal(gamma_invariants_hold(b, g), "gamma function fails its invariants");
  return g;
}

/// Same circle group, dot replaced by its opposite.
inline SkewBrace opposite(const SkewBrace& b) {
  SkewBrace out = make_brace(opposite_group(b.dot()), b.circ());
  // γ_op(σ) = ι_·(σ) ∘ γ(σ)
  const GammaTable g = gamma_unchecked(b);
  const GammaTable h = gamma_unchecked(out);
  for (Element s = 0; s < b.order(); ++s)
    detail::check_internal(h[s] == compose(inner_automorphism(b.dot(), s).images, g[s]), "opposite gamma identity fails");
  return out;
}

/// (G, ∘, ·); throws BraceLawViolated unless b is bi-skew.
inline SkewBrace swap(const SkewBrace& b) { return make_brace(b.circ(), b.dot()); }

inline bool is_left_ideal(const SkewBrace& b, const SubgroupSet& s, const GammaTable& g) {
  if (!is_subgroup(b.dot(), s)) return false;
  for (Element sigma = 0; sigma < b.order(); ++sigma)
    for (Element t : s)
      if (!s.contains(g[sigma][t])) return false;
  return true;
}

/// Subgroups of the dot group invariant under every γ(σ), sorted like subgroups().
inline std::vector<SubgroupSet> left_ideals(const SkewBrace& b) {
  const GammaTable g = gamma_unchecked(b);
  std::vector<SubgroupSet> out;
  for (auto& s : subgroups(b.dot())) {
    if (!is_left_ideal(b, s, g)) continue;
    detail::check_internal(is_subgroup(b.circ(), s), "left ideal is not a subgroup of the circle group");
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<SubgroupSet> strong_left_ideals(const SkewBrace& b) {
  std::vector<SubgroupSet> out;
  for (auto& s : left_ideals(b))
    if (is_normal(b.dot(), s)) out.push_back(std::move(s));
  return out;
}

inline std::vector<SubgroupSet> ideals(const SkewBrace& b) {
  std::vector<SubgroupSet> out;
  for (auto& s : strong_left_ideals(b))
    if (is_normal(b.circ(), s)) out.push_back(std::move(s));
  return out;
}

inline bool is_ideal(const SkewBrace& b, const SubgroupSet& s) {
  return is_left_ideal(b, s, gamma_unchecked(b)) && is_normal(b.dot(), s) && is_normal(b.circ(), s);
}

/// Common fixed points of all γ(σ): the grouplikes of the associated Hopf algebra.
inline SubgroupSet fix(const SkewBrace& b) {
  const GammaTable g = gamma_unchecked(b);
  std::vector<Element> out;
  for (Element t = 0; t < b.order(); ++t) {
    bool fixed = true;
    for (Element s = 0; s < b.order() && fixed; ++s) fixed = g[s][t] == t;
    if (fixed) out.push_back(t);
  }
  auto f = SubgroupSet::from_elements(std::move(out));
  detail::check_internal(is_left_ideal(b, f, g), "Fix is not a left ideal");
  return f;
}

/// Every γ(σ) preserves the circle operation. When true the swapped brace is
/// validated and its gamma checked against γ'(σ) = γ(σ)⁻¹.
inline bool is_bi_skew(const SkewBrace& b) {
  const GammaTable g = gamma_unchecked(b);
  for (Element s = 0; s < b.order(); ++s)
    if (!is_homomorphism(b.circ(), b.circ(), GroupMap{g[s]})) return false;
  const SkewBrace sw = swap(b);
  const GammaTable h = gamma_unchecked(sw);
  for (Element s = 0; s < b.order(); ++s) detail::check_internal(h[s] == invert(g[s]), "swapped gamma is not the inverse");
  return true;
}

/// Brace automorphisms, found by filtering the automorphisms of the circle
/// group for those that also preserve the dot operation.
inline std::vector<GroupMap> brace_automorphisms(const SkewBrace& b) {
  std::vector<GroupMap> out;
  for (auto& f : automorphisms(b.circ()))
    if (is_homomorphism(b.dot(), b.dot(), f)) out.push_back(std::move(f));
  return out;
}

inline std::size_t brace_automorphism_count(const SkewBrace& b) { return brace_automorphisms(b).size(); }

/// A bijection preserving both operations, if one exists.
inline std::optional<GroupMap> brace_isomorphism(const SkewBrace& x, const SkewBrace& y) {
  if (x.order() != y.order()) return std::nullopt;
  if (order_profile(x.dot()) != order_profile(y.dot()) || order_profile(x.circ()) != order_profile(y.circ())) return std::nullopt;
  std::optional<GroupMap> found;
  detail::HomSearch(x.circ(), y.circ(), true).run([&](const GroupMap& f) {
    if (!is_homomorphism(x.dot(), y.dot(), f)) return true;
    found = f;
    return false;
  });
  return found;
}

/// The brace on a left ideal L, labeled by increasing element of L.
inline SkewBrace sub_brace(const SkewBrace& b, const SubgroupSet& l) {
  if (!is_left_ideal(b, l, gamma_unchecked(b))) detail::fail(ErrorCode::NotALeftIdeal, "sub_brace needs a left ideal");
  auto dot = subgroup_group(b.dot(), l);
  auto circ = subgroup_group(b.circ(), l);
  return make_brace(std::move(dot.group), std::move(circ.group));
}

struct QuotientBrace {
  SkewBrace brace;
  GroupMap projection;
};

/// Cosets of an ideal coincide for both operations; labels follow quotient().
inline QuotientBrace quotient_brace_with_projection(const SkewBrace& b, const SubgroupSet& ideal) {
  if (!is_ideal(b, ideal)) detail::fail(ErrorCode::NotAnIdeal, "quotient_brace needs an ideal");
  auto dq = quotient(b.dot(), ideal);
  auto cq = quotient(b.circ(), ideal);
  detail::check_internal(dq.projection == cq.projection, "dot and circle cosets differ");
  return {make_brace(std::move(dq.group), std::move(cq.group)), std::move(dq.projection)};
}

inline SkewBrace quotient_brace(const SkewBrace& b, const SubgroupSet& ideal) {
  return quotient_brace_with_projection(b, ideal).brace;
}

/// dot = B1.dot × B2.dot, circ = B1.circ ⋊_α B2.circ with α: (G2,∘) → Aut(B1).
/// Pair (x, y) has label x*|B2| + y. No action means the direct product.
inline SkewBrace product_brace(const SkewBrace& b1, const SkewBrace& b2, std::optional<Action> alpha = std::nullopt) {
  const bool direct = !alpha.has_value();
  Action act = direct ? trivial_action(b1.circ(), b2.circ()) : std::move(*alpha);
  if (act.size() != b2.order()) detail::fail(ErrorCode::NotBraceAutomorphismAction, "action has the wrong length");
  for (const auto& f : act)
    if (!is_automorphism(b1.circ(), f) || !is_automorphism(b1.dot(), f))
      detail::fail(ErrorCode::NotBraceAutomorphismAction, "action value is not a brace automorphism");
  if (!is_action(b1.circ(), b2.circ(), act))
    detail::fail(ErrorCode::NotBraceAutomorphismAction, "action is not a homomorphism from the circle group");
  SkewBrace out = make_brace(direct_product(b1.dot(), b2.dot()), semidirect_product(b1.circ(), b2.circ(), act));

  const std::size_t n2 = b2.order();
  std::vector<Element> first, second;
  for (Element x = 0; x < b1.order(); ++x) first.push_back(pair_label(b2.circ(), x, 0));
  for (Element y = 0; y < n2; ++y) second.push_back(pair_label(b2.circ(), 0, y));
  const auto s1 = SubgroupSet::from_elements(first);
  const auto s2 = SubgroupSet::from_elements(second);
  detail::check_internal(is_ideal(out, s1), "first factor is not an ideal");
  const GammaTable g = gamma_unchecked(out);
  detail::check_internal(is_left_ideal(out, s2, g) && is_normal(out.dot(), s2), "second factor is not a strong left ideal");
  bool trivial_action_given = true;
  for (const auto& f : act) trivial_action_given = trivial_action_given && f == GroupMap::identity(b1.order());
  if (trivial_action_given) detail::check_internal(is_ideal(out, s2), "second factor of a direct product is not an ideal");
  return out;
}

/// Some ideal with trivial sub-brace and trivial quotient, smallest first.
inline std::optional<SubgroupSet> is_metatrivial(const SkewBrace& b) {
  for (const auto& i : ideals(b)) {
    if (is_trivial(sub_brace(b, i)) && is_trivial(quotient_brace(b, i))) return i;
  }
  return std::nullopt;
}

/// σ ·' τ = φ(φ⁻¹(σ) · φ⁻¹(τ)) for an automorphism φ of the circle group.
inline FiniteGroup act_on_operation(const FiniteGroup& dot, const GroupMap& phi) { return transport(dot, phi); }

}  // namespace hgs
