#pragma once

#include <cstddef>
#include <vector>

#include "hgs/brace.hpp"
#include "hgs/catalog.hpp"
#include "hgs/group.hpp"
#include "hgs/morphisms.hpp"
#include "hgs/products.hpp"
#include "hgs/subgroups.hpp"

namespace hgs {

/// N(G)/Z(G) for the norm N(G) and centre Z(G), with two choices of coset lift.
struct NormModCenter {
  SubgroupSet norm;
  SubgroupSet center;
  FiniteGroup quotient;
  std::vector<Element> least_lift;     // per coset, the least element of G
  std::vector<Element> greatest_lift;  // per coset, the greatest element of G
};

inline NormModCenter norm_mod_center(const FiniteGroup& g) {
  NormModCenter out;
  out.norm = norm(g);
  out.center = center(g);
  const Subgroup sub = subgroup_group(g, out.norm);
  std::vector<Element> z;
  for (Element i = 0; i < sub.group.order(); ++i)
    if (out.center.contains(sub.embedding(i))) z.push_back(i);
  Quotient q = quotient(sub.group, SubgroupSet::from_elements(z));
  out.quotient = q.group;
  out.least_lift.assign(q.group.order(), 0);
  out.greatest_lift.assign(q.group.order(), 0);
  for (Element i = 0; i < sub.group.order(); ++i) {
    const Element coset = q.projection(i);
    const Element x = sub.embedding(i);
    if (q.representatives[coset] == i) out.least_lift[coset] = x;
    out.greatest_lift[coset] = std::max(out.greatest_lift[coset], x);
  }
  // Schenkman: the norm modulo the centre is abelian.
  detail::check_internal(is_abelian(out.quotient), "N(G)/Z(G) is not abelian");
  return out;
}

/// Every homomorphism (G,∘) → N(G)/Z(G).
inline std::vector<GroupMap> norm_mod_center_homomorphisms(const FiniteGroup& g, const NormModCenter& nz) {
  return homomorphisms(g, nz.quotient);
}

enum class Lift { Least, Greatest };

namespace detail {

inline FiniteGroup psi_operation(const FiniteGroup& g, const GroupMap& psi, const std::vector<Element>& lift) {
  return make_group_from(g.order(), [&](Element s, Element t) {
    const Element r = lift[psi(s)];
    return g.mul(g.mul(s, r), g.mul(t, g.inv(r)));
  });
}

inline void check_all_gamma_power(const SkewBrace& b, const GammaTable& gm, const char* what) {
  for (Element s = 0; s < b.order(); ++s) check_internal(is_power_automorphism(b.circ(), GroupMap{gm[s]}), what);
}

}  // namespace detail

/// σ·τ = σ∘r∘τ∘r⁻¹ where r lifts ψ(σ) ∈ N(G)/Z(G). The result is a bi-skew
/// brace with γ(σ) = ι∘(r⁻¹), independent of the lift.
inline SkewBrace psi_construction(const FiniteGroup& g, const NormModCenter& nz, const GroupMap& psi, Lift lift = Lift::Least) {
  if (psi.size() != g.order()) detail::fail(ErrorCode::NotIntoNormModCenter, "map has the wrong length");
  for (Element e : psi.images)
    if (e >= nz.quotient.order()) detail::fail(ErrorCode::NotIntoNormModCenter, "image outside N(G)/Z(G)");
  if (!is_homomorphism(g, nz.quotient, psi)) detail::fail(ErrorCode::NotAHomomorphism, "psi is not a homomorphism");

  const auto& chosen = lift == Lift::Least ? nz.least_lift : nz.greatest_lift;
  const auto& other = lift == Lift::Least ? nz.greatest_lift : nz.least_lift;
  SkewBrace b = make_brace(detail::psi_operation(g, psi, chosen), g);
  detail::check_internal(detail::psi_operation(g, psi, other) == b.dot(), "psi construction depends on the lift");

  const GammaTable gm = gamma(b);
  for (Element s = 0; s < g.order(); ++s) {
    const Element r = chosen[psi(s)];
    detail::check_internal(gm[s] == inner_automorphism(g, g.inv(r)).images, "gamma is not conjugation by the inverse lift");
  }
  detail::check_internal(is_bi_skew(b), "psi construction is not bi-skew");
  detail::check_all_gamma_power(b, gm, "psi construction gamma is not a power automorphism");
  return b;
}

/// σ·τ = σ∘σ∘τ∘σ⁻¹ on a group of nilpotency class at most two.
inline SkewBrace class2_construction(const FiniteGroup& g) {
  if (!is_nilpotent_class_at_most_two(g)) detail::fail(ErrorCode::NotClassTwo, "group is not nilpotent of class at most two");
  SkewBrace b = make_brace(make_group_from(g.order(), [&](Element s, Element t) {
                             return g.mul(g.mul(s, s), g.mul(t, g.inv(s)));
                           }),
                           g);
  const GammaTable gm = gamma(b);
  for (Element s = 0; s < g.order(); ++s)
    detail::check_internal(gm[s] == inner_automorphism(g, g.inv(s)).images, "class-two gamma is not conjugation by the inverse");
  detail::check_internal(is_bi_skew(b), "class-two construction is not bi-skew");
  return b;
}

inline GroupMap inversion_map(const FiniteGroup& a) {
  GroupMap f;
  f.images.assign(a.inverses().begin(), a.inverses().end());
  return f;
}

/// circ = A × C2, dot = A ⋊ C2 with C2 acting by inversion.
inline SkewBrace inversion_construction(const FiniteGroup& a) {
  if (!is_abelian(a)) detail::fail(ErrorCode::NotAbelian, "inversion needs an abelian group");
  const FiniteGroup c2 = cyclic_group(2);
  const Action alpha{GroupMap::identity(a.order()), inversion_map(a)};
  SkewBrace b = make_brace(semidirect_product(a, c2, alpha), direct_product(a, c2));
  detail::check_internal(is_bi_skew(b), "inversion construction is not bi-skew");
  detail::check_all_gamma_power(b, gamma(b), "inversion construction gamma is not a power automorphism");
  return b;
}

/// circ = A ⋊_α B, dot = A × B; γ(c,d)(a,b) = (α(d)(a), b).
inline SkewBrace semidirect_to_brace(const FiniteGroup& a, const FiniteGroup& b, const Action& alpha) {
  SkewBrace br = make_brace(direct_product(a, b), semidirect_product(a, b, alpha));
  const GammaTable gm = gamma(br);
  for (Element c = 0; c < a.order(); ++c)
    for (Element d = 0; d < b.order(); ++d)
      for (Element x = 0; x < a.order(); ++x)
        for (Element y = 0; y < b.order(); ++y)
          detail::check_internal(gm[pair_label(b, c, d)][pair_label(b, x, y)] == pair_label(b, alpha[d](x), y),
                                 "semidirect brace gamma differs from (α(d)(a), b)");
  return br;
}

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

constexpr std::size_t kMaxPowerBraceOrder = 256;

/// circ = C_{p^r} × C_{p^s}; (i,j)·(a,b) = (i+a, j+b+ia). Label i*p^s + j.
inline SkewBrace cpr_cps_brace(std::size_t p, std::size_t r, std::size_t s) {
  if (!is_prime(p) || s < 1 || s > r || r > 16 || ipow(p, r + s) > kMaxPowerBraceOrder)
    detail::fail(ErrorCode::BadParameters, "need p prime, 1 <= s <= r and p^(r+s) <= " + std::to_string(kMaxPowerBraceOrder));
  const std::size_t pr = ipow(p, r), ps = ipow(p, s);
  const FiniteGroup circ = direct_product(cyclic_group(pr), cyclic_group(ps));
  FiniteGroup dot = make_group_from(pr * ps, [&](Element x, Element y) {
    const std::size_t i = x / ps, j = x % ps, a = y / ps, b = y % ps;
    return ((i + a) % pr) * ps + (j + b + i * a) % ps;
  });
  SkewBrace br = make_brace(std::move(dot), circ);
  std::vector<Element> first;
  for (std::size_t i = 0; i < pr; ++i) first.push_back(static_cast<Element>(i * ps));
  detail::check_internal(!is_left_ideal(br, SubgroupSet::from_elements(first), gamma_unchecked(br)),
                         "C_{p^r} x 1 is a left ideal");
  return br;
}

}  // namespace hgs
