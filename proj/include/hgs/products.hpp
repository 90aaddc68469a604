#pragma once

#include <vector>

#include "hgs/group.hpp"

namespace hgs {

/// An action of B on A: action[b] is the automorphism of A attached to b.
using Action = std::vector<GroupMap>;

inline Action trivial_action(const FiniteGroup& a, const FiniteGroup& b) {
  return Action(b.order(), GroupMap::identity(a.order()));
}

/// Pair (a, b) has label a * |B| + b.
inline Element pair_label(const FiniteGroup& b, Element x, Element y) {
  return static_cast<Element>(x * b.order() + y);
}

/// Checks that the action is a homomorphism B → Aut(A).
inline bool is_action(const FiniteGroup& a, const FiniteGroup& b, const Action& alpha) {
  if (alpha.size() != b.order()) return false;
  for (const auto& f : alpha)
    if (!is_automorphism(a, f)) return false;
  for (Element x = 0; x < b.order(); ++x)
    for (Element y = 0; y < b.order(); ++y)
      if (alpha[b.mul(x, y)] != alpha[x].after(alpha[y])) return false;
  return true;
}

/// (a, b)(c, d) = (a·α(b)(c), bd), on lexicographically indexed pairs.
inline FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b, const Action& alpha) {
  if (!is_action(a, b, alpha)) detail::fail(ErrorCode::NotAHomomorphism, "action is not a homomorphism into Aut");
  const std::size_t nb = b.order();
  return make_group_from(a.order() * nb, [&](Element p, Element q) {
    const Element x = p / nb, y = p % nb, u = q / nb, v = q % nb;
    return pair_label(b, a.mul(x, alpha[y](u)), b.mul(y, v));
  });
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  return semidirect_product(a, b, trivial_action(a, b));
}

}  // namespace hgs
