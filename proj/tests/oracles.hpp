#pragma once

// Brute-force references used by the tests. None of these share code with the
// library's search routines; they only read multiplication tables.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "hgs/group.hpp"

namespace oracle {

using hgs::Element;
using hgs::FiniteGroup;

inline bool preserves(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<Element>& f) {
  for (Element a = 0; a < src.order(); ++a)
    for (Element b = 0; b < src.order(); ++b)
      if (f[src.mul(a, b)] != dst.mul(f[a], f[b])) return false;
  return true;
}

/// Every bijection fixing 0 that respects the table.
inline std::size_t automorphism_count(const FiniteGroup& g) {
  std::vector<Element> p(g.order());
  std::iota(p.begin(), p.end(), Element{0});
  std::size_t count = 0;
  do {
    count += preserves(g, g, p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return count;
}

inline std::optional<std::vector<Element>> isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  std::vector<Element> p(g.order());
  std::iota(p.begin(), p.end(), Element{0});
  do {
    if (preserves(g, h, p)) return p;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return std::nullopt;
}

/// Every subset containing 0 and closed under the operation (finite, so a subgroup).
inline std::set<std::vector<Element>> subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::set<std::vector<Element>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); mask += 2) {
    std::vector<Element> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(static_cast<Element>(i));
    bool closed = true;
    for (Element a : s)
      for (Element b : s)
        if (!(mask >> g.mul(a, b) & 1)) closed = false;
    if (closed) out.insert(s);
  }
  return out;
}

inline bool is_normal(const FiniteGroup& g, const std::vector<Element>& s) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element a : s)
      if (!std::binary_search(s.begin(), s.end(), g.mul(g.mul(x, a), g.inv(x)))) return false;
  return true;
}

/// Direct check of σ∘(τ·κ) = (σ∘τ)·σ⁻¹·(σ∘κ).
inline bool brace_law(const FiniteGroup& dot, const FiniteGroup& circ) {
  const std::size_t n = dot.order();
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t)
      for (Element k = 0; k < n; ++k)
        if (circ.mul(s, dot.mul(t, k)) != dot.mul(dot.mul(circ.mul(s, t), dot.inv(s)), circ.mul(s, k))) return false;
  return true;
}

/// Subgroups of the dot group fixed setwise by every λ_σ(τ) = σ⁻¹·(σ∘τ).
inline std::set<std::vector<Element>> left_ideals(const FiniteGroup& dot, const FiniteGroup& circ) {
  std::set<std::vector<Element>> out;
  for (const auto& s : oracle::subgroups(dot)) {
    bool ok = true;
    for (Element sigma = 0; sigma < dot.order() && ok; ++sigma)
      for (Element t : s)
        if (!std::binary_search(s.begin(), s.end(), dot.mul(dot.inv(sigma), circ.mul(sigma, t)))) ok = false;
    if (ok) out.insert(s);
  }
  return out;
}

/// All operations dot on 0..n-1 with (dot, circ) a brace, found by relabeling
/// each of the given groups in every way that fixes 0.
inline std::set<std::vector<Element>> brace_operations(const FiniteGroup& circ, const std::vector<FiniteGroup>& types) {
  std::set<std::vector<Element>> out;
  const std::size_t n = circ.order();
  for (const auto& t : types) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), Element{0});
    do {
      std::vector<Element> cells(n * n);
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) cells[p[a] * n + p[b]] = p[t.mul(a, b)];
      if (out.count(cells)) continue;
      const FiniteGroup dot = hgs::make_group_flat(n, cells);
      if (brace_law(dot, circ)) out.insert(cells);
    } while (std::next_permutation(p.begin() + 1, p.end()));
  }
  return out;
}

}  // namespace oracle
