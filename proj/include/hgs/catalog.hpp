#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/group.hpp"
#include "hgs/morphisms.hpp"
#include "hgs/products.hpp"
#include "hgs/subgroups.hpp"

namespace hgs {

// Builders ------------------------------------------------------------------

inline FiniteGroup cyclic_group(std::size_t n) {
  return make_group_from(n, [n](Element a, Element b) { return (a + b) % n; });
}

/// Dihedral group of order 2m: label i + m*j stands for r^i s^j.
inline FiniteGroup dihedral_group(std::size_t m) {
  return make_group_from(2 * m, [m](Element p, Element q) {
    const std::size_t i = p % m, j = p / m, k = q % m, l = q / m;
    const std::size_t rot = j == 0 ? (i + k) % m : (i + m - k) % m;
    return rot + m * ((j + l) % 2);
  });
}

/// Dicyclic group of order 4m: ⟨a, x | a^{2m}, x² = a^m, x a x⁻¹ = a⁻¹⟩,
/// label i + 2m*j stands for a^i x^j. m = 2 gives Q8.
inline FiniteGroup dicyclic_group(std::size_t m) {
  const std::size_t r = 2 * m;
  return make_group_from(2 * r, [m, r](Element p, Element q) {
    const std::size_t i = p % r, j = p / r, k = q % r, l = q / r;
    if (j == 0) return (i + k) % r + r * l;
    if (l == 0) return (i + r - k) % r + r;
    return (i + r - k + m) % r;
  });
}

inline FiniteGroup elementary_abelian_group(std::size_t p, std::size_t rank) {
  FiniteGroup g = trivial_group();
  for (std::size_t i = 0; i < rank; ++i) g = direct_product(g, cyclic_group(p));
  return g;
}

/// Upper unitriangular 3×3 matrices over F_p: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
inline FiniteGroup heisenberg_group(std::size_t p) {
  return make_group_from(p * p * p, [p](Element x, Element y) {
    const std::size_t a = x / (p * p), b = x / p % p, c = x % p;
    const std::size_t u = y / (p * p), v = y / p % p, w = y % p;
    return ((a + u) % p) * p * p + ((b + v) % p) * p + (c + w + a * v) % p;
  });
}

/// C_{p²} ⋊ C_p with the generator acting as x ↦ x^{1+p}: nonabelian of
/// order p³ and exponent p².
inline FiniteGroup metacyclic_p_cubed(std::size_t p) {
  const std::size_t q = p * p;
  const FiniteGroup a = cyclic_group(q);
  const FiniteGroup b = cyclic_group(p);
  Action alpha;
  std::size_t power = 1;
  for (std::size_t k = 0; k < p; ++k) {
    GroupMap f;
    f.images.resize(q);
    for (std::size_t x = 0; x < q; ++x) f.images[x] = static_cast<Element>(x * power % q);
    alpha.push_back(std::move(f));
    power = power * (1 + p) % q;
  }
  return semidirect_product(a, b, alpha);
}

/// Closure of permutations of 0..m-1; elements sorted lexicographically, so the
/// identity permutation gets label 0.
inline FiniteGroup group_from_permutations(const std::vector<std::vector<Element>>& gens) {
  using P = std::vector<Element>;
  const std::size_t m = gens.front().size();
  P id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = static_cast<Element>(i);
  std::map<P, Element> seen{{id, 0}};
  std::vector<P> members{id};
  for (std::size_t i = 0; i < members.size(); ++i)
    for (const auto& g : gens) {
      P c(m);
      for (std::size_t k = 0; k < m; ++k) c[k] = members[i][g[k]];
      if (seen.emplace(c, 0).second) members.push_back(c);
    }
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) seen[members[i]] = static_cast<Element>(i);
  return make_group_from(members.size(), [&](Element a, Element b) {
    P c(m);
    for (std::size_t k = 0; k < m; ++k) c[k] = members[a][members[b][k]];
    return seen.at(c);
  });
}

inline FiniteGroup alternating_group_4() { return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}); }

// Catalog -------------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  std::size_t order;
  std::function<FiniteGroup()> builder;
  bool heavy = false;  // only listed when heavy orders are enabled
};

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

struct CatalogOptions {
  bool enable_heavy_orders = false;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    auto add = [&](std::string name, std::size_t order, std::function<FiniteGroup()> b, bool heavy = false) {
      e.push_back({std::move(name), order, std::move(b), heavy});
    };
    auto cyc = [](std::size_t n) { return [n] { return cyclic_group(n); }; };
    auto dp = [](std::size_t x, std::size_t y) { return [x, y] { return direct_product(cyclic_group(x), cyclic_group(y)); }; };
    add("C1", 1, cyc(1));
    add("C2", 2, cyc(2));
    add("C3", 3, cyc(3));
    add("C4", 4, cyc(4));
    add("C2xC2", 4, [] { return elementary_abelian_group(2, 2); });
    add("C5", 5, cyc(5));
    add("C6", 6, cyc(6));
    add("D3", 6, [] { return dihedral_group(3); });
    add("C7", 7, cyc(7));
    add("C8", 8, cyc(8));
    add("C4xC2", 8, dp(4, 2));
    add("C2xC2xC2", 8, [] { return elementary_abelian_group(2, 3); });
    add("D4", 8, [] { return dihedral_group(4); });
    add("Q8", 8, [] { return dicyclic_group(2); });
    add("C9", 9, cyc(9));
    add("C3xC3", 9, [] { return elementary_abelian_group(3, 2); });
    add("C10", 10, cyc(10));
    add("D5", 10, [] { return dihedral_group(5); });
    add("C11", 11, cyc(11));
    add("C12", 12, cyc(12));
    add("C2xC6", 12, dp(2, 6));
    add("A4", 12, alternating_group_4);
    add("D6", 12, [] { return dihedral_group(6); });
    add("Dic3", 12, [] { return dicyclic_group(3); });
    add("C13", 13, cyc(13));
    add("C14", 14, cyc(14));
    add("D7", 14, [] { return dihedral_group(7); });
    add("C15", 15, cyc(15));
    add("C16", 16, cyc(16), true);
    add("C4xC4", 16, dp(4, 4), true);
    add("C8xC2", 16, dp(8, 2), true);
    add("C2xC2xC2xC2", 16, [] { return elementary_abelian_group(2, 4); }, true);
    add("D8", 16, [] { return dihedral_group(8); }, true);
    add("Q16", 16, [] { return dicyclic_group(4); }, true);
    add("C27", 27, cyc(27));
    add("C9xC3", 27, dp(9, 3));
    add("C3xC3xC3", 27, [] { return elementary_abelian_group(3, 3); });
    add("Heisenberg-27", 27, [] { return heisenberg_group(3); });
    add("M27", 27, [] { return metacyclic_p_cubed(3); });
    return e;
  }();
  return entries;
}

/// Number of isomorphism types for each order the catalog covers completely.
inline std::optional<std::size_t> expected_type_count(std::size_t order) {
  static const std::map<std::size_t, std::size_t> counts{
      {1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 2}, {7, 1}, {8, 5}, {9, 2},
      {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {27, 5}};
  auto it = counts.find(order);
  if (it == counts.end()) return std::nullopt;
  return it->second;
}

inline bool catalog_complete_for(std::size_t order) { return expected_type_count(order).has_value(); }

namespace detail {

inline const std::vector<NamedGroup>& built_catalog() {
  static const std::vector<NamedGroup> built = [] {
    std::vector<NamedGroup> out;
    for (const auto& e : catalog_entries()) out.push_back({e.name, e.builder()});
    return out;
  }();
  return built;
}

inline const std::map<std::string, std::string, std::less<>>& catalog_aliases() {
  static const std::map<std::string, std::string, std::less<>> aliases{
      {"S3", "D3"}, {"Q12", "Dic3"}, {"Z2", "C2"}, {"V4", "C2xC2"}, {"Heisenberg27", "Heisenberg-27"}};
  return aliases;
}

}  // namespace detail

/// All catalog groups of the given order; complete for every supported order.
inline std::vector<NamedGroup> catalog(std::size_t order, CatalogOptions options = {}) {
  const bool partial = order == 16;
  if (!catalog_complete_for(order) && !(partial && options.enable_heavy_orders))
    detail::fail(ErrorCode::UnsupportedOrder, "no catalog for order " + std::to_string(order));
  std::vector<NamedGroup> out;
  const auto& entries = catalog_entries();
  const auto& built = detail::built_catalog();
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].order == order) out.push_back(built[i]);
  return out;
}

inline NamedGroup catalog_group(std::string_view name, CatalogOptions options = {}) {
  std::string key(name);
  if (auto it = detail::catalog_aliases().find(key); it != detail::catalog_aliases().end()) key = it->second;
  const auto& entries = catalog_entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].name != key) continue;
    if (entries[i].heavy && !options.enable_heavy_orders)
      detail::fail(ErrorCode::UnsupportedOrder, key + " requires heavy orders to be enabled");
    return detail::built_catalog()[i];
  }
  detail::fail(ErrorCode::UnknownName, "unknown group name '" + std::string(name) + "'");
}

/// Catalog name of g's isomorphism type, or "unknown-order-n-#hash" where the
/// hash is computed from isomorphism invariants only.
inline std::string identify(const FiniteGroup& g) {
  const auto profile = order_profile(g);
  const auto& entries = catalog_entries();
  const auto& built = detail::built_catalog();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].order != g.order()) continue;
    if (order_profile(built[i].group) != profile) continue;
    if (are_isomorphic(built[i].group, g)) return entries[i].name;
  }
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) { h = (h ^ v) * 1099511628211ull; };
  for (auto k : profile) mix(k);
  std::vector<std::uint64_t> lattice;
  for (const auto& s : subgroups(g)) lattice.push_back(s.size() * 2 + (is_normal(g, s) ? 1 : 0));
  std::sort(lattice.begin(), lattice.end());
  for (auto v : lattice) mix(v);
  mix(center(g).size());
  std::ostringstream os;
  os << "unknown-order-" << g.order() << "-#" << std::hex << h;
  return os.str();
}

}  // namespace hgs
