#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hgs/brace.hpp"
#include "hgs/catalog.hpp"
#include "hgs/constructions.hpp"
#include "hgs/group.hpp"
#include "hgs/morphisms.hpp"
#include "hgs/perm.hpp"
#include "hgs/subgroups.hpp"

namespace hgs {

/// Exact non-negative rational in lowest terms.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio make(std::int64_t n, std::int64_t d) {
    if (d == 0) detail::fail(ErrorCode::BadParameters, "zero denominator");
    if (d < 0) n = -n, d = -d;
    const std::int64_t g = std::gcd(n, d);
    return {n / g, d / g};
  }

  friend Ratio operator/(const Ratio& a, const Ratio& b) { return make(a.num * b.den, a.den * b.num); }
  friend bool operator==(const Ratio&, const Ratio&) = default;

  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

/// Analysis of one Hopf–Galois structure, described by its skew brace.
struct HgsReport {
  FiniteGroup operation;  // the dot table
  std::string type_name;
  bool is_bi_skew = false;
  std::vector<SubgroupSet> image;  // subgroups of the circle group that are left ideals
  bool is_surjective = false;
  Ratio gc_ratio;
  SubgroupSet grouplikes;
  std::size_t iso_class_id = 0;
  std::size_t orbit_size = 1;
};

struct EnumerationOptions {
  std::size_t bound = 27;
  bool enable_heavy_orders = false;
};

/// Image = left ideals; iso_class_id is 0 outside an enumeration.
inline HgsReport analyze(const SkewBrace& b) {
  HgsReport r;
  r.operation = b.dot();
  r.type_name = identify(b.dot());
  r.is_bi_skew = is_bi_skew(b);
  r.image = left_ideals(b);
  const auto all = subgroups(b.circ());
  for (const auto& s : r.image) detail::check_internal(std::binary_search(all.begin(), all.end(), s, [](const SubgroupSet& x, const SubgroupSet& y) {
                                                         return x.size() != y.size() ? x.size() < y.size() : x < y;
                                                       }),
                                                       "left ideal missing from the subgroup lattice");
  r.is_surjective = r.image.size() == all.size();
  r.gc_ratio = Ratio::make(static_cast<std::int64_t>(r.image.size()), static_cast<std::int64_t>(all.size()));
  r.grouplikes = fix(b);
  r.orbit_size = automorphisms(b.circ()).size() / brace_automorphism_count(b);
  return r;
}

struct BraceClass {
  SkewBrace representative;
  std::string type_name;  // catalog type of the dot group
  std::size_t automorphism_count = 0;
  std::size_t orbit_size = 0;
};

/// All dot operations on the labels of circ that form a skew brace with it,
/// grouped into isomorphism classes.
struct OperationCensus {
  FiniteGroup circ;
  std::size_t circ_automorphism_count = 0;
  std::vector<SkewBrace> braces;     // sorted by dot table
  std::vector<std::size_t> class_of; // per brace
  std::vector<BraceClass> classes;   // ids follow first appearance in `braces`
};

namespace detail {

inline bool is_heavy(const FiniteGroup& g) {
  const std::size_t n = g.order();
  return (n == 16 || n == 27) && is_abelian(g) && exponent(g) * exponent(g) < n;
}

inline void check_enumerable(const FiniteGroup& circ, const EnumerationOptions& options) {
  const std::size_t n = circ.order();
  if (n > options.bound)
    fail(ErrorCode::OrderTooLarge, "order " + std::to_string(n) + " exceeds bound " + std::to_string(options.bound));
  if (is_heavy(circ) && !options.enable_heavy_orders)
    fail(ErrorCode::OrderTooLarge, "elementary abelian order " + std::to_string(n) + " needs heavy orders enabled");
  if (!catalog_complete_for(n))
    fail(ErrorCode::CatalogIncompleteForOrder, "catalog does not list every group of order " + std::to_string(n));
}

}  // namespace detail

/// For each group type N of the right order, finds the regular subgroups of
/// Hol(N) isomorphic to circ, pulls each back to a dot operation on the labels
/// of circ, and expands new ones to their full Aut(circ)-orbit.
inline OperationCensus operation_census(const FiniteGroup& circ, EnumerationOptions options = {}) {
  detail::check_enumerable(circ, options);
  const std::size_t n = circ.order();
  const auto auts = automorphisms(circ);

  struct Pending {
    std::vector<FiniteGroup> orbit;
    BraceClass info;
  };
  std::vector<Pending> pending;
  std::set<std::vector<Element>> seen;

  for (const auto& named : catalog(n, {options.enable_heavy_orders})) {
    const FiniteGroup& base = named.group;
    std::set<std::vector<Perm>> images_seen;
    for_each_regular_embedding(circ, base, [&](const std::vector<Perm>& imgs) {
      std::vector<Perm> key = imgs;
      std::sort(key.begin(), key.end());
      if (!images_seen.insert(std::move(key)).second) return true;
      GroupMap beta;
      beta.images.resize(n);
      for (Element x = 0; x < n; ++x) beta.images[x] = imgs[x][0];
      const GroupMap back = beta.inverse();
      FiniteGroup dot = make_group_from(n, [&](Element s, Element t) { return back(base.mul(beta(s), beta(t))); });
      if (seen.count(std::vector<Element>(dot.cells().begin(), dot.cells().end()))) return true;

      Pending p;
      p.info.representative = make_brace(dot, circ);
      p.info.type_name = named.name;
      p.info.automorphism_count = brace_automorphism_count(p.info.representative);
      std::set<std::vector<Element>> orbit;
      for (const auto& phi : auts) {
        FiniteGroup moved = act_on_operation(dot, phi);
        if (orbit.insert(std::vector<Element>(moved.cells().begin(), moved.cells().end())).second) p.orbit.push_back(std::move(moved));
      }
      p.info.orbit_size = p.orbit.size();
      detail::check_internal(p.orbit.size() * p.info.automorphism_count == auts.size(),
                             "orbit size differs from |Aut(circ)|/|Aut(brace)|");
      for (const auto& t : orbit) seen.insert(t);
      pending.push_back(std::move(p));
      return true;
    }, /*up_to_aut_n=*/true);
  }

  std::vector<std::pair<FiniteGroup, std::size_t>> all;
  for (std::size_t c = 0; c < pending.size(); ++c)
    for (auto& op : pending[c].orbit) all.emplace_back(std::move(op), c);
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  OperationCensus census;
  census.circ = circ;
  census.circ_automorphism_count = auts.size();
  std::map<std::size_t, std::size_t> renumber;
  for (auto& [op, c] : all) {
    auto [it, inserted] = renumber.emplace(c, renumber.size());
    if (inserted) census.classes.push_back(pending[c].info);
    // Orbit members are brace operations by the counting argument; revalidated here.
    census.braces.push_back(make_brace(std::move(op), circ));
    census.class_of.push_back(it->second);
  }
  return census;
}

inline std::vector<SkewBrace> enumerate_operations(const FiniteGroup& circ, EnumerationOptions options = {}) {
  return operation_census(circ, options).braces;
}

/// One report per structure, with class ids and orbit sizes from the census.
inline std::vector<HgsReport> enumerate_reports(const OperationCensus& census) {
  std::vector<HgsReport> out;
  out.reserve(census.braces.size());
  for (std::size_t i = 0; i < census.braces.size(); ++i) {
    const BraceClass& cls = census.classes[census.class_of[i]];
    HgsReport r;
    const SkewBrace& b = census.braces[i];
    r.operation = b.dot();
    r.type_name = cls.type_name;
    r.is_bi_skew = is_bi_skew(b);
    r.image = left_ideals(b);
    const std::size_t total = subgroups(census.circ).size();
    r.is_surjective = r.image.size() == total;
    r.gc_ratio = Ratio::make(static_cast<std::int64_t>(r.image.size()), static_cast<std::int64_t>(total));
    r.grouplikes = fix(b);
    r.iso_class_id = census.class_of[i];
    r.orbit_size = cls.orbit_size;
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<HgsReport> enumerate_reports(const FiniteGroup& circ, EnumerationOptions options = {}) {
  return enumerate_reports(operation_census(circ, options));
}

struct BiSkewPairReport {
  Ratio ratio_fwd;
  Ratio ratio_swapped;
  Ratio quotient;
  std::size_t left_ideal_count = 0;
  std::size_t dot_subgroup_count = 0;
  std::size_t circ_subgroup_count = 0;
};

/// Compares the structure of (G,·,∘) with that of (G,∘,·) on the Galois group (G,·).
inline BiSkewPairReport biskew_pair_report(const SkewBrace& b) {
  if (!is_bi_skew(b)) detail::fail(ErrorCode::NotBiSkew, "brace is not bi-skew");
  const SkewBrace sw = swap(b);
  const auto fwd = left_ideals(b);
  const auto bwd = left_ideals(sw);
  detail::check_internal(fwd == bwd, "left ideals of a bi-skew brace and its swap differ");
  BiSkewPairReport r;
  r.left_ideal_count = fwd.size();
  r.dot_subgroup_count = subgroups(b.dot()).size();
  r.circ_subgroup_count = subgroups(b.circ()).size();
  r.ratio_fwd = Ratio::make(static_cast<std::int64_t>(fwd.size()), static_cast<std::int64_t>(r.circ_subgroup_count));
  r.ratio_swapped = Ratio::make(static_cast<std::int64_t>(bwd.size()), static_cast<std::int64_t>(r.dot_subgroup_count));
  r.quotient = r.ratio_fwd / r.ratio_swapped;
  detail::check_internal(r.quotient == Ratio::make(static_cast<std::int64_t>(r.dot_subgroup_count), static_cast<std::int64_t>(r.circ_subgroup_count)),
                         "ratio quotient differs from the subgroup count quotient");
  return r;
}

/// Structures on a Galois extension with group circ whose type is N.
inline std::size_t e_count(const OperationCensus& census, const FiniteGroup& n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < census.braces.size(); ++i)
    if (are_isomorphic(census.braces[i].dot(), n)) ++count;
  return count;
}

inline std::size_t e_count(const FiniteGroup& circ, const FiniteGroup& n, EnumerationOptions options = {}) {
  return e_count(operation_census(circ, options), n);
}

/// Regular subgroups of Hol(N) whose transported operation is isomorphic to circ.
inline std::size_t f_count(const FiniteGroup& circ, const FiniteGroup& n, EnumerationOptions options = {}) {
  if (n.order() > options.bound) detail::fail(ErrorCode::OrderTooLarge, "order exceeds bound");
  std::size_t count = 0;
  for (const auto& r : regular_subgroups_in_holomorph(n))
    if (are_isomorphic(transport_operation(r), circ)) ++count;
  return count;
}

struct ByottCheck {
  std::size_t e = 0;
  std::size_t f = 0;
  std::size_t aut_circ = 0;
  std::size_t aut_n = 0;
  bool holds = false;
};

/// e(G,N)·|Aut(N)| = f(G,N)·|Aut(G)|, exactly.
inline ByottCheck byott_check(const FiniteGroup& circ, const FiniteGroup& n, EnumerationOptions options = {}) {
  ByottCheck c;
  c.e = e_count(circ, n, options);
  c.f = f_count(circ, n, options);
  c.aut_circ = automorphisms(circ).size();
  c.aut_n = automorphisms(n).size();
  c.holds = c.e * c.aut_n == c.f * c.aut_circ;
  return c;
}

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Cyclic, and no prime divisor p of the order divides q - 1 for another prime divisor q.
inline bool childs_criterion(const FiniteGroup& circ) {
  if (!is_cyclic(circ)) return false;
  const auto primes = prime_divisors(circ.order());
  for (std::size_t p : primes)
    for (std::size_t q : primes)
      if ((q - 1) % p == 0) return false;
  return true;
}

inline bool all_surjective(const FiniteGroup& circ, EnumerationOptions options = {}) {
  const auto census = operation_census(circ, options);
  const std::size_t total = subgroups(circ).size();
  for (const auto& b : census.braces)
    if (left_ideals(b).size() != total) return false;
  return true;
}

/// Least m such that N has more characteristic subgroups of order m than circ
/// has subgroups of order m; such an N admits no structure on circ.
inline std::optional<std::size_t> kohl_obstruction(const FiniteGroup& circ, const FiniteGroup& n) {
  if (circ.order() != n.order()) detail::fail(ErrorCode::BadParameters, "orders differ");
  const auto chars = characteristic_subgroups(n);
  const auto subs = subgroups(circ);
  for (std::size_t m = 1; m <= n.order(); ++m) {
    if (n.order() % m) continue;
    const auto c = std::count_if(chars.begin(), chars.end(), [m](const SubgroupSet& s) { return s.size() == m; });
    const auto s = std::count_if(subs.begin(), subs.end(), [m](const SubgroupSet& x) { return x.size() == m; });
    if (c > s) return m;
  }
  return std::nullopt;
}

/// For a bi-skew brace: every subgroup of circ is a left ideal iff every γ(σ)
/// is a power automorphism of circ. Both sides are computed separately.
inline bool surjective_iff_power_auto(const SkewBrace& b) {
  if (!is_bi_skew(b)) detail::fail(ErrorCode::NotBiSkew, "brace is not bi-skew");
  const bool surjective = left_ideals(b).size() == subgroups(b.circ()).size();
  const GammaTable g = gamma(b);
  bool power = true;
  for (Element s = 0; s < b.order() && power; ++s) power = is_power_automorphism(b.circ(), GroupMap{g[s]});
  detail::check_internal(surjective == power, "surjectivity and power-automorphism criteria disagree");
  return surjective;
}

}  // namespace hgs
