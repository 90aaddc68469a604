#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hgs/brace.hpp"
#include "hgs/catalog.hpp"
#include "hgs/constructions.hpp"
#include "hgs/hopf_galois.hpp"
#include "hgs/perm.hpp"

namespace hgs {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample or a short summary
};

struct VerifyOptions {
  bool oracle_order_8 = false;
  bool enable_heavy_orders = false;
};

namespace detail {

inline CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    CheckResult r = body();
    r.name = name;
    return r;
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

inline std::vector<FiniteGroup> catalog_up_to(std::size_t max_order) {
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= max_order; ++n)
    if (catalog_complete_for(n))
      for (auto& g : catalog(n)) out.push_back(std::move(g.group));
  return out;
}

inline std::set<std::vector<Element>> table_set(const std::vector<SkewBrace>& bs) {
  std::set<std::vector<Element>> out;
  for (const auto& b : bs) out.emplace(b.dot().cells().begin(), b.dot().cells().end());
  return out;
}

/// Brace-level identities for one brace; returns an empty string when all hold.
inline std::string brace_identities(const SkewBrace& b) {
  if (auto c = brace_law_counterexample(b.dot(), b.circ())) return "brace law fails at " + std::to_string((*c)[0]);
  const GammaTable g = gamma_unchecked(b);
  if (!gamma_invariants_hold(b, g)) return "gamma is not a homomorphism into Aut(dot)";
  opposite(b);  // asserts the opposite gamma identity
  std::vector<SubgroupSet> expected;
  const auto li = left_ideals(b);
  for (const auto& s : li)
    if (is_normal(b.dot(), s)) expected.push_back(s);
  if (strong_left_ideals(b) != expected) return "strong left ideals differ from left ideals normal in dot";
  if (is_bi_skew(b)) {
    if (left_ideals(swap(b)) != li) return "bi-skew brace and its swap have different left ideals";
    surjective_iff_power_auto(b);
  }
  return {};
}

}  // namespace detail

/// Brace law, gamma identities, ideal hierarchy and the power-automorphism
/// criterion over every construction and every enumerated brace of order <= 8.
inline std::vector<CheckResult> verify_axioms(const VerifyOptions& = {}) {
  std::vector<CheckResult> out;
  out.push_back(detail::guarded("axioms: enumerated braces of order <= 8", [] {
    std::size_t count = 0;
    for (const auto& g : detail::catalog_up_to(8))
      for (const auto& b : enumerate_operations(g)) {
        if (auto why = detail::brace_identities(b); !why.empty()) return CheckResult{"", false, why};
        ++count;
      }
    return CheckResult{"", true, std::to_string(count) + " braces"};
  }));
  out.push_back(detail::guarded("axioms: constructions", [] {
    std::vector<SkewBrace> bs;
    for (const char* name : {"Q8", "D4", "Heisenberg-27", "M27", "D3"}) {
      const FiniteGroup g = catalog_group(name).group;
      const NormModCenter nz = norm_mod_center(g);
      for (const auto& psi : norm_mod_center_homomorphisms(g, nz)) bs.push_back(psi_construction(g, nz, psi));
      if (is_nilpotent_class_at_most_two(g)) bs.push_back(class2_construction(g));
      bs.push_back(almost_trivial_brace(g));
    }
    for (std::size_t p : {3, 5, 7}) bs.push_back(inversion_construction(cyclic_group(p)));
    bs.push_back(cpr_cps_brace(2, 1, 1));
    bs.push_back(cpr_cps_brace(3, 1, 1));
    bs.push_back(cpr_cps_brace(2, 2, 1));
    for (const auto& b : bs)
      if (auto why = detail::brace_identities(b); !why.empty()) return CheckResult{"", false, why};
    return CheckResult{"", true, std::to_string(bs.size()) + " braces"};
  }));
  return out;
}

/// Operations from the Sym(n) oracle equal those from the holomorph route.
inline std::vector<CheckResult> verify_bijection(const VerifyOptions& options = {}) {
  std::vector<CheckResult> out;
  const std::size_t top = options.oracle_order_8 ? 8 : 6;
  for (std::size_t n = 1; n <= top; ++n) {
    if (n == 7) continue;
    for (const auto& named : catalog(n)) {
      out.push_back(detail::guarded("bijection: " + named.name, [&] {
        std::vector<SkewBrace> oracle;
        for (const auto& r : regular_subgroups_normalized_by(named.group, {8}))
          oracle.push_back(make_brace(operation_from_regular_subgroup(r, named.group), named.group));
        const auto a = detail::table_set(oracle);
        const auto b = detail::table_set(enumerate_operations(named.group));
        if (a != b) return CheckResult{"", false, "oracle " + std::to_string(a.size()) + " vs holomorph " + std::to_string(b.size())};
        return CheckResult{"", true, std::to_string(a.size()) + " operations"};
      }));
    }
  }
  return out;
}

/// e(G,N)·|Aut(N)| = f(G,N)·|Aut(G)| for all catalog pairs of equal order <= 12.
inline std::vector<CheckResult> verify_byott(const VerifyOptions& = {}) {
  std::vector<CheckResult> out;
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto groups = catalog(n);
    for (const auto& g : groups) {
      out.push_back(detail::guarded("byott: " + g.name, [&] {
        const OperationCensus census = operation_census(g.group);
        const std::size_t aut_g = census.circ_automorphism_count;
        std::string summary;
        for (const auto& m : groups) {
          const std::size_t e = e_count(census, m.group);
          const std::size_t f = f_count(g.group, m.group);
          const std::size_t aut_n = automorphisms(m.group).size();
          summary += " " + m.name + ":" + std::to_string(e);
          if (e * aut_n != f * aut_g)
            return CheckResult{"", false, "N=" + m.name + " e=" + std::to_string(e) + " f=" + std::to_string(f)};
        }
        return CheckResult{"", true, "e by type" + summary};
      }));
    }
  }
  return out;
}

/// Census counts, ratios and construction counts for the worked examples.
inline std::vector<CheckResult> verify_numbers(const VerifyOptions& = {}) {
  std::vector<CheckResult> out;
  out.push_back(detail::guarded("numbers: Q8 census 22/6/16", [] {
    const FiniteGroup q8 = catalog_group("Q8").group;
    const auto reports = enumerate_reports(q8);
    std::size_t cyclic = 0, surjective = 0;
    std::set<std::vector<Element>> surj;
    for (const auto& r : reports) {
      cyclic += r.type_name == "C8";
      if (r.is_surjective) {
        ++surjective;
        surj.emplace(r.operation.cells().begin(), r.operation.cells().end());
      }
    }
    const NormModCenter nz = norm_mod_center(q8);
    std::vector<SkewBrace> psi;
    for (const auto& f : norm_mod_center_homomorphisms(q8, nz)) psi.push_back(psi_construction(q8, nz, f));
    const bool ok = reports.size() == 22 && cyclic == 6 && surjective == 16 && psi.size() == 16 && detail::table_set(psi) == surj;
    return CheckResult{"", ok,
                       "total=" + std::to_string(reports.size()) + " cyclic=" + std::to_string(cyclic) +
                           " surjective=" + std::to_string(surjective) + " psi=" + std::to_string(psi.size())};
  }));
  out.push_back(detail::guarded("numbers: D5/C10 ratio pair", [] {
    const SkewBrace b = inversion_construction(cyclic_group(5));
    const BiSkewPairReport r = biskew_pair_report(b);
    const bool ok = r.ratio_fwd == Ratio::make(1, 1) && r.ratio_swapped == Ratio::make(4, 8) && r.quotient == Ratio::make(2, 1);
    return CheckResult{"", ok, "fwd=" + r.ratio_fwd.str() + " swapped=" + r.ratio_swapped.str() + " quotient=" + r.quotient.str()};
  }));
  out.push_back(detail::guarded("numbers: M27 psi braces", [] {
    const FiniteGroup g = catalog_group("M27").group;
    const NormModCenter nz = norm_mod_center(g);
    const FiniteGroup nsub = subgroup_group(g, nz.norm).group;
    bool ok = nz.norm.size() == 9 && exponent(nsub) == 3 && is_abelian(nsub) && nz.center.size() == 3;
    std::vector<SkewBrace> bs;
    for (const auto& f : norm_mod_center_homomorphisms(g, nz)) bs.push_back(psi_construction(g, nz, f));
    ok = ok && bs.size() == 9 && detail::table_set(bs).size() == 9;
    for (const auto& b : bs) ok = ok && left_ideals(b).size() == subgroups(g).size();
    return CheckResult{"", ok, std::to_string(bs.size()) + " psi braces"};
  }));
  out.push_back(detail::guarded("numbers: Heisenberg-27 class-two brace", [] {
    const FiniteGroup g = catalog_group("Heisenberg-27").group;
    const SkewBrace b = class2_construction(g);
    const bool ok = left_ideals(b) == normal_subgroups(g) && b.dot() != almost_trivial_brace(g).dot();
    return CheckResult{"", ok, std::to_string(left_ideals(b).size()) + " left ideals"};
  }));
  out.push_back(detail::guarded("numbers: C8 has a bi-skew surjective Q8-type brace", [] {
    const auto reports = enumerate_reports(cyclic_group(8));
    std::size_t witnesses = 0, q8_type = 0;
    for (const auto& r : reports)
      if (r.type_name == "Q8") {
        ++q8_type;
        witnesses += r.is_bi_skew && r.is_surjective;
      }
    return CheckResult{"", witnesses > 0, std::to_string(witnesses) + " of " + std::to_string(q8_type) + " Q8-type braces"};
  }));
  out.push_back(detail::guarded("numbers: cyclic p-power groups", [] {
    for (std::size_t n : {4, 8, 9, 27})
      for (const auto& r : enumerate_reports(cyclic_group(n))) {
        if (!r.is_surjective) return CheckResult{"", false, "C" + std::to_string(n) + " has a non-surjective structure"};
        // For C4 the only other type, C2xC2, is dihedral of order 4.
        bool allowed = true;
        if (n == 8) allowed = r.type_name == "C8" || r.type_name == "D4" || r.type_name == "Q8";
        if (n % 2 == 1) allowed = r.type_name == "C" + std::to_string(n);
        if (!allowed) return CheckResult{"", false, "C" + std::to_string(n) + " has type " + r.type_name};
      }
    return CheckResult{"", true, "C4 C8 C9 C27"};
  }));
  return out;
}

/// all_surjective agrees with the number-theoretic criterion.
inline std::vector<CheckResult> verify_childs(const VerifyOptions& = {}) {
  std::vector<CheckResult> out;
  std::vector<NamedGroup> groups;
  for (std::size_t n = 1; n <= 12; ++n)
    for (auto& g : catalog(n)) groups.push_back(std::move(g));
  groups.push_back(catalog_group("C15"));
  for (const auto& g : groups)
    out.push_back(detail::guarded("childs: " + g.name, [&] {
      const bool a = all_surjective(g.group);
      const bool c = childs_criterion(g.group);
      return CheckResult{"", a == c, std::string("all_surjective=") + (a ? "true" : "false") + " criterion=" + (c ? "true" : "false")};
    }));
  return out;
}

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"axioms", "bijection", "byott", "paper-numbers", "childs", "all"};
  return names;
}

/// Throws UnknownName for a suite outside verify_suite_names().
inline std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options = {}) {
  using Fn = std::vector<CheckResult> (*)(const VerifyOptions&);
  const std::vector<std::pair<std::string, Fn>> suites{{"axioms", verify_axioms},
                                                       {"bijection", verify_bijection},
                                                       {"byott", verify_byott},
                                                       {"paper-numbers", verify_numbers},
                                                       {"childs", verify_childs}};
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : suites)
    if (suite == "all" || suite == name) {
      auto part = fn(options);
      out.insert(out.end(), part.begin(), part.end());
    }
  if (out.empty()) detail::fail(ErrorCode::UnknownName, "unknown suite '" + suite + "'");
  return out;
}

}  // namespace hgs
