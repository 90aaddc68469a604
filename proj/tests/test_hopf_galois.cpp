#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "hgs/hopf_galois.hpp"
#include "oracles.hpp"

using namespace hgs;

namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

std::set<std::vector<Element>> tables(const std::vector<SkewBrace>& bs) {
  std::set<std::vector<Element>> out;
  for (const auto& b : bs) out.emplace(b.dot().cells().begin(), b.dot().cells().end());
  return out;
}

std::vector<FiniteGroup> types_of(std::size_t n) {
  std::vector<FiniteGroup> out;
  for (const auto& g : catalog(n)) out.push_back(g.group);
  return out;
}

// Bijections fixing 0 that preserve both tables.
std::size_t brace_automorphisms_brute(const SkewBrace& b) {
  std::vector<Element> p(b.order());
  std::iota(p.begin(), p.end(), Element{0});
  std::size_t count = 0;
  do {
    count += oracle::preserves(b.dot(), b.dot(), p) && oracle::preserves(b.circ(), b.circ(), p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return count;
}

FiniteGroup q8() { return catalog_group("Q8").group; }

}  // namespace

TEST(Census, MatchesRelabelingOracle) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto types = types_of(n);
    for (const auto& named : catalog(n))
      EXPECT_EQ(tables(enumerate_operations(named.group)), oracle::brace_operations(named.group, types)) << named.name;
  }
}

TEST(Census, KnownTotals) {
  const std::map<std::string, std::size_t> expected{
      {"C1", 1},      {"C2", 1},   {"C4", 2},    {"C2xC2", 4}, {"C6", 3},     {"D3", 5},   {"C8", 6},
      {"C4xC2", 26},  {"C2xC2xC2", 106}, {"D4", 30}, {"Q8", 22}, {"C9", 3},  {"C3xC3", 9}, {"C10", 3},
      {"D5", 7},      {"C12", 6},  {"C2xC6", 20}, {"A4", 14},   {"D6", 40},    {"Dic3", 22}, {"C14", 3},
      {"D7", 9},      {"C15", 1}};
  for (const auto& [name, count] : expected)
    EXPECT_EQ(enumerate_operations(catalog_group(name).group).size(), count) << name;
}

TEST(Census, QuaternionSplitByType) {
  const auto census = operation_census(q8());
  std::map<std::string, std::size_t> by_type;
  for (const auto& b : census.braces) ++by_type[identify(b.dot())];
  EXPECT_EQ(census.braces.size(), 22u);
  EXPECT_EQ(by_type["C8"], 6u);
  EXPECT_EQ(e_count(census, cyclic_group(8)), 6u);
}

TEST(Census, SortedAndEveryMemberIsABrace) {
  const auto census = operation_census(dihedral_group(4));
  for (std::size_t i = 1; i < census.braces.size(); ++i) EXPECT_TRUE(census.braces[i - 1].dot() < census.braces[i].dot());
  for (const auto& b : census.braces) EXPECT_TRUE(oracle::brace_law(b.dot(), b.circ()));
}

TEST(Census, OrbitIdentityAndClasses) {
  for (std::size_t n : {4, 6, 8}) {
    for (const auto& named : catalog(n)) {
      const auto census = operation_census(named.group);
      const std::size_t aut = oracle::automorphism_count(named.group);
      EXPECT_EQ(census.circ_automorphism_count, aut);
      std::size_t sum = 0;
      std::vector<std::size_t> members(census.classes.size(), 0);
      for (std::size_t c : census.class_of) ++members[c];
      for (std::size_t c = 0; c < census.classes.size(); ++c) {
        const BraceClass& cls = census.classes[c];
        EXPECT_EQ(cls.automorphism_count, brace_automorphisms_brute(cls.representative)) << named.name;
        EXPECT_EQ(cls.orbit_size * cls.automorphism_count, aut) << named.name;
        EXPECT_EQ(members[c], cls.orbit_size) << named.name;
        sum += aut / cls.automorphism_count;
      }
      EXPECT_EQ(sum, census.braces.size()) << named.name;
      // Same class iff isomorphic.
      for (std::size_t i = 0; i < census.braces.size(); ++i) {
        const auto& rep = census.classes[census.class_of[i]].representative;
        EXPECT_TRUE(brace_isomorphism(rep, census.braces[i]).has_value());
      }
      for (std::size_t a = 0; a < census.classes.size(); ++a)
        for (std::size_t b = a + 1; b < census.classes.size(); ++b)
          EXPECT_FALSE(brace_isomorphism(census.classes[a].representative, census.classes[b].representative).has_value());
    }
  }
}

TEST(Byott, HoldsUpToOrderEight) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& g : catalog(n))
      for (const auto& m : catalog(n)) {
        const ByottCheck c = byott_check(g.group, m.group);
        EXPECT_TRUE(c.holds) << g.name << " " << m.name << " e=" << c.e << " f=" << c.f;
        EXPECT_EQ(c.aut_circ, oracle::automorphism_count(g.group));
      }
  EXPECT_EQ(e_count(cyclic_group(2), cyclic_group(2)), 1u);
  EXPECT_EQ(f_count(cyclic_group(2), cyclic_group(2)), 1u);
}

TEST(Byott, QuaternionAgainstCyclic) {
  const ByottCheck c = byott_check(q8(), cyclic_group(8));
  EXPECT_EQ(c.e, 6u);
  EXPECT_EQ(c.aut_circ, 24u);
  EXPECT_EQ(c.aut_n, 4u);
  EXPECT_EQ(c.f, 1u);
  EXPECT_TRUE(c.holds);
}

TEST(Analyze, TrivialAndAlmostTrivial) {
  const HgsReport t = analyze(trivial_brace(dihedral_group(4)));
  EXPECT_TRUE(t.is_surjective);
  EXPECT_EQ(t.gc_ratio, Ratio::make(1, 1));
  EXPECT_EQ(t.iso_class_id, 0u);
  EXPECT_EQ(t.grouplikes, SubgroupSet::whole(8));
  EXPECT_EQ(t.type_name, "D4");

  for (const char* name : {"D3", "D4", "A4", "Dic3"}) {
    const FiniteGroup g = catalog_group(name).group;
    const HgsReport r = analyze(almost_trivial_brace(g));
    EXPECT_EQ(r.image, normal_subgroups(g)) << name;
    EXPECT_FALSE(r.is_surjective) << name;
    EXPECT_EQ(r.gc_ratio, Ratio::make(static_cast<std::int64_t>(normal_subgroups(g).size()),
                                      static_cast<std::int64_t>(subgroups(g).size())));
  }
  // Hamiltonian: every subgroup is normal.
  EXPECT_TRUE(analyze(almost_trivial_brace(q8())).is_surjective);
}

TEST(Analyze, OrbitSizeFromAutomorphisms) {
  const auto census = operation_census(dihedral_group(3));
  const auto reports = enumerate_reports(census);
  for (std::size_t i = 0; i < census.braces.size(); ++i) EXPECT_EQ(analyze(census.braces[i]).orbit_size, reports[i].orbit_size);
}

TEST(Reports, InvariantsUpToOrderTwelve) {
  for (std::size_t n = 1; n <= 12; ++n)
    for (const auto& named : catalog(n)) {
      const auto subs = subgroups(named.group);
      for (const auto& r : enumerate_reports(named.group)) {
        for (const auto& s : r.image) EXPECT_TRUE(std::find(subs.begin(), subs.end(), s) != subs.end());
        EXPECT_EQ(r.is_surjective, r.image.size() == subs.size());
        EXPECT_EQ(r.is_surjective, r.gc_ratio == Ratio::make(1, 1));
        EXPECT_LE(r.gc_ratio.num, r.gc_ratio.den);
        EXPECT_EQ(r.grouplikes, fix(make_brace(r.operation, named.group)));
        EXPECT_EQ(r.type_name, identify(r.operation));
      }
    }
}

TEST(RatioArithmetic, LowestTerms) {
  EXPECT_EQ(Ratio::make(4, 8), Ratio::make(1, 2));
  EXPECT_EQ(Ratio::make(4, 8).str(), "1/2");
  EXPECT_EQ(Ratio::make(6, 3).str(), "2");
  EXPECT_EQ(Ratio::make(1, 1) / Ratio::make(4, 8), Ratio::make(2, 1));
  EXPECT_EQ(Ratio::make(3, -6), Ratio::make(-1, 2));
  EXPECT_EQ(code_of([] { Ratio::make(1, 0); }), ErrorCode::BadParameters);
}

TEST(BiSkewPair, Ratios) {
  const BiSkewPairReport t = biskew_pair_report(trivial_brace(q8()));
  EXPECT_EQ(t.quotient, Ratio::make(1, 1));

  const BiSkewPairReport c5 = biskew_pair_report(inversion_construction(cyclic_group(5)));
  EXPECT_EQ(c5.ratio_fwd, Ratio::make(1, 1));
  EXPECT_EQ(c5.ratio_swapped, Ratio::make(4, 8));
  EXPECT_EQ(c5.quotient, Ratio::make(2, 1));
  EXPECT_EQ(c5.left_ideal_count, 4u);

  const BiSkewPairReport c7 = biskew_pair_report(inversion_construction(cyclic_group(7)));
  EXPECT_EQ(c7.dot_subgroup_count, 10u);
  EXPECT_EQ(c7.circ_subgroup_count, 4u);
  EXPECT_EQ(c7.quotient, Ratio::make(10, 4));
}

TEST(BiSkewPair, RejectsNonBiSkew) {
  std::size_t rejected = 0;
  for (const auto& b : enumerate_operations(dihedral_group(4))) {
    if (is_bi_skew(b)) continue;
    ++rejected;
    EXPECT_EQ(code_of([&] { biskew_pair_report(b); }), ErrorCode::NotBiSkew);
    EXPECT_EQ(code_of([&] { surjective_iff_power_auto(b); }), ErrorCode::NotBiSkew);
  }
  EXPECT_GT(rejected, 0u);
}

TEST(Childs, Criterion) {
  EXPECT_TRUE(childs_criterion(cyclic_group(15)));
  EXPECT_FALSE(childs_criterion(cyclic_group(6)));
  EXPECT_FALSE(childs_criterion(q8()));
  EXPECT_TRUE(childs_criterion(cyclic_group(8)));
  EXPECT_FALSE(childs_criterion(cyclic_group(21)));
  EXPECT_TRUE(childs_criterion(cyclic_group(35)));
  EXPECT_EQ(prime_divisors(60), (std::vector<std::size_t>{2, 3, 5}));
}

TEST(Childs, AgreesWithEnumeration) {
  EXPECT_TRUE(all_surjective(cyclic_group(15)));
  EXPECT_FALSE(all_surjective(cyclic_group(6)));
  EXPECT_FALSE(all_surjective(q8()));
  for (std::size_t n = 1; n <= 12; ++n)
    for (const auto& g : catalog(n)) EXPECT_EQ(all_surjective(g.group), childs_criterion(g.group)) << g.name;
}

TEST(Kohl, Obstruction) {
  for (const auto& g : catalog(8)) EXPECT_FALSE(kohl_obstruction(g.group, g.group).has_value()) << g.name;
  EXPECT_FALSE(kohl_obstruction(q8(), cyclic_group(8)).has_value());
  // C8 has one characteristic subgroup of each order and C2^3 has subgroups
  // of every order, so there is no witness.
  EXPECT_FALSE(kohl_obstruction(elementary_abelian_group(2, 3), cyclic_group(8)).has_value());
  // Wherever a witness exists, the census has no structure of that type.
  std::size_t witnesses = 0;
  for (std::size_t n : {4, 6, 8, 9, 10, 12, 27})
    for (const auto& g : catalog(n)) {
      if (n == 27 && !is_cyclic(g.group)) continue;
      const auto census = operation_census(g.group);
      for (const auto& m : catalog(n)) {
        if (!kohl_obstruction(g.group, m.group)) continue;
        ++witnesses;
        EXPECT_EQ(e_count(census, m.group), 0u) << g.name << " " << m.name;
      }
    }
  EXPECT_GT(witnesses, 0u);
  EXPECT_EQ(code_of([] { kohl_obstruction(cyclic_group(4), cyclic_group(5)); }), ErrorCode::BadParameters);
}

TEST(PowerAutomorphisms, SurjectivityAgreement) {
  EXPECT_TRUE(surjective_iff_power_auto(trivial_brace(q8())));
  EXPECT_TRUE(surjective_iff_power_auto(inversion_construction(cyclic_group(5))));
  std::size_t cyclic_bi_skew = 0;
  for (const auto& b : enumerate_operations(q8())) {
    if (!is_bi_skew(b)) continue;
    const bool s = surjective_iff_power_auto(b);
    if (is_cyclic(b.dot())) {
      ++cyclic_bi_skew;
      EXPECT_FALSE(s);
    }
  }
  EXPECT_GT(cyclic_bi_skew, 0u);
}

TEST(SameNumbers, CharacteristicCountForcesSurjectivity) {
  std::size_t applied = 0;
  for (std::size_t n = 1; n <= 12; ++n)
    for (const auto& named : catalog(n)) {
      const std::size_t subs = subgroups(named.group).size();
      for (const auto& r : enumerate_reports(named.group))
        if (characteristic_subgroups(r.operation).size() == subs) {
          ++applied;
          EXPECT_TRUE(r.is_surjective) << named.name;
        }
    }
  EXPECT_GT(applied, 0u);
}

TEST(CyclicPowers, EvenTypes) {
  for (std::size_t n : {2, 4, 8})
    for (const auto& r : enumerate_reports(cyclic_group(n))) {
      EXPECT_TRUE(r.is_surjective);
      const FiniteGroup& d = r.operation;
      const bool allowed = is_cyclic(d) || oracle::isomorphism(d, dihedral_group(n / 2)).has_value() ||
                           (n == 8 && oracle::isomorphism(d, q8()).has_value());
      EXPECT_TRUE(allowed) << "C" << n << " type " << r.type_name;
    }
}

TEST(CyclicPowers, OddTypes) {
  for (std::size_t n : {9, 27})
    for (const auto& r : enumerate_reports(cyclic_group(n))) {
      EXPECT_TRUE(r.is_surjective);
      EXPECT_TRUE(is_cyclic(r.operation));
    }
}

TEST(DirectProduct, CoprimeSurjectiveFactors) {
  const SkewBrace b = product_brace(inversion_construction(cyclic_group(3)), trivial_brace(cyclic_group(5)));
  EXPECT_TRUE(oracle::brace_law(b.dot(), b.circ()));
  EXPECT_TRUE(analyze(b).is_surjective);
}

TEST(Enumeration, Refusals) {
  EXPECT_EQ(code_of([] { enumerate_operations(cyclic_group(30)); }), ErrorCode::OrderTooLarge);
  EXPECT_EQ(code_of([] { enumerate_operations(cyclic_group(9), {8}); }), ErrorCode::OrderTooLarge);
  EXPECT_EQ(code_of([] { enumerate_operations(elementary_abelian_group(3, 3)); }), ErrorCode::OrderTooLarge);
  EXPECT_EQ(code_of([] { enumerate_operations(cyclic_group(16)); }), ErrorCode::CatalogIncompleteForOrder);
  EXPECT_EQ(code_of([] { enumerate_operations(cyclic_group(16), {27, true}); }), ErrorCode::CatalogIncompleteForOrder);
  EXPECT_EQ(code_of([] { enumerate_operations(cyclic_group(18)); }), ErrorCode::CatalogIncompleteForOrder);
  EXPECT_EQ(code_of([] { f_count(cyclic_group(9), cyclic_group(9), {8}); }), ErrorCode::OrderTooLarge);
}
