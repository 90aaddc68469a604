#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hgs/brace.hpp"
#include "hgs/catalog.hpp"
#include "hgs/perm.hpp"
#include "oracles.hpp"

using namespace hgs;

namespace {

// Closure of a permutation set under composition, by brute force; gives up
// once it exceeds cap elements.
std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t cap) {
  std::set<Perm> out(gens.begin(), gens.end());
  bool grew = true;
  while (grew && out.size() <= cap) {
    grew = false;
    const std::vector<Perm> cur(out.begin(), out.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        grew = out.insert(compose(a, b)).second || grew;
  }
  return out;
}

// Every regular subgroup of Sym(n), n <= 6: closures of all pairs of
// fixed-point-free permutations that come out regular. Groups of order <= 6
// are 2-generated.
std::set<std::vector<Perm>> all_regular_subgroups(std::size_t n) {
  std::vector<Perm> fpf;
  Perm p = identity_perm(n);
  do {
    if (is_fixed_point_free(p)) fpf.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::set<std::vector<Perm>> out;
  auto consider = [&](std::set<Perm> s) {
    if (s.size() != n) return;
    std::set<Element> points;
    for (const auto& q : s) points.insert(q[0]);
    if (points.size() == n) out.insert(std::vector<Perm>(s.begin(), s.end()));
  };
  for (std::size_t i = 0; i < fpf.size(); ++i) {
    consider(closure({fpf[i]}, n));
    for (std::size_t j = i + 1; j < fpf.size(); ++j) consider(closure({fpf[i], fpf[j]}, n));
  }
  if (n == 1) out.insert({identity_perm(1)});
  return out;
}

}  // namespace

TEST(Perm, ComposeAndInvert) {
  const Perm p{1, 2, 0, 3};
  const Perm q{0, 1, 3, 2};
  EXPECT_EQ(compose(p, q), (Perm{1, 2, 3, 0}));
  EXPECT_EQ(compose(p, invert(p)), identity_perm(4));
  EXPECT_EQ(perm_order(p), 3u);
  EXPECT_EQ(perm_order(compose(p, q)), 4u);
  EXPECT_FALSE(is_fixed_point_free(p));
}

TEST(Holomorph, Sizes) {
  EXPECT_EQ(holomorph(cyclic_group(2)).size(), 2u);
  EXPECT_EQ(holomorph(elementary_abelian_group(2, 2)).size(), 24u);
  EXPECT_EQ(holomorph(cyclic_group(8)).size(), 32u);
  EXPECT_EQ(holomorph(catalog_group("Q8").group).size(), 8u * 24u);
}

TEST(Holomorph, IsAGroupContainingLeftTranslations) {
  for (const char* name : {"C4", "D3", "C2xC2"}) {
    const FiniteGroup n = catalog_group(name).group;
    const auto hol = holomorph(n);
    const std::set<Perm> set(hol.begin(), hol.end());
    for (const auto& a : hol)
      for (const auto& b : hol) ASSERT_TRUE(set.count(compose(a, b))) << name;
    for (const auto& l : left_regular(n)) EXPECT_TRUE(set.count(l)) << name;
  }
}

TEST(RegularSubgroup, RejectsNonRegular) {
  EXPECT_THROW(RegularSubgroup::make({identity_perm(3), Perm{0, 2, 1}}), Error);
  EXPECT_THROW(RegularSubgroup::make({identity_perm(4), Perm{1, 0, 2, 3}}), Error);
  EXPECT_NO_THROW(RegularSubgroup::make(left_regular(cyclic_group(5))));
}

TEST(RegularSubgroups, InHolomorphAreRegularAndClosed) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& named : catalog(n)) {
      const auto hol = holomorph(named.group);
      const std::set<Perm> hset(hol.begin(), hol.end());
      const auto regs = regular_subgroups_in_holomorph(named.group);
      for (std::size_t i = 1; i < regs.size(); ++i) EXPECT_TRUE(regs[i - 1] < regs[i]);
      for (const auto& r : regs) {
        ASSERT_EQ(r.elements().size(), n);
        std::set<Element> points;
        for (const auto& e : r.elements()) {
          EXPECT_TRUE(hset.count(e)) << named.name;
          points.insert(e[0]);
          EXPECT_TRUE(r.contains(invert(e)));
          for (const auto& f : r.elements()) EXPECT_TRUE(r.contains(compose(e, f)));
        }
        EXPECT_EQ(points.size(), n);
        // The transported group is the abstract group R, via evaluation at 0.
        const FiniteGroup t = transport_operation(r);
        for (const auto& e : r.elements())
          for (const auto& f : r.elements()) EXPECT_EQ(t.mul(e[0], f[0]), compose(e, f)[0]);
      }
    }
  }
}

TEST(RegularSubgroups, HolomorphSearchMatchesBruteForce) {
  // Brute force: regular subgroups of Sym(n) contained in Hol(N).
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = all_regular_subgroups(n);
    for (const auto& named : catalog(n)) {
      const auto hol = holomorph(named.group);
      const std::set<Perm> hset(hol.begin(), hol.end());
      std::set<std::vector<Perm>> expected;
      for (const auto& r : all) {
        bool inside = true;
        for (const auto& e : r) inside = inside && hset.count(e);
        if (inside) expected.insert(r);
      }
      std::set<std::vector<Perm>> got;
      for (const auto& r : regular_subgroups_in_holomorph(named.group)) got.insert(r.elements());
      EXPECT_EQ(got, expected) << named.name;
    }
  }
}

TEST(RegularSubgroups, OracleMatchesBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = all_regular_subgroups(n);
    for (const auto& named : catalog(n)) {
      const auto lambda = left_regular(named.group);
      std::set<std::vector<Perm>> expected;
      for (const auto& r : all) {
        const std::set<Perm> rs(r.begin(), r.end());
        bool normalized = true;
        for (const auto& l : lambda)
          for (const auto& e : r) normalized = normalized && rs.count(compose(compose(l, e), invert(l)));
        if (normalized) expected.insert(r);
      }
      std::set<std::vector<Perm>> got;
      for (const auto& r : regular_subgroups_normalized_by(named.group)) got.insert(r.elements());
      EXPECT_EQ(got, expected) << named.name;
    }
  }
}

TEST(RegularSubgroups, OracleRefusesAboveBound) {
  EXPECT_THROW(regular_subgroups_normalized_by(cyclic_group(9)), Error);
  EXPECT_EQ(regular_subgroups_normalized_by(cyclic_group(3), {3}).size(), 1u);
}

TEST(OperationFromRegularSubgroup, RightAndLeftTranslations) {
  const FiniteGroup d3 = dihedral_group(3);
  // ρ(G) yields G's own table, λ(G) the opposite table.
  EXPECT_EQ(operation_from_regular_subgroup(RegularSubgroup::make(right_regular(d3)), d3), d3);
  EXPECT_EQ(operation_from_regular_subgroup(RegularSubgroup::make(left_regular(d3)), d3), opposite_group(d3));
}

TEST(OperationFromRegularSubgroup, EveryOracleOutputIsABrace) {
  for (std::size_t n : {4, 6}) {
    for (const auto& named : catalog(n)) {
      for (const auto& r : regular_subgroups_normalized_by(named.group)) {
        const FiniteGroup dot = operation_from_regular_subgroup(r, named.group);
        EXPECT_TRUE(oracle::brace_law(dot, named.group)) << named.name;
      }
    }
  }
}

TEST(OperationFromRegularSubgroup, RejectsUnnormalized) {
  const FiniteGroup d3 = dihedral_group(3);
  // A cyclic regular subgroup of Sym(6) not normalized by λ(D3).
  const auto c6 = RegularSubgroup::make(left_regular(cyclic_group(6)));
  EXPECT_FALSE(is_normalized_by(c6, left_regular(d3)));
  EXPECT_THROW(operation_from_regular_subgroup(c6, d3), Error);
}

TEST(RegularEmbeddings, EachImageReachedAutGTimes) {
  for (const char* gname : {"C4", "C2xC2", "D3", "Q8", "D4"}) {
    const FiniteGroup g = catalog_group(gname).group;
    const std::size_t aut_g = automorphisms(g).size();
    for (const auto& named : catalog(g.order())) {
      std::map<std::vector<Perm>, std::size_t> hits;
      for_each_regular_embedding(g, named.group, [&](const std::vector<Perm>& imgs) {
        for (Element a = 0; a < g.order(); ++a)
          for (Element b = 0; b < g.order(); ++b) EXPECT_EQ(compose(imgs[a], imgs[b]), imgs[g.mul(a, b)]);
        std::vector<Perm> key = imgs;
        std::sort(key.begin(), key.end());
        ++hits[key];
        return true;
      });
      std::size_t expected = 0;
      for (const auto& r : regular_subgroups_in_holomorph(named.group))
        if (are_isomorphic(transport_operation(r), g)) {
          ++expected;
          EXPECT_EQ(hits[r.elements()], aut_g) << gname << " in Hol(" << named.name << ")";
        }
      EXPECT_EQ(hits.size(), expected) << gname << " in Hol(" << named.name << ")";
    }
  }
}
