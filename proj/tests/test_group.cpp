#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ccc/families.hpp"
#include "ccc/group.hpp"

using namespace ccc;

namespace {

// Independent tiny constructors, not routed through the families module.
FiniteGroup cyclic(int n) {
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return FiniteGroup("Z" + std::to_string(n), n, std::move(mul), {n > 1 ? 1 : 0});
}

FiniteGroup sym3() {
  // Permutations of {0,1,2} in lexicographic one-line order.
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index = [&](const std::array<int, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    return -1;
  };
  std::vector<int> mul(36);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[g][perms[h][x]];
      mul[static_cast<std::size_t>(g) * 6 + h] = index(c);
    }
  return FiniteGroup("S3", 6, std::move(mul));
}

}  // namespace

TEST_CASE("constructor validates the table") {
  CHECK_THROWS(FiniteGroup("bad", 2, {0, 0, 0, 0}));        // not a Latin square
  // Latin square without a two-sided identity (0 is only a left identity).
  CHECK_THROWS(FiniteGroup("bad", 3, {0, 1, 2, 2, 0, 1, 1, 2, 0}));
  CHECK_THROWS(FiniteGroup("bad", 2, {0, 1, 1, 2}));        // out of range
  CHECK_NOTHROW(FiniteGroup("Z2", 2, {0, 1, 1, 0}));
  // Latin square that is not associative: the "law" i+j with row 2 patched.
  CHECK_THROWS(FiniteGroup("bad", 5,
                           {0, 1, 2, 3, 4,
                            1, 2, 3, 4, 0,
                            2, 3, 4, 0, 1,
                            3, 4, 0, 1, 2,
                            4, 0, 1, 3, 2}));
}

TEST_CASE("element orders and inverses") {
  FiniteGroup z6 = cyclic(6);
  CHECK(z6.identity() == 0);
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.element_order(2) == 3);
  CHECK(z6.element_order(3) == 2);
  CHECK(z6.inv(1) == 5);
  FiniteGroup s3 = sym3();
  std::multiset<int> orders;
  for (int g = 0; g < 6; ++g) orders.insert(s3.element_order(g));
  CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("conjugacy classes of S3") {
  FiniteGroup s3 = sym3();
  ClassData d = conjugacy_data(s3);
  CHECK(d.center == std::vector<int>{0});
  CHECK(d.class_size_multiset() == std::vector<int>{1, 2, 3});
  for (std::size_t i = 0; i < d.classes.size(); ++i)
    for (int g : d.classes[i].members) CHECK(d.class_of[g] == static_cast<int>(i));
  // Class equation.
  int total = 0;
  for (const auto& c : d.classes) total += c.size();
  CHECK(total == s3.order());
}

TEST_CASE("class sizes divide the group order") {
  for (const char* sel : {"dihedral:6", "dicyclic:3", "semidihedral:2"}) {
    FiniteGroup g = build_family(FamilySpec::parse(sel));
    ClassData d = conjugacy_data(g);
    for (const auto& c : d.classes) CHECK(g.order() % c.size() == 0);
  }
}

TEST_CASE("commuting probability") {
  CHECK(commuting_probability(build_family(FamilySpec::dihedral(4))) == Rat(5, 8));
  CHECK(commuting_probability(build_family(FamilySpec::dihedral(3))) == Rat(1, 2));
  CHECK(commuting_probability(cyclic(12)) == 1);
  CHECK(commuting_probability(build_aux(AuxSpec::parse("frobenius:7,3"))) == Rat(5, 21));
  CHECK(commuting_probability(build_aux(AuxSpec::parse("a4"))) == Rat(1, 3));
}

TEST_CASE("distinct centralizers") {
  CHECK(distinct_centralizer_count(build_family(FamilySpec::dihedral(4))) == 4);
  CHECK(distinct_centralizer_count(build_family(FamilySpec::dihedral(3))) == 5);
  CHECK(distinct_centralizer_count(cyclic(7)) == 1);
}

TEST_CASE("centralizer is a subgroup containing the element") {
  FiniteGroup g = build_family(FamilySpec::semidihedral(2));
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> c = centralizer(g, x);
    CHECK(std::find(c.begin(), c.end(), x) != c.end());
    CHECK(std::find(c.begin(), c.end(), g.identity()) != c.end());
    CHECK(g.order() % static_cast<int>(c.size()) == 0);
  }
}

TEST_CASE("quotient by center") {
  FiniteGroup d16 = build_family(FamilySpec::dihedral(8));
  FiniteGroup q = quotient_by_center(d16);
  CHECK(q.order() == 8);
  CHECK(recognize_structure(q).is_dihedral(4));

  FiniteGroup d8 = build_family(FamilySpec::dihedral(4));
  StructureTag t = recognize_structure(quotient_by_center(d8));
  CHECK(t.is_elementary_abelian(2, 2));
}

TEST_CASE("direct product") {
  FiniteGroup g = direct_product(sym3(), cyclic(4));
  CHECK(g.order() == 24);
  ClassData d = conjugacy_data(g);
  CHECK(d.center.size() == 4);
  CHECK(d.classes.size() == 12);  // 3 * 4
}

TEST_CASE("structure recognition") {
  CHECK(recognize_structure(cyclic(1)).kind == StructureTag::Kind::Trivial);
  CHECK(recognize_structure(cyclic(12)).to_string() == "Z12");
  StructureTag t = recognize_structure(direct_product(cyclic(3), cyclic(3)));
  CHECK(t.is_elementary_abelian(3, 2));
  t = recognize_structure(direct_product(cyclic(2), cyclic(4)));
  CHECK(t.kind == StructureTag::Kind::Abelian);
  CHECK(t.invariant_factors == std::vector<long>{2, 4});
  CHECK(recognize_structure(sym3()).is_dihedral(3));
  CHECK(recognize_structure(build_family(FamilySpec::dicyclic(2))).kind ==
        StructureTag::Kind::Other);
}

TEST_CASE("frobenius decomposition") {
  auto f = frobenius_decomposition(build_aux(AuxSpec::parse("frobenius:7,3")));
  REQUIRE(f.has_value());
  CHECK(f->kernel_order == 7);
  CHECK(f->complement_order == 3);

  f = frobenius_decomposition(build_aux(AuxSpec::parse("a4")));
  REQUIRE(f.has_value());
  CHECK(f->kernel_order == 4);
  CHECK(f->complement_order == 3);

  f = frobenius_decomposition(build_family(FamilySpec::dihedral(5)));
  REQUIRE(f.has_value());
  CHECK(f->kernel_order == 5);
  CHECK(f->complement_order == 2);

  // Nontrivial center rules Frobenius out immediately.
  CHECK_FALSE(frobenius_decomposition(build_family(FamilySpec::dihedral(4))));
  CHECK_FALSE(frobenius_decomposition(cyclic(15)));
  // Odd dihedral groups are Frobenius too.
  f = frobenius_decomposition(build_family(FamilySpec::dihedral(15)));
  REQUIRE(f.has_value());
  CHECK(f->kernel_order == 15);
  // Nonabelian with trivial center, but a direct product is never Frobenius.
  CHECK_FALSE(frobenius_decomposition(direct_product(sym3(), sym3())));
}

TEST_CASE("json round trip") {
  FiniteGroup g = build_family(FamilySpec::dicyclic(3));
  nlohmann::json j = g.to_json();
  CHECK(j["order"] == 12);
  FiniteGroup h = FiniteGroup::from_json(j);
  CHECK(h.name() == g.name());
  CHECK(h.order() == g.order());
  CHECK(h.mul_table() == g.mul_table());
  CHECK(h.generators() == g.generators());
}
