#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ccc/families.hpp"

using namespace ccc;

TEST_CASE("spec parsing and labels") {
  FamilySpec s = FamilySpec::parse("dihedral:12");
  CHECK(s.family == FamilySpec::Family::Dihedral);
  CHECK(s.m == 12);
  CHECK(s.label() == "dihedral:12");

  s = FamilySpec::parse("gpmn:3,1,2");
  CHECK(s.family == FamilySpec::Family::Gpmn);
  CHECK(s.p == 3);
  CHECK(s.m == 1);
  CHECK(s.n == 2);
  CHECK(s.group_order() == 81);

  s = FamilySpec::parse("unm:2,6");
  CHECK(s.n == 2);
  CHECK(s.m == 6);
  CHECK(s.group_order() == 24);

  CHECK_THROWS_AS(FamilySpec::parse("dihedral:2").validate(), InvalidParams);
  CHECK_THROWS_AS(FamilySpec::parse("dicyclic:1").validate(), InvalidParams);
  CHECK_THROWS_AS(FamilySpec::parse("unm:1,5").validate(), InvalidParams);
  CHECK_THROWS_AS(FamilySpec::parse("gpmn:4,1,1").validate(), InvalidParams);
  CHECK_THROWS(FamilySpec::parse("frobnicate:3"));
  CHECK_THROWS(FamilySpec::parse("dihedral"));
}

TEST_CASE("family orders and centers") {
  struct Row {
    const char* sel;
    int order;
    std::size_t center;
  };
  for (Row r : std::initializer_list<Row>{{"dihedral:3", 6, 1},
                                          {"dihedral:8", 16, 2},
                                          {"dicyclic:2", 8, 2},
                                          {"dicyclic:5", 20, 2},
                                          {"semidihedral:2", 16, 2},
                                          {"v8m:3", 24, 2},
                                          {"unm:2,5", 20, 2},
                                          {"gpmn:2,2,2", 32, 8},
                                          {"gpmn:5,1,1", 125, 5}}) {
    CAPTURE(r.sel);
    FiniteGroup g = build_family(FamilySpec::parse(r.sel));
    CHECK(g.order() == r.order);
    CHECK(conjugacy_data(g).center.size() == r.center);
  }
}

TEST_CASE("dicyclic(2) is Q8") {
  FiniteGroup g = build_family(FamilySpec::dicyclic(2));
  int involutions = 0;
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("gpmn(3,1,1) is the mod-3 Heisenberg group") {
  FiniteGroup g = build_family(FamilySpec::gpmn(3, 1, 1));
  CHECK(g.order() == 27);
  for (int x = 0; x < g.order(); ++x) CHECK(g.element_order(x) <= 3);  // exponent 3
  CHECK(conjugacy_data(g).center.size() == 3);

  FiniteGroup h = build_aux(AuxSpec::parse("heisenberg:3"));
  CHECK(conjugacy_data(h).class_size_multiset() ==
        conjugacy_data(g).class_size_multiset());
}

TEST_CASE("gpmn center order is p^(m+n-1)") {
  for (const char* sel : {"gpmn:2,1,2", "gpmn:2,3,1", "gpmn:3,2,1"}) {
    FamilySpec s = FamilySpec::parse(sel);
    FiniteGroup g = build_family(s);
    long expect = 1;
    for (long i = 0; i < s.m + s.n - 1; ++i) expect *= s.p;
    CHECK(static_cast<long>(conjugacy_data(g).center.size()) == expect);
  }
}

TEST_CASE("aux parsing") {
  AuxSpec a = AuxSpec::parse("frobenius:7,3");
  CHECK(a.kind == AuxSpec::Kind::FrobeniusPQ);
  CHECK(a.q == 7);
  CHECK(a.p == 3);
  CHECK(AuxSpec::parse("a4").kind == AuxSpec::Kind::AltFour);
  CHECK(AuxSpec::parse("productc:dihedral:4:2").base.family ==
        FamilySpec::Family::Dihedral);
  CHECK_THROWS(AuxSpec::parse("frobenius:7"));    // wrong arity
  CHECK_THROWS(AuxSpec::parse("nonsense"));
  // Parameter validation happens at build time.
  CHECK_THROWS_AS(build_aux(AuxSpec::parse("frobenius:8,3")), InvalidParams);  // q not prime
  CHECK_THROWS_AS(build_aux(AuxSpec::parse("frobenius:7,4")), InvalidParams);  // p not prime
  CHECK_THROWS_AS(build_aux(AuxSpec::parse("frobenius:11,3")), InvalidParams);  // 3 does not divide 10
  // frobenius:7,2 is legal: it is the dihedral group of order 14.
  CHECK(build_aux(AuxSpec::parse("frobenius:7,2")).order() == 14);
}

TEST_CASE("frobenius aux groups") {
  FiniteGroup g = build_aux(AuxSpec::parse("frobenius:7,3"));
  CHECK(g.order() == 21);
  ClassData d = conjugacy_data(g);
  CHECK(d.center.size() == 1);
  CHECK(d.classes.size() == 5);
  CHECK(d.class_size_multiset() == std::vector<int>{1, 3, 3, 7, 7});
}

TEST_CASE("f20 class structure") {
  FiniteGroup g = build_aux(AuxSpec::parse("f20:5,4"));
  CHECK(g.order() == 20);
  CHECK(conjugacy_data(g).class_size_multiset() ==
        std::vector<int>{1, 4, 5, 5, 5});
}

TEST_CASE("generalized dihedral class structure") {
  FiniteGroup g = build_aux(AuxSpec::parse("gendihedral:3"));
  CHECK(g.order() == 18);
  CHECK(conjugacy_data(g).class_size_multiset() ==
        std::vector<int>{1, 2, 2, 2, 2, 9});
}

TEST_CASE("extraspecial p^3 of exponent p^2") {
  FiniteGroup g = build_aux(AuxSpec::parse("extraspecial:3"));
  CHECK(g.order() == 27);
  int max_order = 0;
  for (int x = 0; x < g.order(); ++x) max_order = std::max(max_order, g.element_order(x));
  CHECK(max_order == 9);
  CHECK(conjugacy_data(g).center.size() == 3);
}

TEST_CASE("direct product aux") {
  FiniteGroup g = build_aux(AuxSpec::parse("productc:dicyclic:2:2"));
  CHECK(g.order() == 16);
  CHECK(conjugacy_data(g).center.size() == 4);
}

TEST_CASE("heisenberg(2) is dihedral of order 8") {
  StructureTag t = recognize_structure(build_aux(AuxSpec::parse("heisenberg:2")));
  CHECK(t.is_dihedral(4));
}
