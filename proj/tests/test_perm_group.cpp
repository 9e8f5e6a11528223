#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nuforge/catalog.hpp"
#include "nuforge/perm_group.hpp"

using namespace nuforge;
using u32 = std::uint32_t;

namespace {

PermGroup from_cycles(u32 degree, std::initializer_list<const char*> gens) {
  std::vector<Permutation> perms;
  for (const char* c : gens) perms.push_back(parse_cycles(c, degree));
  return PermGroup(degree, std::move(perms));
}

const PermGroup kS3 = from_cycles(3, {"(0 1)", "(0 1 2)"});
const PermGroup kA3 = from_cycles(3, {"(0 1 2)"});
const PermGroup kD8 = from_cycles(4, {"(0 1 2 3)", "(1 3)"});

}  // namespace

TEST_CASE("group order via the BSGS transversal product") {
  CHECK(kS3.order() == 6);
  CHECK(PermGroup::trivial(5).order() == 1);
  CHECK(kD8.order() == 8);
  CHECK(kA3.order() == 3);
  // Frobenius group of order 20: the 4-cycle acts as x -> 2x on Z/5
  CHECK(from_cycles(5, {"(0 1 2 3 4)", "(1 2 4 3)"}).order() == 20);
  CHECK(from_cycles(5, {"(0 1 2 3 4)", "(1 2 3 4)"}).order() == 120);  // S5
}

TEST_CASE("membership by sifting") {
  CHECK(kS3.contains(parse_cycles("(0 1 2)", 3)));
  CHECK_FALSE(kA3.contains(parse_cycles("(0 1)", 3)));
  CHECK(kA3.contains(Permutation(3)));
  CHECK(kD8.contains(parse_cycles("(0 2)(1 3)", 4)));
  CHECK_FALSE(kD8.contains(parse_cycles("(0 1)", 4)));
  CHECK_THROWS_AS(kS3.contains(Permutation(5)), DegreeMismatch);
}

TEST_CASE("bsgs passes the strong-generation audit") {
  for (const PermGroup* g : {&kS3, &kA3, &kD8}) CHECK(g->verify_bsgs());
  // and on a flagged regular realization
  PermGroup reg = make_catalog_group("D12").regular_perm_group();
  CHECK(reg.verify_bsgs());
  CHECK(reg.order() == 12);
}

TEST_CASE("bsgs order equals exhaustive closure count") {
  for (const char* name : {"C6", "S3", "D8", "Q8", "C2xC4", "A4"}) {
    PermGroup reg = make_catalog_group(name).regular_perm_group();
    CHECK(reg.order() == reg.elements().size());
  }
  CHECK(kS3.order() == kS3.elements().size());
  CHECK(kD8.order() == kD8.elements().size());
}

TEST_CASE("products of members stay inside the group") {
  std::mt19937_64 rng(2024);
  for (const std::string& name : default_corpus()) {
    PermGroup reg = make_catalog_group(name).regular_perm_group();
    std::vector<Permutation> elems = reg.elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    bool ok = true;
    for (int rep = 0; rep < 10000 && ok; ++rep) {
      const Permutation& x = elems[pick(rng)];
      const Permutation& y = elems[pick(rng)];
      ok = reg.contains(x * y);
    }
    CHECK(ok);
  }
}

TEST_CASE("normal closure examples") {
  PermGroup a3 = normal_closure(kS3, {parse_cycles("(0 1 2)", 3)});
  CHECK(a3.order() == 3);
  CHECK(normal_closure(kS3, {}).is_trivial());
  // rotation^2 generates the centre of D8
  PermGroup z = normal_closure(kD8, {parse_cycles("(0 2)(1 3)", 4)});
  CHECK(z.order() == 2);
  CHECK_THROWS_AS(normal_closure(kA3, {parse_cycles("(0 1)", 3)}),
                  ElementOutsideGroup);
}

TEST_CASE("commutator subgroup examples") {
  CHECK(commutator_subgroup(kS3, kS3, kS3).order() == 3);
  CHECK(commutator_subgroup(kD8, kD8, kD8).order() == 2);
  CHECK(commutator_subgroup(kA3, kA3, kA3).is_trivial());
}

TEST_CASE("center examples") {
  CHECK(center(kS3).is_trivial());
  CHECK(center(kD8).order() == 2);
  PermGroup c6 = make_catalog_group("C6").regular_perm_group();
  CHECK(center(c6).order() == 6);
}

TEST_CASE("quotient action degree, faithfulness and edge cases") {
  PermGroup z = center(kD8);
  PermGroup q = quotient_action(kD8, z);
  CHECK(q.degree() == 4);
  CHECK(q.order() == 4);
  CHECK(exponent(q) == 2);  // Klein four
  PermGroup q1 = quotient_action(kD8, PermGroup::trivial(4));
  CHECK(q1.order() == 8);
  PermGroup qg = quotient_action(kD8, kD8);
  CHECK(qg.order() == 1);
  CHECK(qg.degree() == 1);
  CHECK_THROWS_AS(quotient_action(kS3, from_cycles(3, {"(0 1)"})), NotNormal);
}

TEST_CASE("lower central series orders") {
  SeriesReport d8 = lower_central_series(kD8, 10);
  CHECK(d8.orders == std::vector<std::uint64_t>{8, 2, 1});
  CHECK(d8.stabilized_at == 2);
  SeriesReport s3 = lower_central_series(kS3, 10);
  CHECK(s3.orders == std::vector<std::uint64_t>{6, 3, 3});
  CHECK(s3.stabilized_at == 1);
  SeriesReport a3 = lower_central_series(kA3, 10);
  CHECK(a3.orders == std::vector<std::uint64_t>{3, 1});
}

TEST_CASE("upper central series orders") {
  SeriesReport d8 = upper_central_series(kD8, 10);
  CHECK(d8.orders == std::vector<std::uint64_t>{1, 2, 8});
  SeriesReport s3 = upper_central_series(kS3, 10);
  CHECK(s3.orders == std::vector<std::uint64_t>{1, 1});
  SeriesReport a3 = upper_central_series(kA3, 10);
  CHECK(a3.orders == std::vector<std::uint64_t>{1, 3});
}

TEST_CASE("derived series orders") {
  CHECK(derived_series(kS3, 10).orders ==
        std::vector<std::uint64_t>{6, 3, 1});
  CHECK(derived_series(kD8, 10).orders ==
        std::vector<std::uint64_t>{8, 2, 1});
  PermGroup c5 = make_catalog_group("C5").regular_perm_group();
  CHECK(derived_series(c5, 10).orders == std::vector<std::uint64_t>{5, 1});
}

TEST_CASE("series terms are monotone and normal generator-wise") {
  for (const char* name : {"S3", "D8", "Q8", "A4", "C6"}) {
    PermGroup g = make_catalog_group(name).regular_perm_group();
    SeriesReport lcs = lower_central_series(g, 10);
    for (std::size_t i = 1; i < lcs.terms.size(); ++i) {
      CHECK(lcs.terms[i].is_subgroup_of(lcs.terms[i - 1]));
      for (const auto& t : lcs.terms[i].generators())
        for (const auto& c : g.generators())
          CHECK(lcs.terms[i].contains(t.conjugated_by(c)));
    }
    SeriesReport ucs = upper_central_series(g, 10);
    for (std::size_t i = 1; i < ucs.terms.size(); ++i)
      CHECK(ucs.terms[i - 1].is_subgroup_of(ucs.terms[i]));
    SeriesReport der = derived_series(g, 10);
    for (std::size_t i = 1; i < der.terms.size(); ++i)
      CHECK(der.terms[i].is_subgroup_of(der.terms[i - 1]));
  }
}

TEST_CASE("nilpotency class agrees between the two series") {
  for (const char* name : {"C2", "C6", "D8", "Q8", "C2xC4", "D12", "A4",
                           "S3", "D10"}) {
    PermGroup g = make_catalog_group(name).regular_perm_group();
    SeriesReport lcs = lower_central_series(g, 20);
    SeriesReport ucs = upper_central_series(g, 20);
    bool nilpotent = lcs.orders.back() == 1;
    CHECK(nilpotent == (ucs.orders.back() == g.order()));
    if (nilpotent)
      CHECK(lcs.terms.size() == ucs.terms.size());  // same class witness
  }
}

TEST_CASE("exponent is the lcm of element orders") {
  CHECK(exponent(kD8) == 4);
  CHECK(exponent(kS3) == 6);
  PermGroup klein = make_catalog_group("C2xC2").regular_perm_group();
  CHECK(exponent(klein) == 2);
  CHECK_THROWS_AS(exponent(kS3, 2), GroupTooLarge);
}

TEST_CASE("abelian invariants in divisor order") {
  PermGroup c2c4 = make_catalog_group("C2xC4").regular_perm_group();
  CHECK(abelian_invariants(c2c4).torsion_factors ==
        std::vector<std::uint64_t>{2, 4});
  CHECK(abelian_invariants(PermGroup::trivial(3)).torsion_factors.empty());
  PermGroup c6 = make_catalog_group("C6").regular_perm_group();
  CHECK(abelian_invariants(c6).torsion_factors ==
        std::vector<std::uint64_t>{6});
  PermGroup klein = make_catalog_group("C2xC2").regular_perm_group();
  CHECK(abelian_invariants(klein).torsion_factors ==
        std::vector<std::uint64_t>{2, 2});
  CHECK_THROWS_AS(abelian_invariants(kS3), NotAbelian);
}

TEST_CASE("maximal conjugacy class size") {
  PermGroup abelian = make_catalog_group("C6").regular_perm_group();
  CHECK(max_class_size(abelian) == 1);
  CHECK(max_class_size(kS3) == 3);
  CHECK(max_class_size(kD8) == 2);
}

TEST_CASE("point-orbit and closure enumeration agree on flagged groups") {
  for (const char* name : {"C6", "S3", "D8", "Q8", "A4"}) {
    PermGroup reg = make_catalog_group(name).regular_perm_group();
    const auto& pts = reg.element_points();
    std::vector<Permutation> elems = reg.elements();
    REQUIRE(pts.size() == elems.size());
    // in the regular action, an element's point is its image of 0
    std::vector<u32> from_closure;
    for (const auto& e : elems) from_closure.push_back(e[0]);
    std::sort(from_closure.begin(), from_closure.end());
    CHECK(from_closure == pts);
  }
}

TEST_CASE("quotient keeps generator alignment for lifting") {
  // D8 / Z(D8): generator images in the quotient correspond 1:1
  PermGroup q = quotient_action(kD8, center(kD8));
  CHECK(q.generators().size() <= kD8.generators().size() + 1);
  CHECK(q.order() == 4);
}
