#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "abelian_oracle.hpp"
#include "doctest.h"
#include "nuforge/catalog.hpp"
#include "nuforge/nu.hpp"

using namespace nuforge;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

TEST_CASE("the trivial group gives a trivial construction") {
  NuRealization r = realize_nu(make_catalog_group("trivial"));
  CHECK(r.order_nu == 1);
  CHECK(r.order_upsilon == 1);
  CHECK(r.order_mu == 1);
  CHECK(r.presentation.generator_names.empty());
}

TEST_CASE("C2: the presentation has two generators and order eight") {
  FiniteGroupInput c2 = make_catalog_group("C2");
  Presentation p = build_nu_presentation(c2);
  CHECK(p.generator_names.size() == 2);
  NuRealization r = realize_nu(c2);
  // oracle: |nu(C2)| = |C2 (x) C2| * |C2|^2 = 2 * 4
  CHECK(r.order_nu == 8);
  CHECK(r.order_upsilon == 2);
  CHECK(r.embedded_g.order() == 2);
  CHECK(r.order_mu == 2);  // G' trivial, so mu = upsilon
  CHECK(exponent(r.nu) == 4);  // the realized group is dihedral of order 8
}

TEST_CASE("C3: twenty-seven elements, tensor square of order three") {
  NuRealization r = realize_nu(make_catalog_group("C3"));
  CHECK(r.order_nu == 27);
  CHECK(r.order_upsilon == 3);
  CHECK(r.order_mu == 3);
}

TEST_CASE("C2xC2: bilinearity forces order sixteen") {
  NuRealization r = realize_nu(make_catalog_group("C2xC2"));
  CHECK(r.order_upsilon == 16);
  CHECK(r.order_nu == 256);
  TensorSquareReport ts = tensor_square_report(r);
  CHECK(ts.abelian);
  CHECK(ts.abelian_invariants == std::vector<u64>{2, 2, 2, 2});
  CHECK(ts.exponent == 2);
}

TEST_CASE("abelian corpus groups match the bilinear pairing oracle") {
  for (const char* name : {"trivial", "C2", "C3", "C4", "C2xC2", "C6"}) {
    FiniteGroupInput g = make_catalog_group(name);
    NuRealization r = realize_nu(g);
    CHECK(r.order_upsilon == nuforge_test::abelian_tensor_square_order(g));
    // for abelian G the whole tensor square has trivial derived image
    CHECK(r.order_mu == r.order_upsilon);
  }
}

TEST_CASE("S3: the derived-map quotient has order |S3'| = 3") {
  NuRealization r = realize_nu(make_catalog_group("S3"));
  CHECK(r.order_nu == r.order_upsilon * 36);
  CHECK(r.order_upsilon / r.order_mu == 3);
  CHECK(r.derived_of_g.size() == 3);
}

TEST_CASE("the order law holds across the corpus") {
  for (const char* name : {"C4", "C6", "S3", "D8", "Q8", "C2xC4", "D10"}) {
    FiniteGroupInput g = make_catalog_group(name);
    NuRealization r = realize_nu(g);
    CHECK(r.order_nu == r.order_upsilon * u64(g.n) * u64(g.n));
    CHECK(r.order_upsilon == r.order_mu * r.derived_of_g.size());
    CHECK(r.nu.degree() == r.order_nu);
  }
}

TEST_CASE("mu generators are central and rho maps onto G-prime") {
  NuRealization r = realize_nu(make_catalog_group("D8"));
  CHECK(mu_subgroup(r).order() == r.order_mu);
  CHECK(mu_subgroup(r).is_subgroup_of(r.upsilon));
  const auto& amb = *r.nu.ambient();
  for (const auto& m : r.mu.generators())
    for (const auto& c : r.nu.generators())
      CHECK(amb.comm(m[0], c[0]) == 0);
  std::vector<u32> image;
  for (u32 p : r.upsilon.element_points()) image.push_back(r.rho.eval(p));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  CHECK(image == r.derived_of_g);
}

TEST_CASE("random words in crossed commutators agree with the derived map") {
  // the kernel characterization: a commutator word lies in mu exactly when
  // the same word evaluated in G collapses to the identity
  for (const char* name : {"S3", "D8"}) {
    FiniteGroupInput g = make_catalog_group(name);
    NuRealization r = realize_nu(g);
    const auto& amb = *r.nu.ambient();
    std::mt19937_64 rng(name[0] * 1000 + 17);
    std::uniform_int_distribution<u32> pick(1, g.n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int rep = 0; rep < 1000; ++rep) {
      u32 point = 0;
      u32 gval = 0;
      std::size_t len = 1 + rng() % 6;
      for (std::size_t i = 0; i < len; ++i) {
        u32 a = pick(rng), b = pick(rng);
        u32 cpt = amb.comm(r.x_perm[a][0], r.y_perm[b][0]);
        u32 cg = g.comm(a, b);
        if (coin(rng)) {
          cpt = amb.inv(cpt);
          cg = g.inv(cg);
        }
        point = amb.mul(point, cpt);
        gval = g.mul(gval, cg);
      }
      CHECK(r.upsilon.contains_point(point));
      CHECK(r.rho.eval(point) == gval);
      CHECK(r.in_mu(point) == (gval == 0));
    }
  }
}

TEST_CASE("kernel of the induced quotient map: D8 by its centre") {
  FiniteGroupInput d8 = make_catalog_group("D8");
  NuQuotientReport q = quotient_nu_map(d8, d8.center_elements());
  CHECK(q.nu_order == 2048);
  CHECK(q.quotient_nu_order == 256);  // nu(C2xC2), independently enumerated
  CHECK(q.kernel_subgroup_order == 8);
  CHECK(q.passed());
}

TEST_CASE("kernel map edge cases: N = 1 and N = G") {
  FiniteGroupInput s3 = make_catalog_group("S3");
  NuRealization r = realize_nu(s3);
  std::vector<u32> trivial{0};
  NuQuotientReport q1 = quotient_nu_map(r, trivial);
  CHECK(q1.kernel_subgroup_order == 1);
  CHECK(q1.quotient_nu_order == q1.nu_order);
  CHECK(q1.passed());
  std::vector<u32> all;
  for (u32 e = 0; e < s3.n; ++e) all.push_back(e);
  NuQuotientReport q2 = quotient_nu_map(r, all);
  CHECK(q2.kernel_subgroup_order == q2.nu_order);
  CHECK(q2.quotient_nu_order == 1);
  CHECK(q2.passed());
  CHECK_THROWS_AS(quotient_nu_map(r, std::vector<u32>{0, 1}), NotNormal);
}

TEST_CASE("oversized inputs are rejected unless the guard is raised") {
  CHECK_THROWS_AS(realize_nu(make_cyclic(30)), InputError);
  // the guard is a parameter: tightening it rejects a small group, raising
  // it admits one
  FiniteGroupInput c10 = make_cyclic(10);
  CHECK_THROWS_AS(realize_nu(c10, kDefaultCosetCap, 8), InputError);
  NuRealization ok = realize_nu(c10, kDefaultCosetCap, 10);
  CHECK(ok.order_nu == 1000);  // |C10 (x) C10| * 10^2 for cyclic G
}

TEST_CASE("tensor square reports for nonabelian groups") {
  NuRealization r = realize_nu(make_catalog_group("S3"));
  TensorSquareReport ts = tensor_square_report(r);
  CHECK(ts.order == r.order_upsilon);
  CHECK(ts.order % 3 == 0);  // G' = C3 is a quotient of upsilon
  CHECK(ts.derived_order >= 1);
  if (ts.abelian) CHECK(ts.derived_order == 1);
}

TEST_CASE("a too small coset cap propagates CosetLimitExceeded") {
  CHECK_THROWS_AS(realize_nu(make_catalog_group("C2xC2"), 64),
                  CosetLimitExceeded);
}
