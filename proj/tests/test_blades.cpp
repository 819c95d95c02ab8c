#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "test_util.hpp"

using namespace galog;
using galog::testutil::log_roundtrip_residual;
using galog::testutil::mv;

namespace {

BladeRow row_of(const LogResult& r) { return std::get<BladeRow>(r.row); }

// Blade and generic values may sit on different sheets; they agree when the
// difference exponentiates to one.
void check_same_logarithm(const Multivector& a, const LogResult& blade,
                          const LogResult& generic) {
  REQUIRE(blade.exists);
  REQUIRE(generic.exists);
  CHECK(log_roundtrip_residual(a, blade) < 1e-10);
  CHECK(log_roundtrip_residual(a, generic) < 1e-10);
  const Multivector diff = blade.value.fin - generic.value.fin;
  const Multivector e = exp_series(diff);
  CHECK(max_coeff_distance(e, Multivector::scalar(a.sig, 1.0)) <
        1e-9 * std::max(1.0, e.max_abs()));
}

}  // namespace

TEST_CASE("cl03 vector blade") {
  const Multivector a = Multivector::basis(Signature::cl03, kE3);
  const LogResult r = log_blade(BladeKind::vector, a);
  REQUIRE(r.exists);
  // log(e3) = (pi/2) e3
  CHECK(std::abs(r.value.fin.c[kScalar]) <= 1e-15);
  CHECK(r.value.fin.c[kE3] == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(log_roundtrip_residual(a, r) < 1e-13);

  const Multivector b = mv(Signature::cl03, {0, 2, -1, 0.5, 0, 0, 0, 0});
  check_same_logarithm(b, log_blade(BladeKind::vector, b), log_cl03(b));

  BranchParams c;
  c.c1_plus = 1;
  c.c1_minus = -2;
  const LogResult rc = log_blade(BladeKind::vector, b, c);
  CHECK(log_roundtrip_residual(b, rc) < 1e-10);
  // blade constants match the generic-path constants slot for slot
  const LogResult gc = log_cl03(b, c);
  CHECK(max_coeff_distance(rc.value.fin, gc.value.fin) < 1e-10);
}

TEST_CASE("cl03 bivector blade") {
  const Multivector a = Multivector::basis(Signature::cl03, kE12, 2.0);
  const LogResult r = log_blade(BladeKind::bivector, a);
  REQUIRE(r.exists);
  // log(2 e12) = log2 + (pi/2) e12
  CHECK(r.value.fin.c[kScalar] == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(r.value.fin.c[kE12] == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(log_roundtrip_residual(a, r) < 1e-13);
  check_same_logarithm(a, r, log_cl03(a));
}

TEST_CASE("cl03 paravector and parabivector blades") {
  const Multivector pv = mv(Signature::cl03, {1.5, 2, -1, 0.5, 0, 0, 0, 0});
  check_same_logarithm(pv, log_blade(BladeKind::paravector, pv), log_cl03(pv));

  const Multivector pb = mv(Signature::cl03, {-0.75, 0, 0, 0, 1, 2, -0.5, 0});
  check_same_logarithm(pb, log_blade(BladeKind::parabivector, pb), log_cl03(pb));

  CHECK_THROWS_AS(log_blade(BladeKind::paravector,
                            Multivector::scalar(Signature::cl03, 2.0)),
                  UsageError);
}

TEST_CASE("cl03 center blade: all four sign branches") {
  struct Probe {
    double a0, a123;
    int subcase;
  };
  // subcase = 3*(sign index of a0-a123) + (sign index of a0+a123)
  const std::vector<Probe> probes = {
      {2.0, 1.0, 8},    // both positive
      {1.0, 2.0, 2},    // a0-a123 < 0, a0+a123 > 0
      {-1.0, 2.0, 2},   // still -,+
      {1.0, -2.0, 6},   // +,-
      {-2.0, 1.0, 0},   // both negative
  };
  std::set<int> seen;
  for (const Probe& p : probes) {
    Multivector a(Signature::cl03);
    a.c[kScalar] = p.a0;
    a.c[kE123] = p.a123;
    const LogResult r = log_blade(BladeKind::center, a);
    REQUIRE(r.exists);
    CHECK(row_of(r).subcase == p.subcase);
    seen.insert(row_of(r).subcase);
    CHECK(log_roundtrip_residual(a, r) < 1e-12);
    check_same_logarithm(a, r, log_cl03(a));
  }
  CHECK(seen == std::set<int>{0, 2, 6, 8});

  // zero subparts produce log(0+)
  Multivector z(Signature::cl03);
  z.c[kScalar] = 1.0;
  z.c[kE123] = 1.0;  // a0 - a123 = 0
  const LogResult rz = log_blade(BladeKind::center, z);
  REQUIRE(rz.exists);
  REQUIRE(rz.value.has_lambda());
  CHECK(row_of(rz).subcase == 3 * 1 + 2);
  CHECK(max_coeff_distance(exp_extended(rz.value, 1e-8), z) < 1e-6);
}

TEST_CASE("cl30 vector blade") {
  const Multivector a = Multivector::basis(Signature::cl30, kE1);
  const LogResult r = log_blade(BladeKind::vector, a);
  REQUIRE(r.exists);
  // log(e1) = -(pi/2) e23 + (pi/2) e123  (= (pi/2)(I - e1 I))
  CHECK(r.value.fin.c[kE23] == doctest::Approx(-kPi / 2).epsilon(1e-14));
  CHECK(r.value.fin.c[kE123] == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(log_roundtrip_residual(a, r) < 1e-13);

  const Multivector b = mv(Signature::cl30, {0, 1, -2, 2, 0, 0, 0, 0});
  check_same_logarithm(b, log_blade(BladeKind::vector, b), log_cl30(b));
}

TEST_CASE("cl30 bivector blade") {
  const Multivector a = mv(Signature::cl30, {0, 0, 0, 0, 2, -1, 2, 0});
  const LogResult r = log_blade(BladeKind::bivector, a);
  REQUIRE(r.exists);
  CHECK(log_roundtrip_residual(a, r) < 1e-13);
  check_same_logarithm(a, r, log_cl30(a));
}

TEST_CASE("cl30 rotor blade rows") {
  // quaternion example through the rotor row
  const Multivector q = mv(Signature::cl30, {1, 0, 0, 0, 1, -1, 1, 0});
  const LogResult r = log_blade(BladeKind::rotor, q);
  REQUIRE(r.exists);
  CHECK(row_of(r).subcase == 0);
  const double k = kPi / (3.0 * std::sqrt(3.0));
  CHECK(r.value.fin.c[kScalar] == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(r.value.fin.c[kE12] == doctest::Approx(k).epsilon(1e-12));
  CHECK(r.value.fin.c[kE13] == doctest::Approx(-k).epsilon(1e-12));
  CHECK(r.value.fin.c[kE23] == doctest::Approx(k).epsilon(1e-12));
  check_same_logarithm(q, r, log_cl30(q));

  // negative-scalar rotor exercises the a0 < 0 phase handling
  const Multivector neg = mv(Signature::cl30, {-2, 0, 0, 0, 1, 0, -1, 0});
  const LogResult rn = log_blade(BladeKind::rotor, neg);
  REQUIRE(rn.exists);
  CHECK(row_of(rn).subcase == 0);
  CHECK(log_roundtrip_residual(neg, rn) < 1e-12);

  // scalar-only rows
  const LogResult rp = log_blade(BladeKind::rotor, Multivector::scalar(Signature::cl30, 3.0));
  CHECK(row_of(rp).subcase == 1);
  CHECK(rp.value.fin.c[kScalar] == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  const LogResult rm = log_blade(BladeKind::rotor, Multivector::scalar(Signature::cl30, -3.0));
  CHECK(row_of(rm).subcase == 2);
  CHECK(log_roundtrip_residual(Multivector::scalar(Signature::cl30, -3.0), rm) < 1e-12);

  // zero scalar falls back to the bivector formula
  const Multivector biv = mv(Signature::cl30, {0, 0, 0, 0, 1, 2, -2, 0});
  const LogResult rb = log_blade(BladeKind::rotor, biv);
  CHECK(row_of(rb).subcase == 3);
  CHECK(log_roundtrip_residual(biv, rb) < 1e-12);
}

TEST_CASE("cl30 center blade") {
  const Multivector a = mv(Signature::cl30, {1, 0, 0, 0, 0, 0, 0, -2});
  const LogResult r = log_blade(BladeKind::center, a);
  REQUIRE(r.exists);
  CHECK(row_of(r).subcase == 0);
  CHECK(r.value.fin.c[kScalar] == doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-12));
  CHECK(r.value.fin.c[kE123] == doctest::Approx(-std::atan(2.0)).epsilon(1e-12));
  check_same_logarithm(a, r, log_cl30(a));

  const LogResult rz = log_blade(BladeKind::center, Multivector(Signature::cl30));
  REQUIRE(rz.exists);
  CHECK(row_of(rz).subcase == 1);
  CHECK(rz.value.has_lambda());
}

TEST_CASE("blade/generic agreement on random blades") {
  std::mt19937_64 rng(501);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  for (int n = 0; n < 200; ++n) {
    Multivector v(Signature::cl03);
    for (int i = kE1; i <= kE3; ++i) v.c[i] = dist(rng);
    check_same_logarithm(v, log_blade(BladeKind::vector, v), log_cl03(v));

    Multivector b(Signature::cl30);
    b.c[kScalar] = dist(rng);
    for (int i = kE12; i <= kE23; ++i) b.c[i] = dist(rng);
    check_same_logarithm(b, log_blade(BladeKind::rotor, b), log_cl30(b));
  }
}

TEST_CASE("pattern mismatches are usage errors") {
  const Multivector a = mv(Signature::cl03, {1, 1, 0, 0, 1, 0, 0, 0});
  CHECK_THROWS_AS(log_blade(BladeKind::vector, a), UsageError);
  CHECK_THROWS_AS(log_blade(BladeKind::center, a), UsageError);
  CHECK_THROWS_AS(log_blade(BladeKind::rotor, Multivector(Signature::cl21)), UsageError);
  // paravector formula deliberately omitted for cl30
  CHECK_THROWS_AS(
      log_blade(BladeKind::paravector, mv(Signature::cl30, {1, 1, 0, 0, 0, 0, 0, 0})),
      UsageError);
}

TEST_CASE("zero-norm blades degenerate to log(0+) in cl03") {
  const LogResult r = log_blade(BladeKind::vector, Multivector(Signature::cl03));
  REQUIRE(r.exists);
  CHECK(r.value.has_lambda());
  CHECK(row_of(r).subcase == 1);
}

TEST_CASE("blade family generators exponentiate to one") {
  const Multivector v = mv(Signature::cl03, {0, 2, -1, 0.5, 0, 0, 0, 0});
  const LogResult r = log_blade(BladeKind::vector, v);
  for (const auto& gen : r.family.discrete) {
    const Multivector e = exp_series(gen.generator);
    CHECK(max_coeff_distance(e, Multivector::scalar(v.sig, 1.0)) <
          1e-9 * std::max(1.0, e.max_abs()));
  }
  const Multivector rot = mv(Signature::cl30, {2, 0, 0, 0, 1, 0, -1, 0});
  const LogResult rr = log_blade(BladeKind::rotor, rot);
  for (const auto& gen : rr.family.discrete) {
    const Multivector e = exp_series(gen.generator);
    CHECK(max_coeff_distance(e, Multivector::scalar(rot.sig, 1.0)) <
          1e-9 * std::max(1.0, e.max_abs()));
  }
}

TEST_CASE("parabivector and rotor name the same pattern in either algebra") {
  const Multivector r03 = mv(Signature::cl03, {1, 0, 0, 0, 2, -1, 0.5, 0});
  CHECK(max_coeff_distance(log_blade(BladeKind::rotor, r03).value.fin,
                           log_blade(BladeKind::parabivector, r03).value.fin) == 0.0);
  const Multivector r30 = mv(Signature::cl30, {2, 0, 0, 0, 1, 0, -1, 0});
  CHECK(max_coeff_distance(log_blade(BladeKind::parabivector, r30).value.fin,
                           log_blade(BladeKind::rotor, r30).value.fin) == 0.0);
  CHECK(to_string(log_blade(BladeKind::parabivector, r30).row) == "blade:rotor/0");
}
