#include <doctest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"

using namespace galog;
using galog::testutil::mv;
using galog::testutil::random_mv;

namespace {
const std::array<Signature, 4> kAll = {Signature::cl03, Signature::cl30, Signature::cl12,
                                       Signature::cl21};
}

TEST_CASE("exp of zero is one") {
  for (Signature sig : kAll) {
    const Multivector e = exp_series(Multivector(sig));
    CHECK(e.c[kScalar] == 1.0);
    for (int i = 1; i < 8; ++i) CHECK(e.c[i] == 0.0);
  }
  const Multivector ec = exp_closed_cl03(Multivector(Signature::cl03));
  CHECK(max_coeff_distance(ec, Multivector::scalar(Signature::cl03, 1.0)) <= 1e-15);
}

TEST_CASE("single-generator subalgebras") {
  // cl30: e1^2 = +1 -> cosh/sinh
  const Multivector a30 = Multivector::basis(Signature::cl30, kE1, kPi / 2);
  const Multivector e30 = exp_series(a30);
  CHECK(e30.c[kScalar] == doctest::Approx(std::cosh(kPi / 2)).epsilon(1e-14));
  CHECK(e30.c[kE1] == doctest::Approx(std::sinh(kPi / 2)).epsilon(1e-14));

  // cl03: e1^2 = -1 -> cos/sin; exp((pi/2) e1) = e1
  const Multivector a03 = Multivector::basis(Signature::cl03, kE1, kPi / 2);
  const Multivector e03 = exp_series(a03);
  CHECK(std::abs(e03.c[kScalar]) <= 1e-14);
  CHECK(e03.c[kE1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("closed cl03 exponential equals the series oracle") {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const Multivector a = random_mv(Signature::cl03, rng, -5.0, 5.0);
    const Multivector es = exp_series(a);
    const Multivector ec = exp_closed_cl03(a);
    worst = std::max(worst, max_coeff_distance(es, ec) / std::max(1.0, es.max_abs()));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("exp(a) exp(-a) = 1") {
  std::mt19937_64 rng(103);
  for (Signature sig : kAll) {
    for (int n = 0; n < 300; ++n) {
      const Multivector a = random_mv(sig, rng, -3.0, 3.0);
      const Multivector prod = exp_series(a) * exp_series(-a);
      CHECK(std::abs(prod.c[kScalar] - 1.0) <= 1e-9 * std::max(1.0, prod.max_abs()));
      for (int i = 1; i < 8; ++i)
        CHECK(std::abs(prod.c[i]) <= 1e-9 * std::max(1.0, prod.max_abs()));
    }
  }
}

TEST_CASE("additivity on commuting pairs") {
  std::mt19937_64 rng(107);
  for (Signature sig : kAll) {
    for (int n = 0; n < 100; ++n) {
      // center elements always commute
      std::uniform_real_distribution<double> dist(-2.0, 2.0);
      Multivector a(sig), b(sig);
      a.c[kScalar] = dist(rng);
      a.c[kE123] = dist(rng);
      b.c[kScalar] = dist(rng);
      b.c[kE123] = dist(rng);
      const Multivector lhs = exp_series(a + b);
      const Multivector rhs = exp_series(a) * exp_series(b);
      CHECK(max_coeff_distance(lhs, rhs) <= 1e-9 * std::max(1.0, lhs.max_abs()));

      // scalar + same-direction vector pairs commute as well
      Multivector c(sig), d(sig);
      const double s = dist(rng);
      c.c[kScalar] = dist(rng);
      c.c[kE2] = s;
      d.c[kScalar] = dist(rng);
      d.c[kE2] = 2.5 * s;
      const Multivector lhs2 = exp_series(c + d);
      const Multivector rhs2 = exp_series(c) * exp_series(d);
      CHECK(max_coeff_distance(lhs2, rhs2) <= 1e-9 * std::max(1.0, lhs2.max_abs()));
    }
  }
}

TEST_CASE("closed cl03 exp is continuous at the a± = 0 boundary") {
  // a+ = 0 pattern: a1 = a23, a2 = -a13, a3 = a12
  const Multivector at_zero =
      mv(Signature::cl03, {0.3, 1.0, -2.0, 0.5, 0.5, 2.0, 1.0, -0.7});
  Multivector nudged = at_zero;
  nudged.c[kE1] += 1e-15;
  CHECK(max_coeff_distance(exp_closed_cl03(at_zero), exp_closed_cl03(nudged)) <= 1e-9);
  // and the closed form still matches the series there
  CHECK(max_coeff_distance(exp_closed_cl03(at_zero), exp_series(at_zero)) <= 1e-9);
}

TEST_CASE("exp_extended substitutes log(eps)") {
  // lambda alone in the scalar slot: exp becomes eps itself
  ExtendedMultivector lam(Multivector(Signature::cl30),
                          Multivector::scalar(Signature::cl30, 1.0));
  const Multivector e = exp_extended(lam, 1e-8);
  CHECK(e.c[kScalar] == doctest::Approx(1e-8).epsilon(1e-10));
  CHECK_THROWS_AS(exp_extended(lam, 0.0), UsageError);
  CHECK_THROWS_AS(exp_extended(lam, -1.0), UsageError);
}
