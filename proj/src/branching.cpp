#include "galog/branching.hpp"

#include <cmath>

namespace galog {

double arctan2(double x, double y) {
  if (x == 0.0 && y == 0.0) throw ArctanUndefinedError("arctan(0, 0) is undefined");
  const double r = std::atan2(y, x);
  return r == -kPi ? kPi : r;  // -0.0 sine argument lands on the cut
}

double arctan2_branched(double x, double y, int c) { return arctan2(x, y) + 2.0 * kPi * c; }

namespace {

Multivector normalized_direction(Signature sig, const std::array<double, 3>& d, bool bivector) {
  Multivector m(sig);
  const int base = bivector ? kE12 : kE1;
  m.c[base + 0] = d[0];
  m.c[base + 1] = d[1];
  m.c[base + 2] = d[2];
  const Multivector sq = m * m;
  // A valid free direction squares to a negative scalar.
  if (!(sq.c[kScalar] < 0.0))
    throw UsageError(std::string("free ") + (bivector ? "bivector" : "vector") +
                     " direction does not square to -1 in " + to_string(sig));
  return m * (1.0 / std::sqrt(-sq.c[kScalar]));
}

}  // namespace

Multivector unit_free_vector(Signature sig, const BranchParams& b) {
  const std::array<double, 3> d = b.free_vector.value_or(std::array<double, 3>{1.0, 0.0, 0.0});
  return normalized_direction(sig, d, false);
}

Multivector unit_free_bivector(Signature sig, const BranchParams& b) {
  std::array<double, 3> d{1.0, 0.0, 0.0};  // e12
  if (sig == Signature::cl12) d = {0.0, 0.0, 1.0};  // e12^2 = +1 there, e23^2 = -1
  d = b.free_bivector.value_or(d);
  return normalized_direction(sig, d, true);
}

}  // namespace galog
