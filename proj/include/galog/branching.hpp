#pragma once

#include <optional>

#include "galog/multivector.hpp"

namespace galog {

// Double-argument arc tangent with arguments in the order (x, y) =
// (cosine-like, sine-like) -- the REVERSE of std::atan2(y, x).  Range is
// (-pi, pi]; on the negative x-axis the value is +pi, matching the worked
// quadrant values arctan(-1,0) = pi and arctan(-17,10) = pi - arctan(10/17).
// Throws ArctanUndefinedError at (0, 0).
double arctan2(double x, double y);

// arctan2 shifted onto another sheet: arctan2(x, y) + 2*pi*c.
double arctan2_branched(double x, double y, int c);

// Integer branch constants plus optional free unit directions.  Selects one
// sheet of the multivalued logarithm; all constants default to the c = 0
// sheet, which is reproducible but not guaranteed minimal-norm.
struct BranchParams {
  int c1_plus = 0;
  int c1_minus = 0;
  int c2_plus = 0;
  int c2_minus = 0;

  // cl30/cl12 naming: the formulas there use just c1, c2.
  int c1() const { return c1_plus; }
  int c2() const { return c2_plus; }

  // Direction overrides for the free unit vector / bivector appearing in
  // special-case rows; normalized per signature on use.
  std::optional<std::array<double, 3>> free_vector;
  std::optional<std::array<double, 3>> free_bivector;
};

// Free unit vector u with u^2 = -1 (only the anti-Euclidean algebra admits
// one from an arbitrary direction).  Default direction e1.
Multivector unit_free_vector(Signature sig, const BranchParams& b);

// Free unit bivector U with U^2 = -1; the admissible direction cone depends
// on the signature (cl12: d23^2 > d12^2 + d13^2, cl21: d12^2 > d13^2 + d23^2).
// Defaults: e12 for cl03/cl30/cl21, e23 for cl12.
Multivector unit_free_bivector(Signature sig, const BranchParams& b);

}  // namespace galog
