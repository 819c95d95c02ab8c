#pragma once

#include "galog/multivector.hpp"

namespace galog {

// Multivector whose coefficients are affine in the symbolic lambda = log(0+):
// slot value = fin[i] + lam[i] * lambda.  Singular logarithms carry their
// -infinity parts this way; everything else keeps lam = 0.
struct ExtendedMultivector {
  Multivector fin;
  Multivector lam;

  ExtendedMultivector() = default;
  explicit ExtendedMultivector(const Multivector& finite)
      : fin(finite), lam(Multivector(finite.sig)) {}
  ExtendedMultivector(const Multivector& finite, const Multivector& lambda)
      : fin(finite), lam(lambda) {}

  Signature sig() const { return fin.sig; }
  bool has_lambda(double abs_tol = 0.0) const { return !lam.is_zero(abs_tol); }

  // Substitute a concrete value for lambda.
  Multivector at_lambda(double lambda_value) const { return fin + lam * lambda_value; }

  ExtendedMultivector& operator+=(const ExtendedMultivector& o) {
    fin += o.fin;
    lam += o.lam;
    return *this;
  }
};

inline ExtendedMultivector operator+(ExtendedMultivector a, const ExtendedMultivector& b) {
  return a += b;
}
inline ExtendedMultivector operator*(const ExtendedMultivector& a, double s) {
  return {a.fin * s, a.lam * s};
}
// Right-multiplication by a finite multivector (lambda never multiplies lambda).
inline ExtendedMultivector operator*(const ExtendedMultivector& a, const Multivector& m) {
  return {a.fin * m, a.lam * m};
}

// Universal series exponential: scaling and squaring over the Taylor series
// of exp, summed to machine-precision stagnation.  Converges for every
// multivector and serves as the independent oracle for all logarithm tests.
Multivector exp_series(const Multivector& a);

// Closed-form coordinate exponential for Cl(0,3).
Multivector exp_closed_cl03(const Multivector& a);

// Evaluate an extended value at lambda = log(epsilon) and exponentiate.
// Probing a decreasing epsilon sequence recovers singular round trips.
Multivector exp_extended(const ExtendedMultivector& a, double epsilon);

}  // namespace galog
