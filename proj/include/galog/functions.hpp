#pragma once

#include "galog/logarithm.hpp"

namespace galog {

// Exponent for A^r = exp(r log A).  Rational exponents convert to a real
// factor at the last moment.
struct PowerSpec {
  double exponent = 1.0;
  bool is_rational = false;
  long num = 1;
  long den = 1;

  static PowerSpec rational(long p, long q) {
    if (q == 0) throw UsageError("power denominator must be nonzero");
    PowerSpec s;
    s.is_rational = true;
    s.num = p;
    s.den = q;
    s.exponent = static_cast<double>(p) / static_cast<double>(q);
    return s;
  }
  static PowerSpec real(double r) {
    PowerSpec s;
    s.exponent = r;
    return s;
  }
};

// A^r = exp(r log A).  NonExistent logs propagate; for r = 1/2 this yields
// the single exp-log root of the possibly many.  Logs carrying log(0+)
// coefficients throw NonRepresentableError.
LogResult power(const Multivector& a, const PowerSpec& r, const BranchParams& b = {},
                double tol = kTolerance);

enum class Hyperbolic { sinh, cosh, tanh, coth };
enum class Trigonometric { sin, cos, tan, cot };
enum class InverseHyperbolic { arcsinh, arccosh, arctanh, arccoth };
enum class InverseTrigonometric { arcsin, arccos, arctan, arccot };

// sinh A = (exp A - exp(-A))/2 and friends.  tanh/coth throw
// NonInvertibleError when the denominator is singular.
Multivector forward_hyperbolic(Hyperbolic which, const Multivector& a);

// sin A = I^{-1}(exp(IA) - exp(-IA))/2 and friends.  Requires a central
// pseudoscalar with I^2 = -1, i.e. cl30 or cl12.
Multivector forward_trigonometric(Trigonometric which, const Multivector& a);

LogResult inverse_hyperbolic(InverseHyperbolic which, const Multivector& a,
                             const BranchParams& b = {}, double tol = kTolerance);
LogResult inverse_trigonometric(InverseTrigonometric which, const Multivector& a,
                                const BranchParams& b = {}, double tol = kTolerance);

}  // namespace galog
