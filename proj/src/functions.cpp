#include "galog/functions.hpp"

#include <cmath>

namespace galog {

namespace {

Multivector mv_one(Signature s) { return Multivector::scalar(s, 1.0); }
Multivector mv_I(Signature s) { return Multivector::basis(s, kE123); }

LogResult wrap_value(const Multivector& v, CaseRow row) {
  LogResult r;
  r.exists = true;
  r.value = ExtendedMultivector(v);
  r.row = row;
  return r;
}

// Extract a finite logarithm value or bail out of the composite formula.
// 'ok' turns false on NonExistent; lambda-bearing logs are outside the
// validated territory of the derived functions.
Multivector log_value(const Multivector& a, const BranchParams& b, double tol, LogResult& last,
                      bool& ok) {
  last = mv_log(a, b, tol);
  if (!last.exists) {
    ok = false;
    return Multivector(a.sig);
  }
  if (last.value.has_lambda())
    throw NonRepresentableError("constituent logarithm carries log(0+) coefficients");
  return last.value.fin;
}

void require_central_imaginary(Signature sig, const char* what) {
  if (sig != Signature::cl30 && sig != Signature::cl12)
    throw UsageError(std::string(what) +
                     " needs a central pseudoscalar with I^2 = -1 (cl30 or cl12)");
}

}  // namespace

LogResult power(const Multivector& a, const PowerSpec& r, const BranchParams& b, double tol) {
  LogResult lg = mv_log(a, b, tol);
  if (!lg.exists) return lg;
  if (lg.value.has_lambda())
    throw NonRepresentableError("power of a multivector with a singular (log(0+)) logarithm");
  const double exponent =
      r.is_rational ? static_cast<double>(r.num) / static_cast<double>(r.den) : r.exponent;
  LogResult out;
  out.exists = true;
  out.value = ExtendedMultivector(exp_series(lg.value.fin * exponent));
  out.row = lg.row;
  return out;
}

Multivector forward_hyperbolic(Hyperbolic which, const Multivector& a) {
  const Multivector ep = exp_series(a);
  const Multivector em = exp_series(-a);
  switch (which) {
    case Hyperbolic::sinh: return (ep - em) * 0.5;
    case Hyperbolic::cosh: return (ep + em) * 0.5;
    case Hyperbolic::tanh: return (ep - em) * inverse(ep + em);
    case Hyperbolic::coth: return (ep + em) * inverse(ep - em);
  }
  throw UsageError("unknown hyperbolic function");
}

Multivector forward_trigonometric(Trigonometric which, const Multivector& a) {
  require_central_imaginary(a.sig, "trigonometric function");
  const Multivector I = mv_I(a.sig);
  const Multivector ep = exp_series(I * a);
  const Multivector em = exp_series(I * a * -1.0);
  switch (which) {
    case Trigonometric::sin: return (I * -1.0) * (ep - em) * 0.5;  // I^{-1} = -I
    case Trigonometric::cos: return (ep + em) * 0.5;
    case Trigonometric::tan: return (I * -1.0) * (ep - em) * inverse(ep + em);
    case Trigonometric::cot: return I * (ep + em) * inverse(ep - em);
  }
  throw UsageError("unknown trigonometric function");
}

LogResult inverse_hyperbolic(InverseHyperbolic which, const Multivector& a,
                             const BranchParams& b, double tol) {
  const Signature sig = a.sig;
  const Multivector one = mv_one(sig);
  LogResult last;
  bool ok = true;
  switch (which) {
    case InverseHyperbolic::arctanh: {
      const Multivector lp = log_value(one + a, b, tol, last, ok);
      if (!ok) return last;
      const Multivector lm = log_value(one - a, b, tol, last, ok);
      if (!ok) return last;
      return wrap_value((lp - lm) * 0.5, last.row);
    }
    case InverseHyperbolic::arccoth: {
      if (a.max_abs() <= tol) return wrap_value(mv_I(sig) * (kPi / 2.0), last.row);
      const Multivector ainv = inverse(a, tol);
      const Multivector lp = log_value(one + ainv, b, tol, last, ok);
      if (!ok) return last;
      const Multivector lm = log_value(one - ainv, b, tol, last, ok);
      if (!ok) return last;
      return wrap_value((lp - lm) * 0.5, last.row);
    }
    case InverseHyperbolic::arccosh: {
      LogResult rm = power(a - one, PowerSpec::rational(1, 2), b, tol);
      if (!rm.exists) return rm;
      LogResult rp = power(a + one, PowerSpec::rational(1, 2), b, tol);
      if (!rp.exists) return rp;
      const Multivector arg = a + rm.value.fin * rp.value.fin;
      const Multivector l = log_value(arg, b, tol, last, ok);
      if (!ok) return last;
      return wrap_value(l, last.row);
    }
    case InverseHyperbolic::arcsinh: {
      LogResult root = power(a * a + one, PowerSpec::rational(1, 2), b, tol);
      if (!root.exists) return root;
      const Multivector l = log_value(a + root.value.fin, b, tol, last, ok);
      if (!ok) return last;
      return wrap_value(l, last.row);
    }
  }
  throw UsageError("unknown inverse hyperbolic function");
}

LogResult inverse_trigonometric(InverseTrigonometric which, const Multivector& a,
                                const BranchParams& b, double tol) {
  require_central_imaginary(a.sig, "inverse trigonometric function");
  const Signature sig = a.sig;
  const Multivector one = mv_one(sig);
  const Multivector I = mv_I(sig);
  LogResult last;
  bool ok = true;
  switch (which) {
    case InverseTrigonometric::arcsin:
    case InverseTrigonometric::arccos: {
      LogResult root = power(one - a * a, PowerSpec::rational(1, 2), b, tol);
      if (!root.exists) return root;
      const Multivector l = log_value(a * I + root.value.fin, b, tol, last, ok);
      if (!ok) return last;
      if (which == InverseTrigonometric::arcsin) return wrap_value((I * -1.0) * l, last.row);
      return wrap_value(Multivector::scalar(sig, kPi / 2.0) + I * l, last.row);
    }
    case InverseTrigonometric::arctan: {
      const Multivector lp = log_value(one - I * a, b, tol, last, ok);
      if (!ok) return last;
      const Multivector lm = log_value(one + I * a, b, tol, last, ok);
      if (!ok) return last;
      return wrap_value(I * (lp - lm) * 0.5, last.row);
    }
    case InverseTrigonometric::arccot: {
      if (a.max_abs() <= tol)
        return wrap_value(Multivector::scalar(sig, kPi / 2.0), last.row);
      const Multivector ainv = inverse(a, tol);
      const Multivector lp = log_value(one - I * ainv, b, tol, last, ok);
      if (!ok) return last;
      const Multivector lm = log_value(one + I * ainv, b, tol, last, ok);
      if (!ok) return last;
      return wrap_value(I * (lp - lm) * 0.5, last.row);
    }
  }
  throw UsageError("unknown inverse trigonometric function");
}

}  // namespace galog
