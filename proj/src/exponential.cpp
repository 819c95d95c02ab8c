#include "galog/exponential.hpp"

#include <cmath>

#include "product_table.hpp"

namespace galog {

namespace {

using Coeffs80 = std::array<long double, 8>;

Coeffs80 mul80(const detail::ProductTable& t, const Coeffs80& a, const Coeffs80& b) {
  Coeffs80 out{};
  for (int i = 0; i < 8; ++i) {
    if (a[i] == 0.0L) continue;
    for (int j = 0; j < 8; ++j) {
      if (b[j] == 0.0L) continue;
      out[t.index[i][j]] += t.sign[i][j] * a[i] * b[j];
    }
  }
  return out;
}

long double max_abs80(const Coeffs80& a) {
  long double m = 0.0L;
  for (long double v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

// Scaling and squaring over the Taylor series, accumulated in extended
// precision: large sheet-shifted logarithms make the squaring cascade cancel
// heavily, and the round-trip tolerance leaves no room for that in doubles.
Multivector exp_series(const Multivector& a) {
  const double m = a.max_abs();
  int squarings = 0;
  if (m > 0.5) squarings = static_cast<int>(std::ceil(std::log2(m / 0.5)));

  const detail::ProductTable& table = detail::table_for(a.sig);
  const long double scale = std::ldexp(1.0L, -squarings);
  Coeffs80 b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<long double>(a.c[i]) * scale;

  Coeffs80 term{};
  term[0] = 1.0L;
  Coeffs80 sum = term;
  for (int k = 1; k <= 64; ++k) {
    term = mul80(table, term, b);
    for (int i = 0; i < 8; ++i) term[i] /= k;
    for (int i = 0; i < 8; ++i) sum[i] += term[i];
    if (max_abs80(term) <= 1e-21L * std::max(1.0L, max_abs80(sum))) break;
  }
  for (int i = 0; i < squarings; ++i) sum = mul80(table, sum, sum);

  Multivector out(a.sig);
  for (int i = 0; i < 8; ++i) out.c[i] = static_cast<double>(sum[i]);
  return out;
}

namespace {

// sin(x)/x with a Taylor switch near the removable singularity, where the
// logarithm branches also change.
double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

}  // namespace

Multivector exp_closed_cl03(const Multivector& a) {
  if (a.sig != Signature::cl03) throw UsageError("exp_closed_cl03 requires a cl03 multivector");
  const double a0 = a.c[kScalar], a1 = a.c[kE1], a2 = a.c[kE2], a3 = a.c[kE3];
  const double a12 = a.c[kE12], a13 = a.c[kE13], a23 = a.c[kE23], a123 = a.c[kE123];

  const double am = std::sqrt((a3 + a12) * (a3 + a12) + (a2 - a13) * (a2 - a13) +
                              (a1 + a23) * (a1 + a23));
  const double ap = std::sqrt((a3 - a12) * (a3 - a12) + (a2 + a13) * (a2 + a13) +
                              (a1 - a23) * (a1 - a23));

  const double ep = 0.5 * std::exp(a0) * std::exp(a123);   // e^{a0+a123}/2
  const double em = 0.5 * std::exp(a0) * std::exp(-a123);  // e^{a0-a123}/2
  const double cp = std::cos(ap), cm = std::cos(am);
  const double sp = sinc(ap), sm = sinc(am);

  Multivector b(Signature::cl03);
  b.c[kScalar] = ep * cp + em * cm;
  b.c[kE123] = ep * cp - em * cm;
  b.c[kE1] = ep * (a1 - a23) * sp + em * (a1 + a23) * sm;
  b.c[kE2] = ep * (a2 + a13) * sp + em * (a2 - a13) * sm;
  b.c[kE3] = ep * (a3 - a12) * sp + em * (a3 + a12) * sm;
  b.c[kE12] = -ep * (a3 - a12) * sp + em * (a3 + a12) * sm;
  b.c[kE13] = ep * (a2 + a13) * sp - em * (a2 - a13) * sm;
  b.c[kE23] = -ep * (a1 - a23) * sp + em * (a1 + a23) * sm;
  return b;
}

Multivector exp_extended(const ExtendedMultivector& a, double epsilon) {
  if (!(epsilon > 0.0)) throw UsageError("exp_extended requires epsilon > 0");
  return exp_series(a.at_lambda(std::log(epsilon)));
}

}  // namespace galog
