#include "galog/multivector.hpp"

#include <algorithm>
#include <cmath>

#include "product_table.hpp"

namespace galog {

const std::array<const char*, 8> kBasisNames = {"1",   "e1",  "e2",  "e3",
                                                "e12", "e13", "e23", "e123"};

const char* to_string(Signature s) {
  switch (s) {
    case Signature::cl03: return "cl03";
    case Signature::cl30: return "cl30";
    case Signature::cl12: return "cl12";
    case Signature::cl21: return "cl21";
  }
  return "?";
}

std::optional<Signature> signature_from_string(std::string_view name) {
  if (name == "cl03") return Signature::cl03;
  if (name == "cl30") return Signature::cl30;
  if (name == "cl12") return Signature::cl12;
  if (name == "cl21") return Signature::cl21;
  return std::nullopt;
}

namespace {

constexpr std::array<int, 8> kGrade = {0, 1, 1, 1, 2, 2, 2, 3};

void require_same_signature(const Multivector& a, const Multivector& b) {
  if (a.sig != b.sig)
    throw UsageError(std::string("signature mismatch: ") + to_string(a.sig) + " vs " +
                     to_string(b.sig));
}

}  // namespace

double Multivector::max_abs() const {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

bool Multivector::is_zero(double abs_tol) const { return max_abs() <= abs_tol; }

Multivector Multivector::grade(int g) const {
  Multivector out(sig);
  for (int i = 0; i < 8; ++i)
    if (kGrade[i] == g) out.c[i] = c[i];
  return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same_signature(*this, o);
  for (int i = 0; i < 8; ++i) c[i] += o.c[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same_signature(*this, o);
  for (int i = 0; i < 8; ++i) c[i] -= o.c[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& v : c) v *= s;
  return *this;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator-(Multivector a) { return a *= -1.0; }
Multivector operator*(Multivector a, double s) { return a *= s; }
Multivector operator*(double s, Multivector a) { return a *= s; }

Multivector operator*(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const detail::ProductTable& t = detail::table_for(a.sig);
  Multivector out(a.sig);
  for (int i = 0; i < 8; ++i) {
    const double ai = a.c[i];
    if (ai == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      const double bj = b.c[j];
      if (bj == 0.0) continue;
      out.c[t.index[i][j]] += t.sign[i][j] * ai * bj;
    }
  }
  return out;
}

GradeView grades(const Multivector& a) {
  GradeView g;
  g.scalar = a.c[kScalar];
  g.vector = {a.c[kE1], a.c[kE2], a.c[kE3]};
  g.bivector = {a.c[kE12], a.c[kE13], a.c[kE23]};
  g.pseudoscalar = a.c[kE123];
  return g;
}

Multivector from_grades(Signature sig, const GradeView& g) {
  Multivector m(sig);
  m.c = {g.scalar,      g.vector[0],   g.vector[1],   g.vector[2],
         g.bivector[0], g.bivector[1], g.bivector[2], g.pseudoscalar};
  return m;
}

namespace {
Multivector apply_grade_signs(const Multivector& a, const std::array<int, 4>& s) {
  Multivector out = a;
  for (int i = 0; i < 8; ++i) out.c[i] *= s[kGrade[i]];
  return out;
}
}  // namespace

Multivector reverse(const Multivector& a) { return apply_grade_signs(a, {1, 1, -1, -1}); }
Multivector grade_involution(const Multivector& a) {
  return apply_grade_signs(a, {1, -1, 1, -1});
}
Multivector clifford_conjugate(const Multivector& a) {
  return apply_grade_signs(a, {1, -1, -1, 1});
}

Involutions involutions(const Multivector& a) {
  return {reverse(a), grade_involution(a), clifford_conjugate(a)};
}

double determinant(const Multivector& a) {
  const Multivector prod = a * reverse(a) * grade_involution(a) * grade_involution(reverse(a));
  double residue = 0.0;
  for (int i = 1; i < 8; ++i) residue = std::max(residue, std::abs(prod.c[i]));
  // Residue scale: the scalar can cancel to zero, so compare against the
  // magnitude the intermediate products actually had.
  const double m = a.max_abs();
  const double scale = std::max(prod.max_abs(), m * m * m * m);
  if (scale > 0.0 && residue > 1e-9 * scale)
    throw Error("determinant product has non-scalar residue");
  return prod.c[kScalar];
}

double det_norm(const Multivector& a) { return std::pow(std::abs(determinant(a)), 0.25); }

Multivector inverse(const Multivector& a, double tol) {
  const double det = determinant(a);
  const double scale = a.max_abs();
  const double s4 = scale * scale * scale * scale;
  if (std::abs(det) <= tol * s4 || scale == 0.0)
    throw NonInvertibleError("multivector is not invertible (Det = 0)");
  const Multivector adj = reverse(a) * grade_involution(a) * grade_involution(reverse(a));
  return adj * (1.0 / det);
}

DotWedge dot_wedge_split(Signature sig, const std::array<double, 3>& v,
                         const std::array<double, 3>& b) {
  Multivector mv(sig), mb(sig);
  mv.c[kE1] = v[0];
  mv.c[kE2] = v[1];
  mv.c[kE3] = v[2];
  mb.c[kE12] = b[0];
  mb.c[kE13] = b[1];
  mb.c[kE23] = b[2];
  const Multivector v2 = mv * mv;
  const Multivector b2 = mb * mb;
  const Multivector vb = mv * mb;
  return {v2.c[kScalar], b2.c[kScalar], vb.c[kE123]};
}

DotWedge dot_wedge_split(const Multivector& a) {
  const GradeView g = grades(a);
  return dot_wedge_split(a.sig, g.vector, g.bivector);
}

namespace {

// Images of the eight Cl(3,0) basis blades in Cl(1,2): slot and sign.
// Generators map as e1 -> -e1, e2 -> -e12, e3 -> -e13; the even/odd images
// below are their products, which is what makes the map multiplicative.
struct BasisImage {
  int slot;
  double sign;
};
constexpr std::array<BasisImage, 8> k30to12 = {{
    {kScalar, +1},  // 1    -> 1
    {kE1, -1},      // e1   -> -e1
    {kE12, -1},     // e2   -> -e12
    {kE13, -1},     // e3   -> -e13
    {kE2, +1},      // e12  -> e2
    {kE3, +1},      // e13  -> e3
    {kE23, -1},     // e23  -> -e23
    {kE123, +1},    // e123 -> e123
}};

}  // namespace

Multivector map_cl30_cl12(const Multivector& a) {
  if (a.sig == Signature::cl30) {
    Multivector out(Signature::cl12);
    for (int i = 0; i < 8; ++i) out.c[k30to12[i].slot] += k30to12[i].sign * a.c[i];
    return out;
  }
  if (a.sig == Signature::cl12) {
    Multivector out(Signature::cl30);
    for (int i = 0; i < 8; ++i) out.c[i] += k30to12[i].sign * a.c[k30to12[i].slot];
    return out;
  }
  throw UsageError("map_cl30_cl12 requires a cl30 or cl12 multivector");
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return max_coeff_distance(a, b) <= tol;
}

double max_coeff_distance(const Multivector& a, const Multivector& b) {
  double m = 0.0;
  for (int i = 0; i < 8; ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
  return m;
}

}  // namespace galog
