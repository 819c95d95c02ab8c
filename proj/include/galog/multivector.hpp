#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace galog {

inline constexpr double kPi = 3.14159265358979323846;

// Relative tolerance used by all zero tests (Det = 0, a± = 0, ...).
// Scaled by the largest coefficient magnitude of the multivector involved.
inline constexpr double kTolerance = 1e-12;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : Error {
  using Error::Error;
};
struct NonInvertibleError : Error {
  using Error::Error;
};
struct ArctanUndefinedError : Error {
  using Error::Error;
};
struct NonRepresentableError : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
  std::size_t position;
};

// The four real 3D Clifford algebras, identified by the squares of (e1,e2,e3).
enum class Signature : std::uint8_t { cl03, cl30, cl12, cl21 };

constexpr std::array<int, 3> basis_squares(Signature s) {
  switch (s) {
    case Signature::cl03: return {-1, -1, -1};
    case Signature::cl30: return {+1, +1, +1};
    case Signature::cl12: return {+1, -1, -1};
    case Signature::cl21: return {+1, +1, -1};
  }
  return {};
}

const char* to_string(Signature s);
std::optional<Signature> signature_from_string(std::string_view name);

// Coefficient slots, frozen basis order [1, e1, e2, e3, e12, e13, e23, e123].
// The inverse degree lexicographic ordering drives every sign convention in
// the special-case conditions (e.g. the a2/-a13 pairings); do not reorder.
enum BasisIndex : int {
  kScalar = 0,
  kE1 = 1,
  kE2 = 2,
  kE3 = 3,
  kE12 = 4,
  kE13 = 5,
  kE23 = 6,
  kE123 = 7,
};

extern const std::array<const char*, 8> kBasisNames;

struct Multivector {
  Signature sig{Signature::cl03};
  std::array<double, 8> c{};

  Multivector() = default;
  explicit Multivector(Signature s) : sig(s) {}
  Multivector(Signature s, const std::array<double, 8>& coeffs) : sig(s), c(coeffs) {}

  static Multivector scalar(Signature s, double v) {
    Multivector m(s);
    m.c[kScalar] = v;
    return m;
  }
  static Multivector basis(Signature s, int idx, double v = 1.0) {
    Multivector m(s);
    m.c[idx] = v;
    return m;
  }

  double max_abs() const;
  bool is_zero(double abs_tol = 0.0) const;

  Multivector grade(int g) const;  // keep only the grade-g slots

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator-(Multivector a);
Multivector operator*(Multivector a, double s);
Multivector operator*(double s, Multivector a);
Multivector operator*(const Multivector& a, const Multivector& b);  // geometric product

struct GradeView {
  double scalar{};
  std::array<double, 3> vector{};    // e1, e2, e3
  std::array<double, 3> bivector{};  // e12, e13, e23
  double pseudoscalar{};
};

GradeView grades(const Multivector& a);
Multivector from_grades(Signature sig, const GradeView& g);

struct Involutions {
  Multivector reverse;
  Multivector grade_involution;
  Multivector clifford_conjugate;
};

Multivector reverse(const Multivector& a);
Multivector grade_involution(const Multivector& a);
Multivector clifford_conjugate(const Multivector& a);
Involutions involutions(const Multivector& a);

// Det(A) = A Ã Â (Ã)̂ reduced to its scalar part.  The product of the four
// involution factors is scalar for n = 3; a non-scalar residue above 1e-9
// relative signals a table bug and throws.
double determinant(const Multivector& a);

// |A| = abs(Det A)^(1/4); a semi-norm in the algebras where Det can vanish
// on nonzero elements.
double det_norm(const Multivector& a);

// Adjugate-based inverse: Ã Â (Ã)̂ / Det.  Throws NonInvertibleError when
// Det vanishes (relative to the coefficient scale).
Multivector inverse(const Multivector& a, double tol = kTolerance);

struct DotWedge {
  double vv;     // v·v, signature-aware
  double bb;     // B·B
  double wedge;  // coefficient of e123 in v∧B
};

DotWedge dot_wedge_split(Signature sig, const std::array<double, 3>& v,
                         const std::array<double, 3>& b);
DotWedge dot_wedge_split(const Multivector& a);  // uses a's grade-1/2 parts

// Algebra isomorphism Cl(3,0) <-> Cl(1,2).  Dispatches on the signature of
// the argument; applying it twice is the identity.  Generator images follow
// the basis exchange e1 -> -e1, e2 -> -e12, e3 -> -e13; images of products
// are derived from those, so the map transports geometric products exactly.
Multivector map_cl30_cl12(const Multivector& a);

bool approx_equal(const Multivector& a, const Multivector& b, double tol);
double max_coeff_distance(const Multivector& a, const Multivector& b);

}  // namespace galog
