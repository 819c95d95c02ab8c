#include "galog/logarithm.hpp"

#include <cmath>
#include <limits>

#include "product_table.hpp"

namespace galog {

namespace {

struct Affine {
  double fin = 0.0;
  double lam = 0.0;
};

Multivector mv_one(Signature s) { return Multivector::scalar(s, 1.0); }
Multivector mv_I(Signature s) { return Multivector::basis(s, kE123); }

ExtendedMultivector ext_zero(Signature s) { return ExtendedMultivector(Multivector(s)); }

ExtendedMultivector ext_scalar(Signature s, const Affine& a) {
  ExtendedMultivector e = ext_zero(s);
  e.fin.c[kScalar] = a.fin;
  e.lam.c[kScalar] = a.lam;
  return e;
}

// (fin + lam*L) * m for a finite multivector m.
ExtendedMultivector affine_times(const Affine& a, const Multivector& m) {
  return {m * a.fin, m * a.lam};
}

const char* side_name(Cl03Side s) {
  switch (s) {
    case Cl03Side::generic: return "generic";
    case Cl03Side::special_pos: return "special_pos";
    case Cl03Side::special_zero: return "special_zero";
    case Cl03Side::special_neg: return "special_neg";
  }
  return "?";
}

const char* side_name(Cl21Side s) {
  switch (s) {
    case Cl21Side::elliptic: return "elliptic";
    case Cl21Side::hyperbolic: return "hyperbolic";
    case Cl21Side::hyperbolic_boundary: return "hyperbolic_boundary";
    case Cl21Side::parabolic: return "parabolic";
    case Cl21Side::parabolic_degenerate: return "parabolic_degenerate";
    case Cl21Side::empty: return "empty";
  }
  return "?";
}

const char* row_name(Cl30Row r) {
  switch (r) {
    case Cl30Row::generic: return "generic";
    case Cl30Row::arctan_axis: return "arctan_axis";
    case Cl30Row::k_minus_zero: return "k_minus_zero";
    case Cl30Row::k_plus_zero: return "k_plus_zero";
    case Cl30Row::null_vector: return "null_vector";
    case Cl30Row::center: return "center";
    case Cl30Row::empty: return "empty";
  }
  return "?";
}

const char* blade_name(BladeKind k) {
  switch (k) {
    case BladeKind::vector: return "vector";
    case BladeKind::paravector: return "paravector";
    case BladeKind::bivector: return "bivector";
    case BladeKind::parabivector: return "parabivector";
    case BladeKind::rotor: return "rotor";
    case BladeKind::center: return "center";
  }
  return "?";
}

}  // namespace

std::string to_string(const CaseRow& row) {
  if (const auto* r = std::get_if<Cl03Rows>(&row))
    return std::string("cl03:+") + side_name(r->plus) + ",-" + side_name(r->minus);
  if (const auto* r = std::get_if<Cl30Row>(&row)) return std::string("cl30:") + row_name(*r);
  if (const auto* r = std::get_if<Cl21Rows>(&row))
    return std::string("cl21:+") + side_name(r->plus) + ",-" + side_name(r->minus);
  const auto& b = std::get<BladeRow>(row);
  return std::string("blade:") + blade_name(b.kind) + "/" + std::to_string(b.subcase);
}

// --- Cl(0,3) ----------------------------------------------------------------

namespace {

struct Cl03SideResult {
  Cl03Side row{};
  ExtendedMultivector a0;   // scalar piece, may carry free directions and lambda
  ExtendedMultivector a12;  // vector+bivector piece
};

// One ± side of the Cl(0,3) logarithm.  proj_v = (1 ± I)(a + A) vanishes
// exactly when a_side = 0, which is what routes to the special rows.
Cl03SideResult cl03_side(Signature sig, double a_side, double s_side,
                         const Multivector& proj_v, const Multivector& proj_one, int c1,
                         int c2, const BranchParams& b, double lin_tol, std::string cname,
                         FreeFamily& family) {
  Cl03SideResult out;
  out.a0 = ext_zero(sig);
  out.a12 = ext_zero(sig);
  if (a_side > lin_tol) {
    out.row = Cl03Side::generic;
    out.a0 = ext_scalar(sig, {0.5 * std::log(s_side * s_side + a_side * a_side), 0.0});
    const double angle = arctan2_branched(s_side, a_side, c1);
    out.a12 = ExtendedMultivector(proj_v * (angle / a_side));
    family.discrete.push_back({"c1" + cname, proj_v * (kPi / a_side)});
    return out;
  }
  if (s_side > lin_tol) {
    out.row = Cl03Side::special_pos;
    const Multivector U = unit_free_bivector(sig, b);
    out.a0 = ExtendedMultivector(Multivector::scalar(sig, std::log(s_side)) +
                                 U * (2.0 * kPi * c2));
    out.a12 = ExtendedMultivector(proj_v * (1.0 / s_side + 2.0 * kPi * c1));
    family.discrete.push_back({"c2" + cname, (U * kPi) * proj_one});
    family.continuous.push_back(
        {ContinuousSlot::Kind::unit_bivector, "c2" + cname, proj_one * kPi});
  } else if (s_side < -lin_tol) {
    out.row = Cl03Side::special_neg;
    const Multivector u = unit_free_vector(sig, b);
    out.a0 = ExtendedMultivector(Multivector::scalar(sig, std::log(-s_side)) +
                                 u * (kPi * (1 + 2 * c2)));
    out.a12 = ExtendedMultivector(proj_v * (kPi * (1 + 2 * c1)));
    family.discrete.push_back({"c2" + cname, (u * kPi) * proj_one});
    family.continuous.push_back(
        {ContinuousSlot::Kind::unit_vector, "c2" + cname, proj_one * kPi});
  } else {
    out.row = Cl03Side::special_zero;
    out.a0 = ExtendedMultivector(Multivector(sig), mv_one(sig));  // log(0+)
  }
  return out;
}

}  // namespace

LogResult log_cl03(const Multivector& a, const BranchParams& b, double tol) {
  if (a.sig != Signature::cl03) throw UsageError("log_cl03 requires a cl03 multivector");
  const Signature sig = a.sig;
  const GradeView g = grades(a);
  const double scale = a.max_abs();
  const double lin_tol = tol * scale;

  const Multivector V = a.grade(1) + a.grade(2);
  const Multivector I = mv_I(sig);
  const Multivector one = mv_one(sig);

  const double am = std::sqrt((g.vector[2] + g.bivector[0]) * (g.vector[2] + g.bivector[0]) +
                              (g.vector[1] - g.bivector[1]) * (g.vector[1] - g.bivector[1]) +
                              (g.vector[0] + g.bivector[2]) * (g.vector[0] + g.bivector[2]));
  const double ap = std::sqrt((g.vector[2] - g.bivector[0]) * (g.vector[2] - g.bivector[0]) +
                              (g.vector[1] + g.bivector[1]) * (g.vector[1] + g.bivector[1]) +
                              (g.vector[0] - g.bivector[2]) * (g.vector[0] - g.bivector[2]));
  const double sp = g.scalar + g.pseudoscalar;
  const double sm = g.scalar - g.pseudoscalar;

  const Multivector PpV = (one + I) * V;
  const Multivector PmV = (one - I) * V;

  LogResult res;
  res.exists = true;  // total on Cl(0,3)
  const Cl03SideResult plus =
      cl03_side(sig, ap, sp, PpV, one + I, b.c1_plus, b.c2_plus, b, lin_tol, "+", res.family);
  const Cl03SideResult minus =
      cl03_side(sig, am, sm, PmV, one - I, b.c1_minus, b.c2_minus, b, lin_tol, "-", res.family);

  ExtendedMultivector sum = plus.a0;
  sum += minus.a0;
  sum += plus.a12;
  sum += minus.a12;
  ExtendedMultivector diff = plus.a0;
  diff += minus.a0 * (-1.0);
  sum += diff * I;
  res.value = sum * 0.5;
  res.row = Cl03Rows{plus.row, minus.row};
  return res;
}

// --- Cl(3,0) and Cl(1,2) ----------------------------------------------------

LogResult log_cl30(const Multivector& a, const BranchParams& b, double tol) {
  if (a.sig != Signature::cl30 && a.sig != Signature::cl12)
    throw UsageError("log_cl30 requires a cl30 or cl12 multivector");
  const Signature sig = a.sig;
  const GradeView g = grades(a);
  const double scale = a.max_abs();
  const double lin_tol = tol * scale;
  const double quad_tol = tol * scale * scale;

  const Multivector V = a.grade(1) + a.grade(2);
  const Multivector I = mv_I(sig);
  const Multivector one = mv_one(sig);
  const double x0 = g.scalar;
  const double y0 = g.pseudoscalar;

  const detail::DotWedge80 dw = detail::dot_wedge_split80(sig, g.vector, g.bivector);
  const long double G = dw.vv + dw.bb;
  const long double p = dw.wedge;

  // a± of the generic formula, with the explicit fallback when a^A = 0.
  // One of (G+R)/2, (R-G)/2 cancels catastrophically when |p| << |G|, so the
  // smaller root is always recovered from the product a+ a- = p; the G, p
  // combinations themselves are accumulated in extended precision.
  double ap = 0.0, am = 0.0;
  if (p != 0.0L && std::abs(static_cast<double>(p)) >=
                       tol * static_cast<double>(std::abs(dw.vv) + std::abs(dw.bb))) {
    const long double R = std::sqrt(G * G + 4.0L * p * p);
    if (G >= 0.0L) {
      ap = static_cast<double>(std::sqrt(0.5L * (G + R)));
      am = static_cast<double>(p / std::sqrt(0.5L * (G + R)));
    } else {
      const long double amv = std::sqrt(0.5L * (R - G));
      am = static_cast<double>(p < 0.0L ? -amv : amv);
      ap = static_cast<double>(p / (p < 0.0L ? -amv : amv));
    }
  } else if (G >= 0.0L) {
    ap = static_cast<double>(std::sqrt(G));
  } else {
    am = static_cast<double>(std::sqrt(-G));
  }
  const double sq = ap * ap + am * am;  // Det(a+A) = sq^2

  LogResult res;

  if (sq <= quad_tol) {
    // Null vector+bivector part.
    if (std::hypot(x0, y0) <= lin_tol) {
      if (scale == 0.0) {
        // log(0+): the limit substitution recovers 0.
        res.exists = true;
        res.value = ExtendedMultivector(Multivector(sig), mv_one(sig));
        res.row = Cl30Row::center;
        return res;
      }
      res.exists = false;
      res.reason = "Det(a+A) = 0 with zero scalar and pseudoscalar parts";
      res.row = Cl30Row::empty;
      return res;
    }
    const double z2 = x0 * x0 + y0 * y0;
    Multivector value = Multivector::scalar(sig, 0.5 * std::log(z2));
    const Multivector z0inv =
        (Multivector::scalar(sig, x0) - I * y0) * (1.0 / z2);
    value += z0inv * V;
    const double nu = arctan2_branched(x0, y0, b.c2());
    value += I * nu;
    res.family.discrete.push_back({"c2", I * (2.0 * kPi)});
    if (V.max_abs() <= lin_tol) {
      const Multivector U = unit_free_bivector(sig, b);
      value += U * (2.0 * kPi * b.c1());
      res.family.discrete.push_back({"c1", U * (2.0 * kPi)});
      res.family.continuous.push_back(
          {ContinuousSlot::Kind::unit_bivector, "c1", one * (2.0 * kPi)});
      res.row = Cl30Row::center;
    } else {
      res.row = Cl30Row::null_vector;
    }
    res.exists = true;
    res.value = ExtendedMultivector(value);
    return res;
  }

  const double kp = std::hypot(ap + x0, am + y0);
  const double km = std::hypot(ap - x0, am - y0);
  const Multivector Vw = V * ((Multivector::scalar(sig, ap) - I * am) * (1.0 / sq));
  const Multivector VwI = Vw * I;

  Affine mu, s;
  Cl30Row row = Cl30Row::generic;
  if (km <= lin_tol) {
    mu = {0.5 * std::log(kp), 0.5};
    s = {0.5 * std::log(kp), -0.5};
    row = Cl30Row::k_minus_zero;
  } else if (kp <= lin_tol) {
    mu = {0.5 * std::log(km), 0.5};
    s = {-0.5 * std::log(km), 0.5};
    row = Cl30Row::k_plus_zero;
  } else {
    mu = {0.5 * (std::log(kp) + std::log(km)), 0.0};
    s = {0.5 * (std::log(kp) - std::log(km)), 0.0};
  }

  // Phases of the two ideal components; the difference/sum pair is what the
  // arctan arguments of the generic formula encode, but computing it from
  // theta± directly avoids the cancellation in the squared products.
  const double theta_p = std::atan2(am + y0, ap + x0);
  const double theta_m = std::atan2(y0 - am, x0 - ap);
  const auto wrap = [](double x) {
    while (x > kPi) x -= 2.0 * kPi;
    while (x <= -kPi) x += 2.0 * kPi;
    return x;
  };

  double t;
  if (row == Cl30Row::generic) {
    t = 0.5 * wrap(theta_p - theta_m) + 2.0 * kPi * b.c1();
  } else {
    t = kPi * (0.5 + 2.0 * b.c1());
  }

  double nu;
  if (row != Cl30Row::generic) {
    // k± = 0 zeroes both arguments of the pseudoscalar arctan
    nu = arctan2_branched(-am, ap, b.c2());
  } else {
    const double half_diff_cos = std::cos(0.5 * (theta_p - theta_m));
    if (std::abs(half_diff_cos) > tol) {
      // value of arctan(z+ k- + z- k+): the half-sum, pushed back onto the
      // principal sheet when the cosine factor is negative
      double base = 0.5 * (theta_p + theta_m);
      if (half_diff_cos < 0.0) base += kPi;
      nu = wrap(base) + 2.0 * kPi * b.c2();
    } else {
      nu = arctan2_branched(-am, ap, b.c2());
      row = Cl30Row::arctan_axis;
    }
  }

  // Branch coherence: the half-angle pair (t, nu) must reproduce the phase of
  // the non-degenerate ideal component modulo 2*pi; the two arctan principal
  // values can land one odd pi apart, in which case t moves by pi.
  double theta_ref, phase;
  if (kp > lin_tol) {
    theta_ref = theta_p;
    phase = nu + t;
  } else {
    theta_ref = theta_m;
    phase = nu - t;
  }
  const long parity = std::lround((phase - theta_ref) / kPi);
  if (parity & 1) {
    const double principal = t - 2.0 * kPi * b.c1();
    t -= (principal >= 0.0 ? kPi : -kPi);
  }

  ExtendedMultivector value = ext_scalar(sig, mu);
  value += affine_times(s, Vw);
  value += ExtendedMultivector(VwI * t + I * nu);

  res.exists = true;
  res.value = value;
  res.row = row;
  res.family.discrete.push_back({"c1", VwI * (2.0 * kPi)});
  res.family.discrete.push_back({"c2", I * (2.0 * kPi)});
  return res;
}

// --- Cl(2,1) ----------------------------------------------------------------

namespace {

struct Cl21SideResult {
  Cl21Side row{};
  bool exists = true;
  std::string reason;
  ExtendedMultivector a0;
  ExtendedMultivector a12;
};

// One ± side of the Cl(2,1) logarithm.  asq may have either sign; degenerate
// rows additionally require the matching projector to kill the
// vector+bivector part (proj_v = (1 ± I)(a + A) = 0), which is the per-side
// content of the pairing condition D.
Cl21SideResult cl21_side(Signature sig, double asq, double s_side, double f,
                         const Multivector& proj_v, const Multivector& proj_one, int c1,
                         int c2, const BranchParams& b, double lin_tol, double quad_tol,
                         std::string cname, FreeFamily& family) {
  Cl21SideResult out;
  out.a0 = ext_zero(sig);
  out.a12 = ext_zero(sig);
  if (asq > quad_tol) {
    out.row = Cl21Side::elliptic;
    const double aside = std::sqrt(asq);
    out.a0 = ext_scalar(sig, {0.5 * std::log(f), 0.0});
    out.a12 =
        ExtendedMultivector(proj_v * (arctan2_branched(s_side, aside, c1) / aside));
    family.discrete.push_back({"c1" + cname, proj_v * (kPi / aside)});
    return out;
  }
  if (asq < -quad_tol) {
    const double h = std::sqrt(-asq);
    if (s_side <= lin_tol) {
      out.exists = false;
      out.row = Cl21Side::empty;
      out.reason = "a" + cname + "^2 < 0 with a0" + cname + "a123 <= 0";
      return out;
    }
    if (f > quad_tol) {
      out.row = Cl21Side::hyperbolic;
      out.a0 = ext_scalar(
          sig, {0.5 * (std::log(s_side + h) + std::log(s_side - h)), 0.0});
      out.a12 = ExtendedMultivector(proj_v * (std::atanh(h / s_side) / h));
    } else {
      // f = 0: the second log factor degenerates to log(0+).
      out.row = Cl21Side::hyperbolic_boundary;
      out.a0 = ext_scalar(sig, {0.5 * std::log(s_side + h), 0.5});
      out.a12 = affine_times({0.5 * std::log(s_side + h) / h, -0.5 / h}, proj_v);
    }
    return out;
  }
  // asq = 0 (parabolic).
  if (s_side > lin_tol) {
    out.row = Cl21Side::parabolic;
    Multivector a0_mv = Multivector::scalar(sig, std::log(s_side));
    if (proj_v.max_abs() <= lin_tol) {
      const Multivector U = unit_free_bivector(sig, b);
      a0_mv += U * (2.0 * kPi * c2);
      family.discrete.push_back({"c2" + cname, (U * kPi) * proj_one});
      family.continuous.push_back(
          {ContinuousSlot::Kind::unit_bivector, "c2" + cname, proj_one * kPi});
    }
    out.a0 = ExtendedMultivector(a0_mv);
    out.a12 = ExtendedMultivector(proj_v * (1.0 / s_side));
    return out;
  }
  if (proj_v.max_abs() <= lin_tol) {
    out.row = Cl21Side::parabolic_degenerate;
    const Multivector U = unit_free_bivector(sig, b);
    Multivector fin = U * (kPi * (1 + 2 * c2));
    if (s_side < -lin_tol) {
      fin += Multivector::scalar(sig, std::log(-s_side));
      out.a0 = ExtendedMultivector(fin);
    } else {
      out.a0 = ExtendedMultivector(fin, mv_one(sig));  // log(0+)
    }
    family.discrete.push_back({"c2" + cname, (U * kPi) * proj_one});
    family.continuous.push_back(
        {ContinuousSlot::Kind::unit_bivector, "c2" + cname, proj_one * kPi});
    return out;
  }
  out.exists = false;
  out.row = Cl21Side::empty;
  out.reason = "a" + cname + "^2 = 0 with a0" + cname +
               "a123 <= 0 and nonzero (1" + cname + "I)(a+A)";
  return out;
}

}  // namespace

LogResult log_cl21(const Multivector& a, const BranchParams& b, double tol) {
  if (a.sig != Signature::cl21) throw UsageError("log_cl21 requires a cl21 multivector");
  const Signature sig = a.sig;
  const GradeView g = grades(a);
  const double scale = a.max_abs();
  const double lin_tol = tol * scale;
  const double quad_tol = tol * scale * scale;

  const Multivector V = a.grade(1) + a.grade(2);
  const Multivector I = mv_I(sig);
  const Multivector one = mv_one(sig);

  const detail::DotWedge80 dw = detail::dot_wedge_split80(sig, g.vector, g.bivector);
  const long double G = dw.vv + dw.bb;
  const long double p = dw.wedge;
  const double asq_p = static_cast<double>(-G - 2.0L * p);
  const double asq_m = static_cast<double>(-G + 2.0L * p);
  const double sp = g.scalar + g.pseudoscalar;
  const double sm = g.scalar - g.pseudoscalar;
  const double fp = static_cast<double>(
      static_cast<long double>(sp) * sp + (-G - 2.0L * p));
  const double fm = static_cast<double>(
      static_cast<long double>(sm) * sm + (-G + 2.0L * p));

  LogResult res;
  if (fp < -quad_tol || fm < -quad_tol) {
    res.exists = false;
    res.reason = fp < -quad_tol ? "f+ < 0" : "f- < 0";
    res.row = Cl21Rows{fp < -quad_tol ? Cl21Side::empty : Cl21Side::elliptic,
                       fm < -quad_tol ? Cl21Side::empty : Cl21Side::elliptic};
    return res;
  }

  const Multivector PpV = (one + I) * V;
  const Multivector PmV = (one - I) * V;

  FreeFamily family;
  const Cl21SideResult plus = cl21_side(sig, asq_p, sp, fp, PpV, one + I, b.c1_plus,
                                        b.c2_plus, b, lin_tol, quad_tol, "+", family);
  const Cl21SideResult minus = cl21_side(sig, asq_m, sm, fm, PmV, one - I, b.c1_minus,
                                         b.c2_minus, b, lin_tol, quad_tol, "-", family);
  res.row = Cl21Rows{plus.row, minus.row};
  if (!plus.exists || !minus.exists) {
    res.exists = false;
    res.reason = !plus.exists ? plus.reason : minus.reason;
    return res;
  }

  ExtendedMultivector sum = plus.a0;
  sum += minus.a0;
  sum += plus.a12;
  sum += minus.a12;
  ExtendedMultivector diff = plus.a0;
  diff += minus.a0 * (-1.0);
  sum += diff * I;
  res.exists = true;
  res.value = sum * 0.5;
  res.family = family;
  return res;
}

LogResult mv_log(const Multivector& a, const BranchParams& b, double tol) {
  switch (a.sig) {
    case Signature::cl03: return log_cl03(a, b, tol);
    case Signature::cl30:
    case Signature::cl12: return log_cl30(a, b, tol);
    case Signature::cl21: return log_cl21(a, b, tol);
  }
  throw UsageError("unknown signature");
}

// --- blade shortcuts ---------------------------------------------------------

namespace {

void require_pattern(const Multivector& a, std::initializer_list<int> allowed, double lin_tol,
                     const char* what) {
  std::array<bool, 8> ok{};
  for (int i : allowed) ok[i] = true;
  for (int i = 0; i < 8; ++i)
    if (!ok[i] && std::abs(a.c[i]) > lin_tol)
      throw UsageError(std::string("input does not match the ") + what + " blade pattern");
}

LogResult lambda_result(Signature sig, BladeRow row) {
  LogResult res;
  res.exists = true;
  res.value = ExtendedMultivector(Multivector(sig), Multivector::scalar(sig, 1.0));
  res.row = row;
  return res;
}

double euclid3(const Multivector& a, int base) {
  return std::hypot(a.c[base], a.c[base + 1], a.c[base + 2]);
}

// Vector / bivector / paravector / parabivector formulas of the Cl(0,3)
// collection share one shape; `angle_half` is pi/2 for pure blades and
// arctan(a0, |blade|) for the scalar-plus-blade combinations.
LogResult cl03_blade_common(const Multivector& a, const Multivector& unit, double norm2,
                            double angle, const BranchParams& b, BladeKind kind) {
  const Signature sig = a.sig;
  const Multivector I = mv_I(sig);
  const Multivector one = mv_one(sig);
  Multivector value = Multivector::scalar(sig, 0.5 * std::log(norm2));
  const int c1 = b.c1_plus, c2 = b.c1_minus;
  value += unit * angle;
  value += (unit * (kPi * c1)) * (one + I);
  value += (unit * (kPi * c2)) * (one - I);
  LogResult res;
  res.exists = true;
  res.value = ExtendedMultivector(value);
  res.row = BladeRow{kind, 0};
  res.family.discrete.push_back({"c1+", (unit * kPi) * (one + I)});
  res.family.discrete.push_back({"c1-", (unit * kPi) * (one - I)});
  return res;
}

LogResult log_blade_cl03(BladeKind kind, const Multivector& a, const BranchParams& b,
                         double tol) {
  const Signature sig = a.sig;
  const double lin_tol = tol * a.max_abs();
  const Multivector I = mv_I(sig);
  const Multivector one = mv_one(sig);
  switch (kind) {
    case BladeKind::vector: {
      require_pattern(a, {kE1, kE2, kE3}, lin_tol, "vector");
      const double n = euclid3(a, kE1);
      if (n <= lin_tol) return lambda_result(sig, {kind, 1});
      return cl03_blade_common(a, a * (1.0 / n), n * n, kPi / 2.0, b, kind);
    }
    case BladeKind::paravector: {
      require_pattern(a, {kScalar, kE1, kE2, kE3}, lin_tol, "paravector");
      const double n = euclid3(a, kE1);
      if (n <= lin_tol)
        throw UsageError("paravector blade needs a nonzero vector part; use the generic path");
      const double a0 = a.c[kScalar];
      const Multivector unit = a.grade(1) * (1.0 / n);
      return cl03_blade_common(a, unit, a0 * a0 + n * n, arctan2(a0, n), b, kind);
    }
    case BladeKind::bivector: {
      require_pattern(a, {kE12, kE13, kE23}, lin_tol, "bivector");
      const double n = euclid3(a, kE12);
      if (n <= lin_tol) return lambda_result(sig, {kind, 1});
      return cl03_blade_common(a, a * (1.0 / n), n * n, kPi / 2.0, b, kind);
    }
    case BladeKind::rotor:
    case BladeKind::parabivector: {
      require_pattern(a, {kScalar, kE12, kE13, kE23}, lin_tol, "parabivector");
      const double n = euclid3(a, kE12);
      if (n <= lin_tol)
        throw UsageError(
            "parabivector blade needs a nonzero bivector part; use the center formula");
      const double a0 = a.c[kScalar];
      const Multivector unit = a.grade(2) * (1.0 / n);
      return cl03_blade_common(a, unit, a0 * a0 + n * n, arctan2(a0, n), b,
                               BladeKind::parabivector);
    }
    case BladeKind::center: {
      require_pattern(a, {kScalar, kE123}, lin_tol, "center");
      const double spv = a.c[kScalar] + a.c[kE123];
      const double smv = a.c[kScalar] - a.c[kE123];
      LogResult res;
      res.exists = true;
      res.value = ext_zero(sig);
      int sp_idx, sm_idx;
      // One factor per projector: sign of a0 ± a123 picks log / pi*u / lambda.
      auto factor = [&](double s_val, int c, const char* cname,
                        int& idx) -> ExtendedMultivector {
        if (s_val > lin_tol) {
          idx = 2;
          const Multivector U = unit_free_bivector(sig, b);
          res.family.discrete.push_back({cname, U * kPi});
          res.family.continuous.push_back(
              {ContinuousSlot::Kind::unit_bivector, cname, mv_one(sig) * kPi});
          return ExtendedMultivector(Multivector::scalar(sig, 0.5 * std::log(s_val)) +
                                     U * (kPi * c));
        }
        if (s_val < -lin_tol) {
          idx = 0;
          const Multivector u = unit_free_vector(sig, b);
          res.family.discrete.push_back({cname, u * kPi});
          res.family.continuous.push_back(
              {ContinuousSlot::Kind::unit_vector, cname, mv_one(sig) * kPi});
          return ExtendedMultivector(Multivector::scalar(sig, 0.5 * std::log(-s_val)) +
                                     u * (kPi * (c + 0.5)));
        }
        idx = 1;
        return ExtendedMultivector(Multivector(sig), Multivector::scalar(sig, 0.5));
      };
      ExtendedMultivector fp = factor(spv, b.c2_plus, "c2+", sp_idx);
      ExtendedMultivector fm = factor(smv, b.c2_minus, "c2-", sm_idx);
      res.value = fm * (one - I);
      res.value += fp * (one + I);
      res.row = BladeRow{kind, 3 * sm_idx + sp_idx};
      // The family entries above are the per-factor halves; scale to the full
      // generator (factor * (1 -/+ I)).
      for (auto& gen : res.family.discrete)
        gen.generator = gen.generator * (gen.constant == "c2+" ? one + I : one - I);
      for (auto& slot : res.family.continuous)
        slot.factor = slot.factor * (slot.constant == "c2+" ? one + I : one - I);
      return res;
    }
    default: throw UsageError("unsupported cl03 blade kind");
  }
}

LogResult log_blade_cl30(BladeKind kind, const Multivector& a, const BranchParams& b,
                         double tol) {
  const Signature sig = a.sig;
  const double lin_tol = tol * a.max_abs();
  const Multivector I = mv_I(sig);
  const int c1 = b.c1(), c2 = b.c2();
  switch (kind) {
    case BladeKind::vector: {
      require_pattern(a, {kE1, kE2, kE3}, lin_tol, "vector");
      const double n = euclid3(a, kE1);
      if (n <= lin_tol) return lambda_result(sig, {kind, 1});
      Multivector value = Multivector::scalar(sig, std::log(n));
      value += (a * (1.0 / n) * I) * (-kPi * (0.5 + 2.0 * c2));
      value += I * (kPi * (0.5 + 2.0 * c1));
      LogResult res;
      res.exists = true;
      res.value = ExtendedMultivector(value);
      res.row = BladeRow{kind, 0};
      res.family.discrete.push_back({"c2", a * (1.0 / n) * I * (-2.0 * kPi)});
      res.family.discrete.push_back({"c1", I * (2.0 * kPi)});
      return res;
    }
    case BladeKind::bivector: {
      require_pattern(a, {kE12, kE13, kE23}, lin_tol, "bivector");
      const double n = euclid3(a, kE12);
      if (n <= lin_tol) return lambda_result(sig, {kind, 1});
      Multivector value = Multivector::scalar(sig, std::log(n));
      value += a * (-kPi * (0.5 + 2.0 * c2) / n);
      value += I * (kPi * (1.0 + 2.0 * c1));
      LogResult res;
      res.exists = true;
      res.value = ExtendedMultivector(value);
      res.row = BladeRow{kind, 0};
      res.family.discrete.push_back({"c2", a * (-2.0 * kPi / n)});
      res.family.discrete.push_back({"c1", I * (2.0 * kPi)});
      return res;
    }
    case BladeKind::parabivector:
    case BladeKind::rotor: {
      kind = BladeKind::rotor;  // canonical name for scalar+bivector here
      require_pattern(a, {kScalar, kE12, kE13, kE23}, lin_tol, "rotor");
      const double n = euclid3(a, kE12);
      const double a0 = a.c[kScalar];
      if (n <= lin_tol) {
        if (a.max_abs() <= lin_tol) return lambda_result(sig, {kind, 1});
        LogResult res;
        res.exists = true;
        // pi(1+2c1)I puts e^(i pi) on the center when a0 < 0.
        const double angle = a0 >= 0.0 ? 2.0 * kPi * c1 : kPi * (1.0 + 2.0 * c1);
        res.value = ExtendedMultivector(
            Multivector::scalar(sig, std::log(std::abs(a0))) + I * angle);
        res.row = BladeRow{kind, a0 >= 0.0 ? 1 : 2};
        res.family.discrete.push_back({"c1", I * (2.0 * kPi)});
        return res;
      }
      if (std::abs(a0) <= lin_tol) {
        LogResult res = log_blade_cl30(BladeKind::bivector, a.grade(2), b, tol);
        res.row = BladeRow{kind, 3};
        return res;
      }
      Multivector value = Multivector::scalar(sig, 0.5 * std::log(a0 * a0 + n * n));
      value += I * arctan2_branched(a0 > 0 ? 1.0 : -1.0, 0.0, c1);
      const Multivector unit = a.grade(2) * (1.0 / n);
      value += unit * (2.0 * kPi * c2 - 0.5 * arctan2(a0 * a0 - n * n, -2.0 * a0 * n));
      LogResult res;
      res.exists = true;
      res.value = ExtendedMultivector(value);
      res.row = BladeRow{kind, 0};
      res.family.discrete.push_back({"c1", I * (2.0 * kPi)});
      res.family.discrete.push_back({"c2", unit * (2.0 * kPi)});
      return res;
    }
    case BladeKind::center: {
      require_pattern(a, {kScalar, kE123}, lin_tol, "center");
      const double n2 = a.c[kScalar] * a.c[kScalar] + a.c[kE123] * a.c[kE123];
      const Multivector U = unit_free_bivector(sig, b);
      LogResult res;
      res.exists = true;
      if (n2 <= lin_tol * lin_tol) {
        res.value = ExtendedMultivector(U * (2.0 * kPi * c2), mv_one(sig));
        res.row = BladeRow{kind, 1};
      } else {
        Multivector value = Multivector::scalar(sig, 0.5 * std::log(n2));
        value += U * (2.0 * kPi * c2);
        value += I * (arctan2(a.c[kScalar], a.c[kE123]) + 4.0 * kPi * c1);
        res.value = ExtendedMultivector(value);
        res.row = BladeRow{kind, 0};
        res.family.discrete.push_back({"c1", I * (4.0 * kPi)});
      }
      res.family.discrete.push_back({"c2", U * (2.0 * kPi)});
      res.family.continuous.push_back(
          {ContinuousSlot::Kind::unit_bivector, "c2", mv_one(sig) * (2.0 * kPi)});
      return res;
    }
    default:
      throw UsageError(
          "cl30 paravector blade logarithm is not provided; use the generic path");
  }
}

}  // namespace

LogResult log_blade(BladeKind kind, const Multivector& a, const BranchParams& b, double tol) {
  if (a.sig == Signature::cl03) return log_blade_cl03(kind, a, b, tol);
  if (a.sig == Signature::cl30) return log_blade_cl30(kind, a, b, tol);
  throw UsageError("blade shortcuts cover cl03 and cl30 only");
}

// --- series -----------------------------------------------------------------

SeriesLog log_series(const Multivector& a, int max_terms) {
  const Signature sig = a.sig;
  const Multivector B = a - mv_one(sig);
  SeriesLog out;
  out.value = Multivector(sig);
  const double bnorm = det_norm(B);

  Multivector power = B;
  Multivector sum = B;
  out.terms = 1;
  bool stagnated = B.max_abs() == 0.0;
  int small_streak = 0;
  for (int k = 2; k <= max_terms && !stagnated; ++k) {
    power = power * B;
    const Multivector term = power * ((k % 2 == 0 ? -1.0 : 1.0) / k);
    sum += term;
    out.terms = k;
    if (term.max_abs() <= 1e-12 * std::max(1.0, sum.max_abs())) {
      if (++small_streak >= 2) stagnated = true;
    } else {
      small_streak = 0;
    }
    if (power.max_abs() > 1e50) break;  // clearly diverging
  }
  out.value = sum;
  out.converged = stagnated && bnorm < 1.0;
  return out;
}

// --- Cl(0,3) coordinate form --------------------------------------------------

Multivector log_cl03_coordinate(const Multivector& a, double tol) {
  if (a.sig != Signature::cl03)
    throw UsageError("log_cl03_coordinate requires a cl03 multivector");
  const double lin_tol = tol * a.max_abs();
  const double b0 = a.c[kScalar], b1 = a.c[kE1], b2 = a.c[kE2], b3 = a.c[kE3];
  const double b12 = a.c[kE12], b13 = a.c[kE13], b23 = a.c[kE23], b123 = a.c[kE123];

  const double bm =
      std::sqrt((b3 + b12) * (b3 + b12) + (b2 - b13) * (b2 - b13) + (b1 + b23) * (b1 + b23));
  const double bp =
      std::sqrt((b3 - b12) * (b3 - b12) + (b2 + b13) * (b2 + b13) + (b1 - b23) * (b1 - b23));
  if (bp <= lin_tol || bm <= lin_tol)
    throw UsageError("coordinate-form logarithm is generic-only (needs b± != 0)");

  const double lp = std::log((b0 + b123) * (b0 + b123) + bp * bp);
  const double lm = std::log((b0 - b123) * (b0 - b123) + bm * bm);
  const double tp = arctan2(b0 + b123, bp) / bp;
  const double tm = arctan2(b0 - b123, bm) / bm;

  Multivector out(Signature::cl03);
  out.c[kScalar] = 0.25 * (lm + lp);
  out.c[kE123] = 0.25 * (lp - lm);
  out.c[kE1] = 0.5 * ((b1 + b23) * tm + (b1 - b23) * tp);
  out.c[kE2] = 0.5 * ((b2 - b13) * tm + (b2 + b13) * tp);
  out.c[kE3] = 0.5 * ((b3 + b12) * tm + (b3 - b12) * tp);
  out.c[kE12] = 0.5 * ((b3 + b12) * tm + (b12 - b3) * tp);
  out.c[kE13] = 0.5 * ((b13 - b2) * tm + (b2 + b13) * tp);
  out.c[kE23] = 0.5 * ((b1 + b23) * tm + (b23 - b1) * tp);
  return out;
}

// --- free multivector ---------------------------------------------------------

Multivector free_multivector(const Multivector& a, const BranchParams& b, double tol) {
  const Signature sig = a.sig;
  const double lin_tol = tol * a.max_abs();
  const Multivector V = a.grade(1) + a.grade(2);
  const Multivector I = mv_I(sig);
  const Multivector one = mv_one(sig);

  const GradeView g = grades(a);
  if (sig == Signature::cl03 || sig == Signature::cl21) {
    const detail::DotWedge80 dw = detail::dot_wedge_split80(sig, g.vector, g.bivector);
    const double asq_p = static_cast<double>(-(dw.vv + dw.bb) - 2.0L * dw.wedge);
    const double asq_m = static_cast<double>(-(dw.vv + dw.bb) + 2.0L * dw.wedge);
    if (asq_p <= lin_tol * lin_tol || asq_m <= lin_tol * lin_tol)
      throw UsageError("free multivector needs the generic (a± != 0) case; "
                       "special-case freedom is reported by the log result");
    const double ap = std::sqrt(asq_p), am = std::sqrt(asq_m);
    return ((one + I) * V) * (kPi * b.c1_plus / ap) + ((one - I) * V) * (kPi * b.c1_minus / am);
  }

  // cl30 / cl12
  const detail::DotWedge80 dw = detail::dot_wedge_split80(sig, g.vector, g.bivector);
  const long double G = dw.vv + dw.bb;
  const long double p = dw.wedge;
  double ap = 0.0, am = 0.0;
  if (p != 0.0L && std::abs(static_cast<double>(p)) >=
                       tol * static_cast<double>(std::abs(dw.vv) + std::abs(dw.bb))) {
    const long double R = std::sqrt(G * G + 4.0L * p * p);
    if (G >= 0.0L) {
      ap = static_cast<double>(std::sqrt(0.5L * (G + R)));
      am = static_cast<double>(p / std::sqrt(0.5L * (G + R)));
    } else {
      const long double amv = std::sqrt(0.5L * (R - G));
      am = static_cast<double>(p < 0.0L ? -amv : amv);
      ap = static_cast<double>(p / (p < 0.0L ? -amv : amv));
    }
  } else if (G >= 0.0L) {
    ap = static_cast<double>(std::sqrt(G));
  } else {
    am = static_cast<double>(std::sqrt(-G));
  }
  const double sq = ap * ap + am * am;
  if (sq <= lin_tol * lin_tol)
    throw UsageError("free multivector needs a+^2 + a-^2 != 0; "
                     "special-case freedom is reported by the log result");
  return (V * am + V * I * ap) * (2.0 * kPi * b.c1() / sq) + I * (2.0 * kPi * b.c2());
}

// --- minimal-norm sheet search --------------------------------------------------

SheetSearchResult min_norm_sheet(const Multivector& a, int cmax, const BranchParams& base,
                                 double tol) {
  SheetSearchResult best;
  best.norm = std::numeric_limits<double>::infinity();
  best.best = base;
  best.result = mv_log(a, base, tol);

  const bool two_constants = a.sig == Signature::cl30 || a.sig == Signature::cl12;
  for (int c1p = -cmax; c1p <= cmax; ++c1p)
    for (int c2p = -cmax; c2p <= cmax; ++c2p) {
      const int c1m_lo = two_constants ? 0 : -cmax;
      const int c1m_hi = two_constants ? 0 : cmax;
      for (int c1m = c1m_lo; c1m <= c1m_hi; ++c1m)
        for (int c2m = c1m_lo; c2m <= c1m_hi; ++c2m) {
          BranchParams b = base;
          b.c1_plus = c1p;
          b.c1_minus = c1m;
          b.c2_plus = c2p;
          b.c2_minus = c2m;
          LogResult r = mv_log(a, b, tol);
          if (!r.exists || r.value.has_lambda()) continue;
          const double n = det_norm(r.value.fin);
          if (n < best.norm) {
            best.norm = n;
            best.best = b;
            best.result = r;
          }
        }
    }
  return best;
}

}  // namespace galog
