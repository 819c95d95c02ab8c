#pragma once

#include <string>
#include <variant>
#include <vector>

#include "galog/branching.hpp"
#include "galog/exponential.hpp"
#include "galog/multivector.hpp"

namespace galog {

// --- case rows -------------------------------------------------------------
// Every logarithm result records which formula row produced it, so tests can
// assert coverage of the full piecewise dispatch.

enum class Cl03Side { generic, special_pos, special_zero, special_neg };

enum class Cl30Row {
  generic,
  arctan_axis,   // generic k's, pseudoscalar arctan arguments both zero
  k_minus_zero,  // Det(A) = 0 with k- = 0: lambda result
  k_plus_zero,   // Det(A) = 0 with k+ = 0: lambda result
  null_vector,   // a+^2 + a-^2 = 0, vector+bivector nonzero nilpotent
  center,        // a+^2 + a-^2 = 0, pure scalar+pseudoscalar
  empty,         // nonzero null vector+bivector with zero center part
};

enum class Cl21Side {
  elliptic,              // a±² > 0
  hyperbolic,            // a±² < 0, a0±a123 > 0, f± > 0
  hyperbolic_boundary,   // a±² < 0, a0±a123 > 0, f± = 0: lambda result
  parabolic,             // a±² = 0, a0±a123 > 0
  parabolic_degenerate,  // a±² = 0, a0±a123 <= 0, (1±I)(a+A) = 0
  empty,
};

enum class BladeKind { vector, paravector, bivector, parabivector, rotor, center };

struct Cl03Rows {
  Cl03Side plus{}, minus{};
};
struct Cl21Rows {
  Cl21Side plus{}, minus{};
};
struct BladeRow {
  BladeKind kind{};
  int subcase = 0;  // formula-specific branch index, see log_blade
};

using CaseRow = std::variant<Cl03Rows, Cl30Row, Cl21Rows, BladeRow>;
std::string to_string(const CaseRow& row);

// --- free family -----------------------------------------------------------
// Description of the free multivectors F with exp(F) = 1 that parameterize
// the sheet structure: one generator per acting integer constant, plus the
// continuous unit-direction slots opened by special-case rows.

struct DiscreteGenerator {
  std::string constant;  // "c1+", "c1-", "c2+", "c2-", "c1", "c2"
  Multivector generator; // contribution of constant = 1 to the logarithm
};

struct ContinuousSlot {
  enum class Kind { unit_vector, unit_bivector };
  Kind kind{};
  std::string constant;  // the integer constant the direction rides on
  Multivector factor;    // multiplies the unit direction in the result
};

struct FreeFamily {
  std::vector<DiscreteGenerator> discrete;
  std::vector<ContinuousSlot> continuous;
};

// --- results ---------------------------------------------------------------

struct LogResult {
  bool exists = false;
  ExtendedMultivector value;  // valid when exists
  FreeFamily family;
  CaseRow row;
  std::string reason;  // which condition failed, when !exists
};

// Closed-form logarithm, dispatching on the signature of the argument.
LogResult mv_log(const Multivector& a, const BranchParams& b = {}, double tol = kTolerance);

// Per-algebra paths (mv_log forwards to these).
LogResult log_cl03(const Multivector& a, const BranchParams& b = {}, double tol = kTolerance);
LogResult log_cl30(const Multivector& a, const BranchParams& b = {},
                   double tol = kTolerance);  // cl30 and cl12
LogResult log_cl21(const Multivector& a, const BranchParams& b = {}, double tol = kTolerance);

// Blade shortcuts.  Supported kinds: cl03 vector/paravector/bivector/
// parabivector/center, cl30 vector/bivector/rotor/center.  The input must
// match the blade pattern up to tolerance.  Subcase numbering:
//   cl03 center: 3*(sign of a0-a123) + (sign of a0+a123), signs mapped -,0,+ -> 0,1,2
//   cl30 rotor:  0 generic, 1 bivector part zero & a0 >= 0, 2 bivector part
//                zero & a0 < 0, 3 scalar part zero (bivector formula)
//   cl30 center: 0 nonzero norm, 1 zero norm (lambda)
LogResult log_blade(BladeKind kind, const Multivector& a, const BranchParams& b = {},
                    double tol = kTolerance);

// Mercator series in Horner arrangement on B = A - 1.  converged is true only
// when the determinant norm of B is below one and the partial sums stagnate.
struct SeriesLog {
  Multivector value;
  bool converged = false;
  int terms = 0;
};
SeriesLog log_series(const Multivector& a, int max_terms = 10000);

// Generic coordinate-form logarithm for Cl(0,3); requires b± != 0 and equals
// the principal (c = 0) closed-form value there.
Multivector log_cl03_coordinate(const Multivector& a, double tol = kTolerance);

// Free multivector of the generic paths.  Throws UsageError when the needed
// intermediates degenerate; special-case freedom is reported through the
// FreeFamily of the log result instead.
Multivector free_multivector(const Multivector& a, const BranchParams& b,
                             double tol = kTolerance);

// Empirical search for the minimal determinant-norm sheet over |c| <= cmax.
// The c = 0 sheet is not always minimal, so this is a utility, not a promise.
struct SheetSearchResult {
  BranchParams best;
  double norm = 0.0;
  LogResult result;
};
SheetSearchResult min_norm_sheet(const Multivector& a, int cmax, const BranchParams& base = {},
                                 double tol = kTolerance);

}  // namespace galog
