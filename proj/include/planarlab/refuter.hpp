#pragma once

// Non-planarity certificates from tangent cones.
//
// The planar curve F of a reduced polynomial f is pushed through a chain of
// substitute-and-divide moves until some polynomial's tangent cone at the
// origin contains a linear factor of multiplicity one over GF(q). Each move
// preserves "has an absolutely irreducible factor over GF(q)" in reverse, so
// the certificate shows F has such a factor; for deg f <= q^(1/4) the
// Hasse-Weil bound then forces rational points off X=1 and Y=0, i.e. f is
// not planar.
//
// run_pipeline follows the full chain F_0..F_t, F_(t+1), F_(t+2), H_0..H_L
// (with the shifted chain G_r where needed) and audits every counting claim
// on the way. Checkpoints that end in a certificate are CertificateBranch;
// a failed counting claim is InternalViolation and stops the run.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planarlab/bipoly.hpp"
#include "planarlab/curves.hpp"
#include "planarlab/tangent.hpp"
#include "planarlab/transform.hpp"
#include "planarlab/unipoly.hpp"

namespace planarlab {

enum class LemmaStatus { Holds, CertificateBranch, InternalViolation };

enum class Branch { T0Immediate, UZero, UOne, VOne, VZero, IntermediateLinear, FinalH };

/// Which curve the certificate's steps start from: the planar curve F, the
/// shifted curve G(X,Y) = F(X+1,Y), or the APN curve.
enum class CurveSource { FChain, GChain, ApnCurve };

std::string_view to_string(LemmaStatus s) noexcept;
std::string_view to_string(Branch b) noexcept;
std::string_view to_string(CurveSource s) noexcept;
std::optional<Branch> branch_from_string(std::string_view s) noexcept;
std::optional<CurveSource> source_from_string(std::string_view s) noexcept;

struct Certificate {
  CurveSource source = CurveSource::FChain;
  Branch branch = Branch::FinalH;
  std::vector<TransformStep> steps;
  HomogeneousForm terminal_cone;
  LinearFactor factor;
  /// Reduced polynomial the certificate was generated for (carries the field).
  UniPoly f;
};

/// Checkpoint names, in pipeline order.
namespace checkpoint {
inline constexpr const char* kStageCount = "stage_count";          // t >= 1 or immediate cone
inline constexpr const char* kUBounds = "u_bounds";                // 2 <= u <= nu(d)
inline constexpr const char* kNDivisibility = "n_divisibility";    // 2^u | n_r
inline constexpr const char* kConeFt = "cone_Ft";                  // cone(F_t) = Y^(2^u-2)
inline constexpr const char* kSumIdentity = "sum_n_identity";      // sum n_r = d - 2^u
inline constexpr const char* kFt2Steps = "Ft2_steps";              // each Y-step divides by Y^2
inline constexpr const char* kConeFt2 = "cone_Ft2";                // alpha X^2 + Y^2
inline constexpr const char* kImageFormula = "image_formula";      // closed-form monomial images
inline constexpr const char* kUniqueMinimum = "unique_minimum";    // m odd, unique i
inline constexpr const char* kEvenDegrees = "even_degrees";        // below m: even X and Y degrees
inline constexpr const char* kShearChain = "shear_chain";          // cones deg 2 w/o XY, then alpha X
}  // namespace checkpoint

struct PipelineReport {
  int d = 0;
  unsigned nu_d = 0;
  int t = -1;
  std::vector<std::uint32_t> n_seq;
  std::optional<int> u;
  std::optional<bool> sum_n_identity;
  std::map<unsigned, std::int64_t> o_table;
  std::map<unsigned, std::int64_t> e_table;
  std::map<unsigned, unsigned> z_table;
  std::optional<std::int64_t> m;
  std::vector<std::pair<std::string, LemmaStatus>> lemma_status;

  std::optional<HomogeneousForm> cone_ft;
  std::optional<BiPoly> f_t2;
  std::optional<HomogeneousForm> cone_ft2;
  std::vector<Word> shear_constants;
  /// Monomials of F whose F_(t+2) image was checked against the closed form.
  std::size_t images_checked = 0;

  std::optional<Certificate> certificate;
  std::optional<std::string> violation;

  bool has_violation() const noexcept { return violation.has_value(); }
  std::optional<LemmaStatus> status(const std::string& name) const;
};

/// f must be reduced and nonzero: throws IsTwoPolynomial when f has no
/// monomial of non-2-power degree, NotReduced when it still has some
/// 2-power monomial. Violations are reported, not thrown.
PipelineReport run_pipeline(const UniPoly& f);

struct OemTables {
  std::map<unsigned, std::int64_t> o;
  std::map<unsigned, std::int64_t> e;
  std::map<unsigned, unsigned> z;
  std::int64_t m = 0;
};

/// Smallest odd (o) and even (e) degrees of the A_i-monomials in F_(t+2).
/// e(i) is omitted when i+1 is a power of two. Needs u >= 2, t >= 1.
OemTables compute_oem(const UniPoly& f, int t, int u);

/// Smallest positive n with bit n of i clear.
unsigned lowest_clear_bit_above_zero(std::uint64_t i) noexcept;

/// Closed-form exponents of the F_(t+2) image of X^k Y^(d-i).
std::pair<std::int64_t, std::int64_t> monomial_image(std::int64_t k, std::int64_t i, std::int64_t t, std::int64_t u);

/// Reduces f, runs the pipeline and returns its certificate. Throws
/// IsTwoPolynomial, InternalViolation.
Certificate refute_planarity(const UniPoly& f);

/// The polynomial a certificate's steps start from, rebuilt from f.
BiPoly source_curve(const UniPoly& reduced_f, CurveSource source);

/// Replays the steps from the source curve.
BiPoly replay_certificate(const Certificate& cert);

struct VerifyResult {
  bool valid = false;
  /// ok, source-mismatch, step-invalid, cone-mismatch, factor-field, factor-division
  std::string reason;
};

VerifyResult verify_certificate(const Certificate& cert, const UniPoly& f);

struct ApnRefutation {
  enum class Status { Confirmed, Inconclusive };
  Status status = Status::Inconclusive;
  std::string reason;  // "CONFIRMED" or "DEGENERATE"
  std::optional<Certificate> certificate;
  CurveStats stats;
  bool degree_in_range = false;  // d <= q^(1/4)
};

/// Even-degree APN probe for d = 2 mod 4: the APN curve passes through the
/// origin with tangent cone A_d X + A_(d-1) Y. Throws DegreeParityUnsupported,
/// IsTwoPolynomial, InternalViolation.
ApnRefutation refute_apn_even_degree(const UniPoly& f);

}  // namespace planarlab
