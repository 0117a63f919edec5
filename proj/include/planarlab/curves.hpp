#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "planarlab/bipoly.hpp"
#include "planarlab/unipoly.hpp"

namespace planarlab {

enum class CurveKind { Planar, Apn, Shifted };

std::string_view curve_kind_name(CurveKind kind) noexcept;

/// F(X,Y) = Y^(d-2) + sum_i A_i Y^(d-i) sum_{k<i} [C(i-1,k)+1] X^k.
/// f must be reduced (no monomial of degree 0 or 2^k) and nonzero.
BiPoly build_planar_curve(const UniPoly& f);

/// F(X+1, Y) in closed form: Y^(d-2) + sum_i A_i Y^(d-i) sum_{1<=k<i} C(i,k) X^(k-1).
BiPoly build_shifted_curve(const UniPoly& f);

/// sum_i A_i Y^(d-i) sum_{1<=k<i} [C(i-1,k)+1] X^(k-1). May be a nonzero
/// constant (empty curve).
BiPoly build_apn_curve(const UniPoly& f);

BiPoly build_curve(const UniPoly& f, CurveKind kind);

/// An excluded line X = value or Y = value.
struct Line {
  enum class Axis { X, Y };
  Axis axis = Axis::X;
  Word value = 0;

  std::string describe() const;
  friend bool operator==(const Line&, const Line&) = default;
};

/// X = 1, Y = 0
std::vector<Line> planar_excluded_lines();
/// X = 0, Y = 0, X = 1
std::vector<Line> apn_excluded_lines();

struct CurveStats {
  std::uint64_t q = 0;
  int d = 0;
  std::uint64_t total_points = 0;
  std::uint64_t off_line_points = 0;
  std::vector<Line> excluded_lines;
  /// x values where F(x, Y) vanishes identically (a vertical line component).
  std::vector<Word> degenerate_lines;
  std::int64_t hw_total = 0;
  std::int64_t hw_off_lines = 0;
};

/// Lower bounds on affine points of a curve with an absolutely irreducible
/// component: {ceil(q - (d-3)(d-4) sqrt(q) - d + 3), ceil(q - (d-3)(d-4) sqrt(q) - 3d + 7)}.
/// Exact for every q (sqrt(q) is irrational only for odd m, where the
/// ceiling is taken on the exact real value).
std::pair<std::int64_t, std::int64_t> hasse_weil_bounds(int d, std::uint64_t q);

/// Distinct roots of g in the field: deg gcd(g, Y^q - Y).
unsigned count_univariate_roots(const raw::Poly& g, const Field& field);

inline constexpr std::uint64_t kMaxCountField = std::uint64_t{1} << 20;

/// Affine F_q-points of F = 0, split by the x coordinate; a vanishing
/// specialization counts the whole vertical line. d is the degree of the
/// source polynomial f, used only for the thresholds.
CurveStats count_points(const BiPoly& F, const Field& field, const std::vector<Line>& excluded, int d);

/// Convenience: build the curve of `kind` for f and count it against the
/// kind's excluded lines.
CurveStats curve_stats(const UniPoly& f, CurveKind kind);

namespace reference {
/// Serial twin of count_points.
CurveStats count_points(const BiPoly& F, const Field& field, const std::vector<Line>& excluded, int d);
}  // namespace reference

}  // namespace planarlab
