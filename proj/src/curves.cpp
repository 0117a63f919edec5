#include "planarlab/curves.hpp"

#include <cmath>

#include "planarlab/error.hpp"
#include "planarlab/log.hpp"

namespace planarlab {

std::string_view curve_kind_name(CurveKind kind) noexcept {
  switch (kind) {
    case CurveKind::Planar: return "planar";
    case CurveKind::Apn: return "apn";
    case CurveKind::Shifted: return "shifted";
  }
  return "?";
}

namespace {

void require_reduced(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "curve of the zero polynomial");
  for (unsigned i : f.support())
    if (is_two_power_degree(i))
      throw Error(ErrorCode::NotReduced, "f contains X^" + std::to_string(i) + "; apply reduce_two_power first");
}

}  // namespace

BiPoly build_planar_curve(const UniPoly& f) {
  require_reduced(f);
  const unsigned d = static_cast<unsigned>(f.degree());
  std::vector<Term> terms{Term{{0, d - 2}, 1}};
  for (unsigned i : f.support()) {
    // C(i-1,k)+1 is odd exactly when C(i-1,k) is even.
    for (unsigned k = 0; k < i; ++k)
      if (!binom_odd(i - 1, k)) terms.push_back(Term{{k, d - i}, f.raw(i)});
  }
  return BiPoly::from_terms(f.field(), std::move(terms));
}

BiPoly build_shifted_curve(const UniPoly& f) {
  require_reduced(f);
  const unsigned d = static_cast<unsigned>(f.degree());
  std::vector<Term> terms{Term{{0, d - 2}, 1}};
  for (unsigned i : f.support())
    for (unsigned k = 1; k < i; ++k)
      if (binom_odd(i, k)) terms.push_back(Term{{k - 1, d - i}, f.raw(i)});
  return BiPoly::from_terms(f.field(), std::move(terms));
}

BiPoly build_apn_curve(const UniPoly& f) {
  require_reduced(f);
  const unsigned d = static_cast<unsigned>(f.degree());
  std::vector<Term> terms;
  for (unsigned i : f.support())
    for (unsigned k = 1; k < i; ++k)
      if (!binom_odd(i - 1, k)) terms.push_back(Term{{k - 1, d - i}, f.raw(i)});
  return BiPoly::from_terms(f.field(), std::move(terms));
}

BiPoly build_curve(const UniPoly& f, CurveKind kind) {
  switch (kind) {
    case CurveKind::Planar: return build_planar_curve(f);
    case CurveKind::Apn: return build_apn_curve(f);
    case CurveKind::Shifted: return build_shifted_curve(f);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown curve kind");
}

std::string Line::describe() const { return std::string(axis == Axis::X ? "X=" : "Y=") + hex_word(value); }

std::vector<Line> planar_excluded_lines() { return {{Line::Axis::X, 1}, {Line::Axis::Y, 0}}; }

std::vector<Line> apn_excluded_lines() { return {{Line::Axis::X, 0}, {Line::Axis::Y, 0}, {Line::Axis::X, 1}}; }

std::pair<std::int64_t, std::int64_t> hasse_weil_bounds(int d, std::uint64_t q) {
  if (d < 3) throw Error(ErrorCode::InvalidArgument, "Hasse-Weil thresholds need d >= 3");
  // d <= q^(1/4) is the regime where the thresholds are meaningful.
  if (static_cast<double>(d) > std::pow(static_cast<double>(q), 0.25))
    log_warn("hasse_weil_bounds: d=" + std::to_string(d) + " exceeds q^(1/4) for q=" + std::to_string(q));
  using u128 = unsigned __int128;
  const u128 c = static_cast<u128>(d - 3) * static_cast<u128>(d - 4);
  // floor(c * sqrt(q)) = isqrt(c^2 q).
  const u128 target = c * c * q;
  u128 lo = 0, hi = static_cast<u128>(1) << 64;
  while (lo < hi) {
    const u128 mid = lo + (hi - lo + 1) / 2;
    if (mid * mid <= target) lo = mid;
    else hi = mid - 1;
  }
  const auto floor_term = static_cast<std::int64_t>(lo);
  const auto qi = static_cast<std::int64_t>(q);
  // ceil(q - r - k) = q - k - floor(r) for integer q, k.
  return {qi - floor_term - d + 3, qi - floor_term - 3 * d + 7};
}

unsigned count_univariate_roots(const raw::Poly& g, const Field& field) {
  return raw::count_distinct_roots(field, g);
}

namespace {

struct ColumnCount {
  std::uint64_t total = 0;
  std::uint64_t off = 0;
  bool degenerate = false;
};

ColumnCount count_column(const BiPoly& F, const Field& field, const std::vector<Line>& excluded, Word x) {
  bool x_excluded = false;
  std::uint64_t y_lines = 0;
  for (const Line& l : excluded) {
    if (l.axis == Line::Axis::X && l.value == x) x_excluded = true;
    if (l.axis == Line::Axis::Y) ++y_lines;
  }
  const raw::Poly g = F.specialize_x(x);
  ColumnCount out;
  if (g.empty()) {
    out.degenerate = true;
    out.total = field.q();
    out.off = x_excluded ? 0 : field.q() - y_lines;
    return out;
  }
  out.total = raw::count_distinct_roots(field, g);
  if (!x_excluded) {
    out.off = out.total;
    for (const Line& l : excluded)
      if (l.axis == Line::Axis::Y && raw::eval(field, g, l.value) == 0) --out.off;
  }
  return out;
}

void check_count_args(const BiPoly& F, const Field& field, const std::vector<Line>& excluded) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "point count of the zero polynomial");
  if (!(F.field() == field)) throw Error(ErrorCode::FieldMismatch, "curve and counting field differ");
  if (field.q() > kMaxCountField) throw Error(ErrorCode::FieldTooLarge, "point counting limited to q <= 2^20");
  for (const Line& l : excluded)
    if (l.value >= field.q()) throw Error(ErrorCode::ElementOutOfRange, "excluded line " + l.describe());
}

CurveStats finish_stats(CurveStats s, const Field& field, const std::vector<Line>& excluded, int d) {
  s.q = field.q();
  s.d = d;
  s.excluded_lines = excluded;
  if (d >= 3) std::tie(s.hw_total, s.hw_off_lines) = hasse_weil_bounds(d, field.q());
  for (Word x : s.degenerate_lines) log_info("count_points: F(" + hex_word(x) + ", Y) vanishes; vertical line component");
  return s;
}

}  // namespace

CurveStats count_points(const BiPoly& F, const Field& field, const std::vector<Line>& excluded, int d) {
  check_count_args(F, field, excluded);
  const auto q = static_cast<std::int64_t>(field.q());
  std::vector<char> degenerate(static_cast<size_t>(q), 0);
  std::uint64_t total = 0, off = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : total, off)
  for (std::int64_t x = 0; x < q; ++x) {
    const ColumnCount c = count_column(F, field, excluded, static_cast<Word>(x));
    total += c.total;
    off += c.off;
    degenerate[static_cast<size_t>(x)] = c.degenerate;
  }
  CurveStats s;
  s.total_points = total;
  s.off_line_points = off;
  for (std::int64_t x = 0; x < q; ++x)
    if (degenerate[static_cast<size_t>(x)]) s.degenerate_lines.push_back(static_cast<Word>(x));
  return finish_stats(std::move(s), field, excluded, d);
}

CurveStats reference::count_points(const BiPoly& F, const Field& field, const std::vector<Line>& excluded, int d) {
  check_count_args(F, field, excluded);
  CurveStats s;
  for (std::uint64_t x = 0; x < field.q(); ++x) {
    const ColumnCount c = count_column(F, field, excluded, static_cast<Word>(x));
    s.total_points += c.total;
    s.off_line_points += c.off;
    if (c.degenerate) s.degenerate_lines.push_back(static_cast<Word>(x));
  }
  return finish_stats(std::move(s), field, excluded, d);
}

CurveStats curve_stats(const UniPoly& f, CurveKind kind) {
  const BiPoly F = build_curve(f, kind);
  std::vector<Line> lines;
  switch (kind) {
    case CurveKind::Planar: lines = planar_excluded_lines(); break;
    case CurveKind::Apn: lines = apn_excluded_lines(); break;
    case CurveKind::Shifted: lines = {{Line::Axis::X, 0}, {Line::Axis::Y, 0}}; break;
  }
  return count_points(F, f.field(), lines, f.degree());
}

}  // namespace planarlab
