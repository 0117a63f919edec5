#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "planarlab/curves.hpp"
#include "planarlab/difftest.hpp"
#include "planarlab/error.hpp"
#include "planarlab/log.hpp"

using namespace planarlab;
using testing::from_oracle;
using testing::to_oracle;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

BiPoly bp(const Field& F, std::initializer_list<Term> terms) { return BiPoly::from_terms(F, terms); }

struct Quiet {
  Quiet() { set_log_level(LogLevel::Error); }
  ~Quiet() { set_log_level(LogLevel::Warn); }
};

}  // namespace

TEST_CASE("planar, shifted and APN curves of small monomials") {
  const Field F = Field::make(8);
  auto f = [&](const char* s) { return parse_unipoly(s, F); };
  CHECK(build_planar_curve(f("X^3")) == bp(F, {{{0, 1}, 1}, {{1, 0}, 1}}));
  CHECK(build_planar_curve(f("X^6")) == bp(F, {{{0, 4}, 1}, {{2, 0}, 1}, {{3, 0}, 1}}));
  CHECK(build_planar_curve(f("X^12")) == bp(F, {{{0, 10}, 1}, {{4, 0}, 1}, {{5, 0}, 1}, {{6, 0}, 1}, {{7, 0}, 1}}));

  CHECK(build_shifted_curve(f("X^3")) == bp(F, {{{0, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 1}}));
  CHECK(build_shifted_curve(f("X^6")) == bp(F, {{{0, 4}, 1}, {{1, 0}, 1}, {{3, 0}, 1}}));
  CHECK(build_shifted_curve(f("X^12")) == bp(F, {{{0, 10}, 1}, {{3, 0}, 1}, {{7, 0}, 1}}));

  CHECK(build_apn_curve(f("X^3")) == bp(F, {{{0, 0}, 1}}));
  CHECK(build_apn_curve(f("X^5")) == bp(F, {{{0, 0}, 1}, {{1, 0}, 1}, {{2, 0}, 1}}));
  CHECK(build_apn_curve(f("X^6")) == bp(F, {{{1, 0}, 1}, {{2, 0}, 1}}));

  CHECK(code_of([&] { build_planar_curve(f("X^6+X^4")); }) == ErrorCode::NotReduced);
  CHECK(code_of([&] { build_planar_curve(f("X^6+1")); }) == ErrorCode::NotReduced);
  CHECK(code_of([&] { build_apn_curve(UniPoly(F)); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("curves agree with exact-binomial oracles; shifted curve is the X+1 shift") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    const Field F = Field::make(1 + static_cast<unsigned>(rng() % 12));
    const int d = testing::random_reduced_degree(rng, 3, 40);
    const UniPoly f = testing::random_reduced(rng, F, d, 0.5);
    const BiPoly P = build_planar_curve(f);
    REQUIRE(P == from_oracle(F, oracle::planar_curve(to_oracle(f))));
    REQUIRE(build_apn_curve(f) == from_oracle(F, oracle::apn_curve(to_oracle(f))));
    REQUIRE(build_shifted_curve(f) == from_oracle(F, oracle::shift_x(to_oracle(P), 1)));
    REQUIRE(P.raw_coeff(0, static_cast<std::uint32_t>(d - 2)) == 1);
    // The smallest-degree monomial carrying A_i is X^(2^nu(i)) Y^(d-i) in F
    // and X^(2^nu(i)-1) Y^(d-i) in the shifted curve.
    const BiPoly G = build_shifted_curve(f);
    for (unsigned i : f.support()) {
      const auto b = static_cast<std::uint32_t>(d - static_cast<int>(i));
      auto min_a = [&](const BiPoly& g) {
        std::uint32_t best = UINT32_MAX;
        for (const Term& t : g.terms())
          if (t.mono.b == b) best = std::min(best, t.mono.a);
        return best;
      };
      const std::uint32_t expect = 1u << two_adic_valuation(i);
      CHECK(min_a(P) == expect);
      CHECK(P.raw_coeff(expect, b) == f.raw(i));
      CHECK(min_a(G) == expect - 1);
    }
  }
}

TEST_CASE("planar and APN curves match the surface quotients pointwise") {
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 300; ++iter) {
    const Field F = Field::make(2 + static_cast<unsigned>(rng() % 11));
    const int d = testing::random_reduced_degree(rng, 3, 20);
    const UniPoly f = testing::random_reduced(rng, F, d);
    const BiPoly P = build_planar_curve(f);
    const BiPoly A = build_apn_curve(f);
    for (int s = 0; s < 10; ++s) {
      const Word x = testing::random_element(rng, F);
      const Word y = testing::random_nonzero(rng, F);
      if (x == 1) continue;
      const Word yi = F.inv(y);
      const Word a = F.mul(x, yi), b = yi, c = F.mul(x ^ 1, yi);
      const Word N = f.eval_raw(a) ^ f.eval_raw(b) ^ f.eval_raw(c) ^ f.eval_raw(a ^ b ^ c);
      const Word D = F.mul(a ^ b, a ^ c);
      const Word planar = F.mul(F.pow(y, static_cast<std::uint64_t>(d - 2)), 1 ^ F.mul(N, F.inv(D)));
      REQUIRE(P.eval_raw(x, y) == planar);
      if (x == 0) continue;
      const Word D3 = F.mul(D, b ^ c);
      const Word apn = F.mul(F.pow(y, static_cast<std::uint64_t>(d - 3)), F.mul(N, F.inv(D3)));
      REQUIRE(A.eval_raw(x, y) == apn);
    }
  }
}

TEST_CASE("count_univariate_roots examples") {
  CHECK(count_univariate_roots({0, 1, 1}, Field::make(1)) == 2);
  CHECK(count_univariate_roots({1, 1, 1}, Field::make(1)) == 0);
  CHECK(count_univariate_roots({0, 1, 1}, Field::make(2)) == 2);
  CHECK(count_univariate_roots({1, 1, 1}, Field::make(2)) == 2);
  CHECK(code_of([] { count_univariate_roots({}, Field::make(2)); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("count_points examples") {
  Quiet quiet;
  const Field F16 = Field::make(4);
  const CurveStats s1 = count_points(bp(F16, {{{1, 0}, 1}, {{0, 1}, 1}}), F16, planar_excluded_lines(), 3);
  CHECK(s1.total_points == 16);
  CHECK(s1.off_line_points == 14);
  CHECK(s1.hw_total == 16);
  CHECK(s1.hw_off_lines == 14);

  const CurveStats s2 = count_points(bp(F16, {{{0, 0}, 1}}), F16, planar_excluded_lines(), 3);
  CHECK(s2.total_points == 0);
  CHECK(s2.off_line_points == 0);

  const Field F4 = Field::make(2);
  const CurveStats s3 = count_points(bp(F4, {{{1, 0}, 1}, {{2, 0}, 1}}), F4, apn_excluded_lines(), 6);
  CHECK(s3.total_points == 8);
  CHECK(s3.off_line_points == 0);
  CHECK(s3.degenerate_lines == std::vector<Word>{0, 1});

  CHECK(code_of([&] { count_points(BiPoly(F4), F4, {}, 3); }) == ErrorCode::ZeroPolynomial);
  const Field big = Field::make(21);
  CHECK(code_of([&] { count_points(bp(big, {{{1, 0}, 1}}), big, {}, 3); }) == ErrorCode::FieldTooLarge);
}

TEST_CASE("count_points equals the naive double loop on 50 random curves, q <= 256") {
  Quiet quiet;
  std::mt19937_64 rng(33);
  for (int iter = 0; iter < 50; ++iter) {
    const Field F = Field::make(1 + static_cast<unsigned>(rng() % 8));
    BiPoly g = testing::random_bipoly(rng, F, 8, 10);
    // Every fifth curve gets a vertical line factor (X + x0).
    if (iter % 5 == 0) g = g * bp(F, {{{1, 0}, 1}, {{0, 0}, testing::random_element(rng, F)}});
    const auto lines = iter % 2 ? planar_excluded_lines() : apn_excluded_lines();
    const CurveStats s = count_points(g, F, lines, 5);
    const oracle::Bi og = to_oracle(g);
    REQUIRE(s.total_points == oracle::naive_points(og, static_cast<Word>(F.q())));
    std::uint64_t off = 0;
    for (Word x = 0; x < F.q(); ++x)
      for (Word y = 0; y < F.q(); ++y) {
        if (og.eval(x, y) != 0) continue;
        bool on = false;
        for (const Line& l : lines) on = on || (l.axis == Line::Axis::X ? x : y) == l.value;
        off += !on;
      }
    REQUIRE(s.off_line_points == off);
    const CurveStats r = reference::count_points(g, F, lines, 5);
    REQUIRE(r.total_points == s.total_points);
    REQUIRE(r.off_line_points == s.off_line_points);
    REQUIRE(r.degenerate_lines == s.degenerate_lines);
  }
}

TEST_CASE("hasse_weil_bounds") {
  Quiet quiet;
  CHECK(hasse_weil_bounds(12, 1u << 16).second == 47075);
  CHECK(hasse_weil_bounds(12, 1u << 16).first == 65536 - 72 * 256 - 9);
  CHECK(hasse_weil_bounds(3, 1024) == std::pair<std::int64_t, std::int64_t>{1024, 1022});
  CHECK(hasse_weil_bounds(5, 1u << 12) == std::pair<std::int64_t, std::int64_t>{3966, 3960});
  CHECK(hasse_weil_bounds(4, 8) == std::pair<std::int64_t, std::int64_t>{7, 3});
  // q = 2^11: sqrt(q) = 45.254..., 2 * 45.254... = 90.50..., ceil(2048 - 90.50 - 2) = 1956.
  CHECK(hasse_weil_bounds(5, 2048).first == 1956);
  // Exact ceiling against a long-double evaluation over many (d, q).
  for (int d = 3; d <= 30; ++d)
    for (unsigned m = 1; m <= 24; ++m) {
      const std::uint64_t q = std::uint64_t{1} << m;
      const long double c = static_cast<long double>((d - 3) * (d - 4)) * std::sqrt(static_cast<long double>(q));
      const auto [tot, off] = hasse_weil_bounds(d, q);
      const long double t = static_cast<long double>(q) - c - d + 3;
      CHECK(static_cast<long double>(tot) >= t - 1e-9L);
      CHECK(static_cast<long double>(tot) < t + 1 - 1e-9L);
      CHECK(off == tot - 2 * d + 4);
    }
  CHECK(code_of([] { hasse_weil_bounds(2, 16); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("curve points of planar and APN functions lie on the excluded lines") {
  Quiet quiet;
  // Planar: every entry of the GF(8) catalog with a nonzero reduced part.
  const Field F8 = Field::make(3);
  for (const CatalogEntry& e : catalog_planar(F8).entries) {
    const UniPoly r = reduce_two_power(e.sample_poly);
    if (r.is_zero()) continue;
    CHECK(curve_stats(r, CurveKind::Planar).off_line_points == 0);
  }
  // APN: Gold and Kasami monomials on fields where they are APN.
  for (unsigned m : {3u, 5u, 7u}) {
    const Field F = Field::make(m);
    for (const char* s : {"X^3", "X^5", "X^13"}) {
      const UniPoly f = parse_unipoly(s, F);
      if (!is_apn(f).holds) continue;
      CHECK(curve_stats(f, CurveKind::Apn).off_line_points == 0);
    }
  }
}
