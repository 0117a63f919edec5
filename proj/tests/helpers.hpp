#pragma once

// Bridges between library values and the oracle types, plus seeded
// generators for the property tests.

#include <random>
#include <vector>

#include "oracles.hpp"
#include "planarlab/bipoly.hpp"
#include "planarlab/transform.hpp"
#include "planarlab/unipoly.hpp"

namespace testing {

using planarlab::BiPoly;
using planarlab::Field;
using planarlab::Term;
using planarlab::UniPoly;
using planarlab::Word;

inline oracle::Bi to_oracle(const BiPoly& g) {
  oracle::Bi out{g.field().modulus(), {}};
  for (const Term& t : g.terms()) out.add(t.mono.a, t.mono.b, t.coeff);
  return out;
}

inline BiPoly from_oracle(const Field& F, const oracle::Bi& g) {
  std::vector<Term> terms;
  for (const auto& [p, c] : g.t) terms.push_back(Term{{p.first, p.second}, c});
  return BiPoly::from_terms(F, std::move(terms));
}

inline oracle::Uni to_oracle(const UniPoly& f) {
  return oracle::Uni{f.field().modulus(), f.raw_coefficients()};
}

inline Word random_element(std::mt19937_64& rng, const Field& F) {
  return std::uniform_int_distribution<Word>(0, F.mask())(rng);
}

inline Word random_nonzero(std::mt19937_64& rng, const Field& F) {
  return std::uniform_int_distribution<Word>(1, F.mask())(rng);
}

// Reduced polynomial of exact degree d: every non-2-power position below d
// is filled with probability `density`.
inline UniPoly random_reduced(std::mt19937_64& rng, const Field& F, int d, double density = 1.0) {
  std::vector<Word> c(static_cast<std::size_t>(d) + 1, 0);
  std::bernoulli_distribution keep(density);
  for (int i = 3; i < d; ++i)
    if (!oracle::is_pow2(static_cast<std::uint64_t>(i)) && keep(rng)) c[static_cast<std::size_t>(i)] = random_element(rng, F);
  c[static_cast<std::size_t>(d)] = random_nonzero(rng, F);
  return UniPoly(F, std::move(c));
}

inline int random_reduced_degree(std::mt19937_64& rng, int lo, int hi) {
  for (;;) {
    const int d = std::uniform_int_distribution<int>(lo, hi)(rng);
    if (!oracle::is_pow2(static_cast<std::uint64_t>(d))) return d;
  }
}

// 2-polynomial with random coefficients on degrees 0, 1, 2, 4, ... < q.
inline UniPoly random_two_polynomial(std::mt19937_64& rng, const Field& F) {
  std::vector<Word> c(F.q() > 1 ? F.q() / 2 + 1 : 2, 0);
  c[0] = random_element(rng, F);
  for (std::size_t k = 1; k < c.size(); k <<= 1) c[k] = random_element(rng, F);
  return UniPoly(F, std::move(c));
}

inline UniPoly random_poly(std::mt19937_64& rng, const Field& F, int max_degree) {
  std::vector<Word> c(static_cast<std::size_t>(max_degree) + 1);
  for (Word& w : c) w = random_element(rng, F);
  return UniPoly(F, std::move(c));
}

// Sparse bivariate polynomial with total degree <= max_deg.
inline BiPoly random_bipoly(std::mt19937_64& rng, const Field& F, unsigned max_terms, std::uint32_t max_deg) {
  std::vector<Term> terms;
  const unsigned n = std::uniform_int_distribution<unsigned>(1, max_terms)(rng);
  for (unsigned i = 0; i < n; ++i) {
    const std::uint32_t a = std::uniform_int_distribution<std::uint32_t>(0, max_deg)(rng);
    const std::uint32_t b = std::uniform_int_distribution<std::uint32_t>(0, max_deg - a)(rng);
    terms.push_back(Term{{a, b}, random_nonzero(rng, F)});
  }
  return BiPoly::from_terms(F, std::move(terms));
}

// Dense oracle for one step: returns false when the step is not legal.
inline bool oracle_step(const oracle::Bi& g, const planarlab::TransformStep& s, oracle::Bi& out) {
  using oracle::mono;
  const Word p = g.modulus;
  oracle::Bi sx = mono(p, 1, 0), sy = mono(p, 0, 1);
  std::uint32_t dx = 0, dy = 0;
  switch (s.kind) {
    case planarlab::TransformStep::Kind::SubXByXYDivY: sx = mono(p, 1, 1); dy = s.n; break;
    case planarlab::TransformStep::Kind::SubYByXYDivX: sy = mono(p, 1, 1); dx = s.n; break;
    case planarlab::TransformStep::Kind::ShearY:
      sy = mono(p, 1, 1);
      sy.add(1, 0, s.c);
      dx = 2;
      break;
    case planarlab::TransformStep::Kind::ShiftX: sx.add(0, 0, s.c); break;
    case planarlab::TransformStep::Kind::SubXByXYPowDivY: sx = mono(p, 1, s.e); dy = s.n; break;
  }
  oracle::Bi expanded;
  oracle::substitute_divide(g, sx, sy, 0, 0, expanded);
  if (s.kind == planarlab::TransformStep::Kind::ShiftX) {
    out = expanded;
    return true;
  }
  // The divide exponent must be the exact power of the divided variable.
  std::uint32_t min_exp = UINT32_MAX;
  for (const auto& [q, c] : expanded.t) min_exp = std::min(min_exp, dx ? q.first : q.second);
  if ((dx ? dx : dy) != min_exp) return false;
  if (s.kind == planarlab::TransformStep::Kind::ShearY && g.min_degree() != 2) return false;
  oracle::substitute_divide(g, sx, sy, dx, dy, out);
  if (s.kind == planarlab::TransformStep::Kind::ShearY && out.t.count({0, 0})) return false;
  return true;
}


}  // namespace testing
