#pragma once

// Dense univariate polynomials over GF(2^m) on raw words, ascending order.
// Used by root counting, linear-factor extraction and interpolation.

#include <cstdint>
#include <utility>
#include <vector>

#include "planarlab/gf2m.hpp"

namespace planarlab::raw {

using Poly = std::vector<Word>;

void trim(Poly& p);
inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Word eval(const Field& F, const Poly& p, Word x);
Poly mul(const Field& F, const Poly& a, const Poly& b);
/// Returns (quotient, remainder); b must be nonzero.
std::pair<Poly, Poly> divrem(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, const Poly& a, const Poly& b);
Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& g);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& F, Poly a, Poly b);
Poly monic(const Field& F, Poly p);

/// Y^q mod g via m squarings of Y.
Poly frobenius_of_y(const Field& F, const Poly& g);

/// deg gcd(g, Y^q - Y); g must be nonzero.
unsigned count_distinct_roots(const Field& F, const Poly& g);

/// p / (Y - r), assuming p(r) == 0.
Poly divide_by_root(const Field& F, const Poly& p, Word r);

/// Roots in the field with multiplicities, ascending by root. Enumeration
/// for q <= 2^16, otherwise gcd with Y^q - Y and trace splitting.
std::vector<std::pair<Word, unsigned>> roots_with_multiplicity(const Field& F, const Poly& g);

}  // namespace planarlab::raw
