#pragma once

#include <optional>
#include <vector>

#include "planarlab/bipoly.hpp"

namespace planarlab {

/// Lowest-degree nonzero homogeneous part of g(X + x0, Y + y0).
HomogeneousForm tangent_cone(const BiPoly& g, Word x0 = 0, Word y0 = 0);

/// The form aX + bY, normalized so the first nonzero of (a, b) is 1.
struct LinearFactor {
  Word a = 0;
  Word b = 0;
  unsigned multiplicity = 1;

  bool reduced() const noexcept { return multiplicity == 1; }
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// Scales (a, b) so the first nonzero entry is 1; throws for (0, 0).
LinearFactor normalize_linear(const Field& F, Word a, Word b, unsigned multiplicity = 1);

/// Every linear factor of T defined over the field, with its exact
/// multiplicity: X from the X-power, Y from the degree drop of T(Z, 1), and
/// X + zY for each root z of the dehomogenization. Ordered X, then Y, then
/// X + zY by increasing z.
std::vector<LinearFactor> linear_factors(const HomogeneousForm& T);

/// The multiplicity-one subset of linear_factors(T).
std::vector<LinearFactor> reduced_linear_factors(const HomogeneousForm& T);

/// Exact quotient T / (aX + bY) on coefficient vectors, or nothing when the
/// division leaves a remainder. Independent of the root-based extraction.
std::optional<std::vector<Word>> divide_by_linear(const Field& F, const std::vector<Word>& coeffs, Word a, Word b);

/// Largest mu with (aX + bY)^mu | T, by repeated exact division.
unsigned linear_multiplicity(const HomogeneousForm& T, Word a, Word b);

}  // namespace planarlab
