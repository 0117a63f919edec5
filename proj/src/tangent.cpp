#include "planarlab/tangent.hpp"

#include "planarlab/error.hpp"
#include "planarlab/raw_poly.hpp"

namespace planarlab {

HomogeneousForm tangent_cone(const BiPoly& g, Word x0, Word y0) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "tangent cone of the zero polynomial");
  const BiPoly moved = g.shifted(x0, y0);
  return HomogeneousForm(moved.homogeneous_part(moved.min_degree()));
}

LinearFactor normalize_linear(const Field& F, Word a, Word b, unsigned multiplicity) {
  if (a == 0 && b == 0) throw Error(ErrorCode::InvalidArgument, "linear form 0X+0Y");
  if (a != 0) return {1, F.mul(b, F.inv(a)), multiplicity};
  return {0, 1, multiplicity};
}

std::vector<LinearFactor> linear_factors(const HomogeneousForm& T) {
  const Field& F = T.field();
  const std::vector<Word> c = T.coefficient_vector();
  const unsigned n = T.degree();

  unsigned x_power = 0;
  while (c[x_power] == 0) ++x_power;  // c is nonzero, so this stops at most at n

  // T = X^e * T', and T'(Z, 1) = sum_{i >= e} c_i Z^(i-e) has nonzero constant term.
  raw::Poly dehom(c.begin() + x_power, c.end());
  raw::trim(dehom);
  const unsigned y_power = (n - x_power) - static_cast<unsigned>(raw::degree(dehom));

  std::vector<LinearFactor> out;
  if (x_power) out.push_back({1, 0, x_power});
  if (y_power) out.push_back({0, 1, y_power});
  // A root z of T'(Z, 1) gives the factor X - zY = X + zY.
  for (auto [z, mult] : raw::roots_with_multiplicity(F, dehom)) out.push_back({1, z, mult});
  return out;
}

std::vector<LinearFactor> reduced_linear_factors(const HomogeneousForm& T) {
  std::vector<LinearFactor> out;
  for (const LinearFactor& f : linear_factors(T))
    if (f.reduced()) out.push_back(f);
  return out;
}

std::optional<std::vector<Word>> divide_by_linear(const Field& F, const std::vector<Word>& c, Word a, Word b) {
  // (aX + bY) * sum q_j X^j Y^(n-1-j): coefficient of X^j Y^(n-j) is
  // a q_(j-1) + b q_j.
  if (c.size() < 2) return std::nullopt;
  const size_t n = c.size() - 1;
  std::vector<Word> q(n, 0);
  if (b != 0) {
    const Word binv = F.inv(b);
    q[0] = F.mul(c[0], binv);
    for (size_t j = 1; j < n; ++j) q[j] = F.mul(c[j] ^ F.mul(a, q[j - 1]), binv);
    if (c[n] != F.mul(a, q[n - 1])) return std::nullopt;
  } else {
    if (a == 0) return std::nullopt;
    if (c[0] != 0) return std::nullopt;
    const Word ainv = F.inv(a);
    for (size_t j = 1; j <= n; ++j) q[j - 1] = F.mul(c[j], ainv);
  }
  return q;
}

unsigned linear_multiplicity(const HomogeneousForm& T, Word a, Word b) {
  std::vector<Word> c = T.coefficient_vector();
  unsigned mu = 0;
  while (auto q = divide_by_linear(T.field(), c, a, b)) {
    c = std::move(*q);
    ++mu;
  }
  return mu;
}

}  // namespace planarlab
