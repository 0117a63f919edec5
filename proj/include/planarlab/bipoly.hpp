#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "planarlab/gf2m.hpp"
#include "planarlab/raw_poly.hpp"

namespace planarlab {

/// Exponent pair of X^a Y^b.
struct Monomial {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint64_t degree() const noexcept { return std::uint64_t{a} + b; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct Term {
  Monomial mono;
  Word coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse bivariate polynomial: terms sorted by (a, b), no zero coefficients.
class BiPoly {
 public:
  explicit BiPoly(Field field) : field_(std::move(field)) {}

  /// Normalizes an arbitrary term list: like monomials are summed and zero
  /// coefficients dropped.
  static BiPoly from_terms(Field field, std::vector<Term> terms);
  static BiPoly monomial(const Field& field, std::uint32_t a, std::uint32_t b, Word c = 1);

  const Field& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  size_t size() const noexcept { return terms_.size(); }

  Word raw_coeff(std::uint32_t a, std::uint32_t b) const noexcept;
  FieldElement coeff(std::uint32_t a, std::uint32_t b) const noexcept {
    return {raw_coeff(a, b), field_.modulus()};
  }
  bool contains(std::uint32_t a, std::uint32_t b) const noexcept { return raw_coeff(a, b) != 0; }
  Word constant_term() const noexcept { return raw_coeff(0, 0); }

  /// Smallest total degree of a monomial; throws ZeroPolynomial.
  std::uint64_t min_degree() const;
  std::uint64_t max_degree() const;
  std::uint32_t max_x_degree() const noexcept;
  std::uint32_t max_y_degree() const noexcept;

  /// Terms of total degree exactly n.
  BiPoly homogeneous_part(std::uint64_t n) const;

  Word eval_raw(Word x, Word y) const noexcept;
  /// F(x, Y) as a dense polynomial in Y.
  raw::Poly specialize_x(Word x) const;

  /// g(X + x0, Y + y0).
  BiPoly shifted(Word x0, Word y0) const;

  friend BiPoly operator+(const BiPoly& p, const BiPoly& q);
  friend BiPoly operator*(const BiPoly& p, const BiPoly& q);
  friend bool operator==(const BiPoly& p, const BiPoly& q) noexcept {
    return p.field_ == q.field_ && p.terms_ == q.terms_;
  }

  /// Human-readable, ascending (a, b): "Y^2+X^5*Y^2+0x3*X^8".
  std::string to_string() const;

 private:
  Field field_;
  std::vector<Term> terms_;
};

/// A BiPoly whose monomials all share total degree n.
class HomogeneousForm {
 public:
  /// Throws InvalidArgument when `p` is zero or not homogeneous.
  explicit HomogeneousForm(BiPoly p);

  const BiPoly& poly() const noexcept { return poly_; }
  unsigned degree() const noexcept { return degree_; }
  const Field& field() const noexcept { return poly_.field(); }

  /// c[i] = coefficient of X^i Y^(n-i), i = 0..n.
  std::vector<Word> coefficient_vector() const;

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) noexcept {
    return a.poly_ == b.poly_;
  }

 private:
  BiPoly poly_;
  unsigned degree_;
};

}  // namespace planarlab
