#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planarlab/gf2m.hpp"

namespace planarlab {

/// f = sum A_i X^i over GF(2^m). Coefficients are trimmed so the last stored
/// one is nonzero; the zero polynomial stores nothing.
class UniPoly {
 public:
  explicit UniPoly(Field field) : field_(std::move(field)) {}
  UniPoly(Field field, std::vector<Word> coefficients);

  /// c * X^k
  static UniPoly monomial(const Field& field, unsigned k, Word c = 1);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  FieldElement coefficient(unsigned i) const noexcept {
    return {i < coeffs_.size() ? coeffs_[i] : 0, field_.modulus()};
  }
  Word raw(unsigned i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<Word>& raw_coefficients() const noexcept { return coeffs_; }

  /// Degrees i with A_i != 0, ascending.
  std::vector<unsigned> support() const;

  void set(unsigned i, Word c);

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Horner evaluation on the raw word.
  Word eval_raw(Word x) const noexcept;

  /// Same coefficient words interpreted in another field of at least the
  /// same size; throws CoefficientOutOfRange when a word does not fit.
  UniPoly with_field(const Field& other) const;

  /// Descending-degree literal, e.g. "X^6+2*X^5+1"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();

  Field field_;
  std::vector<Word> coeffs_;
};

/// Grammar: term ("+" term)*; term := [coeff "*"] "X" ["^" exponent] | coeff.
/// Coefficients are hex (optional 0x); exponents decimal; spaces ignored.
UniPoly parse_unipoly(const std::string& text, const Field& field);

FieldElement eval_unipoly(const UniPoly& f, FieldElement x);

/// True iff k is 0 or a power of two (the degrees stripped by reduction).
constexpr bool is_two_power_degree(std::uint64_t k) noexcept { return (k & (k - 1)) == 0; }

/// Drops every monomial of degree 0, 1, 2, 4, 8, ...
UniPoly reduce_two_power(const UniPoly& f);
bool is_two_polynomial(const UniPoly& f);

/// Lucas parity: C(n, k) is odd iff k's bits are a subset of n's.
constexpr bool binom_odd(std::uint64_t n, std::uint64_t k) noexcept { return (k & ~n) == 0; }

/// Largest e with 2^e | i; throws InvalidArgument for i == 0.
unsigned two_adic_valuation(std::uint64_t i);

}  // namespace planarlab
