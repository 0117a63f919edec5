#pragma once

// Arithmetic in GF(2^m), 1 <= m <= 24, polynomial basis.
//
// Elements are bit-vectors: bit i is the coefficient of x^i. Two APIs are
// offered. FieldElement is a checked value type that carries its modulus and
// rejects mixing fields. Field exposes the same arithmetic on raw words for
// the hot loops (brute-force sweeps, point counting), table-driven for
// m <= 16.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace planarlab {

using Word = std::uint32_t;

inline constexpr unsigned kMaxFieldDegree = 24;
inline constexpr unsigned kMaxTableDegree = 16;

/// Built-in irreducible modulus for each m in 1..24.
Word default_modulus(unsigned m);

/// Deterministic irreducibility test over GF(2): x^(2^m) == x mod p and
/// gcd(x^(2^(m/r)) - x, p) == 1 for each prime r | m.
bool is_irreducible_gf2(std::uint64_t poly);

/// Carry-less product of a and b reduced modulo `modulus` (degree m).
Word clmul_mod(Word a, Word b, Word modulus) noexcept;

class FieldElement {
 public:
  constexpr FieldElement() noexcept = default;
  constexpr FieldElement(Word bits, Word modulus) noexcept : bits_(bits), modulus_(modulus) {}

  constexpr Word bits() const noexcept { return bits_; }
  constexpr Word modulus() const noexcept { return modulus_; }
  constexpr bool is_zero() const noexcept { return bits_ == 0; }
  constexpr bool is_one() const noexcept { return bits_ == 1; }

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b) { return a + b; }
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator/(FieldElement a, FieldElement b);
  FieldElement& operator+=(FieldElement b) { return *this = *this + b; }
  FieldElement& operator*=(FieldElement b) { return *this = *this * b; }

  friend constexpr bool operator==(FieldElement a, FieldElement b) noexcept {
    return a.bits_ == b.bits_ && a.modulus_ == b.modulus_;
  }

  FieldElement pow(std::uint64_t e) const;

  /// "0x..." lowercase.
  std::string hex() const;

 private:
  Word bits_ = 0;
  Word modulus_ = 0;
};

/// a^(q-2); throws DivisionByZero for a == 0.
FieldElement inverse(FieldElement a);
/// a^(2^(m-1)), the unique square root.
FieldElement sqrt(FieldElement a);

class Field {
 public:
  /// Validates m and the modulus; the default table entry is used when
  /// `modulus` is empty. Results are cached, so repeated calls are cheap.
  static Field make(unsigned m, std::optional<Word> modulus = std::nullopt);

  unsigned m() const noexcept { return m_; }
  Word modulus() const noexcept { return modulus_; }
  std::uint64_t q() const noexcept { return std::uint64_t{1} << m_; }
  Word mask() const noexcept { return static_cast<Word>(q() - 1); }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.modulus_ == b.modulus_; }

  /// Checked construction; throws ElementOutOfRange when bits >= q.
  FieldElement element(Word bits) const;
  FieldElement zero() const noexcept { return {0, modulus_}; }
  FieldElement one() const noexcept { return {1, modulus_}; }
  bool owns(FieldElement a) const noexcept { return a.modulus() == modulus_; }

  /// Every element in increasing bit order.
  std::vector<FieldElement> elements() const;

  // Raw-word kernels. No range or field checks.
  static Word add(Word a, Word b) noexcept { return a ^ b; }
  Word mul(Word a, Word b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (tables_) return tables_->exp[tables_->log[a] + tables_->log[b]];
    return clmul_mod(a, b, modulus_);
  }
  Word sqr(Word a) const noexcept { return mul(a, a); }
  Word pow(Word a, std::uint64_t e) const noexcept;
  Word inv(Word a) const;
  Word sqrt(Word a) const noexcept;
  /// Absolute trace to GF(2).
  Word trace(Word a) const noexcept;

  std::string describe() const;

 private:
  struct Tables {
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<Word> exp;           // length 2(q-1)
  };

  Field(unsigned m, Word modulus, std::shared_ptr<const Tables> tables)
      : m_(m), modulus_(modulus), tables_(std::move(tables)) {}

  static std::shared_ptr<const Tables> build_tables(unsigned m, Word modulus);

  unsigned m_ = 1;
  Word modulus_ = 0b11;
  std::shared_ptr<const Tables> tables_;
};

/// Degree of a nonzero binary polynomial.
inline unsigned modulus_degree(std::uint64_t p) noexcept {
  unsigned d = 0;
  while (p >>= 1) ++d;
  return d;
}

/// Parses "0x1b", "1B" or "1b" into a word; throws SyntaxError.
Word parse_hex_word(const std::string& text);
std::string hex_word(Word w);

}  // namespace planarlab
