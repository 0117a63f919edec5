#include "planarlab/gf2m.hpp"

#include <array>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "planarlab/error.hpp"

namespace planarlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::ModulusDegreeMismatch: return "ModulusDegreeMismatch";
    case ErrorCode::ModulusReducible: return "ModulusReducible";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorCode::DivideExponentMismatch: return "DivideExponentMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::EmbeddingUnsupported: return "EmbeddingUnsupported";
    case ErrorCode::IsTwoPolynomial: return "IsTwoPolynomial";
    case ErrorCode::InternalViolation: return "InternalViolation";
    case ErrorCode::BadPipelineParams: return "BadPipelineParams";
    case ErrorCode::DegreeParityUnsupported: return "DegreeParityUnsupported";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

// Primitive trinomials/pentanomials; index = m.
constexpr std::array<Word, kMaxFieldDegree + 1> kDefaultModuli = {
    0,         0x3,       0x7,       0xB,       0x13,      0x25,     0x43,
    0x83,      0x11D,     0x211,     0x409,     0x805,     0x1053,   0x201B,
    0x4443,    0x8003,    0x1100B,   0x20009,   0x40081,   0x80027,  0x100009,
    0x200005,  0x400003,  0x800021,  0x1000087,
};

// GF(2)[x] helpers on 64-bit words; degrees stay below 64 since m <= 24.
std::uint64_t gf2x_mod(std::uint64_t a, std::uint64_t p) {
  const unsigned dp = modulus_degree(p);
  while (a != 0 && modulus_degree(a) >= dp) a ^= p << (modulus_degree(a) - dp);
  return a;
}

std::uint64_t gf2x_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const unsigned dp = modulus_degree(p);
  std::uint64_t r = 0;
  a = gf2x_mod(a, p);
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> dp) & 1) a ^= p;
  }
  return r;
}

std::uint64_t gf2x_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = gf2x_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^k) mod p
std::uint64_t frobenius_power_of_x(unsigned k, std::uint64_t p) {
  std::uint64_t r = gf2x_mod(0b10, p);
  for (unsigned i = 0; i < k; ++i) r = gf2x_mulmod(r, r, p);
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Word default_modulus(unsigned m) {
  if (m < 1 || m > kMaxFieldDegree)
    throw Error(ErrorCode::UnsupportedDegree, "m=" + std::to_string(m) + " outside 1..24");
  return kDefaultModuli[m];
}

bool is_irreducible_gf2(std::uint64_t poly) {
  if (poly < 2) return false;
  const unsigned m = modulus_degree(poly);
  const std::uint64_t x = gf2x_mod(0b10, poly);
  if (frobenius_power_of_x(m, poly) != x) return false;
  for (std::uint64_t r : prime_factors(m)) {
    const std::uint64_t h = frobenius_power_of_x(static_cast<unsigned>(m / r), poly) ^ x;
    if (gf2x_gcd(poly, h) != 1) return false;
  }
  return true;
}

Word clmul_mod(Word a, Word b, Word modulus) noexcept {
  const unsigned m = modulus_degree(modulus);
  const Word top = Word{1} << m;
  Word r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return r;
}

FieldElement operator+(FieldElement a, FieldElement b) {
  if (a.modulus_ != b.modulus_) throw Error(ErrorCode::FieldMismatch, "add across fields");
  return {a.bits_ ^ b.bits_, a.modulus_};
}

FieldElement operator*(FieldElement a, FieldElement b) {
  if (a.modulus_ != b.modulus_) throw Error(ErrorCode::FieldMismatch, "mul across fields");
  return {clmul_mod(a.bits_, b.bits_, a.modulus_), a.modulus_};
}

FieldElement operator/(FieldElement a, FieldElement b) { return a * inverse(b); }

FieldElement FieldElement::pow(std::uint64_t e) const {
  Word base = bits_;
  Word acc = 1;
  while (e) {
    if (e & 1) acc = clmul_mod(acc, base, modulus_);
    base = clmul_mod(base, base, modulus_);
    e >>= 1;
  }
  return {acc, modulus_};
}

std::string FieldElement::hex() const { return hex_word(bits_); }

FieldElement inverse(FieldElement a) {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint64_t q = std::uint64_t{1} << modulus_degree(a.modulus());
  return a.pow(q - 2);
}

FieldElement sqrt(FieldElement a) {
  const unsigned m = modulus_degree(a.modulus());
  FieldElement r = a;
  for (unsigned i = 1; i < m; ++i) r = r * r;
  return r;
}

Field Field::make(unsigned m, std::optional<Word> modulus) {
  if (m < 1 || m > kMaxFieldDegree)
    throw Error(ErrorCode::UnsupportedDegree, "m=" + std::to_string(m) + " outside 1..24");
  const Word p = modulus.value_or(kDefaultModuli[m]);
  if (p == 0 || modulus_degree(p) != m)
    throw Error(ErrorCode::ModulusDegreeMismatch,
                "modulus " + hex_word(p) + " does not have degree " + std::to_string(m));

  static std::mutex mu;
  static std::map<Word, Field> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  if (!is_irreducible_gf2(p))
    throw Error(ErrorCode::ModulusReducible, "modulus " + hex_word(p) + " is reducible over GF(2)");
  Field f(m, p, m <= kMaxTableDegree ? build_tables(m, p) : nullptr);
  std::lock_guard lock(mu);
  return cache.emplace(p, std::move(f)).first->second;
}

std::shared_ptr<const Field::Tables> Field::build_tables(unsigned m, Word modulus) {
  const std::uint64_t order = (std::uint64_t{1} << m) - 1;
  auto t = std::make_shared<Tables>();
  if (order == 1) {
    // GF(2): the only unit is 1.
    t->log.assign(2, 0);
    t->exp.assign(2, 1);
    return t;
  }
  const auto primes = prime_factors(order);
  auto raw_pow = [&](Word a, std::uint64_t e) {
    Word acc = 1;
    while (e) {
      if (e & 1) acc = clmul_mod(acc, a, modulus);
      a = clmul_mod(a, a, modulus);
      e >>= 1;
    }
    return acc;
  };
  Word gen = 2;
  for (;; ++gen) {
    bool primitive = true;
    for (std::uint64_t r : primes)
      if (raw_pow(gen, order / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) break;
  }
  t->log.assign(order + 1, 0);
  t->exp.assign(2 * order, 0);
  Word v = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    t->exp[i] = v;
    t->exp[i + order] = v;
    t->log[v] = static_cast<std::uint32_t>(i);
    v = clmul_mod(v, gen, modulus);
  }
  return t;
}

FieldElement Field::element(Word bits) const {
  if (bits >= q())
    throw Error(ErrorCode::ElementOutOfRange, hex_word(bits) + " not below q=" + std::to_string(q()));
  return {bits, modulus_};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q());
  for (std::uint64_t v = 0; v < q(); ++v) out.emplace_back(static_cast<Word>(v), modulus_);
  return out;
}

Word Field::pow(Word a, std::uint64_t e) const noexcept {
  Word acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

Word Field::inv(Word a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (tables_) {
    const std::uint64_t order = q() - 1;
    return tables_->exp[(order - tables_->log[a]) % order];
  }
  return pow(a, q() - 2);
}

Word Field::sqrt(Word a) const noexcept {
  for (unsigned i = 1; i < m_; ++i) a = mul(a, a);
  return a;
}

Word Field::trace(Word a) const noexcept {
  Word t = a;
  for (unsigned i = 1; i < m_; ++i) {
    a = mul(a, a);
    t ^= a;
  }
  return t;
}

std::string Field::describe() const {
  return "GF(2^" + std::to_string(m_) + ") mod " + hex_word(modulus_);
}

Word parse_hex_word(const std::string& text) {
  std::string_view s = text;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty() || s.size() > 8) throw Error(ErrorCode::SyntaxError, "bad hex literal '" + text + "'");
  Word v = 0;
  for (char c : s) {
    const int ch = std::tolower(static_cast<unsigned char>(c));
    int digit;
    if (ch >= '0' && ch <= '9') digit = ch - '0';
    else if (ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
    else throw Error(ErrorCode::SyntaxError, "bad hex literal '" + text + "'");
    v = (v << 4) | static_cast<Word>(digit);
  }
  return v;
}

std::string hex_word(Word w) {
  std::ostringstream os;
  os << "0x" << std::hex << w;
  return os.str();
}

}  // namespace planarlab
