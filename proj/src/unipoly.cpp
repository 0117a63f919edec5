#include "planarlab/unipoly.hpp"

#include <bit>
#include <cctype>

#include "planarlab/error.hpp"

namespace planarlab {

UniPoly::UniPoly(Field field, std::vector<Word> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  for (Word c : coeffs_)
    if (c >= field_.q()) throw Error(ErrorCode::CoefficientOutOfRange, hex_word(c) + " outside field");
  trim();
}

UniPoly UniPoly::monomial(const Field& field, unsigned k, Word c) {
  UniPoly p(field);
  p.set(k, c);
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::vector<unsigned> UniPoly::support() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) out.push_back(i);
  return out;
}

void UniPoly::set(unsigned i, Word c) {
  if (c >= field_.q()) throw Error(ErrorCode::CoefficientOutOfRange, hex_word(c) + " outside field");
  if (i >= coeffs_.size()) {
    if (c == 0) return;
    coeffs_.resize(i + 1, 0);
  }
  coeffs_[i] = c;
  trim();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, "UniPoly add across fields");
  UniPoly r = a;
  if (r.coeffs_.size() < b.coeffs_.size()) r.coeffs_.resize(b.coeffs_.size(), 0);
  for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] ^= b.coeffs_[i];
  r.trim();
  return r;
}

Word UniPoly::eval_raw(Word x) const noexcept {
  Word acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.mul(acc, x) ^ *it;
  return acc;
}

UniPoly UniPoly::with_field(const Field& other) const { return UniPoly(other, coeffs_); }

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Word c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    std::string coeff = hex_word(c).substr(2);
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (c != 1) out += coeff + "*";
    out += 'X';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

class TermParser {
 public:
  TermParser(const std::string& text, const Field& field) : field_(field) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  UniPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    UniPoly out(field_);
    for (;;) {
      auto [k, c] = term();
      out.set(k, out.raw(k) ^ c);
      if (pos_ == s_.size()) break;
      if (s_[pos_] != '+') fail("expected '+'");
      ++pos_;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::SyntaxError, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  std::pair<unsigned, Word> term() {
    Word c = 1;
    bool have_coeff = false;
    if (!at('X') && !at('x')) {
      c = coefficient();
      have_coeff = true;
      if (!at('*')) return {0, c};
      ++pos_;
    }
    if (!at('X') && !at('x')) fail(have_coeff ? "expected 'X' after '*'" : "expected term");
    ++pos_;
    unsigned k = 1;
    if (at('^')) {
      ++pos_;
      k = exponent();
    }
    return {k, c};
  }

  Word coefficient() {
    size_t start = pos_;
    if (s_.compare(pos_, 2, "0x") == 0 || s_.compare(pos_, 2, "0X") == 0) pos_ += 2;
    size_t digits = pos_;
    while (pos_ < s_.size() && std::isxdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected coefficient");
    std::string lit = s_.substr(digits, pos_ - digits);
    while (lit.size() > 1 && lit[0] == '0') lit.erase(0, 1);
    if (lit.size() > 8) throw Error(ErrorCode::CoefficientOutOfRange, s_.substr(start, pos_ - start));
    const Word c = parse_hex_word(lit);
    if (c >= field_.q())
      throw Error(ErrorCode::CoefficientOutOfRange,
                  s_.substr(start, pos_ - start) + " not in " + field_.describe());
    return c;
  }

  unsigned exponent() {
    size_t start = pos_;
    std::uint64_t k = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      k = k * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (k > (1u << 20)) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected exponent");
    return static_cast<unsigned>(k);
  }

  const Field& field_;
  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

UniPoly parse_unipoly(const std::string& text, const Field& field) { return TermParser(text, field).parse(); }

FieldElement eval_unipoly(const UniPoly& f, FieldElement x) {
  if (!f.field().owns(x)) throw Error(ErrorCode::FieldMismatch, "evaluation point from another field");
  return {f.eval_raw(x.bits()), f.field().modulus()};
}

UniPoly reduce_two_power(const UniPoly& f) {
  UniPoly out(f.field());
  for (unsigned i : f.support())
    if (!is_two_power_degree(i)) out.set(i, f.raw(i));
  return out;
}

bool is_two_polynomial(const UniPoly& f) {
  for (unsigned i : f.support())
    if (!is_two_power_degree(i)) return false;
  return true;
}

unsigned two_adic_valuation(std::uint64_t i) {
  if (i == 0) throw Error(ErrorCode::InvalidArgument, "2-adic valuation of 0");
  return static_cast<unsigned>(std::countr_zero(i));
}

}  // namespace planarlab
