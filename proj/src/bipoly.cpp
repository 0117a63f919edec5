#include "planarlab/bipoly.hpp"

#include <algorithm>
#include <limits>

#include "planarlab/error.hpp"
#include "planarlab/unipoly.hpp"

namespace planarlab {

BiPoly BiPoly::from_terms(Field field, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
  BiPoly out(std::move(field));
  out.terms_.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff ^= t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

BiPoly BiPoly::monomial(const Field& field, std::uint32_t a, std::uint32_t b, Word c) {
  return from_terms(field, {Term{{a, b}, c}});
}

Word BiPoly::raw_coeff(std::uint32_t a, std::uint32_t b) const noexcept {
  const Monomial key{a, b};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const Monomial& k) { return t.mono < k; });
  return (it != terms_.end() && it->mono == key) ? it->coeff : 0;
}

std::uint64_t BiPoly::min_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "minimum degree of the zero polynomial");
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const Term& t : terms_) best = std::min(best, t.mono.degree());
  return best;
}

std::uint64_t BiPoly::max_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  std::uint64_t best = 0;
  for (const Term& t : terms_) best = std::max(best, t.mono.degree());
  return best;
}

std::uint32_t BiPoly::max_x_degree() const noexcept { return terms_.empty() ? 0 : terms_.back().mono.a; }

std::uint32_t BiPoly::max_y_degree() const noexcept {
  std::uint32_t best = 0;
  for (const Term& t : terms_) best = std::max(best, t.mono.b);
  return best;
}

BiPoly BiPoly::homogeneous_part(std::uint64_t n) const {
  BiPoly out(field_);
  for (const Term& t : terms_)
    if (t.mono.degree() == n) out.terms_.push_back(t);
  return out;
}

Word BiPoly::eval_raw(Word x, Word y) const noexcept {
  Word acc = 0;
  for (const Term& t : terms_)
    acc ^= field_.mul(t.coeff, field_.mul(field_.pow(x, t.mono.a), field_.pow(y, t.mono.b)));
  return acc;
}

raw::Poly BiPoly::specialize_x(Word x) const {
  raw::Poly out(max_y_degree() + 1, 0);
  // Terms are sorted by a, so powers of x can be advanced incrementally.
  std::uint32_t cur_a = 0;
  Word xa = 1;
  for (const Term& t : terms_) {
    while (cur_a < t.mono.a) {
      xa = field_.mul(xa, x);
      ++cur_a;
    }
    out[t.mono.b] ^= field_.mul(t.coeff, xa);
  }
  raw::trim(out);
  return out;
}

BiPoly BiPoly::shifted(Word x0, Word y0) const {
  if (x0 == 0 && y0 == 0) return *this;
  std::vector<Term> acc;
  for (const Term& t : terms_) {
    // (X+x0)^a = sum over i subset of a of x0^(a-i) X^i, likewise for Y.
    for (std::uint32_t i = t.mono.a;; i = (i - 1) & t.mono.a) {
      const Word cx = field_.pow(x0, t.mono.a - i);
      if (cx) {
        for (std::uint32_t j = t.mono.b;; j = (j - 1) & t.mono.b) {
          const Word cy = field_.pow(y0, t.mono.b - j);
          if (cy) acc.push_back(Term{{i, j}, field_.mul(t.coeff, field_.mul(cx, cy))});
          if (j == 0) break;
        }
      }
      if (i == 0) break;
    }
  }
  return from_terms(field_, std::move(acc));
}

BiPoly operator+(const BiPoly& p, const BiPoly& q) {
  if (!(p.field_ == q.field_)) throw Error(ErrorCode::FieldMismatch, "BiPoly add across fields");
  std::vector<Term> all = p.terms_;
  all.insert(all.end(), q.terms_.begin(), q.terms_.end());
  return BiPoly::from_terms(p.field_, std::move(all));
}

BiPoly operator*(const BiPoly& p, const BiPoly& q) {
  if (!(p.field_ == q.field_)) throw Error(ErrorCode::FieldMismatch, "BiPoly mul across fields");
  std::vector<Term> all;
  all.reserve(p.terms_.size() * q.terms_.size());
  for (const Term& s : p.terms_)
    for (const Term& t : q.terms_)
      all.push_back(Term{{s.mono.a + t.mono.a, s.mono.b + t.mono.b}, p.field_.mul(s.coeff, t.coeff)});
  return BiPoly::from_terms(p.field_, std::move(all));
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += '+';
    std::string body;
    auto var = [&](char v, std::uint32_t e) {
      if (e == 0) return;
      if (!body.empty()) body += '*';
      body += v;
      if (e > 1) body += "^" + std::to_string(e);
    };
    var('X', t.mono.a);
    var('Y', t.mono.b);
    if (body.empty()) out += hex_word(t.coeff);
    else if (t.coeff == 1) out += body;
    else out += hex_word(t.coeff) + "*" + body;
  }
  return out;
}

HomogeneousForm::HomogeneousForm(BiPoly p) : poly_(std::move(p)), degree_(0) {
  if (poly_.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "homogeneous form must be nonzero");
  const std::uint64_t n = poly_.terms().front().mono.degree();
  for (const Term& t : poly_.terms())
    if (t.mono.degree() != n) throw Error(ErrorCode::InvalidArgument, "form is not homogeneous: " + poly_.to_string());
  degree_ = static_cast<unsigned>(n);
}

std::vector<Word> HomogeneousForm::coefficient_vector() const {
  std::vector<Word> c(degree_ + 1, 0);
  for (const Term& t : poly_.terms()) c[t.mono.a] = t.coeff;
  return c;
}

}  // namespace planarlab
