#include "planarlab/raw_poly.hpp"

#include <algorithm>

#include "planarlab/error.hpp"

namespace planarlab::raw {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Word eval(const Field& F, const Poly& p, Word x) {
  Word acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = F.mul(acc, x) ^ *it;
  return acc;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] ^= F.mul(a[i], b[j]);
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divrem(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  Poly quot(r.size() - b.size() + 1, 0);
  const Word lead_inv = F.inv(b.back());
  for (size_t shift = r.size() - b.size() + 1; shift-- > 0;) {
    const Word c = F.mul(r[shift + b.size() - 1], lead_inv);
    if (!c) continue;
    quot[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) r[shift + j] ^= F.mul(c, b[j]);
  }
  trim(r);
  trim(quot);
  return {quot, r};
}

Poly mod(const Field& F, const Poly& a, const Poly& b) { return divrem(F, a, b).second; }

Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& g) { return mod(F, mul(F, a, b), g); }

Poly monic(const Field& F, Poly p) {
  trim(p);
  if (p.empty() || p.back() == 1) return p;
  const Word inv = F.inv(p.back());
  for (Word& c : p) c = F.mul(c, inv);
  return p;
}

Poly gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, std::move(a));
}

Poly frobenius_of_y(const Field& F, const Poly& g) {
  Poly y = mod(F, Poly{0, 1}, g);
  for (unsigned i = 0; i < F.m(); ++i) y = mulmod(F, y, y, g);
  return y;
}

unsigned count_distinct_roots(const Field& F, const Poly& g_in) {
  Poly g = g_in;
  trim(g);
  if (g.empty()) throw Error(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
  if (g.size() == 1) return 0;
  Poly h = frobenius_of_y(F, g);
  if (h.size() < 2) h.resize(2, 0);
  h[1] ^= 1;
  trim(h);
  if (h.empty()) return static_cast<unsigned>(degree(g));
  return static_cast<unsigned>(degree(gcd(F, g, h)));
}

Poly divide_by_root(const Field& F, const Poly& p, Word r) {
  if (p.size() < 2) return {};
  Poly q(p.size() - 1, 0);
  Word carry = 0;
  for (size_t i = p.size() - 1; i >= 1; --i) {
    carry = F.mul(carry, r) ^ p[i];
    q[i - 1] = carry;
  }
  trim(q);
  return q;
}

namespace {

// Splits a monic squarefree product of distinct linear factors.
void split_linear(const Field& F, const Poly& g, std::vector<Word>& roots) {
  if (degree(g) <= 0) return;
  if (degree(g) == 1) {
    roots.push_back(F.mul(g[0], F.inv(g[1])));
    return;
  }
  // Tr(beta*Y) mod g for beta = 1, x, x^2, ...; the trace form is
  // nondegenerate, so some basis element separates any two roots.
  for (unsigned j = 0; j < F.m(); ++j) {
    const Word beta = Word{1} << j;
    Poly term = mod(F, Poly{0, beta}, g);
    Poly tr = term;
    for (unsigned i = 1; i < F.m(); ++i) {
      term = mulmod(F, term, term, g);
      if (tr.size() < term.size()) tr.resize(term.size(), 0);
      for (size_t k = 0; k < term.size(); ++k) tr[k] ^= term[k];
    }
    trim(tr);
    Poly h = gcd(F, g, tr);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      split_linear(F, h, roots);
      split_linear(F, divrem(F, g, h).first, roots);
      return;
    }
  }
  throw Error(ErrorCode::InternalViolation, "trace splitting failed to separate roots");
}

}  // namespace

std::vector<std::pair<Word, unsigned>> roots_with_multiplicity(const Field& F, const Poly& g_in) {
  Poly g = g_in;
  trim(g);
  if (g.empty()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Word> distinct;
  if (F.m() <= 16) {
    for (std::uint64_t x = 0; x < F.q(); ++x)
      if (eval(F, g, static_cast<Word>(x)) == 0) distinct.push_back(static_cast<Word>(x));
  } else if (g.size() > 1) {
    Poly h = frobenius_of_y(F, g);
    if (h.size() < 2) h.resize(2, 0);
    h[1] ^= 1;
    trim(h);
    Poly lin = h.empty() ? monic(F, g) : gcd(F, g, h);
    split_linear(F, lin, distinct);
    std::sort(distinct.begin(), distinct.end());
  }
  std::vector<std::pair<Word, unsigned>> out;
  for (Word r : distinct) {
    unsigned mult = 0;
    Poly p = g;
    while (p.size() > 1 && eval(F, p, r) == 0) {
      p = divide_by_root(F, p, r);
      ++mult;
    }
    out.emplace_back(r, mult);
  }
  return out;
}

}  // namespace planarlab::raw
