#pragma once

// Slow, independent reference implementations. Nothing here calls into the
// library's arithmetic; only plain integers and std containers are used.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using W = std::uint32_t;

// Schoolbook carry-less product, then long division by the modulus.
inline W mul(W a, W b, W modulus) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i)
    if ((b >> i) & 1) prod ^= std::uint64_t{a} << i;
  int deg = 63;
  while (deg > 0 && !((std::uint64_t{modulus} >> deg) & 1)) --deg;
  for (int i = 63; i >= deg; --i)
    if ((prod >> i) & 1) prod ^= std::uint64_t{modulus} << (i - deg);
  return static_cast<W>(prod);
}

inline W pow(W a, std::uint64_t e, W modulus) {
  W r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a, modulus);
  return r;
}

// Exhaustive inverse and square root, for small fields only.
inline W inv_search(W a, W q, W modulus) {
  for (W b = 1; b < q; ++b)
    if (mul(a, b, modulus) == 1) return b;
  return 0;
}

inline W sqrt_search(W a, W q, W modulus) {
  for (W b = 0; b < q; ++b)
    if (mul(b, b, modulus) == a) return b;
  return 0;
}

// Exact binomial via Pascal's triangle.
inline unsigned __int128 binom(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned __int128>> t(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return k > n ? 0 : t[n][k];
}

// A univariate polynomial as a coefficient list, evaluated term by term.
struct Uni {
  W modulus = 0;
  std::vector<W> c;
  W eval(W x) const {
    W acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i]) acc ^= mul(c[i], pow(x, i, modulus), modulus);
    return acc;
  }
};

// Dense bivariate polynomial keyed by (a, b).
struct Bi {
  W modulus = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, W> t;

  void add(std::uint32_t a, std::uint32_t b, W c) {
    if (!c) return;
    W& slot = t[{a, b}];
    slot ^= c;
    if (!slot) t.erase({a, b});
  }
  Bi operator*(const Bi& o) const {
    Bi r{modulus, {}};
    for (const auto& [p, c] : t)
      for (const auto& [q, d] : o.t) r.add(p.first + q.first, p.second + q.second, mul(c, d, modulus));
    return r;
  }
  Bi power(std::uint32_t e) const {
    Bi r{modulus, {}};
    r.add(0, 0, 1);
    for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  W eval(W x, W y) const {
    W acc = 0;
    for (const auto& [p, c] : t) acc ^= mul(c, mul(pow(x, p.first, modulus), pow(y, p.second, modulus), modulus), modulus);
    return acc;
  }
  std::uint64_t min_degree() const {
    std::uint64_t m = UINT64_MAX;
    for (const auto& [p, c] : t) m = std::min<std::uint64_t>(m, std::uint64_t{p.first} + p.second);
    return m;
  }
};

// Substitute X <- sx, Y <- sy by full expansion, then divide every monomial
// by X^dx Y^dy. Returns false if some monomial is not divisible.
inline bool substitute_divide(const Bi& g, const Bi& sx, const Bi& sy, std::uint32_t dx, std::uint32_t dy, Bi& out) {
  out = Bi{g.modulus, {}};
  Bi acc{g.modulus, {}};
  for (const auto& [p, c] : g.t) {
    Bi term = sx.power(p.first) * sy.power(p.second);
    for (const auto& [q, d] : term.t) acc.add(q.first, q.second, mul(c, d, g.modulus));
  }
  for (const auto& [q, d] : acc.t) {
    if (q.first < dx || q.second < dy) return false;
    out.add(q.first - dx, q.second - dy, d);
  }
  return true;
}

inline Bi mono(W modulus, std::uint32_t a, std::uint32_t b, W c = 1) {
  Bi r{modulus, {}};
  r.add(a, b, c);
  return r;
}

// Affine points of g = 0 by a full double loop.
inline std::uint64_t naive_points(const Bi& g, W q) {
  std::uint64_t n = 0;
  for (W x = 0; x < q; ++x)
    for (W y = 0; y < q; ++y)
      if (g.eval(x, y) == 0) ++n;
  return n;
}

// Planarity and APN-ness straight from the definitions.
inline std::vector<W> table(const Uni& f, W q) {
  std::vector<W> v(q);
  for (W x = 0; x < q; ++x) v[x] = f.eval(x);
  return v;
}

inline bool planar(const std::vector<W>& v, W modulus) {
  const W q = static_cast<W>(v.size());
  for (W e = 1; e < q; ++e)
    for (W x = 0; x < q; ++x)
      for (W y = x + 1; y < q; ++y)
        if ((v[x ^ e] ^ v[x] ^ mul(e, x, modulus)) == (v[y ^ e] ^ v[y] ^ mul(e, y, modulus))) return false;
  return true;
}

inline std::uint64_t planar_collisions(const std::vector<W>& v, W modulus) {
  const W q = static_cast<W>(v.size());
  std::uint64_t n = 0;
  for (W e = 1; e < q; ++e)
    for (W x = 0; x < q; ++x)
      for (W y = x + 1; y < q; ++y)
        if ((v[x ^ e] ^ v[x] ^ mul(e, x, modulus)) == (v[y ^ e] ^ v[y] ^ mul(e, y, modulus))) ++n;
  return n;
}

inline bool apn(const std::vector<W>& v) {
  const W q = static_cast<W>(v.size());
  for (W e = 1; e < q; ++e) {
    std::map<W, int> hits;
    for (W x = 0; x < q; ++x)
      if (++hits[v[x ^ e] ^ v[x]] > 2) return false;
  }
  return true;
}

// Planar curve of f, coefficient by coefficient, with the parity taken from
// exact binomials rather than bit tricks.
inline Bi planar_curve(const Uni& f) {
  const auto d = static_cast<std::uint32_t>(f.c.size() - 1);
  Bi F{f.modulus, {}};
  F.add(0, d - 2, 1);
  for (std::uint32_t i = 3; i <= d; ++i) {
    if (!f.c[i]) continue;
    for (std::uint32_t k = 0; k < i; ++k)
      if (binom(i - 1, k) % 2 == 0) F.add(k, d - i, f.c[i]);
  }
  return F;
}

inline Bi apn_curve(const Uni& f) {
  const auto d = static_cast<std::uint32_t>(f.c.size() - 1);
  Bi F{f.modulus, {}};
  for (std::uint32_t i = 3; i <= d; ++i) {
    if (!f.c[i]) continue;
    for (std::uint32_t k = 1; k < i; ++k)
      if (binom(i - 1, k) % 2 == 0) F.add(k - 1, d - i, f.c[i]);
  }
  return F;
}

inline Bi shift_x(const Bi& g, W x0) {
  Bi sx{g.modulus, {}};
  sx.add(1, 0, 1);
  sx.add(0, 0, x0);
  Bi out;
  substitute_divide(g, sx, mono(g.modulus, 0, 1), 0, 0, out);
  return out;
}

inline bool is_pow2(std::uint64_t k) { return k && !(k & (k - 1)); }

}  // namespace oracle
