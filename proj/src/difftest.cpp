#include "planarlab/difftest.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>

#include "planarlab/error.hpp"
#include "planarlab/raw_poly.hpp"

namespace planarlab {

std::string_view property_name(Property p) noexcept { return p == Property::Planar ? "planar" : "apn"; }

std::vector<Word> value_table(const UniPoly& f) {
  const auto q = static_cast<std::int64_t>(f.field().q());
  std::vector<Word> t(static_cast<size_t>(q));
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < q; ++x) t[static_cast<size_t>(x)] = f.eval_raw(static_cast<Word>(x));
  return t;
}

namespace {

void require_size(const Field& F, std::uint64_t limit, const char* what) {
  if (F.q() > limit)
    throw Error(ErrorCode::FieldTooLarge, std::string(what) + " limited to q <= " + std::to_string(limit));
}

// Scratch for one e-row. stamp[v] == e marks v as seen in the current row.
struct RowScratch {
  explicit RowScratch(std::uint64_t q) : stamp(q, 0), first(q, 0) {}
  std::vector<Word> stamp;
  std::vector<Word> first;
};

// First collision (x', x) with x' < x in the planar row for e, if any.
std::optional<std::pair<Word, Word>> planar_row(const Field& F, const std::vector<Word>& T, Word e, RowScratch& s) {
  const std::uint64_t q = F.q();
  for (std::uint64_t xi = 0; xi < q; ++xi) {
    const auto x = static_cast<Word>(xi);
    const Word v = T[x ^ e] ^ T[x] ^ F.mul(e, x);
    if (s.stamp[v] == e) return std::pair{s.first[v], x};
    s.stamp[v] = e;
    s.first[v] = x;
  }
  return std::nullopt;
}

// First x whose value is already taken by a preimage other than x + e.
std::optional<std::pair<Word, Word>> apn_row(const Field& F, const std::vector<Word>& T, Word e, RowScratch& s) {
  const std::uint64_t q = F.q();
  for (std::uint64_t xi = 0; xi < q; ++xi) {
    const auto x = static_cast<Word>(xi);
    const Word v = T[x ^ e] ^ T[x];
    if (s.stamp[v] == e) {
      if ((s.first[v] ^ e) != x) return std::pair{s.first[v], x};
      continue;
    }
    s.stamp[v] = e;
    s.first[v] = x;
  }
  return std::nullopt;
}

template <class Row>
PlanarityVerdict scan_parallel(const UniPoly& f, Row row) {
  const Field& F = f.field();
  require_size(F, kMaxBruteForceField, "brute-force test");
  const std::vector<Word> T = value_table(f);
  const auto q = static_cast<std::int64_t>(F.q());

  std::atomic<std::int64_t> first_fail{q};
  std::mutex mu;
  PlanarityVerdict best;
#pragma omp parallel
  {
    RowScratch scratch(F.q());
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t e = 1; e < q; ++e) {
      // Rows past the smallest known failure cannot change the witness.
      if (e > first_fail.load(std::memory_order_relaxed)) continue;
      if (auto hit = row(F, T, static_cast<Word>(e), scratch)) {
        std::lock_guard lock(mu);
        if (e < first_fail.load()) {
          first_fail.store(e);
          best.holds = false;
          best.witness_epsilon = static_cast<Word>(e);
          best.witness_pair = *hit;
        }
      }
    }
  }
  return best;
}

template <class Row>
PlanarityVerdict scan_serial(const UniPoly& f, Row row) {
  const Field& F = f.field();
  require_size(F, kMaxBruteForceField, "brute-force test");
  const std::vector<Word> T = value_table(f);
  RowScratch scratch(F.q());
  for (std::uint64_t e = 1; e < F.q(); ++e) {
    if (auto hit = row(F, T, static_cast<Word>(e), scratch))
      return PlanarityVerdict{false, static_cast<Word>(e), *hit};
  }
  return {};
}

std::uint64_t violations_in_row(const Field& F, const std::vector<Word>& T, Word e, std::vector<std::uint32_t>& hist) {
  std::fill(hist.begin(), hist.end(), 0);
  std::uint64_t pairs = 0;
  for (std::uint64_t xi = 0; xi < F.q(); ++xi) {
    const auto x = static_cast<Word>(xi);
    // Each new preimage pairs with every earlier one: sum of C(c_v, 2).
    pairs += hist[T[x ^ e] ^ T[x] ^ F.mul(e, x)]++;
  }
  return pairs;
}

}  // namespace

PlanarityVerdict is_planar(const UniPoly& f) { return scan_parallel(f, planar_row); }
PlanarityVerdict is_apn(const UniPoly& f) { return scan_parallel(f, apn_row); }

PlanarityVerdict check_property(const UniPoly& f, Property p) {
  return p == Property::Planar ? is_planar(f) : is_apn(f);
}

std::uint64_t planar_violations(const UniPoly& f) {
  const Field& F = f.field();
  require_size(F, kMaxViolationField, "planar_violations");
  const std::vector<Word> T = value_table(f);
  const auto q = static_cast<std::int64_t>(F.q());
  std::uint64_t total = 0;
#pragma omp parallel reduction(+ : total)
  {
    std::vector<std::uint32_t> hist(F.q());
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t e = 1; e < q; ++e) total += violations_in_row(F, T, static_cast<Word>(e), hist);
  }
  return total;
}

PlanarityVerdict reference::is_planar(const UniPoly& f) { return scan_serial(f, planar_row); }
PlanarityVerdict reference::is_apn(const UniPoly& f) { return scan_serial(f, apn_row); }

std::uint64_t reference::planar_violations(const UniPoly& f) {
  const Field& F = f.field();
  require_size(F, kMaxViolationField, "planar_violations");
  const std::vector<Word> T = value_table(f);
  std::vector<std::uint32_t> hist(F.q());
  std::uint64_t total = 0;
  for (std::uint64_t e = 1; e < F.q(); ++e) total += violations_in_row(F, T, static_cast<Word>(e), hist);
  return total;
}

bool replay_witness(const UniPoly& f, Property p, const PlanarityVerdict& v) {
  if (v.holds || !v.witness_epsilon || !v.witness_pair) return false;
  const Field& F = f.field();
  const Word e = *v.witness_epsilon;
  const auto [x0, x1] = *v.witness_pair;
  if (e == 0 || x0 == x1 || e >= F.q() || x0 >= F.q() || x1 >= F.q()) return false;
  auto image = [&](Word x) {
    Word r = f.eval_raw(x ^ e) ^ f.eval_raw(x);
    if (p == Property::Planar) r ^= F.mul(e, x);
    return r;
  };
  if (p == Property::Apn && (x0 ^ e) == x1) return false;
  return image(x0) == image(x1);
}

UniPoly embed_poly(const UniPoly& f, const Field& target) {
  const Field& base = f.field();
  if (base.m() == 1) return f.with_field(target);
  if (target.m() % base.m() != 0)
    throw Error(ErrorCode::EmbeddingUnsupported,
                "GF(2^" + std::to_string(base.m()) + ") does not embed in GF(2^" + std::to_string(target.m()) + ")");
  raw::Poly modulus(base.m() + 1);
  for (unsigned i = 0; i <= base.m(); ++i) modulus[i] = (base.modulus() >> i) & 1;
  const auto roots = raw::roots_with_multiplicity(target, modulus);
  if (roots.empty()) throw Error(ErrorCode::EmbeddingUnsupported, "base modulus has no root in the target");
  const Word gamma = roots.front().first;
  std::vector<Word> powers(base.m());
  powers[0] = 1;
  for (unsigned i = 1; i < base.m(); ++i) powers[i] = target.mul(powers[i - 1], gamma);
  std::vector<Word> coeffs;
  for (Word c : f.raw_coefficients()) {
    Word img = 0;
    for (unsigned i = 0; i < base.m(); ++i)
      if ((c >> i) & 1) img ^= powers[i];
    coeffs.push_back(img);
  }
  return UniPoly(target, std::move(coeffs));
}

std::vector<ExtensionResult> extension_scan(const UniPoly& f, unsigned r_max, Property p) {
  const unsigned m = f.field().m();
  if (r_max == 0) throw Error(ErrorCode::InvalidArgument, "extension_scan needs r_max >= 1");
  if (static_cast<std::uint64_t>(m) * r_max > 16)
    throw Error(ErrorCode::FieldTooLarge, "extension_scan limited to q^r <= 2^16");
  std::vector<ExtensionResult> out;
  for (unsigned r = 1; r <= r_max; ++r) {
    const Field target = Field::make(m * r, r == 1 ? std::optional<Word>(f.field().modulus()) : std::nullopt);
    const UniPoly g = r == 1 ? f : embed_poly(f, target);
    out.push_back({r, check_property(g, p).holds});
  }
  return out;
}

UniPoly interpolate(const Field& F, const std::vector<Word>& table) {
  const std::uint64_t q = F.q();
  if (table.size() != q) throw Error(ErrorCode::InvalidArgument, "value table must have q entries");
  std::vector<Word> coeffs(q, 0);
  coeffs[0] = table[0];
  Word all = 0;
  for (Word v : table) all ^= v;
  coeffs[q - 1] ^= all;
  // A_j = sum_{a != 0} f(a) a^(q-1-j) for 0 < j < q-1.
  for (std::uint64_t j = 1; j + 1 < q; ++j) {
    Word acc = 0;
    for (std::uint64_t a = 1; a < q; ++a)
      if (table[a]) acc ^= F.mul(table[a], F.pow(static_cast<Word>(a), q - 1 - j));
    coeffs[j] = acc;
  }
  return UniPoly(F, std::move(coeffs));
}

std::string table_hash(const std::vector<Word>& table) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Word w : table)
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (w >> (8 * byte)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Planarity of a value table packed m bits per entry in `index`.
bool packed_table_planar(const Field& F, std::uint64_t index) {
  const unsigned m = F.m();
  const std::uint64_t q = F.q();
  Word T[16];
  for (std::uint64_t x = 0; x < q; ++x) T[x] = static_cast<Word>((index >> (m * x)) & F.mask());
  for (std::uint64_t e = 1; e < q; ++e) {
    std::uint32_t seen = 0;
    for (std::uint64_t x = 0; x < q; ++x) {
      const Word v = T[x ^ e] ^ T[x] ^ F.mul(static_cast<Word>(e), static_cast<Word>(x));
      if (seen >> v & 1) return false;
      seen |= 1u << v;
    }
  }
  return true;
}

}  // namespace

CatalogReport catalog_planar(const Field& F, bool allow_long) {
  const unsigned m = F.m();
  if (m > 4 || (m == 4 && !allow_long))
    throw Error(ErrorCode::FieldTooLarge, "catalog_planar supports m <= 3 (m = 4 with the long-run flag)");
  const std::uint64_t q = F.q();
  const unsigned bits = m * static_cast<unsigned>(q);
  // For m = 4 the index space is all of 2^64; the loop below wraps there.
  const std::uint64_t last = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;

  std::vector<std::uint64_t> hits;
  std::mutex mu;
  const std::uint64_t chunk = 1u << 12;
  const std::uint64_t chunks = last / chunk + 1;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
      const std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
      const std::uint64_t hi = std::min(last - lo, chunk - 1) + lo;
      for (std::uint64_t idx = lo;; ++idx) {
        if (packed_table_planar(F, idx)) local.push_back(idx);
        if (idx == hi) break;
      }
    }
    std::lock_guard lock(mu);
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());

  CatalogReport report;
  report.m = m;
  report.candidates = bits >= 64 ? 0 : (std::uint64_t{1} << bits);
  for (std::uint64_t idx : hits) {
    std::vector<Word> table(q);
    for (std::uint64_t x = 0; x < q; ++x) table[x] = static_cast<Word>((idx >> (m * x)) & F.mask());
    UniPoly poly = interpolate(F, table);
    const bool two = is_two_polynomial(poly);
    report.two_poly_count += two;
    report.entries.push_back(CatalogEntry{table, table_hash(table), two, std::move(poly)});
  }
  report.planar_count = report.entries.size();
  return report;
}

}  // namespace planarlab
