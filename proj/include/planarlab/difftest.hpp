#pragma once

// Brute-force ground truth for planarity and APN-ness.
//
// A function f on GF(q), q even, is planar when x -> f(x+e) + f(x) + e*x is
// a permutation for every e != 0, and APN when x -> f(x+e) + f(x) is 2-to-1
// for every e != 0. The parallel kernels split the e-loop across OpenMP
// threads; the serial twins in `reference` exist for testing and
// benchmarking and must agree bit-for-bit, witnesses included.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planarlab/unipoly.hpp"

namespace planarlab {

inline constexpr std::uint64_t kMaxBruteForceField = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kMaxViolationField = std::uint64_t{1} << 14;

/// Outcome of a brute-force test. When the property fails, the witness is
/// the smallest failing e and the first colliding pair (x, x') in x order.
struct PlanarityVerdict {
  bool holds = true;
  std::optional<Word> witness_epsilon;
  std::optional<std::pair<Word, Word>> witness_pair;
};

enum class Property { Planar, Apn };

std::string_view property_name(Property p) noexcept;

/// f(x) for every x in the field, in x order.
std::vector<Word> value_table(const UniPoly& f);

PlanarityVerdict is_planar(const UniPoly& f);
PlanarityVerdict is_apn(const UniPoly& f);
PlanarityVerdict check_property(const UniPoly& f, Property p);

/// Number of (e, {x, x'}) with e != 0, x != x' and equal planar-derivative
/// values. Zero iff f is planar.
std::uint64_t planar_violations(const UniPoly& f);

/// True iff the witness in `v` reproduces a collision for f.
bool replay_witness(const UniPoly& f, Property p, const PlanarityVerdict& v);

/// Image of a base-field element in `target` under the tower embedding that
/// sends x to the smallest root of the base modulus. Base GF(2) maps
/// trivially. Throws EmbeddingUnsupported unless base.m() | target.m().
UniPoly embed_poly(const UniPoly& f, const Field& target);

struct ExtensionResult {
  unsigned r = 0;
  bool holds = false;
};

/// Verdicts on GF(q^r) for r = 1..r_max (default moduli for each level).
std::vector<ExtensionResult> extension_scan(const UniPoly& f, unsigned r_max, Property p);

struct CatalogEntry {
  std::vector<Word> table;
  std::string table_hash;  // FNV-1a 64 over the value table
  bool is_two_poly = false;
  UniPoly sample_poly;
};

struct CatalogReport {
  unsigned m = 0;
  std::uint64_t candidates = 0;
  std::uint64_t planar_count = 0;
  std::uint64_t two_poly_count = 0;
  std::vector<CatalogEntry> entries;  // ascending by table index
};

/// Every planar function on GF(2^m), m <= 3; m = 4 only with allow_long
/// (q^q = 2^64 candidates).
CatalogReport catalog_planar(const Field& field, bool allow_long = false);

/// Unique polynomial of degree <= q-1 inducing `table`.
UniPoly interpolate(const Field& field, const std::vector<Word>& table);

std::string table_hash(const std::vector<Word>& table);

namespace reference {
PlanarityVerdict is_planar(const UniPoly& f);
PlanarityVerdict is_apn(const UniPoly& f);
std::uint64_t planar_violations(const UniPoly& f);
}  // namespace reference

}  // namespace planarlab
