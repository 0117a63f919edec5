#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "planarlab/error.hpp"
#include "planarlab/gf2m.hpp"

using namespace planarlab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("default moduli are irreducible of the right degree") {
  for (unsigned m = 1; m <= kMaxFieldDegree; ++m) {
    const Word p = default_modulus(m);
    CHECK(modulus_degree(p) == m);
    CHECK(is_irreducible_gf2(p));
    CHECK(Field::make(m).modulus() == p);
  }
  CHECK(Field::make(3).modulus() == 0b1011);
}

TEST_CASE("irreducibility test matches trial division for degree <= 12") {
  // Trial division by every polynomial of degree <= deg/2.
  auto trial = [](std::uint64_t p) {
    const unsigned deg = modulus_degree(p);
    for (std::uint64_t d = 2; modulus_degree(d) <= deg / 2; ++d) {
      std::uint64_t r = p;
      const unsigned dd = modulus_degree(d);
      for (int i = static_cast<int>(deg); i >= static_cast<int>(dd); --i)
        if ((r >> i) & 1) r ^= d << (i - static_cast<int>(dd));
      if (r == 0) return false;
    }
    return true;
  };
  for (std::uint64_t p = 2; p < (1u << 13); ++p) CHECK_MESSAGE(is_irreducible_gf2(p) == trial(p), p);
}

TEST_CASE("make_field validation") {
  CHECK(Field::make(8, 0x11B).modulus() == 0x11B);
  CHECK(code_of([] { Field::make(4, 0b10101); }) == ErrorCode::ModulusReducible);
  CHECK(code_of([] { Field::make(4, 0b1011); }) == ErrorCode::ModulusDegreeMismatch);
  CHECK(code_of([] { Field::make(25); }) == ErrorCode::UnsupportedDegree);
  CHECK(code_of([] { Field::make(0); }) == ErrorCode::UnsupportedDegree);
  CHECK(code_of([] { Field::make(3).element(8); }) == ErrorCode::ElementOutOfRange);
}

TEST_CASE("GF(8) worked examples") {
  const Field F = Field::make(3);
  auto e = [&](Word w) { return F.element(w); };
  CHECK((e(3) + e(5)) == e(6));
  CHECK((e(2) * e(2)) == e(4));
  CHECK((e(2) * e(5)) == e(1));
  CHECK((e(4) * e(4)) == e(6));
  CHECK(inverse(e(1)) == e(1));
  CHECK(inverse(e(2)) == e(5));
  CHECK(code_of([&] { inverse(e(0)); }) == ErrorCode::DivisionByZero);
  CHECK(sqrt(e(0)) == e(0));
  CHECK(sqrt(e(1)) == e(1));
  CHECK(sqrt(e(2)) == e(6));
  // Brute force over GF(8): the square root of 4 is 2 (2 * 2 = 4).
  CHECK(sqrt(e(4)) == e(static_cast<Word>(oracle::sqrt_search(4, 8, 0b1011))));
  CHECK(sqrt(e(4)) == e(2));
}

TEST_CASE("cross-field operations are rejected") {
  const Field a = Field::make(3);
  const Field b = Field::make(4);
  CHECK(code_of([&] { (void)(a.one() + b.one()); }) == ErrorCode::FieldMismatch);
  CHECK(code_of([&] { (void)(a.one() * b.one()); }) == ErrorCode::FieldMismatch);
  const Field c = Field::make(3, 0b1101);
  CHECK(code_of([&] { (void)(a.one() * c.one()); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("multiplication equals the schoolbook oracle on all pairs, m <= 4") {
  for (unsigned m = 1; m <= 4; ++m) {
    const Field F = Field::make(m);
    for (Word a = 0; a < F.q(); ++a)
      for (Word b = 0; b < F.q(); ++b) REQUIRE(F.mul(a, b) == oracle::mul(a, b, F.modulus()));
  }
}

TEST_CASE("table and carry-less paths agree with the oracle on random pairs") {
  std::mt19937_64 rng(11);
  for (unsigned m : {5u, 8u, 12u, 16u, 17u, 20u, 24u}) {
    const Field F = Field::make(m);
    for (int i = 0; i < 2000; ++i) {
      const Word a = testing::random_element(rng, F);
      const Word b = testing::random_element(rng, F);
      REQUIRE(F.mul(a, b) == oracle::mul(a, b, F.modulus()));
      REQUIRE(clmul_mod(a, b, F.modulus()) == oracle::mul(a, b, F.modulus()));
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(12);
  for (unsigned m = 1; m <= 12; ++m) {
    const Field F = Field::make(m);
    for (int i = 0; i < 10000; ++i) {
      const Word a = testing::random_element(rng, F);
      const Word b = testing::random_element(rng, F);
      const Word c = testing::random_element(rng, F);
      REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      REQUIRE(F.mul(a, b ^ c) == (F.mul(a, b) ^ F.mul(a, c)));
      REQUIRE(F.mul(a, b) == F.mul(b, a));
      REQUIRE(((a ^ b) ^ c) == (a ^ (b ^ c)));
    }
  }
}

TEST_CASE("inverse, square root, squaring bijection and enumeration") {
  for (unsigned m : {1u, 2u, 3u, 5u, 8u, 11u, 13u}) {
    const Field F = Field::make(m);
    std::set<Word> squares;
    const auto elems = F.elements();
    CHECK(elems.size() == F.q());
    std::set<Word> distinct;
    for (const FieldElement& x : elems) distinct.insert(x.bits());
    CHECK(distinct.size() == F.q());
    for (Word a = 0; a < F.q(); ++a) {
      if (a) REQUIRE(F.mul(a, F.inv(a)) == 1);
      REQUIRE(F.sqr(F.sqrt(a)) == a);
      squares.insert(F.sqr(a));
    }
    CHECK(squares.size() == F.q());
  }
  std::mt19937_64 rng(13);
  const Field big = Field::make(23);
  for (int i = 0; i < 200; ++i) {
    const Word a = testing::random_nonzero(rng, big);
    REQUIRE(big.mul(a, big.inv(a)) == 1);
    REQUIRE(big.sqr(big.sqrt(a)) == a);
  }
}

TEST_CASE("pow and trace") {
  const Field F = Field::make(6);
  for (Word a = 0; a < F.q(); ++a) {
    CHECK(F.pow(a, 0) == 1);
    CHECK(F.pow(a, 7) == oracle::pow(a, 7, F.modulus()));
    CHECK(F.pow(a, F.q()) == a);
    const Word tr = F.trace(a);
    CHECK((tr == 0 || tr == 1));
    CHECK(tr == F.trace(F.sqr(a)));
  }
  // Trace is balanced: exactly half of the field has trace 1.
  unsigned ones = 0;
  for (Word a = 0; a < F.q(); ++a) ones += F.trace(a);
  CHECK(ones == F.q() / 2);
}

TEST_CASE("hex parsing and printing") {
  CHECK(parse_hex_word("0x1b") == 0x1b);
  CHECK(parse_hex_word("1B") == 0x1b);
  CHECK(hex_word(0x1b) == "0x1b");
  CHECK(hex_word(0) == "0x0");
  CHECK(code_of([] { parse_hex_word("0xg"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_hex_word(""); }) == ErrorCode::SyntaxError);
  CHECK(Field::make(3).element(6).hex() == "0x6");
}
