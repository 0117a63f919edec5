#include "planarlab/transform.hpp"

#include <algorithm>
#include <limits>

#include "planarlab/error.hpp"
#include "planarlab/unipoly.hpp"

namespace planarlab {

std::string_view kind_name(TransformStep::Kind kind) noexcept {
  switch (kind) {
    case TransformStep::Kind::SubXByXYDivY: return "SUB_X_XY_DIV_Y";
    case TransformStep::Kind::SubYByXYDivX: return "SUB_Y_XY_DIV_X";
    case TransformStep::Kind::ShearY: return "SHEAR_Y";
    case TransformStep::Kind::ShiftX: return "SHIFT_X";
    case TransformStep::Kind::SubXByXYPowDivY: return "SUB_X_XYPOW";
  }
  return "?";
}

std::optional<TransformStep::Kind> kind_from_name(std::string_view name) noexcept {
  using K = TransformStep::Kind;
  for (K k : {K::SubXByXYDivY, K::SubYByXYDivX, K::ShearY, K::ShiftX, K::SubXByXYPowDivY})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

namespace {

std::uint32_t narrow(std::uint64_t v) {
  if (v > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorCode::InvalidArgument, "exponent overflow in transform");
  return static_cast<std::uint32_t>(v);
}

[[noreturn]] void mismatch(const TransformStep& step, std::uint64_t expected) {
  throw Error(ErrorCode::DivideExponentMismatch,
              std::string(kind_name(step.kind)) + " divides by " + std::to_string(step.n) +
                  " but the operand requires " + std::to_string(expected));
}

}  // namespace

Monomial map_monomial(const Monomial& mono, const TransformStep& step) {
  using K = TransformStep::Kind;
  switch (step.kind) {
    case K::SubXByXYDivY: return {mono.a, narrow(std::uint64_t{mono.a} + mono.b - step.n)};
    case K::SubYByXYDivX: return {narrow(std::uint64_t{mono.a} + mono.b - step.n), mono.b};
    case K::SubXByXYPowDivY:
      return {mono.a, narrow(std::uint64_t{mono.b} + std::uint64_t{step.e} * mono.a - step.n)};
    case K::ShearY:
    case K::ShiftX: break;
  }
  throw Error(ErrorCode::InvalidArgument, "map_monomial: step is not a monomial map");
}

BiPoly apply_transform(const BiPoly& g, const TransformStep& step) {
  using K = TransformStep::Kind;
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "transform of the zero polynomial");
  const Field& F = g.field();

  switch (step.kind) {
    case K::ShiftX: return g.shifted(step.c, 0);

    case K::SubXByXYDivY:
    case K::SubYByXYDivX: {
      const std::uint64_t need = g.min_degree();
      if (need != step.n) mismatch(step, need);
      break;
    }
    case K::SubXByXYPowDivY: {
      std::uint64_t need = std::numeric_limits<std::uint64_t>::max();
      for (const Term& t : g.terms()) need = std::min(need, std::uint64_t{t.mono.b} + std::uint64_t{step.e} * t.mono.a);
      if (need != step.n) mismatch(step, need);
      break;
    }
    case K::ShearY: {
      const std::uint64_t need = g.min_degree();
      if (need != 2) mismatch(step, need);
      // X^a Y^b -> X^(a+b-2) (c + Y)^b
      std::vector<Term> acc;
      for (const Term& t : g.terms()) {
        const std::uint32_t base = narrow(std::uint64_t{t.mono.a} + t.mono.b - 2);
        for (std::uint32_t j = t.mono.b;; j = (j - 1) & t.mono.b) {
          const Word cj = F.pow(step.c, t.mono.b - j);
          if (cj) acc.push_back(Term{{base, j}, F.mul(t.coeff, cj)});
          if (j == 0) break;
        }
      }
      BiPoly out = BiPoly::from_terms(F, std::move(acc));
      if (out.constant_term() != 0)
        throw Error(ErrorCode::DivideExponentMismatch,
                    "SHEAR_Y(" + hex_word(step.c) + ") leaves a constant term");
      return out;
    }
  }

  std::vector<Term> acc;
  acc.reserve(g.size());
  for (const Term& t : g.terms()) acc.push_back(Term{map_monomial(t.mono, step), t.coeff});
  return BiPoly::from_terms(F, std::move(acc));
}

}  // namespace planarlab
