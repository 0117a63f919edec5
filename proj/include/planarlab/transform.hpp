#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <optional>

#include "planarlab/bipoly.hpp"

namespace planarlab {

/// One substitution-and-divide move on a bivariate polynomial.
///
///   SubXByXYDivY(n)    X <- XY, then divide by Y^n
///   SubYByXYDivX(n)    Y <- XY, then divide by X^n
///   ShearY(c)          Y <- cX + XY, then divide by X^2
///   ShiftX(x0)         X <- X + x0
///   SubXByXYPowDivY(e, n)  X <- X Y^e, then divide by Y^n
///
/// The divide exponent is never inferred: applying a step whose exponent
/// does not equal the operand's smallest monomial degree is an error.
struct TransformStep {
  enum class Kind { SubXByXYDivY, SubYByXYDivX, ShearY, ShiftX, SubXByXYPowDivY };

  Kind kind = Kind::SubXByXYDivY;
  std::uint32_t n = 0;
  std::uint32_t e = 0;
  Word c = 0;

  static TransformStep sub_x_xy_div_y(std::uint32_t n) { return {Kind::SubXByXYDivY, n, 0, 0}; }
  static TransformStep sub_y_xy_div_x(std::uint32_t n) { return {Kind::SubYByXYDivX, n, 0, 0}; }
  static TransformStep shear_y(Word c) { return {Kind::ShearY, 2, 0, c}; }
  static TransformStep shift_x(Word x0) { return {Kind::ShiftX, 0, 0, x0}; }
  static TransformStep sub_x_xypow(std::uint32_t e, std::uint32_t n) { return {Kind::SubXByXYPowDivY, n, e, 0}; }

  friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

/// Wire names: SUB_X_XY_DIV_Y, SUB_Y_XY_DIV_X, SHEAR_Y, SHIFT_X, SUB_X_XYPOW.
std::string_view kind_name(TransformStep::Kind kind) noexcept;
std::optional<TransformStep::Kind> kind_from_name(std::string_view name) noexcept;

/// Exact image of g under `step`. Throws DivideExponentMismatch when the
/// step's divide exponent is not legal for g, ZeroPolynomial for g == 0.
BiPoly apply_transform(const BiPoly& g, const TransformStep& step);

/// Image of a single exponent pair under a monomial step (every kind except
/// ShearY and ShiftX). No legality check.
Monomial map_monomial(const Monomial& mono, const TransformStep& step);

}  // namespace planarlab
