#include "planarlab/refuter.hpp"

#include <algorithm>
#include <bit>

#include "planarlab/error.hpp"

namespace planarlab {

std::string_view to_string(LemmaStatus s) noexcept {
  switch (s) {
    case LemmaStatus::Holds: return "HOLDS";
    case LemmaStatus::CertificateBranch: return "CERTIFICATE_BRANCH";
    case LemmaStatus::InternalViolation: return "INTERNAL_VIOLATION";
  }
  return "?";
}

namespace {
constexpr std::pair<Branch, std::string_view> kBranchNames[] = {
    {Branch::T0Immediate, "T0_IMMEDIATE"}, {Branch::UZero, "U_ZERO"},
    {Branch::UOne, "U_ONE"},               {Branch::VOne, "V_ONE"},
    {Branch::VZero, "V_ZERO"},             {Branch::IntermediateLinear, "INTERMEDIATE_LINEAR"},
    {Branch::FinalH, "FINAL_H"},
};
constexpr std::pair<CurveSource, std::string_view> kSourceNames[] = {
    {CurveSource::FChain, "F_CHAIN"}, {CurveSource::GChain, "G_CHAIN"}, {CurveSource::ApnCurve, "APN_CURVE"}};
}  // namespace

std::string_view to_string(Branch b) noexcept {
  for (auto [k, v] : kBranchNames)
    if (k == b) return v;
  return "?";
}

std::string_view to_string(CurveSource s) noexcept {
  for (auto [k, v] : kSourceNames)
    if (k == s) return v;
  return "?";
}

std::optional<Branch> branch_from_string(std::string_view s) noexcept {
  for (auto [k, v] : kBranchNames)
    if (v == s) return k;
  return std::nullopt;
}

std::optional<CurveSource> source_from_string(std::string_view s) noexcept {
  for (auto [k, v] : kSourceNames)
    if (v == s) return k;
  return std::nullopt;
}

std::optional<LemmaStatus> PipelineReport::status(const std::string& name) const {
  for (const auto& [k, v] : lemma_status)
    if (k == name) return v;
  return std::nullopt;
}

unsigned lowest_clear_bit_above_zero(std::uint64_t i) noexcept {
  unsigned n = 1;
  while ((i >> n) & 1) ++n;
  return n;
}

std::pair<std::int64_t, std::int64_t> monomial_image(std::int64_t k, std::int64_t i, std::int64_t t, std::int64_t u) {
  const std::int64_t half = std::int64_t{1} << (u - 1);
  const std::int64_t r = k * (t + 1) - i + 2;
  const std::int64_t s = k * (half * (t + 1) - t - 2) - i * (half - 1) + (std::int64_t{1} << u);
  return {r, s};
}

OemTables compute_oem(const UniPoly& f, int t, int u) {
  if (u < 2 || t < 1)
    throw Error(ErrorCode::BadPipelineParams, "compute_oem needs u >= 2 and t >= 1 (got t=" + std::to_string(t) +
                                                  ", u=" + std::to_string(u) + ")");
  const std::int64_t half = std::int64_t{1} << (u - 1);
  const std::int64_t slope = half * (t + 1) - 1;  // degree step per unit of k
  const std::int64_t offset = (std::int64_t{1} << u) + 2;
  OemTables out;
  bool first = true;
  for (unsigned i : f.support()) {
    if (is_two_power_degree(i)) continue;
    const std::int64_t base = offset - half * static_cast<std::int64_t>(i);
    if (i % 2 == 1) {
      out.o[i] = slope + base;
      const unsigned z = lowest_clear_bit_above_zero(i);
      out.z[i] = z;
      if (!is_two_power_degree(std::uint64_t{i} + 1)) out.e[i] = (std::int64_t{1} << z) * slope + base;
    } else {
      const std::int64_t p = std::int64_t{1} << two_adic_valuation(i);
      out.o[i] = (p + 1) * slope + base;
      out.e[i] = p * slope + base;
    }
    if (first || out.o[i] < out.m) out.m = out.o[i];
    first = false;
  }
  return out;
}

namespace {

bool is_power_of_two(std::uint64_t a) { return a != 0 && (a & (a - 1)) == 0; }

class PipelineRun {
 public:
  explicit PipelineRun(const UniPoly& f) : f_(f), field_(f.field()) {}

  PipelineReport run() {
    try {
      execute();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivideExponentMismatch && e.code() != ErrorCode::ZeroPolynomial) throw;
      violate(current_, e.what());
    }
    return std::move(report_);
  }

 private:
  void mark(const char* name, LemmaStatus s) { report_.lemma_status.emplace_back(name, s); }

  void violate(const std::string& name, std::string why) {
    if (report_.violation) return;
    report_.lemma_status.emplace_back(name, LemmaStatus::InternalViolation);
    report_.violation = name + ": " + std::move(why);
  }

  // Emits a certificate when the cone of `terminal` has a reduced linear
  // factor, preferring `preferred` when it is among them.
  void certify(const char* name, Branch branch, CurveSource source, std::vector<TransformStep> steps,
               const BiPoly& terminal, std::optional<LinearFactor> preferred) {
    HomogeneousForm cone = tangent_cone(terminal);
    const auto reduced = reduced_linear_factors(cone);
    if (reduced.empty()) {
      violate(name, "expected a reduced linear factor in cone " + cone.poly().to_string());
      return;
    }
    LinearFactor chosen = reduced.front();
    if (preferred)
      for (const LinearFactor& lf : reduced)
        if (lf.a == preferred->a && lf.b == preferred->b) chosen = lf;
    report_.certificate = Certificate{source, branch, std::move(steps), std::move(cone), chosen, f_};
    mark(name, LemmaStatus::CertificateBranch);
  }

  // G_0..G_upto with divide exponents n_r - 1.
  std::pair<BiPoly, std::vector<TransformStep>> g_chain(int upto) {
    BiPoly g = build_shifted_curve(f_);
    std::vector<TransformStep> steps;
    for (int r = 0; r < upto; ++r) {
      steps.push_back(TransformStep::sub_x_xy_div_y(report_.n_seq[static_cast<size_t>(r)] - 1));
      g = apply_transform(g, steps.back());
    }
    return {std::move(g), std::move(steps)};
  }

  static std::vector<TransformStep> prefix(const std::vector<TransformStep>& v, int n) {
    return {v.begin(), v.begin() + n};
  }

  void execute();

  const UniPoly& f_;
  const Field& field_;
  PipelineReport report_;
  std::string current_ = checkpoint::kStageCount;
};

void PipelineRun::execute() {
  const int d = f_.degree();
  report_.d = d;
  report_.nu_d = two_adic_valuation(static_cast<std::uint64_t>(d));
  const LinearFactor factor_x{1, 0, 1};

  // F_r = F_(r-1)(XY, Y) / Y^(n_r) until the cone loses its X factor.
  const BiPoly f0 = build_planar_curve(f_);
  std::vector<BiPoly> chain{f0};
  std::vector<TransformStep> steps;
  for (;;) {
    const HomogeneousForm cone = tangent_cone(chain.back());
    if (cone.poly().contains(0, cone.degree())) break;
    if (static_cast<int>(steps.size()) > d) {
      violate(checkpoint::kStageCount, "stage count exceeds d");
      return;
    }
    const auto n = static_cast<std::uint32_t>(chain.back().min_degree());
    report_.n_seq.push_back(n);
    steps.push_back(TransformStep::sub_x_xy_div_y(n));
    chain.push_back(apply_transform(chain.back(), steps.back()));
  }
  const int t = static_cast<int>(report_.n_seq.size());
  report_.t = t;
  if (t == 0) {
    certify(checkpoint::kStageCount, Branch::T0Immediate, CurveSource::FChain, {}, f0, std::nullopt);
    return;
  }
  mark(checkpoint::kStageCount, LemmaStatus::Holds);

  // u: smallest exponent with X^(2^u) Y^l in the cone of F_(t-1).
  current_ = checkpoint::kUBounds;
  const HomogeneousForm cone_prev = tangent_cone(chain[static_cast<size_t>(t - 1)]);
  std::optional<int> u;
  for (const Term& term : cone_prev.poly().terms())
    if (is_power_of_two(term.mono.a)) {
      const int cand = std::countr_zero(term.mono.a);
      if (!u || cand < *u) u = cand;
    }
  if (!u) {
    violate(checkpoint::kUBounds, "cone of F_(t-1) has no X^(2^u)Y^l monomial: " + cone_prev.poly().to_string());
    return;
  }
  report_.u = u;
  if (*u == 0) {
    certify(checkpoint::kUBounds, Branch::UZero, CurveSource::FChain, prefix(steps, t - 1),
            chain[static_cast<size_t>(t - 1)], factor_x);
    return;
  }
  if (*u == 1) {
    auto [g, gsteps] = g_chain(t - 1);
    certify(checkpoint::kUBounds, Branch::UOne, CurveSource::GChain, std::move(gsteps), g, factor_x);
    return;
  }
  if (*u > static_cast<int>(report_.nu_d)) {
    violate(checkpoint::kUBounds, "u=" + std::to_string(*u) + " exceeds nu(d)=" + std::to_string(report_.nu_d));
    return;
  }
  mark(checkpoint::kUBounds, LemmaStatus::Holds);
  const std::uint32_t two_u = 1u << *u;

  current_ = checkpoint::kNDivisibility;
  for (std::uint32_t n : report_.n_seq)
    if (n % two_u != 0) {
      violate(checkpoint::kNDivisibility, "n_r=" + std::to_string(n) + " not divisible by 2^u=" + std::to_string(two_u));
      return;
    }
  mark(checkpoint::kNDivisibility, LemmaStatus::Holds);

  current_ = checkpoint::kConeFt;
  const BiPoly& ft = chain.back();
  const HomogeneousForm cone_ft = tangent_cone(ft);
  report_.cone_ft = cone_ft;
  const bool cone_is_pure_y = cone_ft.degree() == two_u - 2 && cone_ft.poly().size() == 1 &&
                              cone_ft.poly().raw_coeff(0, two_u - 2) == 1;
  if (!cone_is_pure_y) {
    if (cone_ft.degree() != two_u - 2) {
      violate(checkpoint::kConeFt, "cone of F_t has degree " + std::to_string(cone_ft.degree()) + ", expected " +
                                       std::to_string(two_u - 2));
      return;
    }
    std::uint32_t amin = 0;
    for (const Term& term : cone_ft.poly().terms())
      if (term.mono.a > 0 && (amin == 0 || term.mono.a < amin)) amin = term.mono.a;
    if (amin == 1) {
      certify(checkpoint::kConeFt, Branch::VZero, CurveSource::FChain, steps, ft, std::nullopt);
    } else if (amin == 2) {
      auto [g, gsteps] = g_chain(t);
      certify(checkpoint::kConeFt, Branch::VOne, CurveSource::GChain, std::move(gsteps), g, std::nullopt);
    } else {
      violate(checkpoint::kConeFt, "cone of F_t is " + cone_ft.poly().to_string());
    }
    return;
  }
  mark(checkpoint::kConeFt, LemmaStatus::Holds);

  std::uint64_t sum_n = 0;
  for (std::uint32_t n : report_.n_seq) sum_n += n;
  report_.sum_n_identity = sum_n == static_cast<std::uint64_t>(d) - two_u;
  if (!*report_.sum_n_identity) {
    violate(checkpoint::kSumIdentity, "sum n_r = " + std::to_string(sum_n));
    return;
  }
  mark(checkpoint::kSumIdentity, LemmaStatus::Holds);

  // F_(t+1) = F_t(X, XY) / X^(2^u-2), then 2^(u-1)-2 steps X <- XY, / Y^2.
  current_ = checkpoint::kFt2Steps;
  steps.push_back(TransformStep::sub_y_xy_div_x(two_u - 2));
  BiPoly g = apply_transform(ft, steps.back());
  const std::uint32_t reps = (two_u >> 1) - 2;
  for (std::uint32_t j = 0;; ++j) {
    const std::uint64_t md = g.min_degree();
    if (md == 1) {
      certify(checkpoint::kFt2Steps, Branch::IntermediateLinear, CurveSource::FChain, steps, g, std::nullopt);
      return;
    }
    if (md != 2) {
      violate(checkpoint::kFt2Steps, "smallest degree " + std::to_string(md) + " after " + std::to_string(j) + " Y-steps");
      return;
    }
    if (j == reps) break;
    steps.push_back(TransformStep::sub_x_xy_div_y(2));
    g = apply_transform(g, steps.back());
  }
  mark(checkpoint::kFt2Steps, LemmaStatus::Holds);
  report_.f_t2 = g;

  current_ = checkpoint::kConeFt2;
  const HomogeneousForm cone_ft2 = tangent_cone(g);
  report_.cone_ft2 = cone_ft2;
  if (!(cone_ft2.degree() == 2 && cone_ft2.poly().size() == 2 && cone_ft2.poly().contains(2, 0) &&
        cone_ft2.poly().raw_coeff(0, 2) == 1)) {
    violate(checkpoint::kConeFt2, "cone of F_(t+2) is " + cone_ft2.poly().to_string());
    return;
  }
  mark(checkpoint::kConeFt2, LemmaStatus::Holds);

  // Every F monomial X^k Y^(d-i) must land on the closed-form exponents with
  // its coefficient intact.
  current_ = checkpoint::kImageFormula;
  for (const Term& term : f0.terms()) {
    Monomial img = term.mono;
    for (const TransformStep& s : steps) img = map_monomial(img, s);
    const std::int64_t i = d - static_cast<std::int64_t>(term.mono.b);
    const auto [r, s] = monomial_image(term.mono.a, i, t, *u);
    if (r != img.a || s != img.b || g.raw_coeff(img.a, img.b) != term.coeff) {
      violate(checkpoint::kImageFormula, "image of X^" + std::to_string(term.mono.a) + "Y^" +
                                             std::to_string(term.mono.b) + " is X^" + std::to_string(img.a) + "Y^" +
                                             std::to_string(img.b) + ", closed form gives X^" + std::to_string(r) +
                                             "Y^" + std::to_string(s));
      return;
    }
    ++report_.images_checked;
  }
  if (g.size() != f0.size()) {
    violate(checkpoint::kImageFormula, "F_(t+2) has terms outside the image of F");
    return;
  }
  mark(checkpoint::kImageFormula, LemmaStatus::Holds);

  current_ = checkpoint::kUniqueMinimum;
  const OemTables oem = compute_oem(f_, t, *u);
  report_.o_table = oem.o;
  report_.e_table = oem.e;
  report_.z_table = oem.z;
  report_.m = oem.m;
  const auto at_min = std::count_if(oem.o.begin(), oem.o.end(), [&](const auto& kv) { return kv.second == oem.m; });
  std::size_t deg_m_terms = 0;
  std::optional<std::uint64_t> min_odd;
  for (const Term& term : g.terms()) {
    const std::uint64_t deg = term.mono.degree();
    if (static_cast<std::int64_t>(deg) == oem.m) ++deg_m_terms;
    if (deg % 2 == 1 && (!min_odd || deg < *min_odd)) min_odd = deg;
  }
  if (oem.m % 2 == 0 || oem.m < 3 || at_min != 1 || deg_m_terms != 1 || !min_odd ||
      static_cast<std::int64_t>(*min_odd) != oem.m) {
    violate(checkpoint::kUniqueMinimum, "m=" + std::to_string(oem.m) + " attained by " + std::to_string(at_min) +
                                            " indices and " + std::to_string(deg_m_terms) + " monomials");
    return;
  }
  mark(checkpoint::kUniqueMinimum, LemmaStatus::Holds);

  current_ = checkpoint::kEvenDegrees;
  for (const Term& term : g.terms())
    if (static_cast<std::int64_t>(term.mono.degree()) < oem.m && (term.mono.a % 2 || term.mono.b % 2)) {
      violate(checkpoint::kEvenDegrees, "X^" + std::to_string(term.mono.a) + "Y^" + std::to_string(term.mono.b) +
                                            " lies below m with an odd exponent");
      return;
    }
  mark(checkpoint::kEvenDegrees, LemmaStatus::Holds);

  // H_(i+1) = H_i(X, c_i X + XY) / X^2 with c_i^2 the X^2 coefficient of H_i.
  current_ = checkpoint::kShearChain;
  const auto length = static_cast<std::size_t>((oem.m - 1) / 2);
  for (std::size_t i = 0; i < length; ++i) {
    if (i > 0) {
      const HomogeneousForm c = tangent_cone(g);
      if (c.degree() != 2 || c.poly().contains(1, 1)) {
        violate(checkpoint::kShearChain, "cone of H_" + std::to_string(i) + " is " + c.poly().to_string());
        return;
      }
    }
    const Word ci = field_.sqrt(g.raw_coeff(2, 0));
    report_.shear_constants.push_back(ci);
    steps.push_back(TransformStep::shear_y(ci));
    g = apply_transform(g, steps.back());
  }
  const HomogeneousForm last = tangent_cone(g);
  if (!(last.degree() == 1 && last.poly().size() == 1 && last.poly().contains(1, 0))) {
    violate(checkpoint::kShearChain, "terminal cone is " + last.poly().to_string() + ", expected alpha*X");
    return;
  }
  certify(checkpoint::kShearChain, Branch::FinalH, CurveSource::FChain, std::move(steps), g, factor_x);
}

void require_pipeline_input(const UniPoly& f) {
  if (is_two_polynomial(f)) throw Error(ErrorCode::IsTwoPolynomial, "f = " + f.to_string() + " is a 2-polynomial");
  for (unsigned i : f.support())
    if (is_two_power_degree(i)) throw Error(ErrorCode::NotReduced, "f contains X^" + std::to_string(i));
}

}  // namespace

PipelineReport run_pipeline(const UniPoly& f) {
  require_pipeline_input(f);
  return PipelineRun(f).run();
}

Certificate refute_planarity(const UniPoly& f) {
  const UniPoly reduced = reduce_two_power(f);
  if (reduced.is_zero()) throw Error(ErrorCode::IsTwoPolynomial, "f = " + f.to_string() + " is a 2-polynomial");
  PipelineReport report = run_pipeline(reduced);
  if (report.violation) throw Error(ErrorCode::InternalViolation, *report.violation);
  if (!report.certificate) throw Error(ErrorCode::InternalViolation, "pipeline finished without a certificate");
  return std::move(*report.certificate);
}

BiPoly source_curve(const UniPoly& reduced_f, CurveSource source) {
  switch (source) {
    case CurveSource::FChain: return build_planar_curve(reduced_f);
    case CurveSource::GChain: return build_shifted_curve(reduced_f);
    case CurveSource::ApnCurve: return build_apn_curve(reduced_f);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown curve source");
}

BiPoly replay_certificate(const Certificate& cert) {
  BiPoly g = source_curve(cert.f, cert.source);
  for (const TransformStep& s : cert.steps) g = apply_transform(g, s);
  return g;
}

VerifyResult verify_certificate(const Certificate& cert, const UniPoly& f) {
  if (!(f.field() == cert.f.field())) return {false, "source-mismatch"};
  const UniPoly reduced = reduce_two_power(f);
  if (reduced.is_zero() || !(reduced == cert.f)) return {false, "source-mismatch"};

  std::optional<BiPoly> terminal;
  try {
    terminal = replay_certificate(cert);
  } catch (const Error&) {
    return {false, "step-invalid"};
  }
  if (terminal->is_zero()) return {false, "step-invalid"};
  const HomogeneousForm cone = tangent_cone(*terminal);
  if (!(cone == cert.terminal_cone)) return {false, "cone-mismatch"};

  const Field& F = cert.f.field();
  const LinearFactor& lf = cert.factor;
  if (lf.a >= F.q() || lf.b >= F.q() || (lf.a == 0 && lf.b == 0)) return {false, "factor-field"};
  if (linear_multiplicity(cone, lf.a, lf.b) != 1) return {false, "factor-division"};
  return {true, "ok"};
}

ApnRefutation refute_apn_even_degree(const UniPoly& f_in) {
  const UniPoly f = reduce_two_power(f_in);
  if (f.is_zero()) throw Error(ErrorCode::IsTwoPolynomial, "f = " + f_in.to_string() + " is a 2-polynomial");
  const int d = f.degree();
  if (d % 4 != 2) throw Error(ErrorCode::DegreeParityUnsupported, "d=" + std::to_string(d) + " is not 2 mod 4");

  const Field& F = f.field();
  const BiPoly curve = build_apn_curve(f);
  if (curve.is_zero() || curve.constant_term() != 0)
    throw Error(ErrorCode::InternalViolation, "APN curve does not pass through the origin: " + curve.to_string());
  const HomogeneousForm cone = tangent_cone(curve);
  const BiPoly expected = BiPoly::from_terms(F, {Term{{1, 0}, f.raw(d)}, Term{{0, 1}, f.raw(d - 1)}});
  if (!(cone.poly() == expected))
    throw Error(ErrorCode::InternalViolation, "APN cone is " + cone.poly().to_string() + ", expected " + expected.to_string());

  ApnRefutation out;
  const auto d64 = static_cast<std::uint64_t>(d);
  out.degree_in_range = d64 * d64 * d64 * d64 <= F.q();
  const LinearFactor factor = normalize_linear(F, f.raw(d), f.raw(d - 1));
  out.certificate = Certificate{CurveSource::ApnCurve, Branch::T0Immediate, {}, cone, factor, f};
  out.stats = count_points(curve, F, apn_excluded_lines(), d);
  if (out.stats.off_line_points > 0) {
    out.status = ApnRefutation::Status::Confirmed;
    out.reason = "CONFIRMED";
  } else {
    out.status = ApnRefutation::Status::Inconclusive;
    out.reason = "DEGENERATE";
  }
  return out;
}

}  // namespace planarlab
