#include "planarlab/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "planarlab/curves.hpp"
#include "planarlab/difftest.hpp"
#include "planarlab/error.hpp"
#include "planarlab/log.hpp"
#include "planarlab/refuter.hpp"
#include "planarlab/serialize.hpp"

namespace planarlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

bool in_degree_range(int d, std::uint64_t q) {
  const auto d64 = static_cast<std::uint64_t>(d);
  return d64 * d64 * d64 * d64 <= q;
}

}  // namespace

std::vector<int> allowed_degrees(const SweepConfig& cfg) {
  std::vector<int> out;
  for (int d = std::max(cfg.d_min, 3); d <= cfg.d_max; ++d) {
    if (is_two_power_degree(static_cast<std::uint64_t>(d))) continue;
    if (cfg.mode == SweepMode::ApnParity && d % 4 != 2) continue;
    out.push_back(d);
  }
  return out;
}

UniPoly sweep_candidate(const SweepConfig& cfg, const Field& field, std::uint64_t index) {
  const std::vector<int> degrees = allowed_degrees(cfg);
  if (degrees.empty()) throw Error(ErrorCode::InvalidArgument, "no allowed degree in the requested range");
  std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(index)));
  const int d = degrees[std::uniform_int_distribution<std::size_t>(0, degrees.size() - 1)(rng)];
  std::uniform_int_distribution<Word> any(0, field.mask());
  std::uniform_int_distribution<Word> nonzero(1, field.mask());
  std::vector<Word> c(static_cast<std::size_t>(d) + 1, 0);
  c[static_cast<std::size_t>(d)] = nonzero(rng);
  if (cfg.max_terms == 0) {
    for (int i = 3; i < d; ++i)
      if (!is_two_power_degree(static_cast<std::uint64_t>(i))) c[static_cast<std::size_t>(i)] = any(rng);
  } else {
    std::vector<int> slots;
    for (int i = 3; i < d; ++i)
      if (!is_two_power_degree(static_cast<std::uint64_t>(i))) slots.push_back(i);
    const unsigned extra = std::uniform_int_distribution<unsigned>(0, cfg.max_terms)(rng);
    for (unsigned j = 0; j < extra && !slots.empty(); ++j) {
      const int i = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
      c[static_cast<std::size_t>(i)] = nonzero(rng);
    }
  }
  return UniPoly(field, std::move(c));
}

namespace {

struct Outcome {
  Json row;
  std::optional<Json> dump;  // diagnostic for an internal violation
};

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void emit(const Json& doc);
  std::ostream& sink();
  std::string write_dump(const Json& dump);
  int sweep();
  Outcome sweep_row(const SweepConfig& cfg, const Field& field, std::uint64_t index, bool brute) const;

  std::ostream& out_;
  std::ostream& err_;
  std::ofstream file_;

  std::string out_path_;
  std::string dump_dir_ = ".";
  std::string log_level_ = "warn";
  std::string field_spec_ = "m=8";
  std::string poly_;
  std::string property_ = "planar";
  std::string curve_kind_ = "planar";
  std::string cert_path_;
  unsigned m_ = 0;
  std::string modulus_text_;
  unsigned max_r_ = 4;
  bool long_run_ = false;
  std::uint64_t lucas_n_ = 0;
  std::uint64_t lucas_k_ = 0;
  std::string sweep_mode_ = "planar_theorem";
  SweepConfig sweep_;
  bool csv_ = false;
  bool no_brute_ = false;
};

std::ostream& Cli::sink() {
  if (out_path_.empty()) return out_;
  if (!file_.is_open()) {
    file_.open(out_path_, std::ios::binary | std::ios::trunc);
    if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot open output file " + out_path_);
  }
  return file_;
}

void Cli::emit(const Json& doc) { sink() << doc.dump(2) << '\n'; }

std::string Cli::write_dump(const Json& dump) {
  const std::string text = dump.dump(2);
  const std::string path = dump_dir_ + "/planarlab-violation-" + fnv_hex(text) + ".json";
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text << '\n';
  if (!f) {
    err_ << "internal violation; could not write diagnostic dump to " << path << '\n';
    return path;
  }
  err_ << "internal violation; diagnostic dump: " << path << '\n';
  return path;
}

Outcome Cli::sweep_row(const SweepConfig& cfg, const Field& field, std::uint64_t index, bool brute) const {
  const UniPoly f = sweep_candidate(cfg, field, index);
  Outcome o;
  Json& row = o.row;
  row = {{"index", index}, {"poly", f.to_string()}, {"d", f.degree()}};
  switch (cfg.mode) {
    case SweepMode::PlanarTheorem: {
      row["degree_in_range"] = in_degree_range(f.degree(), field.q());
      row["brute_force_planar"] = brute ? Json(is_planar(f).holds) : Json(nullptr);
      try {
        const Certificate cert = refute_planarity(f);
        row["refuted"] = true;
        row["certificate_branch"] = to_string(cert.branch);
        row["certificate_valid"] = verify_certificate(cert, f).valid;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InternalViolation) throw;
        row["refuted"] = false;
        row["certificate_branch"] = nullptr;
        row["certificate_valid"] = false;
        o.dump = Json{{"field", to_json(field)}, {"f", f.to_string()}, {"report", to_json(run_pipeline(f))}};
      }
      break;
    }
    case SweepMode::ApnParity: {
      row["brute_force_apn"] = brute ? Json(is_apn(f).holds) : Json(nullptr);
      try {
        const ApnRefutation r = refute_apn_even_degree(f);
        row["status"] = r.reason;
        row["off_line_points"] = r.stats.off_line_points;
        row["degree_in_range"] = r.degree_in_range;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InternalViolation) throw;
        row["status"] = "INTERNAL_VIOLATION";
        row["off_line_points"] = nullptr;
        row["degree_in_range"] = in_degree_range(f.degree(), field.q());
        o.dump = Json{{"field", to_json(field)}, {"f", f.to_string()}, {"error", e.what()}};
      }
      break;
    }
    case SweepMode::LemmaAudit: {
      const PipelineReport r = run_pipeline(f);
      row["t"] = r.t;
      row["u"] = r.u ? Json(*r.u) : Json(nullptr);
      row["m"] = r.m ? Json(*r.m) : Json(nullptr);
      row["images_checked"] = r.images_checked;
      row["branch"] = r.certificate ? Json(to_string(r.certificate->branch)) : Json(nullptr);
      row["certificate_valid"] = r.certificate ? verify_certificate(*r.certificate, f).valid : false;
      row["violation"] = r.violation ? Json(*r.violation) : Json(nullptr);
      if (r.violation) o.dump = Json{{"field", to_json(field)}, {"f", f.to_string()}, {"report", to_json(r)}};
      break;
    }
  }
  return o;
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return v.dump();
}

int Cli::sweep() {
  SweepConfig cfg = sweep_;
  if (sweep_mode_ == "planar_theorem") cfg.mode = SweepMode::PlanarTheorem;
  else if (sweep_mode_ == "apn_parity") cfg.mode = SweepMode::ApnParity;
  else cfg.mode = SweepMode::LemmaAudit;
  const Field field = Field::make(cfg.m);
  if (allowed_degrees(cfg).empty()) {
    err_ << "sweep: no allowed degree in [" << cfg.d_min << ", " << cfg.d_max << "]\n";
    return kExitUsage;
  }
  const bool brute = cfg.mode != SweepMode::LemmaAudit && !no_brute_;
  if (brute && field.q() > kMaxBruteForceField)
    throw Error(ErrorCode::FieldTooLarge, "brute-force checks need q <= 2^16; pass --no-brute-force");

  std::ostream& os = sink();
  constexpr std::uint64_t kChunk = 64;
  std::optional<Json> first_dump;
  bool header = false;
  for (std::uint64_t base = 0; base < cfg.samples; base += kChunk) {
    const std::uint64_t n = std::min(kChunk, cfg.samples - base);
    std::vector<Outcome> rows(n);
    std::vector<std::string> errors(n);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(n); ++j) {
      try {
        rows[static_cast<std::size_t>(j)] = sweep_row(cfg, field, base + static_cast<std::uint64_t>(j), brute);
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(j)] = e.what();
      }
    }
    for (std::uint64_t j = 0; j < n; ++j) {
      if (!errors[j].empty()) throw Error(ErrorCode::InvalidArgument, "sweep row " + std::to_string(base + j) + ": " + errors[j]);
      const Json& row = rows[j].row;
      if (csv_) {
        if (!header) {
          bool first = true;
          for (const auto& [k, v] : row.items()) os << (first ? "" : ",") << k, first = false;
          os << '\n';
          header = true;
        }
        bool first = true;
        for (const auto& [k, v] : row.items()) os << (first ? "" : ",") << csv_cell(v), first = false;
        os << '\n';
      } else {
        os << row.dump() << '\n';
      }
      if (rows[j].dump && !first_dump) first_dump = rows[j].dump;
    }
    os.flush();
  }
  if (first_dump) {
    write_dump(*first_dump);
    return kExitInternalViolation;
  }
  return kExitOk;
}

int Cli::run(const std::vector<std::string>& args) {
  CLI::App app{"planarlab: planar and APN functions over GF(2^m)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", out_path_, "write the document to this file instead of stdout");
  app.add_option("--log-level", log_level_, "debug, info, warn, error or off")
      ->check(CLI::IsMember({"debug", "info", "warn", "error", "off"}));
  app.add_option("--dump-dir", dump_dir_, "directory for internal-violation dumps");

  auto* field_info = app.add_subcommand("field-info", "print m, modulus and q");
  field_info->add_option("--m", m_, "field degree")->required();
  field_info->add_option("--modulus", modulus_text_, "hex modulus, e.g. 0xB");

  auto add_field_poly = [&](CLI::App* sub) {
    sub->add_option("--field", field_spec_, "m=N[,modulus=0x..]")->required();
    sub->add_option("--poly", poly_, "polynomial, e.g. \"X^6+a*X^5\"")->required();
  };

  auto* check = app.add_subcommand("check", "brute-force planarity or APN test");
  check->add_option("property", property_)->required()->check(CLI::IsMember({"planar", "apn"}));
  add_field_poly(check);

  auto* curve = app.add_subcommand("curve", "curve construction and point counts");
  curve->require_subcommand(1);
  auto* curve_build = curve->add_subcommand("build", "emit the curve polynomial");
  curve_build->add_option("kind", curve_kind_)->required()->check(CLI::IsMember({"planar", "apn", "shifted"}));
  add_field_poly(curve_build);
  auto* curve_count = curve->add_subcommand("count", "count affine points");
  add_field_poly(curve_count);
  curve_count->add_option("--kind", curve_kind_)->check(CLI::IsMember({"planar", "apn"}));

  auto* refute = app.add_subcommand("refute", "non-planarity certificate");
  add_field_poly(refute);

  auto* verify = app.add_subcommand("verify-cert", "check a certificate against f");
  verify->add_option("--cert", cert_path_)->required();
  add_field_poly(verify);

  auto* report = app.add_subcommand("pipeline-report", "full audited pipeline trace");
  add_field_poly(report);

  auto* ext = app.add_subcommand("extension-scan", "verdicts over GF(q^r), r = 1..max-r");
  ext->add_option("--field", field_spec_, "base field (default m=1)");
  ext->add_option("--poly", poly_)->required();
  ext->add_option("--max-r", max_r_)->required()->check(CLI::Range(1u, 16u));
  ext->add_option("--kind", property_)->check(CLI::IsMember({"planar", "apn"}));

  auto* catalog = app.add_subcommand("catalog", "every planar function on GF(2^m)");
  catalog->add_option("--m", m_)->required()->check(CLI::Range(1u, 4u));
  catalog->add_flag("--long-run", long_run_, "allow m = 4");

  auto* lucas = app.add_subcommand("lucas", "parity of a binomial coefficient");
  lucas->add_option("--n", lucas_n_)->required();
  lucas->add_option("--k", lucas_k_)->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "seeded random sweep, NDJSON rows");
  sweep_cmd->add_option("--mode", sweep_mode_)->check(CLI::IsMember({"planar_theorem", "apn_parity", "lemma_audit"}));
  sweep_cmd->add_option("--m", sweep_.m)->required()->check(CLI::Range(1u, kMaxFieldDegree));
  sweep_cmd->add_option("--d-min", sweep_.d_min);
  sweep_cmd->add_option("--d-max", sweep_.d_max)->required();
  sweep_cmd->add_option("--samples", sweep_.samples)->required();
  sweep_cmd->add_option("--seed", sweep_.seed);
  sweep_cmd->add_option("--max-terms", sweep_.max_terms, "sparse candidates with at most this many lower terms");
  sweep_cmd->add_flag("--csv", csv_);
  sweep_cmd->add_flag("--no-brute-force", no_brute_);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out_ << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err_ << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  static const std::map<std::string, LogLevel> levels = {{"debug", LogLevel::Debug}, {"info", LogLevel::Info},
                                                         {"warn", LogLevel::Warn},   {"error", LogLevel::Error},
                                                         {"off", LogLevel::Off}};
  set_log_level(levels.at(log_level_));

  try {
    if (*field_info) {
      emit(to_json(Field::make(m_, modulus_text_.empty() ? std::nullopt : std::optional<Word>(parse_hex_word(modulus_text_)))));
      return kExitOk;
    }
    if (*lucas) {
      emit({{"n", lucas_n_}, {"k", lucas_k_}, {"odd", binom_odd(lucas_n_, lucas_k_)}});
      return kExitOk;
    }
    if (*catalog) {
      emit(to_json(catalog_planar(Field::make(m_), long_run_)));
      return kExitOk;
    }
    if (*sweep_cmd) return sweep();

    const bool ext_default_field = *ext && ext->count("--field") == 0;
    const Field field = parse_field_spec(ext_default_field ? "m=1" : field_spec_);
    const UniPoly f = parse_unipoly(poly_, field);

    if (*check) {
      emit(to_json(check_property(f, property_ == "apn" ? Property::Apn : Property::Planar)));
      return kExitOk;
    }
    if (*curve_build) {
      const CurveKind kind = curve_kind_ == "apn" ? CurveKind::Apn : curve_kind_ == "shifted" ? CurveKind::Shifted
                                                                                              : CurveKind::Planar;
      emit(to_json(build_curve(f, kind)));
      return kExitOk;
    }
    if (*curve_count) {
      emit(to_json(curve_stats(f, curve_kind_ == "apn" ? CurveKind::Apn : CurveKind::Planar)));
      return kExitOk;
    }
    if (*refute) {
      emit(to_json(refute_planarity(f)));
      return kExitOk;
    }
    if (*verify) {
      std::ifstream in(cert_path_, std::ios::binary);
      if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read certificate " + cert_path_);
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("certificate is not JSON: ") + e.what());
      }
      emit(to_json(verify_certificate(certificate_from_json(doc), f)));
      return kExitOk;
    }
    if (*report) {
      const UniPoly reduced = reduce_two_power(f);
      if (reduced.is_zero()) throw Error(ErrorCode::IsTwoPolynomial, "f = " + f.to_string() + " is a 2-polynomial");
      const PipelineReport r = run_pipeline(reduced);
      Json doc = to_json(r);
      doc["field"] = to_json(field);
      doc["f"] = reduced.to_string();
      emit(doc);
      if (r.violation) {
        write_dump(doc);
        return kExitInternalViolation;
      }
      return kExitOk;
    }
    if (*ext) {
      const Property p = property_ == "apn" ? Property::Apn : Property::Planar;
      Json results = Json::array();
      for (const ExtensionResult& e : extension_scan(f, max_r_, p))
        results.push_back({{"r", e.r}, {"q", std::uint64_t{1} << (field.m() * e.r)}, {"holds", e.holds}});
      emit({{"field", to_json(field)}, {"f", f.to_string()}, {"property", property_name(p)}, {"results", results}});
      return kExitOk;
    }
  } catch (const Error& e) {
    err_ << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::FieldTooLarge: return kExitSizeLimit;
      case ErrorCode::InternalViolation:
        write_dump({{"field_spec", field_spec_}, {"poly", poly_}, {"error", e.what()}});
        return kExitInternalViolation;
      default: return kExitUsage;
    }
  }
  err_ << app.help();
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (const char* threads = std::getenv("PLANARLAB_THREADS")) {
    const int n = std::atoi(threads);
    if (n > 0) omp_set_num_threads(n);
  }
  return Cli(out, err).run(args);
}

}  // namespace planarlab
