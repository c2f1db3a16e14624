#include "spline_affine/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "spline_affine/affine_operators.hpp"
#include "spline_affine/chaos_spectrum.hpp"
#include "spline_affine/riesz_analysis.hpp"
#include "spline_affine/serialization.hpp"
#include "spline_affine/walsh_index.hpp"

namespace spline_affine {

namespace {

OutputFormat resolve(OutputFormat f, OutputFormat fallback) {
  return f == OutputFormat::automatic ? fallback : f;
}

std::string alpha_label(const MultiIndex& a) { return a.empty() ? "-" : a.to_string(); }

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void write_spline(const RunConfig& cfg, std::ostream& out) {
  const SplineSpec spec = build_spline(cfg.m);
  if (resolve(cfg.format, OutputFormat::csv) == OutputFormat::json) {
    out << to_json(spec).dump() << '\n';
    return;
  }
  out << "t,psi\n";
  for (unsigned i = 0; i <= cfg.samples; ++i) {
    const Rational t = make_rational(static_cast<long>(i), static_cast<long>(cfg.samples));
    out << to_decimal(t) << ',' << to_decimal(eval(spec.poly, t)) << '\n';
  }
}

void write_enum(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t count = std::uint64_t{1} << cfg.depth;
  if (resolve(cfg.format, OutputFormat::csv) == OutputFormat::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t n = 1; n < count; ++n) {
      const MultiIndex a = paley_multiindex(n);
      rows.push_back({{"alpha", a.to_string()},
                      {"paley_n", n},
                      {"natural_n", natural_index(a)},
                      {"chaos_order", chaos_order(n)}});
    }
    out << rows.dump() << '\n';
    return;
  }
  out << "alpha,paley_n,natural_n,chaos_order\n";
  for (std::uint64_t n = 1; n < count; ++n) {
    const MultiIndex a = paley_multiindex(n);
    out << alpha_label(a) << ',' << n << ',' << natural_index(a) << ',' << chaos_order(n) << '\n';
  }
}

void write_chaos(const RunConfig& cfg, std::ostream& out) {
  const ChaosDecomposition d = decompose(cfg.m, cfg.max_index);
  const bool lemma3 = lemma3_mismatches(d).empty();
  const Rational g = gamma(cfg.m);

  if (resolve(cfg.format, OutputFormat::json) == OutputFormat::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t n = 1; n <= d.max_index; ++n) {
      if (sgn(d.coeffs[n]) == 0) continue;
      rows.push_back({{"n", n},
                      {"alpha", paley_multiindex(n).to_string()},
                      {"order_d", chaos_order(n)},
                      {"coeff_num", d.coeffs[n].get_num().get_str()},
                      {"coeff_den", d.coeffs[n].get_den().get_str()}});
    }
    nlohmann::json norms = nlohmann::json::object();
    for (const auto& [order, v] : d.partial_sq_norms) norms[std::to_string(order)] = rational_to_json(v);
    nlohmann::json doc = {{"m", cfg.m},
                          {"max_index", cfg.max_index},
                          {"coefficients", std::move(rows)},
                          {"partial_sq_norms", std::move(norms)},
                          {"norm_sq", rational_to_json(d.norm_sq)},
                          {"residual", rational_to_json(d.residual)},
                          {"residual_decimal", to_decimal(d.residual)},
                          {"gamma", rational_to_json(g)},
                          {"verify_lemma3", lemma3}};
    out << doc.dump() << '\n';
    return;
  }
  out << "n,alpha,order_d,coeff_num,coeff_den\n";
  for (std::uint64_t n = 1; n <= d.max_index; ++n) {
    if (sgn(d.coeffs[n]) == 0) continue;
    out << n << ',' << alpha_label(paley_multiindex(n)) << ',' << chaos_order(n) << ','
        << d.coeffs[n].get_num().get_str() << ',' << d.coeffs[n].get_den().get_str() << '\n';
  }
  for (const auto& [order, v] : d.partial_sq_norms)
    out << "# partial_sq_norm," << order << ',' << v.get_num().get_str() << ',' << v.get_den().get_str() << '\n';
  out << "# residual," << d.residual.get_num().get_str() << ',' << d.residual.get_den().get_str() << '\n';
  out << "# gamma," << g.get_num().get_str() << ',' << g.get_den().get_str() << '\n';
  out << "# verify_lemma3," << (lemma3 ? "true" : "false") << '\n';
}

nlohmann::json certificate_json(const BoundsCertificate& c) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& chk : c.checks) checks.push_back({{"name", chk.name}, {"pass", chk.pass}, {"detail", chk.detail}});
  return {{"m", c.m},
          {"depth", c.depth},
          {"lambda_min", c.lambda_min},
          {"lambda_max", c.lambda_max},
          {"A_est", c.A_est},
          {"B_est", c.B_est},
          {"deviation_norm", c.deviation_norm},
          {"norm_sum", {c.norm_sum_interval.first, c.norm_sum_interval.second}},
          {"pass", c.pass()},
          {"eig_residual", c.eig_residual},
          {"checks", std::move(checks)}};
}

int write_riesz(const RunConfig& cfg, std::ostream& out) {
  const BoundsCertificate c = full_report(cfg.m, cfg.depth, cfg.max_index, cfg.tol);
  if (resolve(cfg.format, OutputFormat::json) == OutputFormat::csv) {
    out << "key,value\n"
        << "m," << c.m << "\ndepth," << c.depth << "\nlambda_min," << fmt(c.lambda_min) << "\nlambda_max,"
        << fmt(c.lambda_max) << "\nA_est," << fmt(c.A_est) << "\nB_est," << fmt(c.B_est) << "\ndeviation_norm,"
        << fmt(c.deviation_norm) << "\nnorm_sum_lo," << fmt(c.norm_sum_interval.first) << "\nnorm_sum_hi,"
        << fmt(c.norm_sum_interval.second) << "\neig_residual," << fmt(c.eig_residual) << "\npass,"
        << (c.pass() ? "true" : "false") << '\n';
  } else {
    out << certificate_json(c).dump() << '\n';
  }
  return c.pass() ? 0 : 1;
}

void write_gram(const RunConfig& cfg, std::ostream& out) {
  const GramMatrix g = affine_gram(affine_generator(cfg.m), 0, std::uint64_t{1} << cfg.depth);
  if (resolve(cfg.format, OutputFormat::csv) == OutputFormat::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < g.size(); ++j) row.push_back(g(i, j).to_string());
      rows.push_back(std::move(row));
    }
    out << nlohmann::json{{"m", cfg.m}, {"depth", cfg.depth}, {"entries", std::move(rows)}}.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out << (j ? "," : "") << g(i, j).to_string();
    out << '\n';
  }
}

int write_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<BoundsCertificate> certs;
  for (unsigned m = 1; m <= cfg.m; ++m) certs.push_back(full_report(m, cfg.depth, cfg.max_index, cfg.tol));
  bool all = true;
  for (const auto& c : certs) all = all && c.pass();

  if (cfg.format == OutputFormat::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : certs) rows.push_back(certificate_json(c));
    out << nlohmann::json{{"pass", all}, {"reports", std::move(rows)}}.dump() << '\n';
    return all ? 0 : 1;
  }
  if (cfg.format == OutputFormat::csv) {
    out << "m,check,pass,detail\n";
    for (const auto& c : certs)
      for (const auto& chk : c.checks)
        out << c.m << ',' << chk.name << ',' << (chk.pass ? "PASS" : "FAIL") << ",\"" << chk.detail << "\"\n";
    return all ? 0 : 1;
  }

  out << std::left << std::setw(4) << "m" << std::setw(14) << "lambda_min" << std::setw(14) << "lambda_max"
      << std::setw(14) << "deviation" << std::setw(14) << "norm_sum_hi" << std::setw(8) << "checks"
      << "result\n";
  for (const auto& c : certs) {
    std::size_t ok = 0;
    for (const auto& chk : c.checks) ok += chk.pass ? 1 : 0;
    std::ostringstream counts;
    counts << ok << '/' << c.checks.size();
    out << std::left << std::setprecision(8) << std::setw(4) << c.m << std::setw(14) << c.lambda_min
        << std::setw(14) << c.lambda_max << std::setw(14) << c.deviation_norm << std::setw(14)
        << c.norm_sum_interval.second << std::setw(8) << counts.str() << (c.pass() ? "PASS" : "FAIL") << '\n';
    for (const auto& chk : c.checks)
      if (!chk.pass) out << "    FAIL " << chk.name << ": " << chk.detail << '\n';
  }
  out << (all ? "all checks passed\n" : "some checks FAILED\n");
  return all ? 0 : 1;
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f << contents;
    f.flush();
    if (!f) {
      f.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot move output into place at " + path);
  }
}

}  // namespace

void validate(const RunConfig& cfg) {
  static const char* const kCommands[] = {"spline", "enum", "chaos", "riesz", "gram", "verify"};
  if (std::find(std::begin(kCommands), std::end(kCommands), cfg.subcommand) == std::end(kCommands))
    throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
  if (cfg.depth > kMaxCliDepth) throw UsageError("depth exceeds limit (" + std::to_string(kMaxCliDepth) + ")");
  if (cfg.depth < 1) throw UsageError("depth must be at least 1");
  if (cfg.m > kMaxCliOrder) throw UsageError("m exceeds limit (" + std::to_string(kMaxCliOrder) + ")");
  if (cfg.m < 1) throw UsageError("m must be at least 1");
  if (cfg.max_index > kMaxCliIndex) throw UsageError("max-index exceeds limit (65536)");
  if (cfg.max_index < 7) throw UsageError("max-index must be at least 7");
  if (cfg.samples < 1 || cfg.samples > kMaxCliSamples) throw UsageError("samples must be in [1, 1048576]");
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) throw UsageError("tol must be a positive number");
}

int run(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream buffer;
  std::ostream& sink = cfg.out_path ? static_cast<std::ostream&>(buffer) : out;
  int code = 0;
  if (cfg.subcommand == "spline") {
    write_spline(cfg, sink);
  } else if (cfg.subcommand == "enum") {
    write_enum(cfg, sink);
  } else if (cfg.subcommand == "chaos") {
    write_chaos(cfg, sink);
  } else if (cfg.subcommand == "riesz") {
    code = write_riesz(cfg, sink);
  } else if (cfg.subcommand == "gram") {
    write_gram(cfg, sink);
  } else if (cfg.subcommand == "verify") {
    code = write_verify(cfg, sink);
  } else {
    throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
  }
  if (cfg.out_path) write_atomically(*cfg.out_path, buffer.str());
  return code;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spline affine systems: construction, Walsh/chaos analysis and Riesz bound certificates",
               "spline-affine"};
  app.require_subcommand(1);

  RunConfig cfg;
  bool as_json = false;
  bool as_csv = false;
  std::string out_path;

  struct Spec {
    const char* name;
    const char* help;
    bool m, depth, max_index, samples, tol;
  };
  const Spec specs[] = {
      {"spline", "Sample psi_m on a uniform rational grid (CSV) or dump its exact pieces (--json)", true, false,
       false, true, false},
      {"enum", "Table of multi-indices with Paley/natural indices and chaos orders", false, true, false, false,
       false},
      {"chaos", "Walsh coefficients of psi_m grouped by Rademacher chaos order", true, false, true, false, false},
      {"riesz", "Finite-section Riesz bound certificate for psi_m", true, true, true, false, true},
      {"gram", "Exact Gram matrix of the psi_m affine system", true, true, false, false, false},
      {"verify", "Run every certificate for m = 1..M and print a pass/fail table", true, true, true, false, true},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (s.m) sub->add_option("--m", cfg.m, "spline order")->capture_default_str();
    if (s.depth) sub->add_option("--depth", cfg.depth, "system size 2^depth")->capture_default_str();
    if (s.max_index) sub->add_option("--max-index", cfg.max_index, "largest Paley index")->capture_default_str();
    if (s.samples) sub->add_option("--samples", cfg.samples, "grid intervals")->capture_default_str();
    if (s.tol) sub->add_option("--tol", cfg.tol, "eigensolver off-diagonal tolerance")->capture_default_str();
    auto* j = sub->add_flag("--json", as_json, "JSON output");
    auto* c = sub->add_flag("--csv", as_csv, "CSV output");
    j->excludes(c);
    sub->add_option("--out", out_path, "write output to this file atomically");
    sub->callback([&cfg, sub] { cfg.subcommand = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (as_json) cfg.format = OutputFormat::json;
  if (as_csv) cfg.format = OutputFormat::csv;
  if (!out_path.empty()) cfg.out_path = out_path;

  try {
    validate(cfg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  try {
    return run(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace spline_affine
