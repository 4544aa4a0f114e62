#pragma once

// Command-line front end. run() parses an argument vector, dispatches to the
// library and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success / verified, 1 a mathematical verification failed,
// 2 invalid input or usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "hitchin/bundle_poincare.hpp"
#include "hitchin/geometry_numerics.hpp"
#include "hitchin/git_stability.hpp"
#include "hitchin/higgs_poincare.hpp"
#include "hitchin/json_io.hpp"
#include "hitchin/mirror_check.hpp"

namespace hitchin::cli {

enum class OutputFormat { Plain, Json, Latex };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Largest genus swept exhaustively by `mirror` when --sample is not given.
inline constexpr int kExhaustiveMirrorGenus = 6;
inline constexpr std::uint64_t kDefaultMirrorSample = 64;

inline OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "latex") return OutputFormat::Latex;
  return OutputFormat::Plain;
}

/// Polynomial in display style: 1 + t^{2} + 4t^{3}.
inline std::string latex_poly(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Integer c = p.coeff(i);
    if (c == 0) continue;
    std::string mono;
    if (i == 1) mono = "t";
    if (i >= 2) mono = "t^{" + std::to_string(i) + "}";
    out += detail::term_string(c, mono, first);
    first = false;
  }
  return out;
}

/// Result window for the series pipelines: HITCHIN_TRUNC_ORDER when set,
/// otherwise 6g - 5.
inline int truncation_order(int g) {
  const char* env = std::getenv("HITCHIN_TRUNC_ORDER");
  if (env == nullptr || *env == '\0') return default_truncation_order(g);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(env, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, std::string("HITCHIN_TRUNC_ORDER is not an integer: ") + env);
  }
  detail::require(used == std::string(env).size(),
                  std::string("HITCHIN_TRUNC_ORDER is not an integer: ") + env);
  return value;
}

struct PoincareReport {
  std::string space;
  int genus = 0;
  std::string via;
  std::vector<std::pair<std::string, IntPoly>> pipelines;

  bool agree() const {
    for (const auto& [name, poly] : pipelines)
      if (!(poly == pipelines.front().second)) return false;
    return true;
  }

  std::string disagreement() const {
    const IntPoly& first = pipelines.front().second;
    for (const auto& [name, poly] : pipelines) {
      const IntPoly diff = poly - first;
      if (!diff.is_zero()) {
        const int i = diff.valuation();
        return pipelines.front().first + " and " + name + " differ at t^" + std::to_string(i) +
               ": " + first.coeff(i).str() + " vs " + poly.coeff(i).str();
      }
    }
    return {};
  }
};

inline PoincareReport poincare_report(const std::string& space, int g, const std::string& via) {
  detail::require_genus(g);
  PoincareReport report{space, g, via, {}};
  const bool both = via == "both";
  if (space == "vector-bundles") {
    detail::require(via == "closed" || via == "recursion" || both,
                    "vector-bundles supports --via closed|recursion|both");
    if (via == "closed" || both) report.pipelines.emplace_back("closed", poincare_N_closed(g));
    if (via == "recursion" || both)
      report.pipelines.emplace_back("recursion", poincare_N_recursion(g, truncation_order(g)));
  } else if (space == "higgs") {
    detail::require(via == "closed" || via == "strata" || both,
                    "higgs supports --via closed|strata|both");
    if (via == "closed" || both)
      report.pipelines.emplace_back("closed", poincare_M_closed(g, truncation_order(g)));
    if (via == "strata" || both) report.pipelines.emplace_back("strata", poincare_M_stratified(g));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown space " + space);
  }
  return report;
}

inline int emit_poincare(const PoincareReport& report, OutputFormat format, std::ostream& out,
                         std::ostream& err) {
  const bool agree = report.agree();
  switch (format) {
    case OutputFormat::Json: {
      Json j{{"space", report.space}, {"genus", report.genus}, {"via", report.via}};
      if (report.pipelines.size() == 1) {
        j["coeffs"] = to_json(report.pipelines.front().second);
      } else {
        Json per = Json::object();
        for (const auto& [name, poly] : report.pipelines) per[name] = to_json(poly);
        j["pipelines"] = per;
        j["agree"] = agree;
        if (agree) j["coeffs"] = to_json(report.pipelines.front().second);
      }
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::Latex: {
      const std::string lhs =
          report.space == "higgs" ? "P_t(\\check{\\mathcal{M}})" : "P_t(\\check{\\mathcal{N}})";
      for (const auto& [name, poly] : report.pipelines)
        out << "% genus " << report.genus << ", via " << name << "\n\\[ " << lhs << " = "
            << latex_poly(poly) << " \\]\n";
      break;
    }
    case OutputFormat::Plain:
      for (const auto& [name, poly] : report.pipelines)
        out << report.space << " genus " << report.genus << " via " << name << ": " << poly << "\n";
      if (report.pipelines.size() > 1) out << (agree ? "pipelines agree" : "PIPELINES DISAGREE") << "\n";
      break;
  }
  if (!agree) {
    err << "verification failed: " << report.disagreement() << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

inline int emit_mirror(const MirrorReport& report, OutputFormat format, std::ostream& out,
                       std::ostream& err) {
  std::uint64_t failures = 0;
  for (const auto& c : report.checks)
    if (!c.pass) ++failures;
  switch (format) {
    case OutputFormat::Json: {
      Json j{{"genus", report.genus},
             {"elements_checked", report.elements_checked},
             {"failures", failures},
             {"pass", report.pass},
             {"lhs", to_json(report.lhs)},
             {"rhs_sample", to_json(report.rhs_sample)}};
      if (report.first_violation) j["first_violation"] = *report.first_violation;
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::Latex:
      out << "% genus " << report.genus << ", " << report.elements_checked << " elements checked, "
          << (report.pass ? "pass" : "FAIL") << "\n";
      out << "\\[ E_\\kappa(\\check{\\mathcal{M}}; u, v) = " << report.lhs.to_string() << " \\]\n";
      break;
    case OutputFormat::Plain:
      out << "genus " << report.genus << ": " << report.elements_checked << " elements checked, "
          << (report.pass ? "pass" : "FAIL") << "\n";
      out << "E_kappa = " << report.lhs << "\n";
      out << "rhs     = " << report.rhs_sample << "\n";
      if (!report.pass) out << failures << " element(s) violate the identity\n";
      break;
  }
  if (!report.pass) {
    err << "identity violation: " << report.first_violation.value_or("mismatch") << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

inline Group parse_group(const std::string& name) {
  if (name == "gl") return Group::GL;
  if (name == "pgl") return Group::PGL;
  return Group::SL;
}

inline int emit_dims(const ModuliParams& params, OutputFormat format, std::ostream& out) {
  params.validate();
  std::vector<std::pair<std::string, std::optional<long long>>> rows;
  for (Space space : {Space::VectorBundles, Space::Higgs, Space::HitchinBase}) {
    std::optional<long long> value;
    try {
      value = moduli_dim(params, space);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedCombination) throw;
    }
    rows.emplace_back(std::string(to_string(space)), value);
  }
  const bool half = *rows[2].second * 2 == *rows[1].second;
  const std::string group(to_string(params.group));
  switch (format) {
    case OutputFormat::Json: {
      Json dims = Json::object();
      for (const auto& [name, value] : rows) dims[name] = value ? Json(*value) : Json(nullptr);
      Json j{{"rank", params.rank},   {"genus", params.genus},       {"degree", params.degree},
             {"group", group},        {"dims", dims},                {"base_is_half_higgs", half}};
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::Latex:
      out << "\\begin{tabular}{lr}\n\\hline\nspace & $\\dim_{\\mathbb{C}}$ \\\\\n\\hline\n";
      for (const auto& [name, value] : rows)
        out << name << " & " << (value ? std::to_string(*value) : std::string("--")) << " \\\\\n";
      out << "\\hline\n\\end{tabular}\n";
      break;
    case OutputFormat::Plain:
      out << group << " rank " << params.rank << " genus " << params.genus << "\n";
      for (const auto& [name, value] : rows)
        out << "  " << name << ": " << (value ? std::to_string(*value) : std::string("n/a")) << "\n";
      out << "  hitchin base is half of higgs: " << (half ? "yes" : "no") << "\n";
      break;
  }
  return kExitOk;
}

inline int emit_spectral(int r, int g, long long d, OutputFormat format, std::ostream& out) {
  const SpectralNumbers s = spectral_numbers(r, g, d);
  const bool hurwitz = 2 * s.spectral_genus - 2 == r * (2LL * g - 2) + s.ramification_degree;
  switch (format) {
    case OutputFormat::Json: {
      Json j{{"rank", r},
             {"genus", g},
             {"degree", d},
             {"ramification_degree", s.ramification_degree},
             {"spectral_genus", s.spectral_genus},
             {"line_degree_delta", s.line_degree_delta},
             {"riemann_hurwitz", hurwitz}};
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::Latex:
      out << "\\begin{tabular}{lr}\n\\hline\n$\\deg R$ & " << s.ramification_degree
          << " \\\\\n$g(Y_b)$ & " << s.spectral_genus << " \\\\\n$\\delta$ & " << s.line_degree_delta
          << " \\\\\n\\hline\n\\end{tabular}\n";
      break;
    case OutputFormat::Plain:
      out << "ramification degree: " << s.ramification_degree << "\n"
          << "spectral genus: " << s.spectral_genus << "\n"
          << "line bundle degree: " << s.line_degree_delta << "\n"
          << "riemann-hurwitz: " << (hurwitz ? "consistent" : "INCONSISTENT") << "\n";
      break;
  }
  return hurwitz ? kExitOk : kExitVerificationFailed;
}

inline int emit_classify(const std::vector<long long>& weights, OutputFormat format, std::ostream& out) {
  const WeightProfile profile(weights);
  const Stability verdict = torus_classify(profile);
  const std::string name(to_string(verdict));
  if (format == OutputFormat::Json) {
    Json j{{"weights", weights},
           {"verdict", name},
           {"semistable", is_semistable(verdict)},
           {"polystable", is_polystable(verdict)},
           {"stable", is_stable(verdict)}};
    out << j.dump() << "\n";
  } else {
    out << name << "\n";
  }
  return kExitOk;
}

/// "N:a:r:d,N:a:r:d,..."
inline std::vector<FiltrationBlock> parse_blocks(const std::string& text) {
  std::vector<FiltrationBlock> blocks;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) {
    std::stringstream fields(item);
    std::string field;
    std::vector<long long> values;
    while (std::getline(fields, field, ':')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(field, &used));
        detail::require(used == field.size(), "bad block field '" + field + "'");
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidArgument, "bad block field '" + field + "'");
      }
    }
    detail::require(values.size() == 4, "block '" + item + "' must be N:a:r:d");
    blocks.push_back({values[0], values[1], values[2], values[3]});
  }
  detail::require(!blocks.empty(), "no blocks given");
  return blocks;
}

inline int emit_hm(const FiltrationData& f, OutputFormat format, std::ostream& out) {
  const Integer weight = hm_weight(f);
  if (format == OutputFormat::Json) {
    Json j{{"genus", f.genus},
           {"m", f.m},
           {"n", f.n},
           {"N", f.total_dim()},
           {"weight", integer_to_json(weight)},
           {"expressions_agree", true}};
    out << j.dump() << "\n";
  } else {
    out << "hilbert-mumford weight: " << weight << " (both expressions agree)\n";
  }
  return kExitOk;
}

inline int emit_macdonald(int g, int n, OutputFormat format, std::ostream& out) {
  detail::require_genus(g, 0);
  const IntPoly p = coeff_extract_x(g, n);
  switch (format) {
    case OutputFormat::Json:
      out << Json{{"genus", g}, {"n", n}, {"coeffs", to_json(p)}}.dump() << "\n";
      break;
    case OutputFormat::Latex:
      out << "\\[ P_t(S^{" << n << "}X) = " << latex_poly(p) << " \\]\n";
      break;
    case OutputFormat::Plain:
      out << "P_t(S^" << n << " X), genus " << g << ": " << p << "\n";
      break;
  }
  return kExitOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact topological invariants of rank-2 bundle and Higgs moduli spaces", "hitchin"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "json", "latex"}));

  auto* poincare = app.add_subcommand("poincare", "Poincaré polynomial of a moduli space");
  std::string space;
  std::string via = "both";
  int genus = 0;
  poincare->add_option("--space", space)->required()->check(CLI::IsMember({"vector-bundles", "higgs"}));
  poincare->add_option("--genus", genus)->required();
  poincare->add_option("--via", via, "Pipeline to run")
      ->check(CLI::IsMember({"closed", "strata", "recursion", "both"}));

  auto* mirror = app.add_subcommand("mirror", "Check rank-2 topological mirror symmetry");
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  std::optional<int> perturb_shift;
  bool perturb_pairing = false;
  mirror->add_option("--genus", genus)->required();
  mirror->add_option("--sample", sample, "Number of nonzero 2-torsion elements to check");
  mirror->add_option("--seed", seed, "Seed for --sample");
  mirror->add_option("--perturb-shift", perturb_shift, "Replace the fermionic shift (mutation test)");
  mirror->add_flag("--perturb-pairing", perturb_pairing, "Use a degenerate pairing (mutation test)");

  auto* dims = app.add_subcommand("dims", "Dimensions of moduli spaces and the Hitchin base");
  int rank = 2;
  long long degree = 1;
  std::string group = "sl";
  dims->add_option("--rank", rank)->required();
  dims->add_option("--genus", genus)->required();
  dims->add_option("--degree", degree);
  dims->add_option("--group", group)->check(CLI::IsMember({"gl", "sl", "pgl"}));

  auto* spectral = app.add_subcommand("spectral", "Spectral curve genus, ramification and line degree");
  spectral->add_option("--rank", rank)->required();
  spectral->add_option("--genus", genus)->required();
  spectral->add_option("--degree", degree)->required();

  auto* git = app.add_subcommand("git", "GIT stability tools");
  git->require_subcommand(1);
  auto* classify = git->add_subcommand("classify", "Classify a C^* weight profile");
  std::vector<long long> weights;
  classify->add_option("--weights", weights)->required()->delimiter(',')->allow_extra_args(false);
  auto* hm = git->add_subcommand("hm", "Hilbert–Mumford weight of a filtration");
  std::string blocks;
  long long twist_m = 0;
  long long twist_n = 0;
  hm->add_option("--blocks", blocks, "N:a:r:d,...")->required();
  hm->add_option("--m", twist_m)->required();
  hm->add_option("--n", twist_n);
  hm->add_option("--genus", genus)->required();

  auto* macdonald = app.add_subcommand("macdonald", "Poincaré polynomial of a symmetric product");
  int power = 0;
  macdonald->add_option("--genus", genus)->required();
  macdonald->add_option("--n", power)->required();

  std::vector<const char*> argv{"hitchin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kExitInvalidInput;
  }

  const OutputFormat format = parse_format(format_name);
  try {
    if (poincare->parsed()) return emit_poincare(poincare_report(space, genus, via), format, out, err);
    if (mirror->parsed()) {
      MirrorOptions options;
      options.sample = sample;
      if (!sample && genus > kExhaustiveMirrorGenus) options.sample = kDefaultMirrorSample;
      options.seed = seed;
      options.mutation.fermionic_shift = perturb_shift;
      if (perturb_pairing) options.mutation.pairing = PairingForm::Degenerate;
      return emit_mirror(mirror_verify(genus, options), format, out, err);
    }
    if (dims->parsed()) return emit_dims({rank, static_cast<int>(degree), genus, parse_group(group)}, format, out);
    if (spectral->parsed()) return emit_spectral(rank, genus, degree, format, out);
    if (classify->parsed()) return emit_classify(weights, format, out);
    if (hm->parsed()) {
      FiltrationData f{parse_blocks(blocks), twist_n, twist_m, genus};
      return emit_hm(f, format, out);
    }
    if (macdonald->parsed()) return emit_macdonald(genus, power, format, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return is_verification_failure(e.code()) ? kExitVerificationFailed : kExitInvalidInput;
  }
  err << "no subcommand\n";
  return kExitInvalidInput;
}

}  // namespace hitchin::cli
