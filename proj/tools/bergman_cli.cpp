// bergman-spectra: command-line surface for the spectral library.
//
// Exit codes: 0 success, 1 verification/check failure, 2 usage or
// parameter error.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "bergman/ballquad.hpp"
#include "bergman/classify.hpp"
#include "bergman/errors.hpp"
#include "bergman/spectral.hpp"
#include "bergman/verify.hpp"

using nlohmann::json;
namespace spectral = bergman::spectral;
namespace ballquad = bergman::ballquad;
namespace classify = bergman::classify;
namespace verify = bergman::verify;

namespace {

std::string sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// A measured quantity compared against a tolerance; the JSON schema gives
// every such field a value, a tolerance, and a pass flag.
json checked(double value, double tolerance, bool pass) {
  return json{{"value", value}, {"tolerance", tolerance}, {"pass", pass}};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw bergman::ParameterError("cannot open --out path: " + out_path);
  f << text << "\n";
}

std::string tri_name(classify::Tri t) {
  switch (t) {
    case classify::Tri::Yes: return "yes";
    case classify::Tri::No: return "no";
    default: return "unknown";
  }
}

struct Common {
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out, "Write the report to a file");
}

int run(int argc, char** argv) {
  CLI::App app{
      "Spectral toolkit for Bergman-type integral operators on the unit "
      "ball"};
  app.require_subcommand(1);

  // ---- spectrum ----
  double sp_alpha = 0.5;
  int sp_dim = 1;
  std::uint64_t sp_count = 10;
  Common sp_common;
  auto* sp = app.add_subcommand(
      "spectrum", "List the leading singular values with multiplicities");
  sp->add_option("--alpha", sp_alpha, "Kernel exponent")->required();
  sp->add_option("--dim", sp_dim, "Complex dimension d >= 1")->required();
  sp->add_option("--count", sp_count, "Number of singular values");
  add_common(sp, sp_common);

  // ---- classify ----
  std::string cl_alpha, cl_p, cl_q;
  std::string cl_kind = "k";
  int cl_dim = 1;
  Common cl_common;
  auto* cl = app.add_subcommand(
      "classify", "L^p-L^q boundedness/compactness verdict");
  cl->add_option("--alpha", cl_alpha,
                 "Kernel exponent (decimal or exact a/b)")->required();
  cl->add_option("--dim", cl_dim, "Complex dimension d >= 1")->required();
  cl->add_option("--p", cl_p, "Source exponent in [1, inf], 'inf' allowed")
      ->required();
  cl->add_option("--q", cl_q, "Target exponent in [1, inf], 'inf' allowed")
      ->required();
  cl->add_option("--kind", cl_kind, "Kernel kind")
      ->check(CLI::IsMember({"k", "kplus"}));
  add_common(cl, cl_common);

  // ---- schatten ----
  double sc_alpha = 0.5, sc_p = 1.0, sc_tol = 1e-12;
  int sc_dim = 1;
  Common sc_common;
  auto* sc = app.add_subcommand(
      "schatten", "Schatten p-sum and Schatten/Macaev membership");
  sc->add_option("--alpha", sc_alpha, "Kernel exponent")->required();
  sc->add_option("--dim", sc_dim, "Complex dimension d >= 1")->required();
  sc->add_option("--p", sc_p, "Schatten exponent p > 0")->required();
  sc->add_option("--tol", sc_tol, "Series tolerance");
  add_common(sc, sc_common);

  // ---- dixmier ----
  double dx_alpha = 1.0;
  int dx_dim = 1;
  std::uint64_t dx_kmax = 1000000;
  Common dx_common;
  auto* dx = app.add_subcommand(
      "dixmier", "Dixmier trace estimate via logarithmic averaging");
  dx->add_option("--alpha", dx_alpha, "Kernel exponent")->required();
  dx->add_option("--dim", dx_dim, "Complex dimension d >= 1")->required();
  dx->add_option("--k-max", dx_kmax, "Largest partial-sum index");
  add_common(dx, dx_common);

  // ---- berezin ----
  double bz_alpha = 1.0, bz_r = 0.5, bz_tol = 1e-6;
  int bz_dim = 1;
  int bz_radial = ballquad::kDefaultRadial;
  int bz_angular = ballquad::kDefaultAngular;
  Common bz_common;
  auto* bz = app.add_subcommand(
      "berezin", "Berezin transform: quadrature against the closed form");
  bz->add_option("--alpha", bz_alpha, "Kernel exponent")->required();
  bz->add_option("--dim", bz_dim, "Complex dimension d >= 1")->required();
  bz->add_option("--r", bz_r, "Evaluation radius |z| in [0, 1)")->required();
  bz->add_option("--tol", bz_tol, "Relative comparison tolerance");
  bz->add_option("--radial", bz_radial, "Radial quadrature nodes");
  bz->add_option("--angular", bz_angular, "Angular quadrature nodes");
  add_common(bz, bz_common);

  // ---- frudin ----
  double fr_c = 1.0, fr_t = 0.0, fr_r = 0.5, fr_tol = 1e-6;
  int fr_dim = 1;
  bool fr_quad = false;
  Common fr_common;
  auto* fr = app.add_subcommand(
      "frudin", "Forelli-Rudin integral: series value and asymptotics");
  fr->add_option("--c", fr_c, "Kernel exponent c")->required();
  fr->add_option("--t", fr_t, "Weight exponent t > -1")->required();
  fr->add_option("--r", fr_r, "Evaluation radius in [0, 1]")->required();
  fr->add_option("--dim", fr_dim, "Complex dimension d >= 1")->required();
  fr->add_flag("--quadrature", fr_quad,
               "Also evaluate by ball quadrature and compare");
  fr->add_option("--tol", fr_tol, "Relative comparison tolerance");
  add_common(fr, fr_common);

  // ---- trace ----
  double tr_alpha = 0.5, tr_tol = 1e-8;
  int tr_dim = 1;
  Common tr_common;
  auto* tr = app.add_subcommand(
      "trace", "Trace: eigenvalue series against the closed form");
  tr->add_option("--alpha", tr_alpha, "Kernel exponent, alpha < 1")
      ->required();
  tr->add_option("--dim", tr_dim, "Complex dimension d >= 1")->required();
  tr->add_option("--tol", tr_tol, "Relative comparison tolerance");
  add_common(tr, tr_common);

  // ---- verify ----
  std::string vf_suite = "all";
  Common vf_common;
  auto* vf = app.add_subcommand("verify", "Run the verification suites");
  vf->add_option("--suite", vf_suite, "Suite to run")
      ->check(CLI::IsMember(
          {"all", "specfun", "spectral", "quad", "nystrom", "classify"}));
  add_common(vf, vf_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; usage errors exit 2
  }

  if (sp->parsed()) {
    const auto params = spectral::OperatorParams::make(sp_alpha, sp_dim);
    const auto stream = spectral::singular_values(params, sp_count);
    if (sp_common.format == "csv") {
      std::ostringstream os;
      os << "k,value,degree,multiplicity";
      for (std::size_t i = 0; i < stream.values.size(); ++i) {
        const auto& e = stream.values[i];
        os << "\n" << (i + 1) << "," << sig12(e.value) << "," << e.degree
           << "," << spectral::multiplicity(sp_dim, e.degree);
      }
      emit(os.str(), sp_common.out);
    } else {
      json rows = json::array();
      for (std::size_t i = 0; i < stream.values.size(); ++i) {
        const auto& e = stream.values[i];
        rows.push_back({{"k", i + 1},
                        {"value", e.value},
                        {"degree", e.degree},
                        {"multiplicity",
                         spectral::multiplicity(sp_dim, e.degree)}});
      }
      emit(json{{"alpha", sp_alpha}, {"dim", sp_dim}, {"rows", rows}}
               .dump(2),
           sp_common.out);
    }
    return 0;
  }

  if (cl->parsed()) {
    const auto verdict = classify::compactness(
        classify::parse_rational(cl_alpha), cl_dim,
        classify::parse_exponent(cl_p), classify::parse_exponent(cl_q),
        cl_kind == "kplus" ? classify::Kind::Kplus : classify::Kind::K);
    if (cl_common.format == "csv") {
      std::ostringstream os;
      os << "alpha,dim,p,q,kind,compact,bounded,rule\n"
         << cl_alpha << "," << cl_dim << "," << cl_p << "," << cl_q << ","
         << cl_kind << "," << (verdict.compact ? "yes" : "no") << ","
         << tri_name(verdict.bounded) << "," << verdict.rule;
      emit(os.str(), cl_common.out);
    } else {
      emit(json{{"alpha", cl_alpha},
                {"dim", cl_dim},
                {"p", cl_p},
                {"q", cl_q},
                {"kind", cl_kind},
                {"compact", verdict.compact ? "yes" : "no"},
                {"bounded", tri_name(verdict.bounded)},
                {"rule", verdict.rule}}
               .dump(2),
           cl_common.out);
    }
    return 0;
  }

  if (sc->parsed()) {
    const auto params = spectral::OperatorParams::make(sc_alpha, sc_dim);
    const auto sum = spectral::schatten_sum(params, sc_p, sc_tol);
    const auto mem = classify::schatten_macaev(sc_alpha, sc_dim, sc_p);
    json j{{"alpha", sc_alpha},
           {"dim", sc_dim},
           {"p", sc_p},
           {"threshold", spectral::schatten_threshold(params)},
           {"converged", sum.converged},
           {"partial_sum", sum.partial_sum},
           {"terms", sum.terms},
           {"schatten_member", mem.schatten},
           {"macaev_member", mem.macaev},
           {"hausdorff_dim", mem.hausdorff_dim}};
    if (sum.converged) j["value"] = sum.value;
    if (sc_common.format == "csv") {
      std::ostringstream os;
      os << "alpha,dim,p,converged,value,schatten_member,macaev_member\n"
         << sig12(sc_alpha) << "," << sc_dim << "," << sig12(sc_p) << ","
         << (sum.converged ? "true" : "false") << ","
         << (sum.converged ? sig12(sum.value) : "") << ","
         << (mem.schatten ? "true" : "false") << ","
         << (mem.macaev ? "true" : "false");
      emit(os.str(), sc_common.out);
    } else {
      emit(j.dump(2), sc_common.out);
    }
    return 0;
  }

  if (dx->parsed()) {
    const auto params = spectral::OperatorParams::make(dx_alpha, dx_dim);
    const auto acc = spectral::dixmier_trace_estimate(params, dx_kmax);
    if (dx_common.format == "csv") {
      std::ostringstream os;
      os << "k,partial_sum,estimate";
      for (std::size_t i = 0; i < acc.ks.size(); ++i) {
        os << "\n" << acc.ks[i] << "," << sig12(acc.partial_sums[i]) << ","
           << sig12(acc.estimates[i]);
      }
      os << "\nextrapolated," << sig12(acc.extrapolated) << ",";
      emit(os.str(), dx_common.out);
    } else {
      emit(json{{"alpha", dx_alpha},
                {"dim", dx_dim},
                {"k_max", dx_kmax},
                {"ks", acc.ks},
                {"partial_sums", acc.partial_sums},
                {"estimates", acc.estimates},
                {"extrapolated", acc.extrapolated}}
               .dump(2),
           dx_common.out);
    }
    return 0;
  }

  if (bz->parsed()) {
    const auto grid =
        ballquad::make_ball_grid(bz_dim, bz_radial, bz_angular);
    const double qv =
        ballquad::berezin_quadrature(bz_alpha, bz_dim, bz_r, grid);
    const double cv = ballquad::berezin_closed(bz_alpha, bz_dim, bz_r);
    const double rel = qv / cv - 1.0;
    const bool pass = std::abs(rel) <= bz_tol;
    if (bz_common.format == "csv") {
      std::ostringstream os;
      os << "alpha,dim,r,closed,quadrature,relative_error,pass\n"
         << sig12(bz_alpha) << "," << bz_dim << "," << sig12(bz_r) << ","
         << sig12(cv) << "," << sig12(qv) << "," << sig12(rel) << ","
         << (pass ? "true" : "false");
      emit(os.str(), bz_common.out);
    } else {
      emit(json{{"alpha", bz_alpha},
                {"dim", bz_dim},
                {"r", bz_r},
                {"closed", cv},
                {"quadrature", qv},
                {"relative_error", checked(rel, bz_tol, pass)}}
               .dump(2),
           bz_common.out);
    }
    return pass ? 0 : 1;
  }

  if (fr->parsed()) {
    const double sv = ballquad::fr_series({fr_c, fr_t, fr_r}, fr_dim);
    const auto fit = ballquad::fr_asymptotic_classify(fr_c, fr_t, fr_dim);
    const char* kind = fit.kind == ballquad::Asymptotic::Bounded ? "bounded"
                       : fit.kind == ballquad::Asymptotic::Log  ? "log"
                                                                : "power";
    json j{{"c", fr_c},
           {"t", fr_t},
           {"r", fr_r},
           {"dim", fr_dim},
           {"series", sv},
           {"asymptotic", kind}};
    if (fit.kind == ballquad::Asymptotic::Power) {
      j["asymptotic_exponent"] = fit.exponent;
    }
    bool pass = true;
    if (fr_quad) {
      const auto grid = ballquad::make_ball_grid(fr_dim);
      const double qv = ballquad::fr_quadrature(fr_c, fr_t, fr_r, grid);
      const double rel = qv / sv - 1.0;
      pass = std::abs(rel) <= fr_tol;
      j["quadrature"] = qv;
      j["relative_error"] = checked(rel, fr_tol, pass);
    }
    if (fr_common.format == "csv") {
      std::ostringstream os;
      os << "c,t,r,dim,series,asymptotic\n"
         << sig12(fr_c) << "," << sig12(fr_t) << "," << sig12(fr_r) << ","
         << fr_dim << "," << sig12(sv) << "," << kind;
      emit(os.str(), fr_common.out);
    } else {
      emit(j.dump(2), fr_common.out);
    }
    return pass ? 0 : 1;
  }

  if (tr->parsed()) {
    const auto params = spectral::OperatorParams::make(tr_alpha, tr_dim);
    const double closed = ballquad::trace_formula(tr_alpha, tr_dim);
    const auto sum = spectral::schatten_sum(params, 1.0);
    const double rel = sum.value / closed - 1.0;
    const bool pass = sum.converged && std::abs(rel) <= tr_tol;
    if (tr_common.format == "csv") {
      std::ostringstream os;
      os << "alpha,dim,closed,series,relative_error,pass\n"
         << sig12(tr_alpha) << "," << tr_dim << "," << sig12(closed) << ","
         << sig12(sum.value) << "," << sig12(rel) << ","
         << (pass ? "true" : "false");
      emit(os.str(), tr_common.out);
    } else {
      emit(json{{"alpha", tr_alpha},
                {"dim", tr_dim},
                {"closed", closed},
                {"series", sum.value},
                {"relative_error", checked(rel, tr_tol, pass)}}
               .dump(2),
           tr_common.out);
    }
    return pass ? 0 : 1;
  }

  if (vf->parsed()) {
    const auto rep = verify::run_suite(vf_suite);
    if (vf_common.format == "csv") {
      std::ostringstream os;
      os << "name,value,target,tolerance,pass,detail";
      for (const auto& c : rep.checks) {
        os << "\n" << c.name << "," << sig12(c.value) << ","
           << sig12(c.target) << "," << sig12(c.tolerance) << ","
           << (c.pass ? "true" : "false") << ",\"" << c.detail << "\"";
      }
      emit(os.str(), vf_common.out);
    } else {
      json checks = json::array();
      for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"target", c.target},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass},
                          {"detail", c.detail}});
      }
      emit(json{{"suite", rep.suite},
                {"seconds", rep.seconds},
                {"pass", rep.all_pass()},
                {"checks", checks}}
               .dump(2),
           vf_common.out);
    }
    return rep.all_pass() ? 0 : 1;
  }

  return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bergman::BergmanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
