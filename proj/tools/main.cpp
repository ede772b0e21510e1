// Command-line front end: spectral gap experiments for reparametrized
// B-spline Galerkin discretizations of the 1-D Dirichlet Laplacian.
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specgap/config.hpp"
#include "specgap/errors.hpp"
#include "specgap/experiments.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::string out_dir;
  std::string name;
  bool svg = false;
  bool dump_matrices = false;
  bool logx = false;
  bool logy = false;
  double quad_tol = -1.0;
  double outlier_tol = -1.0;
  double bisect_tol = -1.0;
  int grid_size = -1;
  int points = -1;
  std::vector<int> p_list, n_list;
  std::vector<std::string> phi_specs;
  double y0 = 0.0, y1 = 0.0;
  int bins = -1;
  std::string phi_a, phi_b;
  double win_lo = 0.0, win_hi = 0.0;
  bool have_window = false;
  bool have_pack_window = false;
};

// defaults < config [""] < config [subcommand] < explicit flags
specgap::ExperimentConfig build_config(const Flags& f, const std::string& subcommand) {
  specgap::ExperimentConfig cfg;
  if (!f.config_path.empty()) {
    const specgap::ConfigMap file = specgap::parse_config_file(f.config_path);
    specgap::apply_config_section(cfg, file, "");
    specgap::apply_config_section(cfg, file, subcommand);
  }
  if (!f.p_list.empty()) cfg.p_list = f.p_list;
  if (!f.n_list.empty()) cfg.n_list = f.n_list;
  if (!f.phi_specs.empty()) cfg.phi_specs = f.phi_specs;
  if (!f.out_dir.empty()) cfg.out_dir = f.out_dir;
  if (!f.name.empty()) cfg.name = f.name;
  if (f.svg) cfg.write_svg = true;
  if (f.dump_matrices) cfg.dump_matrices = true;
  if (f.logx) cfg.logx = true;
  if (f.logy) cfg.logy = true;
  if (f.quad_tol > 0) cfg.quad_tol = f.quad_tol;
  if (f.outlier_tol > 0) cfg.outlier_tol = f.outlier_tol;
  if (f.bisect_tol > 0) cfg.bisect_tol = f.bisect_tol;
  if (f.grid_size > 0) cfg.grid_size = f.grid_size;
  if (f.points > 0) cfg.sample_points = f.points;
  if (f.have_pack_window) {
    cfg.y0 = f.y0;
    cfg.y1 = f.y1;
  }
  if (f.bins > 0) cfg.bins = f.bins;
  if (!f.phi_a.empty()) cfg.phi_a = f.phi_a;
  if (!f.phi_b.empty()) cfg.phi_b = f.phi_b;
  if (f.have_window) {
    cfg.win_lo = f.win_lo;
    cfg.win_hi = f.win_hi;
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral gaps of B-spline Galerkin discretizations under mesh "
               "reparametrization"};
  app.require_subcommand(1);

  Flags f;
  app.add_option("--config", f.config_path, "key=value config file with [sections]");
  app.add_option("--out", f.out_dir, "output directory root (default: out)");
  app.add_option("--name", f.name, "output subdirectory (default: subcommand name)");
  app.add_flag("--svg", f.svg, "also write SVG figures");
  app.add_flag("--logx", f.logx, "log-scale x axis in figures");
  app.add_flag("--logy", f.logy, "log-scale y axis in figures");
  app.add_option("--quad-tol", f.quad_tol, "assembly quadrature doubling tolerance");
  app.add_option("--outlier-tol", f.outlier_tol, "relative slack over the symbol range");
  app.add_option("--bisect-tol", f.bisect_tol, "bisection tolerance for quantiles");

  auto add_case_options = [&](CLI::App* sub) {
    sub->fallthrough();  // let the global flags appear after the subcommand
    sub->add_option("-p,--degree", f.p_list, "spline degrees");
    sub->add_option("-n,--spans", f.n_list, "span counts");
    sub->add_option("--phi", f.phi_specs,
                    "reparametrization specs (phi1 | phi2 | phi3:theta=V | "
                    "Phi:p=K,theta=V | expfam:a=V,gamma=V | logfam:a=V,gamma=V | identity)");
  };

  CLI::App* symbol = app.add_subcommand(
      "symbol", "sample the rearranged symbol and the normalized spectrum");
  add_case_options(symbol);
  symbol->add_option("--points", f.points, "quantile sample count");

  CLI::App* eig = app.add_subcommand("eig", "eigenvalues of one or more cases");
  add_case_options(eig);
  eig->add_flag("--dump-matrices", f.dump_matrices, "also write mass/stiffness matrices");

  CLI::App* gap = app.add_subcommand("gap-sweep", "minimal-gap statistics over a case grid");
  add_case_options(gap);

  CLI::App* weyl = app.add_subcommand(
      "weyl", "eigenvalue counting and sampling errors against the symbol");
  add_case_options(weyl);
  weyl->add_option("--grid", f.grid_size, "y-grid size for the counting error");

  CLI::App* pack = app.add_subcommand("pack", "bin counts of normalized sqrt-eigenvalues");
  add_case_options(pack);
  CLI::Option* y0o = pack->add_option("--y0", f.y0, "window start (default 0)");
  CLI::Option* y1o = pack->add_option("--y1", f.y1, "window end (default: symbol range)");
  pack->add_option("--bins", f.bins, "bin count");

  CLI::App* compare = app.add_subcommand(
      "compare", "per-index eigenvalue ordering of two maps on a symbol window");
  compare->fallthrough();
  compare->add_option("-p,--degree", f.p_list, "spline degree (one value)");
  compare->add_option("-n,--spans", f.n_list, "span count (one value)");
  compare->add_option("--phi-a", f.phi_a, "first map")->required();
  compare->add_option("--phi-b", f.phi_b, "second map")->required();
  CLI::Option* wlo = compare->add_option("--win-lo", f.win_lo, "window start, symbol scale");
  CLI::Option* whi =
      compare->add_option("--win-hi", f.win_hi, "window end, symbol scale")->needs(wlo);

  CLI::App* vphi = app.add_subcommand("validate-phi", "admissibility report for maps");
  vphi->fallthrough();
  vphi->add_option("--phi", f.phi_specs, "reparametrization specs")->required();

  std::string target;
  CLI::App* repro =
      app.add_subcommand("reproduce", "canned experiments (tables and figures)");
  repro->fallthrough();
  std::string targets_help = "one of:";
  for (const auto& t : specgap::reproduce_targets()) targets_help += " " + t;
  repro->add_option("target", target, targets_help)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    f.have_window = wlo->count() > 0 || whi->count() > 0;
    f.have_pack_window = y0o->count() > 0 || y1o->count() > 0;
    if (symbol->parsed()) return specgap::cmd_symbol(build_config(f, "symbol"));
    if (eig->parsed()) return specgap::cmd_eig(build_config(f, "eig"));
    if (gap->parsed()) return specgap::cmd_gap_sweep(build_config(f, "gap-sweep"));
    if (weyl->parsed()) return specgap::cmd_weyl(build_config(f, "weyl"));
    if (pack->parsed()) return specgap::cmd_pack(build_config(f, "pack"));
    if (compare->parsed()) return specgap::cmd_compare(build_config(f, "compare"));
    if (vphi->parsed()) return specgap::cmd_validate_phi(build_config(f, "validate-phi"));
    if (repro->parsed()) return specgap::cmd_reproduce(target, build_config(f, "reproduce"));
  } catch (const specgap::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const specgap::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 2;
  } catch (const specgap::DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 3;
  }
  return 0;
}
