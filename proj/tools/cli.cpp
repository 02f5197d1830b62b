#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffproj/gen.hpp"
#include "ffproj/grassmann.hpp"
#include "ffproj/incidence.hpp"
#include "ffproj/io.hpp"
#include "ffproj/sweep.hpp"
#include "ffproj/verify.hpp"

namespace {

using namespace ffproj;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitBudget = 4;

struct Common {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::string format = "json";
};

Prime make_prime(std::uint32_t p) { return Prime(p); }

int emit(Report rep, const Common& common, double ms) {
  rep.timing_ms = ms;
  if (common.format == "csv")
    std::cout << rep.rows_csv();
  else
    std::cout << rep.to_json().dump(2) << "\n";
  return rep.pass.has_value() && !*rep.pass ? kExitCheckFailed : kExitOk;
}

BoundSpec spec_from_flags(const std::string& name, const std::string& eps,
                          const std::string& delta, std::int64_t d) {
  BoundSpec spec;
  spec.name = bound_name_from_string(name);
  if (!eps.empty()) spec.eps = Rational::parse(eps);
  if (!delta.empty()) spec.delta = Rational::parse(delta);
  if (d >= 0) spec.d = std::uint64_t(d);
  return spec;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{
      "Exact experiments with projections of point sets over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --seed etc. appear after the subcommand

  Common common;
  app.add_option("--budget", common.budget,
                 "enumeration budget (elements visited)")
      ->capture_default_str();
  app.add_option("--seed", common.seed, "master seed, echoed in the report")
      ->capture_default_str();
  app.add_option("--format", common.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::function<Report()> action;

  // ---- gr ----------------------------------------------------------------
  auto* gr = app.add_subcommand("gr", "Grassmannian counting and enumeration");
  gr->require_subcommand(1);
  struct {
    std::uint32_t p = 2;
    std::size_t n = 1, m = 0;
  } gr_args;

  auto add_gr_opts = [&](CLI::App* cmd) {
    cmd->add_option("--p", gr_args.p, "prime modulus")->required();
    cmd->add_option("--n", gr_args.n, "ambient dimension")->required();
    cmd->add_option("--m", gr_args.m, "subspace dimension")->required();
  };

  auto* gr_count_cmd = gr->add_subcommand(
      "count", "Number of m-dimensional subspaces (Gaussian binomial)");
  add_gr_opts(gr_count_cmd);
  gr_count_cmd->callback([&] {
    action = [&]() {
      Prime p = make_prime(gr_args.p);
      BigUint count = gr_count_big(gr_args.n, gr_args.m, p);
      Report rep;
      rep.command = "gr count";
      rep.seed = common.seed;
      rep.params = {{"p", gr_args.p}, {"n", gr_args.n}, {"m", gr_args.m}};
      nlohmann::json row;
      if (auto small = count.to_u64())
        row["count"] = *small;
      else
        row["count"] = count.to_string();
      rep.rows.push_back(std::move(row));
      return rep;
    };
  });

  auto* gr_enum_cmd = gr->add_subcommand(
      "enum", "List every m-dimensional subspace in canonical order");
  add_gr_opts(gr_enum_cmd);
  gr_enum_cmd->callback([&] {
    action = [&]() {
      Prime p = make_prime(gr_args.p);
      Ambient amb{p, gr_args.n};
      Report rep;
      rep.command = "gr enum";
      rep.seed = common.seed;
      rep.params = {{"p", gr_args.p}, {"n", gr_args.n}, {"m", gr_args.m}};
      gr_for_each(amb, gr_args.m, [&](const Subspace& w) {
        nlohmann::json row;
        row["subspace"] = w.to_literal();
        rep.rows.push_back(std::move(row));
      }, common.budget);
      rep.params["count"] = rep.rows.size();
      return rep;
    };
  });

  // ---- project -----------------------------------------------------------
  auto* project_cmd = app.add_subcommand(
      "project", "Quotient projection of a point set along a subspace");
  struct {
    std::string points, w;
  } project_args;
  project_cmd->add_option("--points", project_args.points, "point set file")
      ->required();
  project_cmd
      ->add_option("--w", project_args.w, "subspace literal, e.g. \"1 0; 0 1\"")
      ->required();
  project_cmd->callback([&] {
    action = [&]() {
      PointSet k = read_pointset_file(project_args.points, std::cerr);
      Subspace w = Subspace::parse_literal(k.ambient(), project_args.w);
      ProjectionImage img = project(k, w);
      Report rep;
      rep.command = "project";
      rep.seed = common.seed;
      rep.params = {{"p", k.ambient().p.value()},
                    {"n", k.ambient().n},
                    {"size_k", k.size()},
                    {"w", w.to_literal()},
                    {"image_size", img.size()}};
      for (const auto& r : img.representatives) {
        nlohmann::json row;
        row["representative"] = r.str();
        row["fiber_size"] = img.fibers.at(r).size();
        rep.rows.push_back(std::move(row));
      }
      return rep;
    };
  });

  // ---- exceptional ---------------------------------------------------------
  auto* exc_cmd = app.add_subcommand(
      "exceptional", "Subspaces whose projection of the point set is small");
  struct {
    std::string points;
    std::size_t m = 1;
    std::uint64_t threshold = 0;
    bool not_full = false;
  } exc_args;
  exc_cmd->add_option("--points", exc_args.points, "point set file")->required();
  exc_cmd->add_option("--m", exc_args.m, "projection dimension")->required();
  exc_cmd->add_option("--threshold", exc_args.threshold,
                      "keep W with image size <= threshold");
  exc_cmd->add_flag("--not-full", exc_args.not_full,
                    "keep W with image size != p^m instead");
  exc_cmd->callback([&] {
    action = [&]() {
      PointSet k = read_pointset_file(exc_args.points, std::cerr);
      ExceptionalMode mode =
          exc_args.not_full ? ExceptionalMode::NotFull : ExceptionalMode::AtMost;
      SubspaceFamily fam = exceptional_set(k, exc_args.m, exc_args.threshold,
                                           mode, common.budget);
      Report rep;
      rep.command = "exceptional";
      rep.seed = common.seed;
      rep.params = {{"p", k.ambient().p.value()},
                    {"n", k.ambient().n},
                    {"m", exc_args.m},
                    {"mode", exc_args.not_full ? "not-full" : "at-most"},
                    {"threshold", exc_args.threshold},
                    {"size_k", k.size()},
                    {"count", fam.size()}};
      for (const auto& w : fam.members()) {
        nlohmann::json row;
        row["subspace"] = w.to_literal();
        rep.rows.push_back(std::move(row));
      }
      return rep;
    };
  });

  // ---- family check --------------------------------------------------------
  auto* family = app.add_subcommand("family", "Subspace family utilities");
  family->require_subcommand(1);
  auto* fam_check = family->add_subcommand(
      "check", "Non-degeneracy and non-concentration of a family");
  struct {
    std::string file, kappa;
  } fam_args;
  fam_check->add_option("--family", fam_args.file, "family file")->required();
  fam_check->add_option("--kappa", fam_args.kappa,
                        "also check non-concentration at this exponent (a/b)");
  fam_check->callback([&] {
    action = [&]() {
      SubspaceFamily e = read_family_file(fam_args.file, std::cerr);
      auto nd = is_nondegenerate(e, common.budget);
      Report rep;
      rep.command = "family check";
      rep.seed = common.seed;
      rep.params = {{"p", e.ambient().p.value()},
                    {"n", e.ambient().n},
                    {"m", e.member_dim()},
                    {"size", e.size()}};
      nlohmann::json row;
      row["nondegenerate"] = nd.nondegenerate;
      if (nd.witness) row["witness"] = nd.witness->to_literal();
      if (!e.empty())
        row["common_intersection_dim"] = common_intersection(e).dim();
      if (!fam_args.kappa.empty()) {
        auto nc = nonconcentration_check(e, Rational::parse(fam_args.kappa),
                                         common.budget);
        row["nonconcentrated"] = nc.holds;
        row["worst_count"] = nc.worst_count;
        row["worst_v"] = nc.worst_v.to_literal();
      }
      rep.rows.push_back(std::move(row));
      rep.pass = nd.nondegenerate;
      return rep;
    };
  });

  // ---- incidence -----------------------------------------------------------
  auto* inc_cmd = app.add_subcommand(
      "incidence", "Point-line incidences in the affine plane");
  struct {
    std::string points, lines;
    bool all_lines = false;
  } inc_args;
  inc_cmd->add_option("--points", inc_args.points, "point set file (n = 2)")
      ->required();
  inc_cmd->add_option("--lines", inc_args.lines,
                      "line family literal \"a b c, a b c\"");
  inc_cmd->add_flag("--all-lines", inc_args.all_lines, "use every affine line");
  inc_cmd->callback([&] {
    action = [&]() {
      PointSet k = read_pointset_file(inc_args.points, std::cerr);
      Prime p = k.ambient().p;
      if (inc_args.all_lines == inc_args.lines.empty() && !inc_args.all_lines)
        throw RangeError("need exactly one of --lines / --all-lines");
      LineFamily lines = inc_args.all_lines
                             ? all_planar_lines(p)
                             : parse_line_family(p, inc_args.lines);
      std::uint64_t count = incidences(k, lines);
      Report rep;
      rep.command = "incidence";
      rep.seed = common.seed;
      rep.params = {{"p", p.value()},
                    {"size_k", k.size()},
                    {"num_lines", lines.size()}};
      nlohmann::json row;
      row["incidences"] = count;
      rep.rows.push_back(std::move(row));
      return rep;
    };
  });

  // ---- stevens ---------------------------------------------------------
  auto* stv_cmd = app.add_subcommand(
      "stevens", "Stevens incidence bound for a grid of points");
  struct {
    std::uint32_t p = 2;
    std::string a, b, lines;
    bool all_lines = false;
  } stv_args;
  stv_cmd->add_option("--p", stv_args.p, "prime modulus")->required();
  stv_cmd->add_option("--a", stv_args.a, "first coordinate set, e.g. \"0,1,4\"")
      ->required();
  stv_cmd->add_option("--b", stv_args.b, "second coordinate set")->required();
  stv_cmd->add_option("--lines", stv_args.lines, "line family literal");
  stv_cmd->add_flag("--all-lines", stv_args.all_lines, "use every affine line");
  stv_cmd->callback([&] {
    action = [&]() {
      Prime p = make_prime(stv_args.p);
      if (stv_args.all_lines == stv_args.lines.empty() && !stv_args.all_lines)
        throw RangeError("need exactly one of --lines / --all-lines");
      LineFamily lines = stv_args.all_lines
                             ? all_planar_lines(p)
                             : parse_line_family(p, stv_args.lines);
      Report rep = stevens_report(parse_scalar_set(p, stv_args.a),
                                  parse_scalar_set(p, stv_args.b), lines);
      rep.seed = common.seed;
      return rep;
    };
  });

  // ---- verify ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Exact checks and ratio reports");
  verify->require_subcommand(1);

  auto* vchen = verify->add_subcommand(
      "chen", "Chen's exceptional-set estimates, checked exactly");
  struct {
    std::string points;
    std::size_t m = 1;
    int statement = 1;
  } chen_args;
  vchen->add_option("--points", chen_args.points, "point set file")->required();
  vchen->add_option("--m", chen_args.m, "projection dimension")->required();
  vchen->add_option("--statement", chen_args.statement,
                    "which estimate: 1 (small K), 2 (large K), 3 (full image)")
      ->required();
  vchen->callback([&] {
    action = [&]() {
      PointSet k = read_pointset_file(chen_args.points, std::cerr);
      Report rep = chen_verify(k, chen_args.m, chen_args.statement, common.budget);
      rep.seed = common.seed;
      return rep;
    };
  });

  auto* vbound = verify->add_subcommand(
      "bound",
      "Ratio of best projection to a named lower bound (Bourgain-type, "
      "line, planar, LPV, Chen-induced, improvement)");
  struct {
    std::string points, family, spec, eps, delta;
    std::int64_t d = -1;
  } bound_args;
  vbound->add_option("--points", bound_args.points, "point set file")
      ->required();
  vbound->add_option("--family", bound_args.family, "family file")->required();
  vbound
      ->add_option("--spec", bound_args.spec,
                   "bound name: chen-induced, line, bourgain, improvement, "
                   "planar, lpv")
      ->required();
  vbound->add_option("--eps", bound_args.eps, "exponent parameter (a/b)");
  vbound->add_option("--delta", bound_args.delta, "margin parameter (a/b)");
  vbound->add_option("--d", bound_args.d, "dimension parameter");
  vbound->callback([&] {
    action = [&]() {
      PointSet k = read_pointset_file(bound_args.points, std::cerr);
      SubspaceFamily e = read_family_file(bound_args.family, std::cerr);
      BoundSpec spec = spec_from_flags(bound_args.spec, bound_args.eps,
                                       bound_args.delta, bound_args.d);
      Report rep = bound_report(k, e, spec, common.budget);
      rep.seed = common.seed;
      return rep;
    };
  });

  auto* vprops = verify->add_subcommand(
      "props",
      "Subspace-pair inequalities: intersection bound, fiber-square bound, "
      "dyadic sum pipeline");
  struct {
    std::string points, w1, w2, which = "all";
  } props_args;
  vprops->add_option("--points", props_args.points, "point set file")
      ->required();
  vprops->add_option("--w1", props_args.w1, "first subspace literal")
      ->required();
  vprops->add_option("--w2", props_args.w2, "second subspace literal")
      ->required();
  vprops
      ->add_option("--check", props_args.which,
                   "intersection, fiber-square, sum-bound, or all")
      ->check(CLI::IsMember({"intersection", "fiber-square", "sum-bound", "all"}))
      ->capture_default_str();
  vprops->callback([&] {
    action = [&]() {
      PointSet k = read_pointset_file(props_args.points, std::cerr);
      Subspace w1 = Subspace::parse_literal(k.ambient(), props_args.w1);
      Subspace w2 = Subspace::parse_literal(k.ambient(), props_args.w2);
      Report rep;
      rep.command = "verify props";
      rep.seed = common.seed;
      rep.params = {{"p", k.ambient().p.value()},
                    {"n", k.ambient().n},
                    {"size_k", k.size()},
                    {"w1", w1.to_literal()},
                    {"w2", w2.to_literal()},
                    {"check", props_args.which}};
      bool transverse = is_transverse(w1, w2);
      rep.params["transverse"] = transverse;
      std::optional<bool> pass;
      auto merge = [&](const Report& sub, const char* label) {
        nlohmann::json row = sub.rows[0];
        row["check"] = label;
        rep.rows.push_back(std::move(row));
        if (sub.pass) pass = pass.value_or(true) && *sub.pass;
      };
      bool all = props_args.which == "all";
      if (all || props_args.which == "intersection")
        merge(intersection_bound_check(k, w1, w2), "intersection");
      if (all || props_args.which == "fiber-square") {
        if (transverse)
          merge(fiber_square_check(k, w1, w2), "fiber-square");
        else if (!all)
          throw NotTransverse("fiber-square bound needs transverse subspaces");
      }
      if (all || props_args.which == "sum-bound") {
        if (transverse)
          merge(sum_bound_check(k, w1, w2), "sum-bound");
        else if (!all)
          throw NotTransverse("sum pipeline needs transverse subspaces");
      }
      rep.pass = pass;
      return rep;
    };
  });

  auto* vimp = verify->add_subcommand(
      "improvement",
      "Transversality hypotheses behind the improved projection bound");
  struct {
    std::vector<std::string> families;
    std::uint64_t k = 2;
    std::size_t d = 1;
  } imp_args;
  vimp->add_option("--family", imp_args.families,
                   "family file (repeat for several dimensions)")
      ->required();
  vimp->add_option("--k", imp_args.k, "line-set size parameter")
      ->capture_default_str();
  vimp->add_option("--d", imp_args.d, "largest subspace dimension checked")
      ->capture_default_str();
  vimp->callback([&] {
    action = [&]() {
      std::vector<SubspaceFamily> fams;
      for (const auto& f : imp_args.families)
        fams.push_back(read_family_file(f, std::cerr));
      Report rep = improvement_hypotheses(fams, imp_args.k, imp_args.d,
                                          common.budget);
      rep.seed = common.seed;
      return rep;
    };
  });

  // ---- seq -------------------------------------------------------------
  auto* seq_cmd = app.add_subcommand(
      "seq", "Reachability of 1 by index sums, with divisor obstruction");
  struct {
    std::uint64_t n = 2;
    std::string set;
  } seq_args;
  seq_cmd->add_option("--n", seq_args.n, "modulus parameter")->required();
  seq_cmd->add_option("--set", seq_args.set, "starting values, e.g. \"2,3\"")
      ->required();
  seq_cmd->callback([&] {
    action = [&]() {
      Report rep = sequence_report(seq_args.n, parse_uint_list(seq_args.set));
      rep.seed = common.seed;
      return rep;
    };
  });

  // ---- sweep -----------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Seeded instance sweep with ratio probes and summaries");
  struct {
    std::string config;
    std::size_t jobs = 0;
  } sweep_args;
  sweep_cmd->add_option("--config", sweep_args.config, "sweep config JSON file")
      ->required();
  sweep_cmd->add_option("--jobs", sweep_args.jobs,
                        "worker threads (overrides config)");
  sweep_cmd->callback([&] {
    action = [&]() {
      std::ifstream in(sweep_args.config);
      if (!in) throw ParseError("cannot open " + sweep_args.config);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad config JSON: ") + e.what());
      }
      SweepConfig cfg = parse_sweep_config(j);
      if (sweep_args.jobs > 0) cfg.jobs = sweep_args.jobs;
      return run_sweep(cfg, common.seed, common.budget);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    Report rep = action();
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return emit(std::move(rep), common, ms);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
