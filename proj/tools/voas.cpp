// voas: command-line front end for the correlation-function engine.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 malformed or missing input.

#include <CLI11.hpp>

#include <iostream>

#include "voas/suites.hpp"

using namespace voas;

namespace {

struct Args {
  std::string config, insertions, output, mode, u = "omega", A, z, y, suite;
  int genus = -1, cutoff = 0, i = 0, j = 0, N = 2, a = 1, K = 8, modes = 8;
  unsigned seed = 1;
};

void emit(const Json& j, const Args& args) {
  std::string text = j.dump(2) + "\n";
  if (args.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(args.output);
  if (!out) throw ConfigError("cannot write " + args.output);
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Complex parse_complex(const std::string& s) {
  auto parts = split(s, ',');
  try {
    if (parts.size() == 1) return {std::stod(parts[0]), 0.0};
    if (parts.size() == 2) return {std::stod(parts[0]), std::stod(parts[1])};
  } catch (const std::exception&) {
  }
  throw ConfigError("expected a complex number as re,im: " + s);
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  try {
    for (auto& p : split(s, ',')) out.push_back(parse_rational(p));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad rational list: ") + e.what());
  }
  return out;
}

FockVector named_state(const std::string& s) {
  try {
    return fock_vector_from_json(Json(s));
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

std::vector<Insertion> load_insertions(const Args& args) {
  if (args.insertions.empty()) return {};
  return insertions_from_json(read_json_file(args.insertions));
}

ConfigFile require_config(const Args& args) {
  if (args.config.empty()) throw ConfigError("--config is required");
  return load_config(args.config);
}

int genus_of(const Args& args, const std::optional<ConfigFile>& cfg) {
  if (cfg) return cfg->genus;
  if (args.genus < 0) throw ConfigError("give --genus or --config");
  return args.genus;
}

/// Formal series, or its value at the configured geometry.
Json series_output(const GenusGFunction& f, const FormalHandles& h, const std::optional<ConfigFile>& cfg) {
  if (!cfg) return series_terms_json(f, [](const RationalFunction& c) { return Json(c.str()); });
  if (cfg->mode == "exact") {
    std::map<Var, Rational> pt;
    for (int a = 1; a <= h.genus(); ++a) {
      pt[h.w(a)] = cfg->exact.w(a);
      pt[h.w(-a)] = cfg->exact.w(-a);
    }
    auto vars = std::set<Var>();
    for (auto& [e, c] : f.terms())
      for (Var v : c.variables())
        if (!pt.count(v)) vars.insert(v);
    if (!vars.empty())
      return series_terms_json(f, [&](const RationalFunction& c) {
        RationalFunction r = c;
        for (auto& [v, q] : pt) r = r.substitute(v, RationalFunction(q));
        return Json(r.str());
      });
    return to_json(evaluate_series(f, pt));
  }
  std::map<Var, Complex> pt;
  std::vector<Complex> rho;
  for (int a = 1; a <= h.genus(); ++a) {
    pt[h.w(a)] = cfg->numeric.w(a);
    pt[h.w(-a)] = cfg->numeric.w(-a);
    rho.push_back(cfg->numeric.rho(a));
  }
  Json terms = Json::object();
  for (auto& [e, c] : f.terms()) terms[GenusGFunction::key(e)] = to_json(c.evaluate<Complex>(pt));
  return {{"series", terms}, {"value", to_json(evaluate_series(f, pt, rho))}};
}

int run_verify(const Args& args) {
  SuiteOptions opts;
  opts.seed = args.seed;
  if (!args.config.empty()) opts.config = load_config(args.config).numeric;
  std::vector<std::string> names;
  if (args.suite == "all")
    for (auto& [n, f] : suites()) names.push_back(n);
  else
    names.push_back(args.suite);
  Json reports = Json::array();
  bool all_pass = true;
  for (auto& n : names) {
    const Suite* s = find_suite(n);
    if (!s) throw ConfigError("unknown suite: " + n);
    Json checks = Json::array();
    bool pass = true;
    for (auto& c : (*s)(opts)) {
      checks.push_back(to_json(c));
      pass = pass && c.pass;
    }
    all_pass = all_pass && pass;
    reports.push_back({{"suite", n}, {"seed", std::to_string(args.seed)}, {"checks", checks}, {"pass", pass}});
  }
  emit(names.size() == 1 ? reports[0] : Json{{"suites", reports}, {"pass", all_pass}}, args);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation functions of the Heisenberg vertex algebra under Schottky sewing"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* c) {
    c->add_option("-o,--output", args.output, "write JSON here instead of stdout");
  };

  auto* np0 = app.add_subcommand("npoint0", "genus-zero n-point function");
  np0->add_option("--insertions", args.insertions, "insertions JSON")->required();
  add_common(np0);

  auto* z0 = app.add_subcommand("zhu0", "genus-zero reduction of Y(L(-1)^i u/i!, z)");
  z0->add_option("--u", args.u, "quasi-primary state: a | omega");
  z0->add_option("--i", args.i, "derivative order")->check(CLI::NonNegativeNumber);
  z0->add_option("--insertions", args.insertions, "insertions JSON")->required();
  z0->add_option("--A", args.A, "kernel points, comma separated (2N-1 of them)")->required();
  add_common(z0);

  auto* ker = app.add_subcommand("kernel", "closed-form kernel coefficient f_{N,i,j}(z, y)");
  ker->add_option("--N", args.N)->check(CLI::PositiveNumber);
  ker->add_option("--A", args.A)->required();
  ker->add_option("--i", args.i)->check(CLI::NonNegativeNumber);
  ker->add_option("--j", args.j)->check(CLI::NonNegativeNumber);
  add_common(ker);

  auto* part = app.add_subcommand("partition", "genus-g partition function series");
  part->add_option("--genus", args.genus)->check(CLI::NonNegativeNumber);
  part->add_option("--config", args.config);
  part->add_option("--cutoff", args.cutoff, "rho-order W")->check(CLI::NonNegativeNumber);
  add_common(part);

  auto* npg = app.add_subcommand("npoint", "genus-g n-point function series");
  npg->add_option("--genus", args.genus)->check(CLI::NonNegativeNumber);
  npg->add_option("--config", args.config);
  npg->add_option("--insertions", args.insertions)->required();
  npg->add_option("--cutoff", args.cutoff)->check(CLI::NonNegativeNumber);
  add_common(npg);

  auto* psi = app.add_subcommand("psi", "Bers quasiform Psi_N(z, y)");
  psi->add_option("--config", args.config)->required();
  psi->add_option("--mode", args.mode)->check(CLI::IsMember({"poincare", "sewing"}))->required();
  psi->add_option("--z", args.z, "re,im")->required();
  psi->add_option("--y", args.y, "re,im")->required();
  psi->add_option("--N", args.N)->check(CLI::Range(2, 8));
  psi->add_option("--K", args.K, "Neumann order")->check(CLI::NonNegativeNumber);
  psi->add_option("--modes", args.modes, "mode cutoff M")->check(CLI::PositiveNumber);
  psi->add_option("--A", args.A, "kernel points as re,im;re,im;... (default: generator fixed points)");
  add_common(psi);

  auto* th = app.add_subcommand("theta", "Theta_{N,a}^l(z), l = 0..2N-2");
  th->add_option("--config", args.config)->required();
  th->add_option("--mode", args.mode)->check(CLI::IsMember({"extract", "sewing"}))->required();
  th->add_option("--z", args.z)->required();
  th->add_option("--a", args.a, "handle 1..g")->check(CLI::PositiveNumber);
  th->add_option("--N", args.N)->check(CLI::Range(2, 8));
  th->add_option("--K", args.K)->check(CLI::NonNegativeNumber);
  th->add_option("--modes", args.modes)->check(CLI::PositiveNumber);
  th->add_option("--A", args.A);
  add_common(th);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite,--suite", args.suite, "suite name or 'all'");
  ver->add_option("--config", args.config);
  ver->add_option("--seed", args.seed);
  add_common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    auto kernel_points = [&](const SchottkyConfig& cfg) {
      if (args.A.empty()) return default_limit_points(cfg, args.N);
      std::vector<Complex> pts;
      for (auto& p : split(args.A, ';')) pts.push_back(parse_complex(p));
      return pts;
    };

    if (*np0) {
      emit(to_json(npoint0(load_insertions(args))), args);
    } else if (*z0) {
      FockVector u = named_state(args.u);
      auto ins = load_insertions(args);
      auto k = make_kernel(quasiprimary_weight(u), parse_rationals(args.A));
      auto rhs = zhu_reduce0(u, args.i, Polynomial(var("z")), ins, k);
      auto lhs = zhu_lhs0(u, args.i, Polynomial(var("z")), ins);
      bool match = lhs.value.equals(rhs.value);
      emit({{"rhs", to_json(rhs)}, {"lhs", to_json(lhs)}, {"match", match}}, args);
      return match ? 0 : 1;
    } else if (*ker) {
      auto k = make_kernel(args.N, parse_rationals(args.A));
      auto f = k.coefficient(args.i, args.j, RationalFunction(var("z")), RationalFunction(var("y")));
      emit({{"N", args.N}, {"i", args.i}, {"j", args.j}, {"f", to_json(f)}, {"text", f.str()}}, args);
    } else if (*part || *npg) {
      std::optional<ConfigFile> cfg;
      if (!args.config.empty()) cfg = load_config(args.config);
      auto h = FormalHandles::standard(genus_of(args, cfg));
      auto F = npoint_g(h, *npg ? load_insertions(args) : std::vector<Insertion>{}, args.cutoff);
      emit(series_output(F, h, cfg), args);
    } else if (*psi) {
      auto cfg = require_config(args).numeric;
      Complex z = parse_complex(args.z), y = parse_complex(args.y);
      auto A = kernel_points(cfg);
      BersKernel k(args.N, A);
      if (args.mode == "poincare") {
        auto r = psi_poincare(k, cfg, group_words(cfg, cfg.max_word_len), z, y);
        emit({{"mode", "poincare"}, {"value", to_json(r.value)}, {"tail", format_double(r.tail)}}, args);
      } else {
        auto s = make_numeric_sewing(cfg, A, args.N, args.modes);
        emit({{"mode", "sewing"}, {"value", to_json(s.psi(z, y, 0, 0, args.K))}}, args);
      }
    } else if (*th) {
      auto cfg = require_config(args).numeric;
      if (args.a > cfg.genus()) throw ConfigError("--a exceeds the genus");
      Complex z = parse_complex(args.z);
      auto A = kernel_points(cfg);
      Json vals = Json::array();
      if (args.mode == "extract") {
        auto ex = theta_extract(BersKernel(args.N, A), cfg, group_words(cfg, cfg.max_word_len), args.a, z);
        for (auto& t : ex.theta) vals.push_back(to_json(t));
        emit({{"mode", "extract"}, {"theta", vals}, {"holdout_residual", format_double(ex.holdout_residual)}}, args);
      } else {
        auto s = make_numeric_sewing(cfg, A, args.N, args.modes);
        for (int l = 0; l <= 2 * args.N - 2; ++l) vals.push_back(to_json(s.theta(args.a, l, z, 0, args.K)));
        emit({{"mode", "sewing"}, {"theta", vals}}, args);
      }
    } else if (*ver) {
      if (args.suite.empty()) throw ConfigError("name a suite");
      return run_verify(args);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
