#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bchyper/coherent.hpp"
#include "bchyper/io.hpp"
#include "bchyper/quad.hpp"
#include "bchyper/suites.hpp"
#include "json.hpp"

namespace bchyper::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string pfq = "0,0";
  std::string alphas;
  std::string betas;
  std::string z = "0";
  double tol = 0.0;
  std::uint64_t seed = 7;
  int samples = 0;
  int nodes = 0;
  std::string format;
  std::string theorem;
  int grid = 32;
  double rmax = 1.5;
  int nmax = 256;
};

std::string fmt(double x, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string fmt_ld(long double x) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.21Lg", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string idempotent_literal(const BiComplex& z) {
  const auto [z1, z2] = idempotent_split(z);
  char buf[160];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17gi1)e1+(%.17g%+.17gi1)e2", z1.real(), z1.imag(),
                z2.real(), z2.imag());
  return buf;
}

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json bicomplex_json(const BiComplex& z) {
  const auto [z1, z2] = idempotent_split(z);
  return Json{{"re1", complex_json(z.re1())},
              {"re2", complex_json(z.re2())},
              {"idem1", complex_json(z1)},
              {"idem2", complex_json(z2)},
              {"text", to_string(z)}};
}

Json config_json(const RunConfig& c) {
  Json j{{"command", c.command}, {"format", c.format}};
  if (c.command == "verify") {
    j["theorem"] = c.theorem;
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    j["tol"] = c.tol;
    j["nodes"] = c.nodes;
    return j;
  }
  j["pfq"] = c.pfq;
  j["alphas"] = c.alphas;
  j["betas"] = c.betas;
  if (c.command == "eval" || c.command == "coherent") j["z"] = c.z;
  if (c.command == "eval") j["tol"] = c.tol;
  if (c.command == "region-plot") {
    j["grid"] = c.grid;
    j["rmax"] = c.rmax;
  }
  if (c.command == "coherent") j["nmax"] = c.nmax;
  return j;
}

Json envelope(const RunConfig& c) {
  return Json{{"version", kReportVersion}, {"command", c.command}, {"config", config_json(c)},
              {"results", Json::array()}, {"summary", Json::object()}};
}

void validate(const RunConfig& c) {
  if (c.tol != 0.0 && !(c.tol > 0.0 && c.tol < 1.0)) {
    throw UsageError("--tol must lie in (0, 1)");
  }
  if (c.samples < 0) throw UsageError("--samples must be at least 1");
  if (c.nodes != 0 && c.nodes < kMinNodes) {
    throw UsageError("--nodes must be at least " + std::to_string(kMinNodes));
  }
  if (c.format != "csv" && c.format != "json" && c.format != "plain") {
    throw UsageError("--format must be csv, json or plain");
  }
}

int cmd_eval(const RunConfig& c, std::ostream& out) {
  const PfqParams params = parse_params(c.pfq, c.alphas, c.betas);
  const BiComplex z = parse_bicomplex(c.z);
  SeriesOptions opt;
  if (c.tol > 0.0) opt.tol = c.tol;
  const SeriesEval e = pfq(params, z, opt);
  if (c.format == "json") {
    Json j = envelope(c);
    Json r = bicomplex_json(e.value);
    r["terms"] = Json::array({e.terms_used[0], e.terms_used[1]});
    r["tail_bound"] = Json::array({e.tail_bound.h1(), e.tail_bound.h2()});
    r["class"] = to_string(e.cls.kind);
    j["results"].push_back(r);
    j["summary"] = Json{{"ok", true}};
    out << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    const auto [z1, z2] = idempotent_split(e.value);
    out << "re1_re,re1_im,re2_re,re2_im,idem1_re,idem1_im,idem2_re,idem2_im,terms1,terms2\n";
    out << fmt(e.value.re1().real()) << ',' << fmt(e.value.re1().imag()) << ','
        << fmt(e.value.re2().real()) << ',' << fmt(e.value.re2().imag()) << ','
        << fmt(z1.real()) << ',' << fmt(z1.imag()) << ',' << fmt(z2.real()) << ','
        << fmt(z2.imag()) << ',' << e.terms_used[0] << ',' << e.terms_used[1] << '\n';
  } else {
    out << to_string(e.value) << '\n' << idempotent_literal(e.value) << '\n';
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  const PfqParams params = parse_params(c.pfq, c.alphas, c.betas);
  const ConvergenceClass cls = classify(params);
  const bool boundary = params.p() == params.q() + 1;
  if (c.format == "json") {
    Json j = envelope(c);
    Json r{{"class", to_string(cls.kind)}};
    if (boundary) {
      r["eta1"] = cls.eta1;
      r["eta2"] = cls.eta2;
      r["margin"] = cls.margin();
    }
    j["results"].push_back(r);
    j["summary"] = Json{{"ok", true}};
    out << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    out << "p,q,class,eta1,eta2\n"
        << params.p() << ',' << params.q() << ',' << to_string(cls.kind) << ','
        << (boundary ? fmt(cls.eta1) : "") << ',' << (boundary ? fmt(cls.eta2) : "") << '\n';
  } else {
    out << to_string(cls.kind) << '\n';
  }
  return kExitOk;
}

double max_residual(const SuiteResult& r) {
  double m = 0.0;
  for (const SuiteCase& c : r.cases) {
    if (!c.skipped) m = std::max({m, c.residual1, c.residual2});
  }
  return m;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  std::vector<std::string> ids;
  if (c.theorem == "all") {
    ids = theorem_ids();
  } else if (is_theorem_id(c.theorem)) {
    ids.push_back(c.theorem);
  } else {
    throw UsageError("unknown theorem id '" + c.theorem + "'");
  }
  SuiteConfig sc;
  sc.seed = c.seed;
  sc.samples = c.samples;
  sc.tol = c.tol;
  sc.nodes = c.nodes;

  std::vector<SuiteResult> results;
  for (const std::string& id : ids) results.push_back(run_suite(id, sc));

  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int cases = 0;
  for (const SuiteResult& r : results) {
    passed += r.passed;
    failed += r.failed;
    skipped += r.skipped;
    cases += static_cast<int>(r.cases.size());
  }
  const bool ok = failed == 0;

  if (c.format == "json") {
    Json j = envelope(c);
    for (const SuiteResult& r : results) {
      Json cs = Json::array();
      for (const SuiteCase& k : r.cases) {
        cs.push_back(Json{{"seed", k.seed},
                          {"params", k.params},
                          {"Z", k.z},
                          {"residual1", k.residual1},
                          {"residual2", k.residual2},
                          {"passed", k.passed},
                          {"skipped", k.skipped},
                          {"note", k.note}});
      }
      j["results"].push_back(Json{{"theorem", r.theorem},
                                  {"seed", r.seed},
                                  {"samples", r.samples},
                                  {"tol", r.tol},
                                  {"passed", r.passed},
                                  {"failed", r.failed},
                                  {"skipped", r.skipped},
                                  {"max_residual", max_residual(r)},
                                  {"cases", cs}});
    }
    j["summary"] = Json{{"suites", results.size()}, {"cases", cases},   {"passed", passed},
                        {"failed", failed},         {"skipped", skipped}, {"ok", ok}};
    out << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    out << "theorem,seed,params,Z,residual1,residual2,passed\n";
    for (const SuiteResult& r : results) {
      for (const SuiteCase& k : r.cases) {
        out << r.theorem << ',' << k.seed << ',' << csv_field(k.params) << ','
            << csv_field(k.z) << ',' << fmt(k.residual1) << ',' << fmt(k.residual2) << ','
            << (k.skipped ? "skipped" : (k.passed ? "true" : "false")) << '\n';
      }
    }
  } else {
    for (const SuiteResult& r : results) {
      out << r.theorem << " seed=" << r.seed << " samples=" << r.samples
          << " tol=" << fmt(r.tol, 3) << " passed=" << r.passed << " failed=" << r.failed
          << " skipped=" << r.skipped << " max_residual=" << fmt(max_residual(r), 3) << '\n';
      for (const SuiteCase& k : r.cases) {
        if (k.passed || k.skipped) continue;
        out << "  FAIL seed=" << k.seed << " params=" << k.params << " Z=" << k.z
            << " residual=" << fmt(k.residual1, 3) << "," << fmt(k.residual2, 3);
        if (!k.note.empty()) out << " (" << k.note << ")";
        out << '\n';
      }
    }
    out << (ok ? "PASS" : "FAIL") << ": " << results.size() << " suites, " << cases
        << " cases, " << passed << " passed, " << failed << " failed, " << skipped
        << " skipped\n";
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_region(const RunConfig& c, std::ostream& out) {
  const PfqParams params = parse_params(c.pfq, c.alphas, c.betas);
  if (c.grid < 1) throw UsageError("--grid must be at least 1");
  if (!(c.rmax > 0.0)) throw UsageError("--rmax must be positive");
  const std::vector<RegionPoint> pts = region_plot(params, c.grid, c.rmax);
  int converged = 0;
  for (const RegionPoint& p : pts) converged += p.converged ? 1 : 0;
  if (c.format == "json") {
    Json j = envelope(c);
    for (const RegionPoint& p : pts) {
      j["results"].push_back(Json{{"abs_z1", p.r1}, {"abs_z2", p.r2}, {"converged", p.converged}});
    }
    j["summary"] = Json{{"points", pts.size()}, {"converged", converged}, {"ok", true}};
    out << j.dump(2) << '\n';
  } else {
    out << "abs_z1,abs_z2,converged\n";
    for (const RegionPoint& p : pts) {
      out << fmt(p.r1) << ',' << fmt(p.r2) << ',' << (p.converged ? 1 : 0) << '\n';
    }
  }
  return kExitOk;
}

int cmd_coherent(const RunConfig& c, std::ostream& out) {
  const PfqParams params = parse_params(c.pfq, c.alphas, c.betas);
  const BiComplex z = parse_bicomplex(c.z);
  if (c.nmax < 1) throw UsageError("--nmax must be at least 1");
  const CoherentState st = build_state(CoherentSpec{params, z, c.nmax});
  const LadderTables& t = st.tables;
  const Hyperbolic total = norm_squared(st);
  auto row_prob = [&](int n) {
    const auto [c1, c2] = idempotent_split(st.coeffs[n]);
    return std::pair<double, double>{std::norm(c1), std::norm(c2)};
  };
  if (c.format == "json") {
    Json j = envelope(c);
    for (int n = 0; n < t.n_max; ++n) {
      const auto [p1, p2] = row_prob(n);
      j["results"].push_back(Json{{"n", n},
                                  {"rho1", static_cast<double>(t.rho[n][0])},
                                  {"rho2", static_cast<double>(t.rho[n][1])},
                                  {"f1", t.f[n].h1()},
                                  {"f2", t.f[n].h2()},
                                  {"abs_c1_sq", p1},
                                  {"abs_c2_sq", p2}});
    }
    j["summary"] = Json{{"truncation", t.n_max},
                        {"normalization", bicomplex_json(st.norm)},
                        {"norm_squared", Json::array({total.h1(), total.h2()})},
                        {"tail", Json::array({st.tail.h1(), st.tail.h2()})},
                        {"ok", true}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  const char sep = c.format == "csv" ? ',' : ' ';
  if (c.format == "plain") {
    out << "# truncation " << t.n_max << "\n# normalization " << to_string(st.norm)
        << "\n# norm_squared " << to_string(total) << "\n# tail " << to_string(st.tail) << '\n';
  }
  out << "n" << sep << "rho1" << sep << "rho2" << sep << "f1" << sep << "f2" << sep
      << "abs_c1_sq" << sep << "abs_c2_sq\n";
  for (int n = 0; n < t.n_max; ++n) {
    const auto [p1, p2] = row_prob(n);
    out << n << sep << fmt_ld(t.rho[n][0]) << sep << fmt_ld(t.rho[n][1]) << sep
        << fmt(t.f[n].h1()) << sep << fmt(t.f[n].h2()) << sep << fmt(p1) << sep << fmt(p2)
        << '\n';
  }
  return kExitOk;
}

}  // namespace

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  for (std::string& p : parts) {
    const auto b = p.find_first_not_of(" \t");
    const auto e = p.find_last_not_of(" \t");
    p = b == std::string::npos ? std::string() : p.substr(b, e - b + 1);
    if (p.empty()) throw ParseError("empty entry in list '" + std::string(text) + "'");
  }
  return parts;
}

PfqParams parse_params(const std::string& shape, const std::string& alphas,
                       const std::string& betas) {
  const std::vector<std::string> pq = split_list(shape);
  int dims[2] = {0, 0};
  if (pq.size() != 2) throw UsageError("--pfq expects p,q");
  for (int i = 0; i < 2; ++i) {
    std::size_t used = 0;
    try {
      dims[i] = std::stoi(pq[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != pq[i].size() || dims[i] < 0) throw UsageError("--pfq expects p,q >= 0");
  }
  std::vector<BiComplex> a;
  std::vector<BiComplex> b;
  for (const std::string& s : split_list(alphas)) a.push_back(parse_bicomplex(s));
  for (const std::string& s : split_list(betas)) b.push_back(parse_bicomplex(s));
  if (static_cast<int>(a.size()) != dims[0] || static_cast<int>(b.size()) != dims[1]) {
    throw UsageError("--pfq " + shape + " needs " + std::to_string(dims[0]) + " alphas and " +
                     std::to_string(dims[1]) + " betas, got " + std::to_string(a.size()) +
                     " and " + std::to_string(b.size()));
  }
  return PfqParams(std::move(a), std::move(b));
}

bool probe_converges(const PfqParams& params, double r1, double r2) {
  const double r[2] = {r1, r2};
  SeriesOptions opt;
  opt.cap = 200000;
  for (int s = 0; s < 2; ++s) {
    try {
      const ComponentSum sum =
          sum_component(params.alpha_parts(s), params.beta_parts(s), Complex(r[s]), opt);
      if (!std::isfinite(sum.value.real()) || !std::isfinite(sum.value.imag())) return false;
    } catch (const NoConvergence&) {
      return false;
    }
  }
  return true;
}

std::vector<RegionPoint> region_plot(const PfqParams& params, int grid, double rmax) {
  if (params.p() != params.q() + 1) {
    throw UsageError("region-plot needs p = q + 1; p = " + std::to_string(params.p()) +
                     ", q = " + std::to_string(params.q()) + " has no bounded region");
  }
  std::vector<RegionPoint> pts;
  pts.reserve(static_cast<std::size_t>(grid) * grid);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double r1 = (i + 0.5) * rmax / grid;
      const double r2 = (j + 0.5) * rmax / grid;
      pts.push_back({r1, r2, probe_converges(params, r1, r2)});
    }
  }
  return pts;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bicomplex generalized hypergeometric functions"};
  app.name("bchyper");
  app.require_subcommand(1);

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--pfq", cfg.pfq, "p,q")->required();
    sub->add_option("--alphas", cfg.alphas, "comma-separated numerator parameters");
    sub->add_option("--betas", cfg.betas, "comma-separated denominator parameters");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "csv, json or plain");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate pFq at Z");
  add_params(eval);
  eval->add_option("--z", cfg.z, "bicomplex argument")->required();
  eval->add_option("--tol", cfg.tol, "series stopping tolerance");
  add_format(eval);

  CLI::App* cls = app.add_subcommand("classify", "convergence class of pFq");
  add_params(cls);
  add_format(cls);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("theorem", cfg.theorem, "suite id or 'all'")->required();
  verify->add_option("--seed", cfg.seed, "base seed");
  verify->add_option("--samples", cfg.samples, "cases per suite");
  verify->add_option("--tol", cfg.tol, "acceptance tolerance");
  verify->add_option("--nodes", cfg.nodes, "quadrature nodes per axis");
  add_format(verify);

  CLI::App* region = app.add_subcommand("region-plot", "convergence point cloud over |z1|, |z2|");
  add_params(region);
  region->add_option("--grid", cfg.grid, "points per axis");
  region->add_option("--rmax", cfg.rmax, "largest modulus sampled");
  add_format(region);

  CLI::App* coherent = app.add_subcommand("coherent", "coherent-state tables");
  add_params(coherent);
  coherent->add_option("--z", cfg.z, "bicomplex label")->required();
  coherent->add_option("--nmax", cfg.nmax, "initial truncation");
  add_format(coherent);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (cfg.format.empty()) {
    cfg.format = (cfg.command == "region-plot" || cfg.command == "coherent") ? "csv" : "plain";
  }
  if (cfg.command == "verify" && chosen->count("--samples") > 0 && cfg.samples < 1) {
    err << "error: --samples must be at least 1\n";
    return kExitUsage;
  }

  try {
    validate(cfg);
    std::ostringstream buf;
    int code = kExitOk;
    if (cfg.command == "eval") code = cmd_eval(cfg, buf);
    else if (cfg.command == "classify") code = cmd_classify(cfg, buf);
    else if (cfg.command == "verify") code = cmd_verify(cfg, buf);
    else if (cfg.command == "region-plot") code = cmd_region(cfg, buf);
    else code = cmd_coherent(cfg, buf);
    out << buf.str();
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("bchyper");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bchyper::cli
