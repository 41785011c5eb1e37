#include "symspace/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "symspace/embedding/lab.hpp"

namespace symspace::cli {

namespace {

using Json = nlohmann::ordered_json;

// Per-suite sample caps. `samples` is the requested count; suites whose
// cost per sample is high use min(samples, cap) so that `verify all` at the
// defaults stays well inside a minute.
constexpr std::size_t kExactAxiomCap = 100;
constexpr std::size_t kLemmaSweepCap = 100;
constexpr std::size_t kCommutatorCap = 100;
constexpr std::size_t kCentralCap = 50;
constexpr std::size_t kPerfectnessCap = 50;
constexpr std::size_t kFactorizationCap = 100;
constexpr std::size_t kCoconeCap = 100;

std::size_t capped(const SuiteConfig& c, std::size_t cap) { return std::min(c.samples, cap); }

std::string t_name(const Rational& t) { return "t=" + t.str(); }

/// Runs `body`; errors become a failing case named `name` with the message as witness.
void guarded(Report& report, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    Case c;
    c.name = name;
    c.status = CaseStatus::Fail;
    c.residual = "n/a";
    c.witness = e.what();
    report.add(std::move(c));
  }
}

void skipped(Report& report, const std::string& name, const std::string& reason) {
  Case c;
  c.name = name;
  c.status = CaseStatus::Skipped;
  c.residual = "n/a";
  c.params = Json{{"reason", reason}};
  report.add(std::move(c));
}

Residual real_residual(const Real& value) { return {value, false}; }

// ---------------------------------------------------------------- axioms

template <SpaceModel M>
void add_axiom_cases(Report& report, const std::string& label, const M& model, const SuiteConfig& c,
                     std::size_t count, const TolerancePolicy& policy) {
  AxiomReport r = check_axioms(model, c.seed, count, policy);
  for (const auto& a : r.axioms) {
    Json params{{"model", r.model}, {"triples", count}, {"checked", a.checked}, {"violations", a.violations}};
    if (a.axiom == "RS4") params["residual_kind"] = "min-displacement";
    std::optional<std::string> witness;
    if (!a.pass) witness = a.axiom + " violated on " + std::to_string(a.violations) + " of " + std::to_string(a.checked);
    report.add("axioms/" + label + "/" + a.axiom, params, a.pass, a.residual, witness);
  }
}

void axioms_for(Report& report, const std::string& model, const SuiteConfig& c, const TolerancePolicy& policy) {
  guarded(report, "axioms/" + model, [&] {
    if (model == "geodesic") {
      add_axiom_cases(report, "geodesic", GeodesicLine(), c, c.samples, policy);
    } else if (model == "broken-sl2") {
      add_axiom_cases(report, "broken-sl2", BrokenSpdSpace<Real>(2), c, c.samples, policy);
    } else {
      const std::size_t n = model == "sl2" ? 2 : 3;
      const std::string label = "sl" + std::to_string(n);
      add_axiom_cases(report, label, SpdSpace<Real>(n, policy), c, c.samples, policy);
      add_axiom_cases(report, label + "-exact", SpdSpace<Rational>(n, policy), c, capped(c, kExactAxiomCap), policy);
    }
  });
}

void negative_control(Report& report, const SuiteConfig& c, const TolerancePolicy& policy) {
  guarded(report, "axioms/negative-control", [&] {
    const std::size_t count = capped(c, kExactAxiomCap);
    AxiomReport r = check_axioms(BrokenSpdSpace<Real>(2), c.seed, count, policy);
    const AxiomResult& rs2 = r.axioms[1];
    Case out;
    out.name = "axioms/negative-control/broken-sl2-rejected-by-RS2";
    out.params = Json{{"model", r.model}, {"triples", count}, {"violations", rs2.violations}};
    out.status = rs2.pass ? CaseStatus::Fail : CaseStatus::Pass;
    out.residual = rs2.residual.str();
    out.tolerance = c.abs_tol;
    out.witness = rs2.pass ? "negative control satisfied RS2" : "RS2 violated on " + std::to_string(rs2.violations) +
                                                                   " of " + std::to_string(rs2.checked) + " triples";
    report.add(std::move(out));
  });
}

// ---------------------------------------------------------- matrix lemma

Residual lemma_residual(const MatrixLemmaReport& r, std::optional<std::string>& witness) {
  Residual out = Residual::exact_zero();
  for (const auto& id : r.identities) {
    if (id.holds()) continue;
    out = worst(out, Residual{frobenius_norm(Matrix<QSqrt2>(id.lhs - id.rhs)), true});
    if (!witness) witness = id.name + " at t = " + r.t.str() + ": lhs " + to_string(id.lhs);
  }
  return out;
}

void matrix_lemma(Report& report, const SuiteConfig& c) {
  for (const auto& t : c.t_values) {
    const std::string name = "matrix-lemma/" + t_name(t);
    guarded(report, name, [&] {
      auto r = verify_matrix_lemma(t);
      std::optional<std::string> witness;
      Residual res = lemma_residual(r, witness);
      Json names = Json::array();
      for (const auto& id : r.identities) names.push_back(id.name);
      report.add(name, Json{{"t", t.str()}, {"identities", names}}, r.all_hold(), res, witness);
    });
  }
  guarded(report, "matrix-lemma/sweep", [&] {
    Rng rng(c.seed);
    const std::size_t count = capped(c, kLemmaSweepCap);
    Residual res = Residual::exact_zero();
    std::optional<std::string> witness;
    std::size_t failures = 0;
    for (std::size_t k = 0; k < count; ++k) {
      Rational t = random_line_rational(rng);
      if (t.is_zero()) t = Rational(1, 3);
      auto r = verify_matrix_lemma(t);
      res = worst(res, lemma_residual(r, witness));
      if (!r.all_hold()) ++failures;
    }
    report.add("matrix-lemma/sweep", Json{{"random_t", count}, {"failures", failures}}, failures == 0, res, witness);
  });
}

// ------------------------------------------------------------ commutator

void commutator_suite(Report& report, const SuiteConfig& c, const TolerancePolicy& policy) {
  for (const auto& t : c.t_values) {
    const std::string name = "commutator/" + t_name(t);
    if (t.sign() < 0) {
      skipped(report, name, "generators need t > 0");
      continue;
    }
    guarded(report, name, [&] {
      const std::size_t count = capped(c, kCommutatorCap);
      auto r = verify_commutator_identity(t, c.seed, count, policy);
      Residual res = worst(worst(r.commutator.max_residual, r.reduced.max_residual), r.mirrored.max_residual);
      std::optional<std::string> witness;
      if (!r.all_hold()) witness = "commutator acts by " + to_string(r.commutator_matrix) + ", expected " +
                                   to_string(r.expected_matrix);
      report.add(name,
                 Json{{"t", t.str()},
                      {"samples", count},
                      {"exact_match", r.exact_match},
                      {"action_matrix", to_string(r.commutator_matrix)}},
                 r.all_hold(), res, witness);
    });
  }
}

// --------------------------------------------------------- so2 residuals

void so2_suite(Report& report, const SuiteConfig& c, const TolerancePolicy& policy) {
  for (const auto& t : c.t_values) {
    const std::string so2 = "so2-residuals/" + t_name(t);
    const std::string roots = "so2-residuals/sqrt-consistency/" + t_name(t);
    if (t.sign() < 0) {
      skipped(report, so2, "square roots need t > 0");
      skipped(report, roots, "square roots need t > 0");
      continue;
    }
    guarded(report, so2, [&] {
      auto r = verify_so2_residuals(t, policy);
      Real worst_value = max(max(max(r.a_side.orthogonality, r.a_side.determinant),
                                 max(r.b_side.orthogonality, r.b_side.determinant)),
                             max(r.a_certificate_residual, r.b_certificate_residual));
      report.add(so2,
                 Json{{"t", t.str()},
                      {"a_side_orthogonality", r.a_side.orthogonality.str(20)},
                      {"b_side_orthogonality", r.b_side.orthogonality.str(20)},
                      {"conjugation_exact", r.a_conjugation_exact && r.b_conjugation_exact}},
                 r.pass(policy), real_residual(worst_value));
    });
    guarded(report, roots, [&] {
      SquareRoots s = lemma_square_roots(t, policy);
      LemmaMatrices m = lemma_matrices(t);
      Real d = max(max(frobenius_norm(Matrix<Real>(s.a * s.a - to_real(m.a))),
                       frobenius_norm(Matrix<Real>(s.b * s.b - to_real(m.b)))),
                   frobenius_norm(Matrix<Real>(s.c * s.c - to_real(m.c))));
      report.add(roots, Json{{"t", t.str()}}, d <= policy.abs_tol, real_residual(d));
    });
  }
}

// ----------------------------------------------------- central extension

void central_extension(Report& report, const SuiteConfig& c, const TolerancePolicy& policy) {
  guarded(report, "central-extension", [&] {
    const std::size_t count = capped(c, kCentralCap);
    auto r = demo_sl3_central_extension(policy, c.seed, count);
    report.add("central-extension/witness-matrix", Json{{"reflections", r.reflection_count}}, r.witness_is_expected,
               Residual::exact_zero(), to_string(r.witness_matrix));
    report.add("central-extension/trivial-on-subspace", Json{{"samples", r.kernel.subspace_samples}},
               r.kernel.trivial_on_subspace, r.kernel.triviality_residual);
    report.add("central-extension/embedded-example-fixed",
               Json{{"point", "block-diag([[2,1],[1,1]],1)"}}, r.embedded_example_fixed, Residual::exact_zero());
    report.add("central-extension/nontrivial-on-ambient",
               Json{{"point", to_string(r.analytic_point)},
                    {"image", to_string(r.analytic_image)},
                    {"distance", r.analytic_distance.str(20)},
                    {"expected_distance", "sqrt(8)"},
                    {"max_sampled_displacement", r.max_sampled_displacement.str(20)}},
               r.nontrivial && r.analytic_image_exact && r.analytic_distance_error <= policy.abs_tol,
               real_residual(r.analytic_distance_error));
    report.add("central-extension/central", Json{{"generators", r.kernel.generators}},
               r.kernel.in_central_kernel(), r.kernel.centrality_residual);
  });
}

// ----------------------------------------------------------- perfectness

void perfectness(Report& report, std::size_t n, const SuiteConfig& c, const TolerancePolicy& policy) {
  const std::string prefix = "perfectness/sl" + std::to_string(n);
  std::vector<Rational> ts;
  for (const auto& t : c.t_values) {
    if (t.sign() > 0) {
      ts.push_back(t);
    } else {
      skipped(report, prefix + "/" + t_name(t), "generators need t > 0");
    }
  }
  guarded(report, prefix, [&] {
    const std::size_t count = capped(c, kPerfectnessCap);
    auto r = check_perfectness(n, ts, c.seed, count, policy);
    for (const auto& pc : r.cases) {
      Residual res = worst(worst(pc.upper.max_residual, pc.lower.max_residual),
                           worst(pc.sigma_upper.max_residual, pc.sigma_lower.max_residual));
      report.add(prefix + "/" + pc.root + "/" + t_name(pc.t),
                 Json{{"root", pc.root}, {"t", pc.t.str()}, {"samples", count}}, pc.holds(), res);
    }
    if (n >= 3) {
      report.add(prefix + "/generation",
                 Json{{"samples", r.generation.checked},
                      {"failures", r.generation.failures},
                      {"max_root_words", r.generation.max_root_words}},
                 r.generation.holds(),
                 r.generation.holds() ? Residual::exact_zero() : Residual{Real(r.generation.failures), true});
    }
  });
}

// --------------------------------------------------------- factorization

void factorization(Report& report, std::size_t n, const SuiteConfig& c, const TolerancePolicy& policy) {
  const std::string prefix = "factorization/sl" + std::to_string(n);
  guarded(report, prefix + "/upper-shear", [&] {
    Matrix<Rational> x = RootEmbedding(n, 0, 1)(Matrix<Rational>{{1, 1}, {0, 1}});
    auto f = point_factorization(x, policy);
    report.add(prefix + "/upper-shear",
               Json{{"matrix", to_string(x)}, {"factors", f.factors.size()}, {"expression", f.expression}},
               f.residual.within(policy) && f.exact_residual.is_exact_zero(), f.residual);
  });
  const std::size_t count = capped(c, kFactorizationCap);
  Rng rng(c.seed);
  Residual res{Real(0), false};
  std::size_t max_factors = 0;
  std::optional<std::string> witness;
  for (std::size_t k = 0; k < count; ++k) {
    Matrix<Rational> x = random_bounded_sl(n, rng, Rational(4));
    try {
      auto f = point_factorization(x, policy);
      res = worst(res, f.residual);
      max_factors = std::max(max_factors, f.factors.size());
    } catch (const Error& e) {
      if (!witness) witness = to_string(x) + ": " + e.what();
    }
  }
  report.add(prefix + "/random", Json{{"samples", count}, {"entry_bound", 4}, {"max_factors", max_factors}},
             !witness && res.within(policy), res, witness);
}

// ---------------------------------------------------------------- cocone

void cocone(Report& report, const SuiteConfig& c, const TolerancePolicy& policy) {
  const std::string prefix = "cocone/" + c.diagram;
  guarded(report, prefix, [&] {
    const std::size_t count = capped(c, kCoconeCap);
    auto r = cocone_check(c.diagram, c.seed, count, policy);
    Json nodes = Json::array();
    for (const auto& node : r.nodes) nodes.push_back(node);
    report.add(prefix + "/basepoints", Json{{"nodes", nodes}}, r.basepoints_preserved, Residual::exact_zero());
    report.add(prefix + "/commutes", Json{{"samples", r.commute_samples}}, r.commute_residual.is_exact_zero(),
               r.commute_residual);
    report.add(prefix + "/generation", Json{{"samples", r.generation_samples}},
               r.generation_residual.within(policy), r.generation_residual);
  });
}

std::size_t model_dimension(const std::string& model) { return model == "sl3" || model == "a2-diagram" ? 3 : 2; }

std::string axiom_model(const std::string& model) { return model == "a2-diagram" ? "sl3" : model; }

}  // namespace

Report run_suite(const SuiteConfig& config) {
  validate(config);
  PrecisionScope scope(config.precision_bits);
  const TolerancePolicy policy = config.policy();
  Report report(config.suite, config);
  const std::string& s = config.suite;
  const bool all = s == "all";

  if (all) {
    for (const char* m : {"geodesic", "sl2", "sl3"}) axioms_for(report, m, config, policy);
    negative_control(report, config, policy);
  } else if (s == "axioms") {
    axioms_for(report, axiom_model(config.model), config, policy);
  }
  if (all || s == "matrix-lemma") matrix_lemma(report, config);
  if (all || s == "commutator") commutator_suite(report, config, policy);
  if (all || s == "so2-residuals") so2_suite(report, config, policy);
  if (all || s == "central-extension") central_extension(report, config, policy);
  if (all) {
    perfectness(report, 2, config, policy);
    perfectness(report, 3, config, policy);
    factorization(report, 2, config, policy);
    factorization(report, 3, config, policy);
  } else if (s == "perfectness") {
    perfectness(report, model_dimension(config.model), config, policy);
  } else if (s == "factorization") {
    factorization(report, model_dimension(config.model), config, policy);
  }
  if (all || s == "cocone") cocone(report, config, policy);
  return report;
}

namespace {

struct CommonOptions {
  ConfigOverrides overrides;
  std::optional<std::string> config_path;
  std::optional<std::string> out_path;
  std::optional<std::string> t_flag;
  bool timing = false;
};

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--model", o.overrides.model, "geodesic | sl2 | sl3 | a2-diagram | broken-sl2");
  app->add_option("--seed", o.overrides.seed, "64-bit sampling seed");
  app->add_option("--samples", o.overrides.samples, "sample count");
  app->add_option("--precision-bits", o.overrides.precision_bits, "MPFR precision in bits");
  app->add_option("--abs-tol", o.overrides.abs_tol, "absolute tolerance as a decimal string");
  app->add_option("--t-values", o.overrides.t_values, "comma-separated rationals, e.g. 1,1/2,2");
  app->add_option("--t", o.t_flag, "single parameter t (shorthand for --t-values)");
  app->add_option("--diagram", o.overrides.diagram, "rank-2 diagram (A2)");
  app->add_option("--config", o.config_path, "JSON config file");
  app->add_option("--out", o.out_path, "write the report here instead of stdout");
  app->add_flag("--timing", o.timing, "include wall_time_ms in the report (not byte-reproducible)");
}

int emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out, std::ostream& err) {
  if (!path) {
    out << text;
    return 0;
  }
  std::ofstream file(*path);
  if (!file || !(file << text)) {
    err << "ConfigError: cannot write '" << *path << "'\n";
    return 2;
  }
  return 0;
}

int run_report(SuiteConfig config, const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Report report = run_suite(config);
  if (o.timing) {
    report.set_wall_time_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  int rc = emit(report.str(), o.out_path, out, err);
  return rc != 0 ? rc : report.exit_code();
}

SuiteConfig resolve(const std::string& suite, CommonOptions& o) {
  if (o.t_flag) {
    if (o.overrides.t_values) throw Error(ErrorCode::ConfigError, "use either --t or --t-values");
    o.overrides.t_values = o.t_flag;
  }
  o.overrides.suite = suite;
  return load_config(o.config_path, o.overrides);
}

int run_factor(const std::string& text, CommonOptions& o, std::ostream& out, std::ostream& err) {
  SuiteConfig config = resolve("all", o);
  config.suite = "factor";
  PrecisionScope scope(config.precision_bits);
  const TolerancePolicy policy = config.policy();
  Matrix<Rational> x = parse_rational_matrix(text);
  if (!(determinant(x) == Rational(1))) {
    throw Error(ErrorCode::NotUnimodular, to_string(x) + " does not have determinant 1");
  }
  Report report("factor", config);
  guarded(report, "factor", [&] {
    auto f = point_factorization(x, policy);
    Json factors = Json::array();
    for (const auto& p : f.factors) factors.push_back(to_string(p));
    Json shears = Json::array();
    for (const auto& s : f.shears) {
      shears.push_back("E" + std::to_string(s.i + 1) + std::to_string(s.j + 1) + "(" + s.s.str() + ")");
    }
    Json params{{"matrix", to_string(x)}, {"sign", f.sign}, {"expression", f.expression}, {"factors", factors}};
    if (!f.shears.empty()) params["root_shears"] = shears;
    report.add("factor/evaluation", params, f.residual.within(policy), f.residual);
    report.add("factor/exact-evaluation", Json{{"field", "Q(sqrt2)"}}, f.exact_residual.is_exact_zero(),
               f.exact_residual);
  });
  int rc = emit(report.str(), o.out_path, out, err);
  return rc != 0 ? rc : report.exit_code();
}

std::vector<std::string> split_letters(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, '|')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw Error(ErrorCode::ParseError, "empty letter in word \"" + text + "\"");
    out.push_back(item);
  }
  return out;
}

template <SpaceModel M, class Parse>
Json act_on(const M& model, const std::string& word, const std::string& point, Parse parse) {
  std::vector<typename M::Point> letters;
  Json names = Json::array();
  if (!word.empty()) {
    for (const auto& l : split_letters(word)) {
      letters.push_back(l == "o" ? model.basepoint() : parse(l));
      names.push_back(l);
    }
  }
  auto y = point == "o" ? model.basepoint() : parse(point);
  auto image = word_act(model, ReflectionWord<typename M::Point>(letters), y);
  return Json{{"model", model.name()}, {"word", names}, {"point", point}, {"image", to_string(image)}};
}

int run_act(const std::string& model, const std::string& word, const std::string& point, CommonOptions& o,
            std::ostream& out, std::ostream& err) {
  Json result;
  if (model == "geodesic") {
    result = act_on(GeodesicLine(), word, point, [](const std::string& s) { return Rational::parse(s); });
  } else if (model == "sl2" || model == "sl3" || model == "a2-diagram") {
    SpdSpace<Rational> space(model == "sl2" ? 2 : 3);
    result = act_on(space, word, point, [&](const std::string& s) { return space.point(parse_rational_matrix(s)); });
  } else if (model == "broken-sl2") {
    BrokenSpdSpace<Rational> space(2);
    SpdSpace<Rational> valid(2);
    result = act_on(space, word, point, [&](const std::string& s) { return valid.point(parse_rational_matrix(s)); });
  } else {
    throw Error(ErrorCode::ConfigError, "field 'model': unknown model '" + model + "'");
  }
  result["note"] = "letters act right to left";
  return emit(result.dump(2) + "\n", o.out_path, out, err);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reflection-space verification suites", "symspace"};
  app.require_subcommand(1);

  CommonOptions verify_opts, demo_opts, factor_opts, act_opts;
  std::string suite, demo_name, matrix, act_model = "sl2", word, point;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "axioms | matrix-lemma | commutator | so2-residuals | central-extension | "
                                     "perfectness | factorization | cocone | all")
      ->required();
  add_common(verify, verify_opts);

  auto* demo = app.add_subcommand("demo", "run a demonstration");
  demo->add_option("name", demo_name, "central-extension")->required();
  add_common(demo, demo_opts);

  auto* factor = app.add_subcommand("factor", "factor an SL_n(Q) matrix into SPD squares");
  factor->add_option("--matrix", matrix, "rows separated by ';', entries by ','")->required();
  add_common(factor, factor_opts);

  auto* act = app.add_subcommand("act", "apply a reflection word to a point");
  add_common(act, act_opts);
  act->get_option("--model")->description("geodesic | sl2 | sl3 | broken-sl2");
  act->add_option("--word", word, "letters separated by '|', 'o' is the basepoint");
  act->add_option("--point", point, "point, 'o' is the basepoint")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "ConfigError: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*verify) return run_report(resolve(suite, verify_opts), verify_opts, out, err);
    if (*demo) {
      if (demo_name != "central-extension") {
        throw Error(ErrorCode::ConfigError, "unknown demo '" + demo_name + "' (expected central-extension)");
      }
      return run_report(resolve("central-extension", demo_opts), demo_opts, out, err);
    }
    if (*factor) return run_factor(matrix, factor_opts, out, err);
    if (*act) {
      if (act_opts.overrides.model) act_model = *act_opts.overrides.model;
      SuiteConfig config = resolve("all", act_opts);
      PrecisionScope scope(config.precision_bits);
      return run_act(act_model, word, point, act_opts, out, err);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace symspace::cli
