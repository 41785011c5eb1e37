// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "symspace/cli/suites.hpp"
#include "symspace/embedding/lab.hpp"

using namespace symspace;

namespace {

using Clock = std::chrono::steady_clock;

const TolerancePolicy kPolicy{};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int index, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s [%d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", index, title.c_str(), o.detail.c_str(),
              seconds_since(start));
  std::fflush(stdout);
}

template <SpaceModel M>
bool axioms_hold(const M& model, std::size_t count, bool exact, Residual& worst_seen) {
  AxiomReport r = check_axioms(model, 1, count, kPolicy);
  bool ok = r.all_pass();
  for (const auto& a : r.axioms) {
    if (a.axiom == "RS4") continue;  // its residual is a displacement, not a defect
    worst_seen = worst(worst_seen, a.residual);
    if (exact && !a.residual.is_exact_zero()) ok = false;
  }
  return ok;
}

Rational nonzero_rational(Rng& rng) {
  Rational t = random_line_rational(rng);
  return t.is_zero() ? Rational(5, 7) : t;
}

}  // namespace

int main() {
  criterion(1, "reflection axioms on geodesic, SL2 and SL3 models; negative control fails RS2", [] {
    const auto start = Clock::now();
    Residual real_worst{Real(0), false};
    Residual exact_worst = Residual::exact_zero();
    bool ok = axioms_hold(GeodesicLine(), 1000, true, exact_worst);
    ok = axioms_hold(SpdSpace<Real>(2, kPolicy), 1000, false, real_worst) && ok;
    ok = axioms_hold(SpdSpace<Real>(3, kPolicy), 1000, false, real_worst) && ok;
    ok = axioms_hold(SpdSpace<Rational>(2, kPolicy), 100, true, exact_worst) && ok;
    ok = axioms_hold(SpdSpace<Rational>(3, kPolicy), 100, true, exact_worst) && ok;
    AxiomReport broken = check_axioms(BrokenSpdSpace<Real>(2), 1, 100, kPolicy);
    const bool rejected = !broken.axioms[1].pass;
    const double elapsed = seconds_since(start);
    return Outcome{ok && rejected && elapsed < 10.0,
                   "1000 triples, worst defect " + real_worst.str() + ", rational subsamples " + exact_worst.str() +
                       ", broken model RS2 violations " + std::to_string(broken.axioms[1].violations)};
  });

  criterion(2, "shear factor identities exact for 100 rational t", [] {
    const auto start = Clock::now();
    Rng rng(2);
    std::size_t held = 0;
    for (int k = 0; k < 100; ++k) held += verify_matrix_lemma(nonzero_rational(rng)).all_hold() ? 1 : 0;
    const double elapsed = seconds_since(start);
    return Outcome{held == 100 && elapsed < 1.0, std::to_string(held) + "/100 parameters exact-zero"};
  });

  criterion(3, "SPD square roots of A(t), B(t), C square back", [] {
    Real worst_seen(0);
    for (long k = 1; k <= 20; ++k) {
      const Rational t(k * k, 7);
      SquareRoots s = lemma_square_roots(t, kPolicy);
      LemmaMatrices m = lemma_matrices(t);
      worst_seen = max(worst_seen, frobenius_norm(Matrix<Real>(s.a * s.a - to_real(m.a))));
      worst_seen = max(worst_seen, frobenius_norm(Matrix<Real>(s.b * s.b - to_real(m.b))));
      worst_seen = max(worst_seen, frobenius_norm(Matrix<Real>(s.c * s.c - to_real(m.c))));
    }
    return Outcome{worst_seen <= kPolicy.abs_tol, "20 parameters, worst residual " + worst_seen.str(20)};
  });

  criterion(4, "commutator identity as actions and SO(2) residuals", [] {
    bool ok = true;
    Residual worst_seen{Real(0), false};
    Real so2_worst(0);
    for (const Rational& t : {Rational(1, 2), Rational(1), Rational(2), Rational(4)}) {
      auto c = verify_commutator_identity(t, 4, 100, kPolicy);
      ok = ok && c.all_hold();
      worst_seen = worst(worst_seen, c.commutator.max_residual);
      auto s = verify_so2_residuals(t, kPolicy);
      ok = ok && s.pass(kPolicy);
      so2_worst = max(so2_worst, max(max(s.a_side.orthogonality, s.b_side.orthogonality),
                                     max(s.a_certificate_residual, s.b_certificate_residual)));
    }
    return Outcome{ok, "t in {1/2,1,2,4}, 100 samples, commutator " + worst_seen.str() + ", SO(2) " +
                           so2_worst.str(20)};
  });

  criterion(5, "central-extension witness in SL3", [] {
    auto r = demo_sl3_central_extension(kPolicy, 5, 50);
    const bool a = r.kernel.trivial_on_subspace;
    const bool b = r.analytic_distance_error <= kPolicy.abs_tol;
    const bool c = r.kernel.in_central_kernel() && r.kernel.generators == 50;
    return Outcome{a && b && c && r.witness_is_expected,
                   "trivial on H " + r.kernel.triviality_residual.str() + ", |d - sqrt8| " +
                       r.analytic_distance_error.str(20) + ", centrality over " + std::to_string(r.kernel.generators) +
                       " generators " + r.kernel.centrality_residual.str() + ", witness " +
                       to_string(r.witness_matrix)};
  });

  criterion(6, "A2 cocone commutes; point factorization round-trips", [] {
    auto cocone = cocone_check("A2", 6, 100, kPolicy);
    Rng rng(6);
    Residual worst_seen{Real(0), false};
    std::size_t done = 0;
    for (std::size_t n : {2u, 3u}) {
      for (int k = 0; k < 100; ++k) {
        auto f = point_factorization(random_bounded_sl(n, rng, Rational(4)), kPolicy);
        worst_seen = worst(worst_seen, f.residual);
        ++done;
      }
    }
    const bool ok = cocone.pass(kPolicy) && cocone.commute_samples >= 100 && done == 200 &&
                    worst_seen.within(kPolicy);
    return Outcome{ok, "cocone " + cocone.commute_residual.str() + " on " + std::to_string(cocone.commute_samples) +
                           " samples, 100 SL2 + 100 SL3 factorizations worst " + worst_seen.str()};
  });

  criterion(7, "geodesic transvections compose additively", [] {
    GeodesicLine line;
    const Rational o = line.basepoint();
    Rng rng(7);
    std::size_t exact = 0;
    for (int k = 0; k < 1000; ++k) {
      const Rational x = random_line_rational(rng);
      const Rational y = random_line_rational(rng);
      auto lhs = TransvectionWord<Rational>::elementary(x, o) * TransvectionWord<Rational>::elementary(y, o);
      auto rhs = TransvectionWord<Rational>::elementary(x + y, o);
      auto check = words_equal_as_actions(line, lhs, rhs, 1000 + k, 5, kPolicy);
      if (check.holds && check.max_residual.is_exact_zero()) ++exact;
    }
    return Outcome{exact == 1000, std::to_string(exact) + "/1000 pairs exact-zero"};
  });

  criterion(8, "verify all is byte-identical for a fixed seed and under 60 s", [] {
    const auto start = Clock::now();
    cli::SuiteConfig config;
    config.suite = "all";
    config.seed = 8;
    const std::string first = cli::run_suite(config).str();
    const double elapsed = seconds_since(start);
    const std::string second = cli::run_suite(config).str();
    const bool same = first == second;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", elapsed);
    return Outcome{same && elapsed < 60.0 && first.find("\"status\": \"pass\"") != std::string::npos,
                   std::string(same ? "identical" : "different") + " reports, single run " + buf};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
