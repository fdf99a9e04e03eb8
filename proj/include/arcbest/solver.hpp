#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcbest/error_analysis.hpp"
#include "arcbest/families.hpp"

namespace arcbest {

struct SolverConfig {
  double epsilon = 1e-12;    // outer equioscillation tolerance on |v0 + v1|
  double inner_tol = 1e-14;  // relative bracket width for the q-root bisection
  int max_outer = 200;
  int max_inner = 200;
  int grid_points = 100000;  // d-grid resolution of the brute-force oracle
};

void validate(const SolverConfig& cfg);  // throws DomainError

enum class StopReason { residual, bracket };

struct SolverResult {
  double d_star = 0.0;
  double tau_star = 0.0;  // interior zero of the optimal error, in (0, 1)
  ErrorProfile profile;
  double residual = 0.0;
  int outer_iterations = 0;
  ErrorKind error_kind = ErrorKind::radial;
  StopReason stop_reason = StopReason::residual;
};

// Unique root d_tau of q_n(tau, .) = 0 in I_n (bracketed bisection; the cap
// of an unbounded I_n is doubled until a sign change appears).
double solve_q_root(FamilyId family, const ArcSpec& arc, double tau,
                    const SolverConfig& cfg);

// Equioscillation bisection on tau in (0, 1): at each step d_tau is the
// inner q-root and the bracket side is chosen by the sign of v0 + v1.
SolverResult best_fit(FamilyId family, const ArcSpec& arc, ErrorKind kind,
                      const SolverConfig& cfg);

// Direct route for the parabolic radial optimum: the unique root of the
// quartic f on (2-c, 3-3c+c^2).
double solve_parabolic_direct(const ArcSpec& arc, const SolverConfig& cfg);

// Independent oracle: plain grid search of d over the (capped) closure of
// I_n, scoring max |error| on a fixed t-grid of [0, 1] evaluated straight
// from the curve coordinates. Intentionally slow and simple.
double brute_force_best(FamilyId family, const ArcSpec& arc, ErrorKind kind,
                        const SolverConfig& cfg);

// ---- numerical lemma verification ----------------------------------------

struct LemmaCheck {
  std::string name;
  double min_margin = 0.0;  // smallest observed slack; negative means failed
  int samples = 0;
  bool pass = false;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool all_pass = false;
  const LemmaCheck* find(const std::string& name) const;
};

inline constexpr std::uint64_t kLemmaSuiteSeed = 0x9e3779b97f4a7c15ull;

// Evaluate every lemma's claimed sign/monotonicity/convexity statement on
// `samples` random draws from the stated intervals. samples >= 100.
LemmaReport verify_lemma_suite(int samples,
                               std::uint64_t seed = kLemmaSuiteSeed);

// Margin of the Lemma-3.1-style localization for a caller-supplied quartic:
// f must be positive at and left of 2-c, negative at 3-3c+c^2, decreasing
// between. Exposed so a tampered polynomial is detectable in tests.
double parabolic_localization_margin(const Poly1& f, double c);

}  // namespace arcbest
