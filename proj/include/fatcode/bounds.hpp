#pragma once

#include <cstdint>
#include <optional>

#include "fatcode/geometry.hpp"
#include "fatcode/report.hpp"

namespace fatcode {

// d(Z) >= alpha(I_Z) - m(Z).
BoundReport check_hombound(const FatPointScheme& scheme, int degree_cap = 200);

// d(X) = alpha(I_X) - 1 iff s-1 points of X lie on a hyperplane. Both sides
// are computed independently: the left from alpha and the distance, the
// right from the distance witness (s-1 coplanar points means d(X) = 1).
BoundReport check_boundscor(const FatPointScheme& reduced_scheme, int degree_cap = 200);

// Homogeneous Z = m*X. Branch (i): d(X) >= alpha(I_X) gives s_n(Z) <= m*d(X).
// Branch (ii): d(X) = alpha(I_X) - 1 gives s_n(Z) <= 2m - 1. The dichotomy
// is exhaustive since d(X) >= alpha(I_X) - 1 always holds.
BoundReport check_maintheorem(const FatPointScheme& scheme, std::uint64_t seed = 0,
                              int degree_cap = 200);

// min separator degree >= minimum socle degree.
BoundReport check_separator_socle_bound(const FatPointScheme& scheme,
                                        std::uint64_t seed = 0, int degree_cap = 200);

// d(Z) >= s_n(Z) - m(Z) + 1 (open question; violations are counterexample
// reports, not failures).
BoundReport open_question_experiment(const FatPointScheme& scheme,
                                     std::uint64_t seed = 0, int degree_cap = 200);

// Complete-intersection checkers. All build or accept a CI instance.
BoundReport check_cibound(const CiInstance& ci);                      // d(X) >= sum d_i - n
BoundReport check_ci_socle_formula(const CiInstance& ci,              // s_n = m d_1 + sum_{i>=2} d_i - n
                                   std::uint64_t seed = 0, int degree_cap = 200);
BoundReport check_ci22_equality(const CiInstance& ci, std::uint64_t seed = 0,
                                int degree_cap = 200);
// n=2: proved theorem d(X) >= (d_1 - 1) d_2. n>=3: same inequality as an
// open conjecture; a violation sets counterexample instead of failing.
BoundReport check_bezout_ci(const CiInstance& ci);

// Every checker applicable to the instance, in StatementId order. A checker
// that does not apply is omitted; one that fails is recorded in `skipped`
// with its reason instead of aborting the rest.
struct SurveyResult {
  std::vector<BoundReport> reports;
  std::vector<std::string> skipped;
};

SurveyResult survey(const FatPointScheme& scheme, std::uint64_t seed = 0,
                    int degree_cap = 200);
SurveyResult survey(const CiInstance& ci, std::uint64_t seed = 0,
                    int degree_cap = 200);

// Seeded random scheme generator for property suites. Draws coordinates
// from [-9,9] (or residues for prime fields) and multiplicities from
// [1, max_multiplicity], then validates the FatPointScheme invariants,
// rejecting and redrawing rather than repairing; the rejection count is
// part of the result.
struct RandomSchemeSpec {
  FieldSpec field = FieldSpec::rationals();
  int ambient_dim = 2;
  int num_points = 4;
  int max_multiplicity = 1;
};

struct RandomSchemeResult {
  FatPointScheme scheme;
  int rejections = 0;
};

RandomSchemeResult random_scheme(const RandomSchemeSpec& spec, std::uint64_t seed);

}  // namespace fatcode
