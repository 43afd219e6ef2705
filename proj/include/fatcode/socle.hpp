#pragma once

#include <cstdint>

#include "fatcode/geometry.hpp"
#include "fatcode/ideals.hpp"
#include "fatcode/report.hpp"

namespace fatcode {

// A linear form L with L(P_i) != 0 for every support point. Since the
// associated primes of I_Z are exactly the point ideals, this certifies L
// as a non-zerodivisor on R/I_Z.
struct LinearFormCertificate {
  std::vector<Scalar> coefficients;      // n+1 entries
  std::vector<Scalar> values_at_points;  // L(P_i), all nonzero
  int retries_used = 0;
};

// Draws integer coefficients in [-9, 9] from a seeded stream until the
// certificate holds; DegenerateAfterRetries past 100 attempts.
LinearFormCertificate generic_nzd_linear_form(const FatPointScheme& scheme,
                                              std::uint64_t seed = 0);

// The Artinian quotient A = R/(I_Z + (L)) recorded degree by degree:
// piece_dims[d] = HF_A(d) for d = 0..top_degree, after which A vanishes.
struct ArtinianReduction {
  LinearFormCertificate form;
  std::vector<std::int64_t> piece_dims;
  int top_degree = 0;
};

// HF_A(d) is computed as C(n+d, n) minus the rank of the span of
// (I_Z)_d together with L * R_{d-1}, and independently cross-checked
// against HF_Z(d) - HF_Z(d-1), which must agree when L is a
// non-zerodivisor (NotNzd otherwise).
ArtinianReduction artinian_reduction(const FatPointScheme& scheme,
                                     const LinearFormCertificate& form,
                                     int degree_cap = 200);

// soc(A)_d = the classes killed by every variable, computed per degree as
// the kernel of the stacked multiplication maps A_d -> A_{d+1}. The
// minimum socle degree is the invariant written s_n(Z) in the reports.
struct SocleProfile {
  ArtinianReduction reduction;
  std::vector<std::int64_t> socle_dims;  // indexed by degree, same length as piece_dims
  int min_socle_degree = 0;
  int top_degree = 0;
};

SocleProfile socle_profile(const FatPointScheme& scheme, std::uint64_t seed = 0,
                           int degree_cap = 200);

// Convenience wrapper returning only s_n(Z).
int min_socle_degree(const FatPointScheme& scheme, std::uint64_t seed = 0,
                     int degree_cap = 200);

// Smallest degree of a form in I_{Z'} outside I_Z, where Z' lowers the
// multiplicity of the chosen point by one (dropping it at multiplicity 1).
// point_index is 0-based. Z' may lose the spanning property; only graded
// dimensions of it are ever used.
int separator_degree(const FatPointScheme& scheme, std::size_t point_index,
                     int degree_cap = 200);

std::vector<int> separator_degrees(const FatPointScheme& scheme, int degree_cap = 200);

}  // namespace fatcode
