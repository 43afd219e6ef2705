#pragma once

#include "fatcode/geometry.hpp"
#include "fatcode/report.hpp"

namespace fatcode {

// The (n+1) x M matrix whose columns are the support coordinates, each point
// repeated multiplicity-many times, in input order.
struct GeneratorMatrix {
  Matrix matrix;
  std::vector<int> block_multiplicities;
  FatPointScheme source;
};

GeneratorMatrix generator_matrix(const FatPointScheme& scheme);

struct DistanceResult {
  std::int64_t d = 0;
  std::vector<Scalar> witness_hyperplane;   // normal vector, normalized
  std::vector<std::size_t> witness_points;  // support indices on it, sorted
  std::int64_t witness_weight = 0;          // sum of m_i over witness_points
};

// d(Z) = M - max over hyperplanes H of the multiplicity-weight of support
// points on H. Enumerates all C(s, n) subsets of n support points; a subset
// of rank exactly n spans a unique hyperplane whose weight is accumulated
// over the whole support. A weight-maximal coplanar set spans dimension
// exactly n (the support has rank n+1, so a set of smaller rank could
// absorb another point without losing coplanarity), hence is seen by the
// enumeration. Ties are broken by the lexicographically smallest sorted
// index set, so the witness is deterministic and thread-count independent.
DistanceResult minimum_distance(const FatPointScheme& scheme, int threads = 1);

// Independent oracle over GF(p): enumerate one message vector per projective
// class of GF(p)^{n+1} and take the minimum codeword Hamming weight.
// Guarded by p^{n+1} <= 2^24.
std::int64_t minimum_distance_exhaustive(const GeneratorMatrix& gen);

// Theorem-level check: with multiplicities sorted descending,
// m_1+...+m_d >= d(Z) >= m_{s-d+1}+...+m_s where d = d(X) of the support;
// for homogeneous schemes additionally d(Z) = m * d(X).
BoundReport crude_bounds(const FatPointScheme& scheme);

}  // namespace fatcode
