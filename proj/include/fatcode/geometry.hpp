#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fatcode/matrix.hpp"

namespace fatcode {

// A point of P^n stored in normalized homogeneous coordinates: the first
// nonzero coordinate is scaled to 1, so equality is plain coordinate
// comparison.
class ProjectivePoint {
 public:
  // Normalizes; throws ZeroVector on the all-zero vector.
  static ProjectivePoint from_coords(std::vector<Scalar> coords);

  const std::vector<Scalar>& coords() const { return coords_; }
  std::size_t ambient_dim() const { return coords_.size() - 1; }  // the n of P^n
  const FieldSpec& field() const { return coords_.front().field(); }

  bool operator==(const ProjectivePoint& other) const { return coords_ == other.coords_; }
  bool operator!=(const ProjectivePoint& other) const { return !(*this == other); }

  std::string str() const;

 private:
  explicit ProjectivePoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  std::vector<Scalar> coords_;
};

struct FatPoint {
  ProjectivePoint point;
  int multiplicity = 1;
};

// A fat point scheme m_1 P_1 + ... + m_s P_s in P^n. The strict constructor
// enforces distinct points, every multiplicity >= 1, s >= n+1, and support
// of full rank n+1 (the support spans P^n). The relaxed constructor keeps
// only distinctness and positivity; it exists for derived subschemes
// (separator subschemes, degenerate examples) where only graded dimensions
// are needed.
class FatPointScheme {
 public:
  static FatPointScheme create(std::vector<FatPoint> points);
  static FatPointScheme create_relaxed(std::vector<FatPoint> points,
                                       std::size_t ambient_dim,
                                       const FieldSpec& field);

  std::size_t ambient_dim() const { return ambient_dim_; }      // n
  std::size_t num_points() const { return points_.size(); }     // s
  const std::vector<FatPoint>& points() const { return points_; }
  const FieldSpec& field() const { return field_; }

  std::int64_t total_multiplicity() const;  // M = sum of m_i
  int max_multiplicity() const;             // m(Z)
  bool is_reduced() const;                  // all m_i = 1
  bool is_homogeneous() const;              // all m_i equal
  bool has_full_rank_support() const;

  // The same points with every multiplicity reset to 1.
  FatPointScheme support() const;

  // (n+1) x s matrix whose columns are the normalized point coordinates.
  Matrix support_matrix() const;

  std::string str() const;

 private:
  FatPointScheme(std::vector<FatPoint> points, std::size_t ambient_dim,
                 const FieldSpec& field)
      : points_(std::move(points)), ambient_dim_(ambient_dim), field_(field) {}

  std::vector<FatPoint> points_;
  std::size_t ambient_dim_;
  FieldSpec field_;
};

// deg Z = sum of C(n + m_i - 1, n), the degree of the scheme cut out by the
// intersection of the I_{P_i}^{m_i}. Rational field only.
std::int64_t scheme_degree(const FatPointScheme& scheme);

// Image of a reduced scheme under the degree-a Veronese map: coordinates are
// all degree-a monomials in the original coordinates, graded lex order.
FatPointScheme veronese_embed(const FatPointScheme& reduced_scheme, int a);

// A complete intersection of n generic products of linear forms in P^n.
// family[i] holds the d_i linear forms (coefficient vectors) of the i-th
// hypersurface; the scheme is the d_1*...*d_n transverse intersection points
// with multiplicity `multiplicity` each.
struct CiGridRealization {
  FatPointScheme scheme;
  std::vector<std::vector<std::vector<Scalar>>> families;
  int retries_used = 0;
};

// Draws coefficient vectors in [-9, 9] from a splitmix64 stream until the
// configuration is honestly transverse: every n-tuple of chosen forms meets
// in a single point, all points are distinct, no point lies on a form that
// does not cut it out, and the support spans P^n. Verified, not assumed;
// throws DegenerateAfterRetries after 100 attempts.
CiGridRealization ci_grid(const std::vector<int>& degrees, int multiplicity,
                          std::uint64_t seed);

// How a complete-intersection instance is described: either a seeded grid of
// hyperplane products, or an explicit point list the caller asserts to be a
// complete intersection of the given degrees.
struct CiDescription {
  std::vector<int> degrees;  // d_1 <= ... <= d_n, all >= 2
  int multiplicity = 1;
  std::optional<std::uint64_t> grid_seed;        // grid form
  std::optional<std::vector<FatPoint>> explicit_points;  // explicit form

  static CiDescription grid(std::vector<int> degrees, int multiplicity,
                            std::uint64_t seed);
  static CiDescription explicit_scheme(std::vector<int> degrees, int multiplicity,
                                       std::vector<FatPoint> points);
};

// Materializes the description: builds the grid or wraps the explicit points
// into a validated scheme with the requested multiplicity.
struct CiInstance {
  FatPointScheme scheme;
  std::vector<int> degrees;
  std::vector<std::vector<std::vector<Scalar>>> families;  // empty for explicit
};

CiInstance realize_ci(const CiDescription& description);

}  // namespace fatcode
