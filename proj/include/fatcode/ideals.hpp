#pragma once

#include "fatcode/geometry.hpp"
#include "fatcode/report.hpp"

namespace fatcode {

// The degree-d monomials of K[x_0..x_n] in graded lex order (x_0 largest),
// the coordinate system for every graded piece.
class MonomialBasis {
 public:
  static MonomialBasis create(int ambient_dim, int degree);

  int ambient_dim() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return exponents_.size(); }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }

  // Position of an exponent vector; throws if it has the wrong degree.
  std::size_t index_of(const std::vector<int>& exponent) const;

 private:
  MonomialBasis(int n, int d) : n_(n), d_(d) {}
  int n_;
  int d_;
  std::vector<std::vector<int>> exponents_;
  std::vector<std::pair<std::vector<int>, std::size_t>> lookup_;  // sorted
};

// Interpolation matrix for (I_Z)_d: one row per point per derivative
// multi-index of order exactly min(m_i - 1, d) in the n+1 homogeneous
// variables, one column per degree-d monomial. Entry at (P, beta; x^a) is
// the beta-th partial of x^a evaluated at P, i.e.
// prod_j falling(a_j, beta_j) * P^(a-beta), zero when beta exceeds a
// anywhere. For a homogeneous f of degree d >= m-1, Euler's identity makes
// the top-order conditions equivalent to all lower orders, so the kernel is
// exactly (I_P^m)_d with C(n+m-1, n) rows per point; for d < m-1 the order
// is truncated to d, whose conditions read off the coefficients and force
// the zero form, again the right answer. Characteristic zero throughout,
// which is why fat schemes are rationals-only.
Matrix fat_vanishing_matrix(const FatPointScheme& scheme, int degree);

std::int64_t ideal_graded_dim(const FatPointScheme& scheme, int degree);

struct GradedPiece {
  int degree;
  Matrix basis;  // columns = coefficient vectors in MonomialBasis order
  std::int64_t dim;
};

GradedPiece graded_piece(const FatPointScheme& scheme, int degree);

// Smallest d >= 1 with (I_Z)_d nonzero. Mathematically bounded by sum m_i;
// the cap is a hard error guard, never a silent answer.
int alpha(const FatPointScheme& scheme, int degree_cap = 200);

// HF(R/I_Z, d) = C(n+d, n) - dim (I_Z)_d; nondecreasing, stabilizes at
// scheme_degree(Z).
std::int64_t hilbert_function(const FatPointScheme& scheme, int degree);

// d(X)_a = |X| - hyp_a(X) where hyp_a is the maximum size of a proper
// subset S of X on which some degree-a form vanishes without vanishing on
// all of X (equivalently dim (I_S)_a > dim (I_X)_a). Searched by descending
// |S| with early exit. The proper-subset convention matches the evaluation
// code reading: a form through all of X would give the zero codeword.
std::int64_t generalized_distance(const FatPointScheme& reduced_scheme, int a);

// Same number through the Veronese picture: embed X by degree-a monomials
// and find the largest subset whose image spans one dimension less than the
// whole image (a hyperplane section of the span). Cross-check route.
std::int64_t generalized_distance_veronese(const FatPointScheme& reduced_scheme, int a);

// Ladder check: d(X)_a >= d(X)_{a+1} + 1 and d(X)_a >= b - a + 2 for all
// 1 <= a <= b-1. Requires d(X)_b >= 2 (HypothesisUnmet otherwise).
BoundReport check_recursion_lemma(const FatPointScheme& reduced_scheme, int b);

}  // namespace fatcode
