#include "fatcode/ideals.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fatcode/combinatorics.hpp"

namespace fatcode {

MonomialBasis MonomialBasis::create(int ambient_dim, int degree) {
  if (ambient_dim < 1) throw Error(ErrorKind::IndexOutOfRange, "ambient dimension must be >= 1");
  if (degree < 0) throw Error(ErrorKind::IndexOutOfRange, "monomial degree must be >= 0");
  MonomialBasis basis(ambient_dim, degree);
  basis.exponents_ = monomial_exponents(ambient_dim, degree);
  basis.lookup_.reserve(basis.exponents_.size());
  for (std::size_t i = 0; i < basis.exponents_.size(); ++i) {
    basis.lookup_.emplace_back(basis.exponents_[i], i);
  }
  std::sort(basis.lookup_.begin(), basis.lookup_.end());
  return basis;
}

std::size_t MonomialBasis::index_of(const std::vector<int>& exponent) const {
  auto it = std::lower_bound(
      lookup_.begin(), lookup_.end(), exponent,
      [](const std::pair<std::vector<int>, std::size_t>& entry,
         const std::vector<int>& key) { return entry.first < key; });
  if (it == lookup_.end() || it->first != exponent) {
    throw Error(ErrorKind::IndexOutOfRange, "exponent vector is not a monomial of this basis");
  }
  return it->second;
}

namespace {

// a * (a-1) * ... * (a-b+1); equals 1 for b = 0 and 0 when b > a.
std::int64_t falling_factorial(int a, int b) {
  if (b > a) return 0;
  std::int64_t out = 1;
  for (int i = 0; i < b; ++i) out *= a - i;
  return out;
}

void require_rational(const FatPointScheme& scheme, const char* what) {
  if (!scheme.field().is_rational()) {
    std::ostringstream msg;
    msg << what << " uses derivative conditions and needs characteristic zero";
    throw Error(ErrorKind::UnsupportedField, msg.str());
  }
}

}  // namespace

Matrix fat_vanishing_matrix(const FatPointScheme& scheme, int degree) {
  require_rational(scheme, "the vanishing matrix");
  if (degree < 0) throw Error(ErrorKind::IndexOutOfRange, "degree must be >= 0");
  const int n = static_cast<int>(scheme.ambient_dim());
  const FieldSpec& field = scheme.field();
  MonomialBasis basis = MonomialBasis::create(n, degree);

  std::vector<std::vector<Scalar>> rows;
  for (const FatPoint& fp : scheme.points()) {
    // Powers of each coordinate up to the degree, so entries are products.
    std::vector<std::vector<Scalar>> power(n + 1);
    for (int j = 0; j <= n; ++j) {
      power[j].resize(degree + 1, Scalar::one(field));
      for (int e = 1; e <= degree; ++e) {
        power[j][e] = power[j][e - 1] * fp.point.coords()[j];
      }
    }
    const int order = std::min(fp.multiplicity - 1, degree);
    for (const std::vector<int>& beta : monomial_exponents(n, order)) {
      std::vector<Scalar> row;
      row.reserve(basis.size());
      for (const std::vector<int>& a : basis.exponents()) {
        Scalar entry = Scalar::one(field);
        bool zero = false;
        for (int j = 0; j <= n; ++j) {
          std::int64_t ff = falling_factorial(a[j], beta[j]);
          if (ff == 0) {
            zero = true;
            break;
          }
          if (ff != 1) entry *= Scalar::from_integer(ff, field);
          entry *= power[j][a[j] - beta[j]];
        }
        row.push_back(zero ? Scalar::zero(field) : entry);
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Matrix(0, basis.size(), field);
  return Matrix::from_rows(rows, field);
}

std::int64_t ideal_graded_dim(const FatPointScheme& scheme, int degree) {
  if (degree < 0) return 0;
  Matrix conditions = fat_vanishing_matrix(scheme, degree);
  std::int64_t num_monomials = binomial(scheme.ambient_dim() + degree, degree);
  return num_monomials - static_cast<std::int64_t>(rank(conditions));
}

GradedPiece graded_piece(const FatPointScheme& scheme, int degree) {
  if (degree < 0) throw Error(ErrorKind::IndexOutOfRange, "degree must be >= 0");
  Matrix conditions = fat_vanishing_matrix(scheme, degree);
  Matrix basis = nullspace_basis(conditions);
  return GradedPiece{degree, basis, static_cast<std::int64_t>(basis.cols())};
}

int alpha(const FatPointScheme& scheme, int degree_cap) {
  require_rational(scheme, "the initial degree");
  if (degree_cap < 1) throw Error(ErrorKind::IndexOutOfRange, "degree cap must be >= 1");
  for (int d = 1; d <= degree_cap; ++d) {
    if (ideal_graded_dim(scheme, d) > 0) return d;
  }
  throw Error(ErrorKind::CapExceeded, "no nonzero form found up to the degree cap");
}

std::int64_t hilbert_function(const FatPointScheme& scheme, int degree) {
  if (degree < 0) return 0;
  return binomial(scheme.ambient_dim() + degree, scheme.ambient_dim()) -
         ideal_graded_dim(scheme, degree);
}

namespace {

void require_reduced(const FatPointScheme& scheme) {
  if (!scheme.is_reduced()) {
    throw Error(ErrorKind::NotReduced, "generalized distances are defined for reduced schemes");
  }
}

}  // namespace

std::int64_t generalized_distance(const FatPointScheme& reduced_scheme, int a) {
  require_reduced(reduced_scheme);
  require_rational(reduced_scheme, "the generalized distance");
  if (a < 1) throw Error(ErrorKind::IndexOutOfRange, "the degree must be >= 1");
  const std::size_t s = reduced_scheme.num_points();
  const std::int64_t full_dim = ideal_graded_dim(reduced_scheme, a);

  // Largest proper subset S admitting a degree-a form that is not forced to
  // vanish on the rest of X, searched from the top so the first hit wins.
  for (std::size_t size = s - 1; size > 0; --size) {
    bool found = false;
    for_each_subset(s, size, [&](const std::vector<std::size_t>& subset) {
      std::vector<FatPoint> picked;
      picked.reserve(size);
      for (std::size_t i : subset) picked.push_back(reduced_scheme.points()[i]);
      FatPointScheme part = FatPointScheme::create_relaxed(
          std::move(picked), reduced_scheme.ambient_dim(), reduced_scheme.field());
      if (ideal_graded_dim(part, a) > full_dim) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return static_cast<std::int64_t>(s - size);
  }
  // Only the empty set fails to impose more conditions than all of X, which
  // cannot happen for a spanning support, but keep the fallback total.
  return static_cast<std::int64_t>(s);
}

std::int64_t generalized_distance_veronese(const FatPointScheme& reduced_scheme, int a) {
  FatPointScheme image = veronese_embed(reduced_scheme, a);
  Matrix columns = image.support_matrix();
  const std::size_t s = image.num_points();
  const std::size_t full_rank = rank(columns);

  for (std::size_t size = s - 1; size > 0; --size) {
    bool found = false;
    for_each_subset(s, size, [&](const std::vector<std::size_t>& subset) {
      Matrix sub(columns.rows(), subset.size(), columns.field());
      for (std::size_t r = 0; r < columns.rows(); ++r) {
        for (std::size_t c = 0; c < subset.size(); ++c) {
          sub.at(r, c) = columns.at(r, subset[c]);
        }
      }
      if (rank(sub) <= full_rank - 1) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return static_cast<std::int64_t>(s - size);
  }
  return static_cast<std::int64_t>(s);
}

BoundReport check_recursion_lemma(const FatPointScheme& reduced_scheme, int b) {
  require_reduced(reduced_scheme);
  require_rational(reduced_scheme, "the ladder check");
  if (b < 1) throw Error(ErrorKind::IndexOutOfRange, "the top degree must be >= 1");

  std::vector<std::int64_t> ladder(b + 1, 0);
  for (int a = 1; a <= b; ++a) ladder[a] = generalized_distance(reduced_scheme, a);
  if (ladder[b] < 2) {
    std::ostringstream msg;
    msg << "the ladder needs d(X)_" << b << " >= 2, got " << ladder[b];
    throw Error(ErrorKind::HypothesisUnmet, msg.str());
  }

  BoundReport report;
  report.id = StatementId::RecursionLemma;
  report.inputs_summary = reduced_scheme.str();
  report.set("b", b);
  for (int a = 1; a <= b; ++a) {
    std::ostringstream key;
    key << "d_" << a;
    report.set(key.str(), ladder[a]);
  }
  bool holds = true;
  bool step_tight = false;
  for (int a = 1; a < b; ++a) {
    if (ladder[a] < ladder[a + 1] + 1) holds = false;
    if (ladder[a] < b - a + 2) holds = false;
    if (ladder[a] == ladder[a + 1] + 1) step_tight = true;
  }
  report.holds = holds;
  report.attained = b > 1 && step_tight;
  report.notes = "each step of the ladder drops by at least one and stays above the floor b-a+2";
  return report;
}

}  // namespace fatcode
