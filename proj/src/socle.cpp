#include "fatcode/socle.hpp"

#include <algorithm>
#include <sstream>

#include "fatcode/combinatorics.hpp"
#include "fatcode/rng.hpp"

namespace fatcode {

namespace {

void require_rational(const FatPointScheme& scheme, const char* what) {
  if (!scheme.field().is_rational()) {
    std::ostringstream msg;
    msg << what << " works in the characteristic zero quotient ring";
    throw Error(ErrorKind::UnsupportedField, msg.str());
  }
}

Scalar evaluate_linear(const std::vector<Scalar>& coefficients,
                       const ProjectivePoint& point) {
  Scalar value = Scalar::zero(coefficients.front().field());
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    value += coefficients[j] * point.coords()[j];
  }
  return value;
}

}  // namespace

LinearFormCertificate generic_nzd_linear_form(const FatPointScheme& scheme,
                                              std::uint64_t seed) {
  require_rational(scheme, "the non-zerodivisor search");
  const FieldSpec& field = scheme.field();
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Scalar> coefficients;
    for (std::size_t j = 0; j <= scheme.ambient_dim(); ++j) {
      coefficients.push_back(Scalar::from_integer(rng.uniform(-9, 9), field));
    }
    if (std::all_of(coefficients.begin(), coefficients.end(),
                    [](const Scalar& c) { return c.is_zero(); })) {
      continue;
    }
    std::vector<Scalar> values;
    bool nonzero = true;
    for (const FatPoint& fp : scheme.points()) {
      values.push_back(evaluate_linear(coefficients, fp.point));
      if (values.back().is_zero()) {
        nonzero = false;
        break;
      }
    }
    if (nonzero) return {std::move(coefficients), std::move(values), attempt};
  }
  throw Error(ErrorKind::DegenerateAfterRetries,
              "no linear form avoided every point in 100 draws");
}

namespace {

// The graded piece W_d = (I_Z + (L))_d held as the RREF of its spanning
// rows, plus the non-pivot monomial indices, whose classes form the
// complement basis of A_d used everywhere below.
struct QuotientPiece {
  RrefResult reduced;
  std::vector<std::size_t> free_columns;
  std::int64_t ideal_dim = 0;  // dim (I_Z)_d, reused for the NZD check
};

QuotientPiece quotient_piece(const FatPointScheme& scheme,
                             const std::vector<Scalar>& form, int degree) {
  const FieldSpec& field = scheme.field();
  const int n = static_cast<int>(scheme.ambient_dim());
  GradedPiece ideal = graded_piece(scheme, degree);
  const std::size_t num_monomials = ideal.basis.rows();
  MonomialBasis target = MonomialBasis::create(n, degree);

  Matrix span(0, num_monomials, field);
  for (std::size_t c = 0; c < ideal.basis.cols(); ++c) {
    std::vector<Scalar> row;
    row.reserve(num_monomials);
    for (std::size_t r = 0; r < num_monomials; ++r) row.push_back(ideal.basis.at(r, c));
    span.append_row(row);
  }
  if (degree >= 1) {
    for (const std::vector<int>& m : monomial_exponents(n, degree - 1)) {
      std::vector<Scalar> row(num_monomials, Scalar::zero(field));
      std::vector<int> shifted = m;
      for (int j = 0; j <= n; ++j) {
        if (form[j].is_zero()) continue;
        shifted[j] += 1;
        row[target.index_of(shifted)] = form[j];
        shifted[j] -= 1;
      }
      span.append_row(row);
    }
  }

  QuotientPiece piece{rref(span), {}, ideal.dim};
  const auto& pivots = piece.reduced.pivot_columns;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < num_monomials; ++c) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
      ++next_pivot;
    } else {
      piece.free_columns.push_back(c);
    }
  }
  return piece;
}

void verify_certificate(const FatPointScheme& scheme, const LinearFormCertificate& form) {
  if (form.coefficients.size() != scheme.ambient_dim() + 1) {
    throw Error(ErrorKind::DimensionMismatch, "linear form has the wrong arity");
  }
  for (const FatPoint& fp : scheme.points()) {
    if (evaluate_linear(form.coefficients, fp.point).is_zero()) {
      throw Error(ErrorKind::NotNzd, "linear form vanishes at a support point");
    }
  }
}

}  // namespace

ArtinianReduction artinian_reduction(const FatPointScheme& scheme,
                                     const LinearFormCertificate& form,
                                     int degree_cap) {
  require_rational(scheme, "the Artinian reduction");
  verify_certificate(scheme, form);

  ArtinianReduction reduction;
  reduction.form = form;
  std::int64_t previous_hf = 0;
  for (int d = 0; d <= degree_cap; ++d) {
    QuotientPiece piece = quotient_piece(scheme, form.coefficients, d);
    std::int64_t num_monomials = binomial(scheme.ambient_dim() + d, scheme.ambient_dim());
    std::int64_t quotient_dim =
        num_monomials - static_cast<std::int64_t>(piece.reduced.pivot_columns.size());
    std::int64_t hilbert = num_monomials - piece.ideal_dim;
    if (quotient_dim != hilbert - previous_hf) {
      throw Error(ErrorKind::NotNzd,
                  "quotient dimensions disagree with the Hilbert function differences");
    }
    previous_hf = hilbert;
    if (quotient_dim == 0) {
      reduction.top_degree = d - 1;
      return reduction;
    }
    reduction.piece_dims.push_back(quotient_dim);
  }
  throw Error(ErrorKind::CapExceeded, "the quotient stayed nonzero up to the degree cap");
}

SocleProfile socle_profile(const FatPointScheme& scheme, std::uint64_t seed,
                           int degree_cap) {
  require_rational(scheme, "the socle");
  LinearFormCertificate form = generic_nzd_linear_form(scheme, seed);

  // One pass computing the quotient pieces until they die out, keeping the
  // reduced spans for the multiplication maps.
  std::vector<QuotientPiece> pieces;
  ArtinianReduction reduction;
  reduction.form = form;
  std::int64_t previous_hf = 0;
  for (int d = 0; d <= degree_cap + 1; ++d) {
    pieces.push_back(quotient_piece(scheme, form.coefficients, d));
    const QuotientPiece& piece = pieces.back();
    std::int64_t num_monomials = binomial(scheme.ambient_dim() + d, scheme.ambient_dim());
    std::int64_t quotient_dim = static_cast<std::int64_t>(piece.free_columns.size());
    std::int64_t hilbert = num_monomials - piece.ideal_dim;
    if (quotient_dim != hilbert - previous_hf) {
      throw Error(ErrorKind::NotNzd,
                  "quotient dimensions disagree with the Hilbert function differences");
    }
    previous_hf = hilbert;
    if (quotient_dim == 0) {
      reduction.top_degree = d - 1;
      break;
    }
    reduction.piece_dims.push_back(quotient_dim);
    if (d == degree_cap + 1) {
      throw Error(ErrorKind::CapExceeded, "the quotient stayed nonzero up to the degree cap");
    }
  }

  const int n = static_cast<int>(scheme.ambient_dim());
  const FieldSpec& field = scheme.field();
  SocleProfile profile;
  profile.reduction = reduction;
  profile.top_degree = reduction.top_degree;

  for (int d = 0; d <= reduction.top_degree; ++d) {
    const QuotientPiece& source = pieces[d];
    const QuotientPiece& target = pieces[d + 1];
    MonomialBasis source_basis = MonomialBasis::create(n, d);
    MonomialBasis target_basis = MonomialBasis::create(n, d + 1);

    // Row index of the pivot owning each monomial of degree d+1, or npos.
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_row(target_basis.size(), kNone);
    for (std::size_t r = 0; r < target.reduced.pivot_columns.size(); ++r) {
      pivot_row[target.reduced.pivot_columns[r]] = r;
    }
    std::vector<std::size_t> free_position(target_basis.size(), kNone);
    for (std::size_t t = 0; t < target.free_columns.size(); ++t) {
      free_position[target.free_columns[t]] = t;
    }

    // Stacked multiplication maps A_d -> A_{d+1}, one block per variable,
    // in the complement coordinates on both sides. Multiplying a basis
    // monomial by x_j lands on a single degree-(d+1) monomial, whose class
    // is either itself (free) or the negated tail of its pivot row.
    const std::size_t source_dim = source.free_columns.size();
    const std::size_t target_dim = target.free_columns.size();
    Matrix stacked((n + 1) * target_dim, source_dim, field);
    for (std::size_t c = 0; c < source_dim; ++c) {
      std::vector<int> exponent = source_basis.exponents()[source.free_columns[c]];
      for (int j = 0; j <= n; ++j) {
        exponent[j] += 1;
        std::size_t image = target_basis.index_of(exponent);
        exponent[j] -= 1;
        std::size_t block = static_cast<std::size_t>(j) * target_dim;
        if (pivot_row[image] != kNone) {
          std::size_t r = pivot_row[image];
          for (std::size_t t = 0; t < target_dim; ++t) {
            stacked.at(block + t, c) = -target.reduced.reduced.at(r, target.free_columns[t]);
          }
        } else {
          stacked.at(block + free_position[image], c) = Scalar::one(field);
        }
      }
    }
    std::int64_t socle_dim =
        static_cast<std::int64_t>(source_dim) - static_cast<std::int64_t>(rank(stacked));
    profile.socle_dims.push_back(socle_dim);
  }

  for (int d = 0; d <= reduction.top_degree; ++d) {
    if (profile.socle_dims[d] > 0) {
      profile.min_socle_degree = d;
      break;
    }
  }
  return profile;
}

int min_socle_degree(const FatPointScheme& scheme, std::uint64_t seed, int degree_cap) {
  return socle_profile(scheme, seed, degree_cap).min_socle_degree;
}

namespace {

std::vector<FatPoint> lowered_points(const FatPointScheme& scheme, std::size_t point_index) {
  std::vector<FatPoint> fewer;
  for (std::size_t j = 0; j < scheme.num_points(); ++j) {
    FatPoint fp = scheme.points()[j];
    if (j == point_index) fp.multiplicity -= 1;
    if (fp.multiplicity >= 1) fewer.push_back(fp);
  }
  return fewer;
}

}  // namespace

int separator_degree(const FatPointScheme& scheme, std::size_t point_index,
                     int degree_cap) {
  require_rational(scheme, "the separator search");
  if (point_index >= scheme.num_points()) {
    throw Error(ErrorKind::IndexOutOfRange, "no such point");
  }
  FatPointScheme lowered = FatPointScheme::create_relaxed(
      lowered_points(scheme, point_index), scheme.ambient_dim(), scheme.field());
  for (int d = 0; d <= degree_cap; ++d) {
    if (ideal_graded_dim(lowered, d) > ideal_graded_dim(scheme, d)) return d;
  }
  throw Error(ErrorKind::CapExceeded, "no separator below the degree cap");
}

std::vector<int> separator_degrees(const FatPointScheme& scheme, int degree_cap) {
  require_rational(scheme, "the separator search");
  const std::size_t s = scheme.num_points();
  std::vector<FatPointScheme> lowered;
  for (std::size_t i = 0; i < s; ++i) {
    lowered.push_back(FatPointScheme::create_relaxed(
        lowered_points(scheme, i), scheme.ambient_dim(), scheme.field()));
  }
  std::vector<int> degrees(s, -1);
  std::size_t remaining = s;
  for (int d = 0; d <= degree_cap && remaining > 0; ++d) {
    std::int64_t base = ideal_graded_dim(scheme, d);
    for (std::size_t i = 0; i < s; ++i) {
      if (degrees[i] >= 0) continue;
      if (ideal_graded_dim(lowered[i], d) > base) {
        degrees[i] = d;
        --remaining;
      }
    }
  }
  if (remaining > 0) {
    throw Error(ErrorKind::CapExceeded, "no separator below the degree cap");
  }
  return degrees;
}

}  // namespace fatcode
