#include "fatcode/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "fatcode/combinatorics.hpp"
#include "fatcode/rng.hpp"

namespace fatcode {

ProjectivePoint ProjectivePoint::from_coords(std::vector<Scalar> coords) {
  if (coords.empty()) throw Error(ErrorKind::ZeroVector, "point needs coordinates");
  const FieldSpec field = coords.front().field();
  for (const Scalar& c : coords) {
    if (c.field() != field) throw Error(ErrorKind::FieldMismatch, "mixed point fields");
  }
  std::size_t lead = 0;
  while (lead < coords.size() && coords[lead].is_zero()) ++lead;
  if (lead == coords.size()) {
    throw Error(ErrorKind::ZeroVector, "projective point cannot be the zero vector");
  }
  if (!coords[lead].is_one()) {
    Scalar inv = coords[lead].inverse();
    for (std::size_t i = lead; i < coords.size(); ++i) coords[i] *= inv;
  }
  return ProjectivePoint(std::move(coords));
}

std::string ProjectivePoint::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ":";
    out << coords_[i].str();
  }
  out << "]";
  return out.str();
}

namespace {

void check_distinct(const std::vector<FatPoint>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].point == points[j].point) {
        throw Error(ErrorKind::DuplicatePoint,
                    "points " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " coincide: " + points[i].point.str());
      }
    }
  }
}

void check_shape(const std::vector<FatPoint>& points, std::size_t ambient_dim,
                 const FieldSpec& field) {
  for (const FatPoint& fp : points) {
    if (fp.point.ambient_dim() != ambient_dim) {
      throw Error(ErrorKind::DimensionMismatch, "points from different ambient spaces");
    }
    if (fp.point.field() != field) {
      throw Error(ErrorKind::FieldMismatch, "points from different fields");
    }
    if (fp.multiplicity < 1) {
      throw Error(ErrorKind::IndexOutOfRange, "multiplicities must be >= 1");
    }
  }
}

}  // namespace

FatPointScheme FatPointScheme::create(std::vector<FatPoint> points) {
  if (points.empty()) throw Error(ErrorKind::ZeroVector, "scheme needs points");
  const std::size_t n = points.front().point.ambient_dim();
  const FieldSpec field = points.front().point.field();
  check_shape(points, n, field);
  check_distinct(points);
  if (points.size() < n + 1) {
    throw Error(ErrorKind::RankDeficient,
                "need at least n+1 = " + std::to_string(n + 1) + " points, got " +
                    std::to_string(points.size()));
  }
  FatPointScheme scheme(std::move(points), n, field);
  if (!scheme.has_full_rank_support()) {
    throw Error(ErrorKind::RankDeficient, "support does not span the ambient space");
  }
  return scheme;
}

FatPointScheme FatPointScheme::create_relaxed(std::vector<FatPoint> points,
                                              std::size_t ambient_dim,
                                              const FieldSpec& field) {
  check_shape(points, ambient_dim, field);
  check_distinct(points);
  return FatPointScheme(std::move(points), ambient_dim, field);
}

std::int64_t FatPointScheme::total_multiplicity() const {
  std::int64_t m = 0;
  for (const FatPoint& fp : points_) m += fp.multiplicity;
  return m;
}

int FatPointScheme::max_multiplicity() const {
  int m = 0;
  for (const FatPoint& fp : points_) m = std::max(m, fp.multiplicity);
  return m;
}

bool FatPointScheme::is_reduced() const {
  return std::all_of(points_.begin(), points_.end(),
                     [](const FatPoint& fp) { return fp.multiplicity == 1; });
}

bool FatPointScheme::is_homogeneous() const {
  return !points_.empty() &&
         std::all_of(points_.begin(), points_.end(), [&](const FatPoint& fp) {
           return fp.multiplicity == points_.front().multiplicity;
         });
}

bool FatPointScheme::has_full_rank_support() const {
  return rank(support_matrix()) == ambient_dim_ + 1;
}

FatPointScheme FatPointScheme::support() const {
  std::vector<FatPoint> reduced;
  reduced.reserve(points_.size());
  for (const FatPoint& fp : points_) reduced.push_back({fp.point, 1});
  return FatPointScheme(std::move(reduced), ambient_dim_, field_);
}

Matrix FatPointScheme::support_matrix() const {
  Matrix m(ambient_dim_ + 1, points_.size(), field_);
  for (std::size_t j = 0; j < points_.size(); ++j) {
    const auto& coords = points_[j].point.coords();
    for (std::size_t i = 0; i <= ambient_dim_; ++i) m.at(i, j) = coords[i];
  }
  return m;
}

std::string FatPointScheme::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out << " + ";
    if (points_[i].multiplicity != 1) out << points_[i].multiplicity << "*";
    out << points_[i].point.str();
  }
  return out.str();
}

std::int64_t scheme_degree(const FatPointScheme& scheme) {
  if (!scheme.field().is_rational()) {
    throw Error(ErrorKind::UnsupportedField, "scheme_degree is only available over the rationals");
  }
  const std::int64_t n = static_cast<std::int64_t>(scheme.ambient_dim());
  std::int64_t total = 0;
  for (const FatPoint& fp : scheme.points()) {
    total += binomial(n + fp.multiplicity - 1, n);
  }
  return total;
}

FatPointScheme veronese_embed(const FatPointScheme& reduced_scheme, int a) {
  if (!reduced_scheme.field().is_rational()) {
    throw Error(ErrorKind::UnsupportedField, "veronese_embed is only available over the rationals");
  }
  if (!reduced_scheme.is_reduced()) {
    throw Error(ErrorKind::NotReduced, "veronese_embed expects a reduced scheme");
  }
  if (a < 1) throw Error(ErrorKind::IndexOutOfRange, "veronese degree must be >= 1");
  const int n = static_cast<int>(reduced_scheme.ambient_dim());
  if (binomial(n + a, a) > 100000) {
    throw Error(ErrorKind::TooLarge, "veronese target dimension exceeds 100000");
  }
  const auto exponents = monomial_exponents(n, a);

  std::vector<FatPoint> images;
  images.reserve(reduced_scheme.num_points());
  for (const FatPoint& fp : reduced_scheme.points()) {
    const auto& coords = fp.point.coords();
    std::vector<Scalar> image;
    image.reserve(exponents.size());
    for (const auto& expo : exponents) {
      Scalar value = Scalar::one(reduced_scheme.field());
      for (int v = 0; v <= n; ++v) {
        for (int e = 0; e < expo[v]; ++e) value *= coords[v];
      }
      image.push_back(std::move(value));
    }
    images.push_back({ProjectivePoint::from_coords(std::move(image)), 1});
  }
  // Distinct points stay distinct under Veronese, and the relaxed wrapper is
  // right here anyway: the image usually spans only a subspace.
  return FatPointScheme::create_relaxed(std::move(images), exponents.size() - 1,
                                        reduced_scheme.field());
}

namespace {

// Evaluates a linear form (coefficient vector) at a point.
Scalar evaluate_form(const std::vector<Scalar>& form, const ProjectivePoint& point) {
  Scalar value = Scalar::zero(form.front().field());
  const auto& coords = point.coords();
  for (std::size_t i = 0; i < form.size(); ++i) value += form[i] * coords[i];
  return value;
}

}  // namespace

CiGridRealization ci_grid(const std::vector<int>& degrees, int multiplicity,
                          std::uint64_t seed) {
  const std::size_t n = degrees.size();
  if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "ci grid needs at least two degrees");
  for (std::size_t i = 0; i < n; ++i) {
    if (degrees[i] < 2) throw Error(ErrorKind::IndexOutOfRange, "ci degrees must be >= 2");
    if (i + 1 < n && degrees[i] > degrees[i + 1]) {
      throw Error(ErrorKind::IndexOutOfRange, "ci degrees must be nondecreasing");
    }
  }
  if (multiplicity < 1) throw Error(ErrorKind::IndexOutOfRange, "multiplicity must be >= 1");

  const FieldSpec field = FieldSpec::rationals();
  SplitMix64 rng(seed);

  for (int attempt = 0; attempt < 100; ++attempt) {
    // One family of d_i random linear forms per hypersurface.
    std::vector<std::vector<std::vector<Scalar>>> families(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (int j = 0; j < degrees[i]; ++j) {
        std::vector<Scalar> form;
        do {
          form.clear();
          for (std::size_t c = 0; c <= n; ++c) {
            form.push_back(Scalar::from_integer(rng.uniform(-9, 9), field));
          }
        } while (std::all_of(form.begin(), form.end(),
                             [](const Scalar& s) { return s.is_zero(); }));
        families[i].push_back(std::move(form));
      }
    }

    // Intersect one form from each family: the nullspace of the n x (n+1)
    // coefficient matrix is a line exactly when the forms are independent.
    bool degenerate = false;
    std::vector<FatPoint> points;
    std::vector<std::vector<int>> choice_of;
    std::vector<int> choice(n, 0);
    while (true) {
      Matrix system(n, n + 1, field);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c <= n; ++c) system.at(i, c) = families[i][choice[i]][c];
      }
      Matrix kernel = nullspace_basis(system);
      if (kernel.cols() != 1) {
        degenerate = true;
        break;
      }
      std::vector<Scalar> coords;
      for (std::size_t c = 0; c <= n; ++c) coords.push_back(kernel.at(c, 0));
      points.push_back({ProjectivePoint::from_coords(std::move(coords)), multiplicity});
      choice_of.push_back(choice);

      std::size_t i = n;
      while (i > 0 && ++choice[--i] == degrees[i]) choice[i] = 0;
      if (i == 0 && choice[0] == 0) break;
    }
    if (degenerate) continue;

    // Transversality audit: point k must vanish on exactly the n forms that
    // produced it, all points must be distinct, and the support must span.
    bool clean = true;
    for (std::size_t k = 0; k < points.size() && clean; ++k) {
      for (std::size_t i = 0; i < n && clean; ++i) {
        for (int j = 0; j < degrees[i] && clean; ++j) {
          const bool should_vanish = (j == choice_of[k][i]);
          const bool vanishes = evaluate_form(families[i][j], points[k].point).is_zero();
          if (vanishes != should_vanish) clean = false;
        }
      }
    }
    for (std::size_t a = 0; a < points.size() && clean; ++a) {
      for (std::size_t b = a + 1; b < points.size() && clean; ++b) {
        if (points[a].point == points[b].point) clean = false;
      }
    }
    if (!clean) continue;

    try {
      FatPointScheme scheme = FatPointScheme::create(std::move(points));
      return CiGridRealization{std::move(scheme), std::move(families), attempt};
    } catch (const Error&) {
      continue;  // e.g. support unexpectedly inside a hyperplane; redraw
    }
  }
  throw Error(ErrorKind::DegenerateAfterRetries,
              "no transverse grid after 100 attempts (seed " + std::to_string(seed) + ")");
}

CiDescription CiDescription::grid(std::vector<int> degrees, int multiplicity,
                                  std::uint64_t seed) {
  CiDescription d;
  d.degrees = std::move(degrees);
  d.multiplicity = multiplicity;
  d.grid_seed = seed;
  return d;
}

CiDescription CiDescription::explicit_scheme(std::vector<int> degrees, int multiplicity,
                                             std::vector<FatPoint> points) {
  CiDescription d;
  d.degrees = std::move(degrees);
  d.multiplicity = multiplicity;
  d.explicit_points = std::move(points);
  return d;
}

CiInstance realize_ci(const CiDescription& description) {
  if (description.grid_seed.has_value()) {
    CiGridRealization grid =
        ci_grid(description.degrees, description.multiplicity, *description.grid_seed);
    return CiInstance{std::move(grid.scheme), description.degrees,
                      std::move(grid.families)};
  }
  if (!description.explicit_points.has_value()) {
    throw Error(ErrorKind::Usage, "ci description has neither seed nor points");
  }
  std::int64_t expected = 1;
  for (int d : description.degrees) expected *= d;
  std::vector<FatPoint> points = *description.explicit_points;
  if (static_cast<std::int64_t>(points.size()) != expected) {
    throw Error(ErrorKind::HypothesisUnmet,
                "explicit ci point count does not match the product of degrees");
  }
  for (FatPoint& fp : points) fp.multiplicity = description.multiplicity;
  return CiInstance{FatPointScheme::create(std::move(points)), description.degrees, {}};
}

}  // namespace fatcode
