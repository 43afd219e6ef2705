#include "fatcode/codes.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "fatcode/combinatorics.hpp"

namespace fatcode {

GeneratorMatrix generator_matrix(const FatPointScheme& scheme) {
  if (!scheme.has_full_rank_support()) {
    throw Error(ErrorKind::RankDeficient, "support lies in a hyperplane");
  }
  const std::size_t n1 = scheme.ambient_dim() + 1;
  const std::size_t M = static_cast<std::size_t>(scheme.total_multiplicity());

  Matrix a(n1, M, scheme.field());
  std::vector<int> blocks;
  std::size_t col = 0;
  for (const FatPoint& fp : scheme.points()) {
    blocks.push_back(fp.multiplicity);
    for (int rep = 0; rep < fp.multiplicity; ++rep, ++col) {
      for (std::size_t r = 0; r < n1; ++r) a.at(r, col) = fp.point.coords()[r];
    }
  }
  return GeneratorMatrix{std::move(a), std::move(blocks), scheme};
}

namespace {

struct HyperplaneCandidate {
  std::int64_t weight = -1;
  std::vector<std::size_t> on_points;
  std::vector<Scalar> normal;

  // Higher weight wins; equal weight prefers the lexicographically smaller
  // sorted index set. Candidates with equal index sets describe the same
  // hyperplane, so any further comparison is moot.
  bool beats(const HyperplaneCandidate& other) const {
    if (weight != other.weight) return weight > other.weight;
    return on_points < other.on_points;
  }
};

// Evaluates the subset of support points with the given indices: if it spans
// a unique hyperplane, returns the weight-maximal candidate for it.
bool evaluate_subset(const FatPointScheme& scheme,
                     const std::vector<std::size_t>& subset,
                     HyperplaneCandidate& out) {
  const std::size_t n = scheme.ambient_dim();
  Matrix rows(n, n + 1, scheme.field());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& coords = scheme.points()[subset[i]].point.coords();
    for (std::size_t c = 0; c <= n; ++c) rows.at(i, c) = coords[c];
  }
  Matrix kernel = nullspace_basis(rows);
  if (kernel.cols() != 1) return false;  // rank < n, skip

  std::vector<Scalar> normal;
  normal.reserve(n + 1);
  for (std::size_t c = 0; c <= n; ++c) normal.push_back(kernel.at(c, 0));

  out.weight = 0;
  out.on_points.clear();
  for (std::size_t i = 0; i < scheme.num_points(); ++i) {
    Scalar v = Scalar::zero(scheme.field());
    const auto& coords = scheme.points()[i].point.coords();
    for (std::size_t c = 0; c <= n; ++c) v += normal[c] * coords[c];
    if (v.is_zero()) {
      out.weight += scheme.points()[i].multiplicity;
      out.on_points.push_back(i);
    }
  }
  out.normal = std::move(normal);
  return true;
}

}  // namespace

DistanceResult minimum_distance(const FatPointScheme& scheme, int threads) {
  if (!scheme.has_full_rank_support()) {
    throw Error(ErrorKind::RankDeficient, "support lies in a hyperplane");
  }
  const std::size_t s = scheme.num_points();
  const std::size_t n = scheme.ambient_dim();

  // Materialize the subsets once; C(s, n) stays small at desk scale and a
  // flat list partitions evenly across workers.
  std::vector<std::vector<std::size_t>> subsets;
  for_each_subset(s, n, [&](const std::vector<std::size_t>& idx) {
    subsets.push_back(idx);
    return true;
  });

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(subsets.size())));
  std::vector<HyperplaneCandidate> best_per_worker(workers);

  auto run_range = [&](std::size_t lo, std::size_t hi, HyperplaneCandidate& best) {
    HyperplaneCandidate cand;
    for (std::size_t k = lo; k < hi; ++k) {
      if (!evaluate_subset(scheme, subsets[k], cand)) continue;
      if (best.weight < 0 || cand.beats(best)) best = cand;
    }
  };

  if (workers == 1) {
    run_range(0, subsets.size(), best_per_worker[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (subsets.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::size_t lo = w * chunk;
      std::size_t hi = std::min(subsets.size(), lo + chunk);
      pool.emplace_back(run_range, lo, hi, std::ref(best_per_worker[w]));
    }
    for (auto& t : pool) t.join();
  }

  HyperplaneCandidate best;
  for (const HyperplaneCandidate& cand : best_per_worker) {
    if (cand.weight < 0) continue;
    if (best.weight < 0 || cand.beats(best)) best = cand;
  }
  if (best.weight < 0) {
    // Unreachable for a valid scheme: rank n+1 guarantees n independent points.
    throw Error(ErrorKind::RankDeficient, "no rank-n subset found");
  }

  DistanceResult result;
  result.d = scheme.total_multiplicity() - best.weight;
  result.witness_hyperplane = std::move(best.normal);
  result.witness_points = std::move(best.on_points);
  result.witness_weight = best.weight;
  return result;
}

std::int64_t minimum_distance_exhaustive(const GeneratorMatrix& gen) {
  const FieldSpec field = gen.matrix.field();
  if (!field.is_prime()) {
    throw Error(ErrorKind::UnsupportedField,
                "exhaustive codeword enumeration needs a prime field");
  }
  const std::int64_t p = field.p;
  const std::size_t k = gen.matrix.rows();  // n+1
  const std::size_t len = gen.matrix.cols();

  // Guard p^k <= 2^24.
  std::int64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    count *= p;
    if (count > (std::int64_t{1} << 24)) {
      throw Error(ErrorKind::TooLarge, "p^(n+1) exceeds the 2^24 enumeration guard");
    }
  }

  // Raw residue copy of the generator matrix for cheap arithmetic.
  std::vector<std::int64_t> entries(k * len);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < len; ++c)
      entries[r * len + c] = gen.matrix.at(r, c).residue_value();

  // One message per projective class: the first nonzero coordinate is 1, so
  // enumerate the position of that leading 1 and all residue tails after it.
  std::int64_t best = static_cast<std::int64_t>(len);
  std::vector<std::int64_t> u(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(u.begin(), u.end(), 0);
    u[lead] = 1;
    const std::size_t tail = k - lead - 1;
    std::int64_t combos = 1;
    for (std::size_t i = 0; i < tail; ++i) combos *= p;
    for (std::int64_t t = 0; t < combos; ++t) {
      std::int64_t rem = t;
      for (std::size_t i = 0; i < tail; ++i) {
        u[lead + 1 + i] = rem % p;
        rem /= p;
      }
      std::int64_t weight = 0;
      for (std::size_t c = 0; c < len; ++c) {
        std::int64_t acc = 0;
        for (std::size_t r = lead; r < k; ++r) acc += u[r] * entries[r * len + c];
        if (acc % p != 0) ++weight;
      }
      if (weight < best) best = weight;
    }
  }
  return best;
}

BoundReport crude_bounds(const FatPointScheme& scheme) {
  DistanceResult dz = minimum_distance(scheme);
  DistanceResult dx = minimum_distance(scheme.support());

  std::vector<std::int64_t> mults;
  for (const FatPoint& fp : scheme.points()) mults.push_back(fp.multiplicity);
  std::sort(mults.begin(), mults.end(), std::greater<>());

  const std::int64_t s = static_cast<std::int64_t>(mults.size());
  const std::int64_t d = dx.d;  // d(X), the index count in the theorem
  std::int64_t upper = 0, lower = 0;
  for (std::int64_t i = 0; i < d && i < s; ++i) upper += mults[i];
  for (std::int64_t i = s - d; i < s; ++i) {
    if (i >= 0) lower += mults[i];
  }

  BoundReport report;
  report.id = StatementId::CrudeBounds;
  report.inputs_summary = scheme.str();
  report.set("d_Z", dz.d);
  report.set("d_X", d);
  report.set("upper", upper);
  report.set("lower", lower);
  report.holds = (upper >= dz.d) && (dz.d >= lower);
  report.attained = (upper == dz.d) || (dz.d == lower);
  if (scheme.is_homogeneous()) {
    const std::int64_t m = scheme.max_multiplicity();
    report.set("homogeneous_m", m);
    report.set("m_times_d_X", m * d);
    report.holds = report.holds && (dz.d == m * d);
  }
  {
    std::ostringstream w;
    w << "max-weight hyperplane through points {";
    for (std::size_t i = 0; i < dz.witness_points.size(); ++i) {
      if (i) w << ",";
      w << (dz.witness_points[i] + 1);
    }
    w << "} with weight " << dz.witness_weight;
    report.witness = w.str();
  }
  return report;
}

}  // namespace fatcode
