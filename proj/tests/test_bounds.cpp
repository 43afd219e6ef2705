#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fatcode/bounds.hpp"
#include "fatcode/codes.hpp"
#include "fatcode/ideals.hpp"
#include "fatcode/socle.hpp"

using namespace fatcode;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

ProjectivePoint pt(const std::vector<std::int64_t>& coords, const FieldSpec& f = kQ) {
  std::vector<Scalar> v;
  for (auto c : coords) v.push_back(Scalar::from_integer(c, f));
  return ProjectivePoint::from_coords(std::move(v));
}

FatPointScheme example00() {
  return FatPointScheme::create({{pt({0, 1, 0}), 2},
                                 {pt({1, 0, 0}), 2},
                                 {pt({1, 1, 0}), 1},
                                 {pt({0, 0, 1}), 1}});
}

FatPointScheme five_points(int multiplicity = 1) {
  return FatPointScheme::create({{pt({1, 0, 0}), multiplicity},
                                 {pt({0, 1, 0}), multiplicity},
                                 {pt({0, 0, 1}), multiplicity},
                                 {pt({1, 1, 0}), multiplicity},
                                 {pt({1, 3, 1}), multiplicity}});
}

FatPointScheme four_points(int multiplicity = 1) {
  return FatPointScheme::create({{pt({1, 0, 0}), multiplicity},
                                 {pt({0, 1, 0}), multiplicity},
                                 {pt({0, 0, 1}), multiplicity},
                                 {pt({1, 1, 0}), multiplicity}});
}

FatPointScheme heavy_triangle() {
  return FatPointScheme::create({{pt({1, 0, 0}), 5},
                                 {pt({0, 1, 0}), 5},
                                 {pt({0, 0, 1}), 5},
                                 {pt({1, 1, -2}), 1},
                                 {pt({1, -2, 1}), 1},
                                 {pt({1, 2, -3}), 1}});
}

const BoundReport* find_report(const SurveyResult& result, StatementId id) {
  for (const BoundReport& r : result.reports) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("the alpha-minus-m bound holds and its sharp case is flagged") {
  BoundReport r = check_hombound(example00());
  CHECK(r.id == StatementId::HomBound);
  CHECK(r.value("d") == 1);
  CHECK(r.value("alpha") == 3);
  CHECK(r.value("m") == 2);
  CHECK(r.value("lower_bound") == 1);
  CHECK(r.holds);
  CHECK(r.attained);

  BoundReport heavy = check_hombound(heavy_triangle());
  CHECK(heavy.value("d") == 8);
  CHECK(heavy.value("alpha") == 9);
  CHECK(heavy.value("m") == 5);
  CHECK(heavy.value("lower_bound") == 4);
  CHECK(heavy.holds);
  CHECK(!heavy.attained);

  // The weighted enumeration bound clears the crude multiplicity bound here:
  // the three smallest multiplicities sum to 3, one less than alpha - m.
  BoundReport crude = crude_bounds(heavy_triangle());
  CHECK(crude.value("lower") == 3);
  CHECK(heavy.value("lower_bound") > crude.value("lower"));
}

TEST_CASE("the equality criterion matches the near-pencil witness on both sides") {
  BoundReport near_pencil = check_boundscor(example00().support());
  CHECK(near_pencil.value("d") == 1);
  CHECK(near_pencil.value("alpha") == 2);
  CHECK(near_pencil.value("max_hyperplane_points") == 3);
  CHECK(near_pencil.holds);
  CHECK(near_pencil.attained);

  BoundReport generic = check_boundscor(five_points());
  CHECK(generic.value("d") == 2);
  CHECK(generic.value("alpha") == 2);
  CHECK(generic.value("max_hyperplane_points") == 3);
  CHECK(generic.holds);
  CHECK(!generic.attained);

  CiInstance ci22 = realize_ci(CiDescription::grid({2, 2}, 1, 11));
  BoundReport ci = check_boundscor(ci22.scheme);
  CHECK(ci.value("d") == 2);
  CHECK(ci.value("alpha") == 2);
  CHECK(ci.holds);
  CHECK(!ci.attained);

  CHECK_THROWS_AS(check_boundscor(example00()), Error);
}

TEST_CASE("the socle upper bound picks the right branch and sees its sharp cases") {
  BoundReport five3 = check_maintheorem(five_points(3));
  CHECK(five3.id == StatementId::MainTheoremI);
  CHECK(five3.value("d_X") == 2);
  CHECK(five3.value("alpha_X") == 2);
  CHECK(five3.value("socle_degree") == 6);
  CHECK(five3.value("upper_bound") == 6);
  CHECK(five3.holds);
  CHECK(five3.attained);

  BoundReport four2 = check_maintheorem(four_points(2));
  CHECK(four2.id == StatementId::MainTheoremII);
  CHECK(four2.value("d_X") == 1);
  CHECK(four2.value("alpha_X") == 2);
  CHECK(four2.value("socle_degree") == 3);
  CHECK(four2.value("upper_bound") == 3);
  CHECK(four2.holds);
  CHECK(four2.attained);

  BoundReport four4 = check_maintheorem(four_points(4));
  CHECK(four4.id == StatementId::MainTheoremII);
  CHECK(four4.value("socle_degree") == 6);
  CHECK(four4.value("upper_bound") == 7);
  CHECK(four4.holds);
  CHECK(!four4.attained);

  CHECK_THROWS_AS(check_maintheorem(example00()), Error);
}

TEST_CASE("separator degrees dominate the socle degree") {
  BoundReport r = check_separator_socle_bound(example00());
  CHECK(r.id == StatementId::FatPointSocle);
  CHECK(r.value("socle_degree") == 2);
  CHECK(r.value("min_separator_degree") >= r.value("socle_degree"));
  CHECK(r.holds);
  CHECK(!r.witness.empty());

  for (int m = 1; m <= 3; ++m) {
    BoundReport fat = check_separator_socle_bound(five_points(m));
    CHECK(fat.holds);
  }
}

TEST_CASE("the open question holds on the catalog schemes") {
  BoundReport ex = open_question_experiment(example00());
  CHECK(ex.id == StatementId::OpenQuestion);
  CHECK(ex.value("d") == 1);
  CHECK(ex.value("socle_degree") == 2);
  CHECK(ex.value("lower_bound") == 1);
  CHECK(ex.holds);
  CHECK(ex.attained);
  CHECK(!ex.counterexample);

  BoundReport five2 = open_question_experiment(five_points(2));
  CHECK(five2.value("d") == 4);
  CHECK(five2.value("socle_degree") == 4);
  CHECK(five2.value("lower_bound") == 3);
  CHECK(five2.holds);
  CHECK(!five2.attained);

  BoundReport heavy = open_question_experiment(heavy_triangle());
  CHECK(heavy.value("d") == 8);
  CHECK(heavy.value("socle_degree") == 8);
  CHECK(heavy.value("lower_bound") == 4);
  CHECK(heavy.holds);
}

TEST_CASE("the degree-sum distance floor is sharp exactly on the small grids") {
  BoundReport ci23 = check_cibound(realize_ci(CiDescription::grid({2, 3}, 1, 7)));
  CHECK(ci23.id == StatementId::CIBound);
  CHECK(ci23.value("d_X") == 3);
  CHECK(ci23.value("lower_bound") == 3);
  CHECK(ci23.holds);
  CHECK(ci23.attained);

  BoundReport ci22 = check_cibound(realize_ci(CiDescription::grid({2, 2}, 1, 11)));
  CHECK(ci22.value("d_X") == 2);
  CHECK(ci22.value("lower_bound") == 2);
  CHECK(ci22.attained);

  BoundReport ci33 = check_cibound(realize_ci(CiDescription::grid({3, 3}, 1, 5)));
  CHECK(ci33.value("d_X") == 6);
  CHECK(ci33.value("lower_bound") == 4);
  CHECK(ci33.holds);
  CHECK(!ci33.attained);
}

TEST_CASE("the socle degree of a fat grid matches the closed formula") {
  BoundReport a = check_ci_socle_formula(realize_ci(CiDescription::grid({2, 2}, 1, 11)));
  CHECK(a.id == StatementId::SocleValueCI);
  CHECK(a.value("socle_degree") == 2);
  CHECK(a.value("formula") == 2);
  CHECK(a.holds);

  BoundReport b = check_ci_socle_formula(realize_ci(CiDescription::grid({2, 3}, 2, 7)));
  CHECK(b.value("socle_degree") == 5);
  CHECK(b.value("formula") == 5);
  CHECK(b.holds);

  BoundReport c = check_ci_socle_formula(realize_ci(CiDescription::grid({2, 2}, 3, 11)));
  CHECK(c.value("socle_degree") == 6);
  CHECK(c.value("formula") == 6);
  CHECK(c.holds);
}

TEST_CASE("m times distance meets the socle degree exactly for type (2,2)") {
  BoundReport eq = check_ci22_equality(realize_ci(CiDescription::grid({2, 2}, 2, 11)));
  CHECK(eq.id == StatementId::CI22Equality);
  CHECK(eq.value("m_times_d") == 4);
  CHECK(eq.value("socle_degree") == 4);
  CHECK(eq.value("is_type_2_2") == 1);
  CHECK(eq.holds);
  CHECK(eq.attained);
  CHECK(!eq.attainment_indeterminate);

  // At multiplicity one the reducible (2,3) grid also satisfies the
  // equality, so the checker records it without asserting the equivalence.
  BoundReport m1 = check_ci22_equality(realize_ci(CiDescription::grid({2, 3}, 1, 7)));
  CHECK(m1.value("m_times_d") == 3);
  CHECK(m1.value("socle_degree") == 3);
  CHECK(m1.value("is_type_2_2") == 0);
  CHECK(m1.holds);
  CHECK(m1.attained);
  CHECK(m1.attainment_indeterminate);

  BoundReport gap = check_ci22_equality(realize_ci(CiDescription::grid({3, 3}, 2, 5)));
  CHECK(gap.value("m_times_d") == 12);
  CHECK(gap.value("socle_degree") == 7);
  CHECK(gap.value("is_type_2_2") == 0);
  CHECK(gap.holds);
  CHECK(!gap.attained);
}

TEST_CASE("the bezout-style floor is a theorem in the plane and a conjecture above it") {
  BoundReport n2 = check_bezout_ci(realize_ci(CiDescription::grid({2, 3}, 1, 7)));
  CHECK(n2.id == StatementId::N2Theorem);
  CHECK(n2.value("d_X") == 3);
  CHECK(n2.value("lower_bound") == 3);
  CHECK(n2.holds);
  CHECK(n2.attained);
  CHECK(!n2.counterexample);

  BoundReport n33 = check_bezout_ci(realize_ci(CiDescription::grid({3, 3}, 1, 5)));
  CHECK(n33.value("d_X") == 6);
  CHECK(n33.value("lower_bound") == 6);
  CHECK(n33.attained);

  BoundReport cube = check_bezout_ci(realize_ci(CiDescription::grid({2, 2, 2}, 1, 3)));
  CHECK(cube.id == StatementId::ConjectureCI);
  CHECK(cube.value("d_X") == 4);
  CHECK(cube.value("lower_bound") == 4);
  CHECK(cube.holds);
  CHECK(cube.attained);
  CHECK(!cube.counterexample);
}

TEST_CASE("the survey reports exactly the applicable statements in catalog order") {
  SurveyResult ex = survey(example00());
  REQUIRE(ex.reports.size() == 4);
  CHECK(ex.skipped.empty());
  CHECK(ex.reports[0].id == StatementId::CrudeBounds);
  CHECK(ex.reports[1].id == StatementId::HomBound);
  CHECK(ex.reports[2].id == StatementId::FatPointSocle);
  CHECK(ex.reports[3].id == StatementId::OpenQuestion);
  for (const BoundReport& r : ex.reports) CHECK(r.holds);

  SurveyResult five = survey(five_points());
  REQUIRE(five.reports.size() == 7);
  CHECK(five.skipped.empty());
  CHECK(five.reports[2].id == StatementId::BoundsCor);
  CHECK(five.reports[3].id == StatementId::MainTheoremI);
  CHECK(five.reports[5].id == StatementId::RecursionLemma);
  CHECK(five.reports[5].value("b") == 1);
  for (const BoundReport& r : five.reports) CHECK(r.holds);
  for (std::size_t i = 1; i < five.reports.size(); ++i) {
    CHECK(static_cast<int>(five.reports[i - 1].id) < static_cast<int>(five.reports[i].id));
  }
}

TEST_CASE("the ci survey appends the intersection checkers") {
  SurveyResult sv = survey(realize_ci(CiDescription::grid({2, 3}, 2, 7)));
  REQUIRE(sv.reports.size() == 9);
  CHECK(sv.skipped.empty());
  CHECK(find_report(sv, StatementId::CIBound) != nullptr);
  CHECK(find_report(sv, StatementId::SocleValueCI) != nullptr);
  CHECK(find_report(sv, StatementId::CI22Equality) != nullptr);
  CHECK(find_report(sv, StatementId::N2Theorem) != nullptr);
  CHECK(find_report(sv, StatementId::MainTheoremI) != nullptr);
  CHECK(find_report(sv, StatementId::BoundsCor) == nullptr);
  for (const BoundReport& r : sv.reports) CHECK(r.holds);
  const BoundReport* socle = find_report(sv, StatementId::SocleValueCI);
  CHECK(socle->value("socle_degree") == 5);
  for (std::size_t i = 1; i < sv.reports.size(); ++i) {
    CHECK(static_cast<int>(sv.reports[i - 1].id) < static_cast<int>(sv.reports[i].id));
  }
}

TEST_CASE("prime-field schemes survey only the code side") {
  FieldSpec gf2 = FieldSpec::prime(2);
  FatPointScheme z = FatPointScheme::create({{pt({1, 0, 0}, gf2), 1},
                                             {pt({0, 1, 0}, gf2), 1},
                                             {pt({0, 0, 1}, gf2), 1},
                                             {pt({1, 1, 1}, gf2), 1}});
  SurveyResult sv = survey(z);
  REQUIRE(sv.reports.size() == 1);
  CHECK(sv.reports[0].id == StatementId::CrudeBounds);
  REQUIRE(sv.skipped.size() == 1);
  CHECK(sv.skipped[0].find("prime") != std::string::npos);
}

TEST_CASE("the random generator respects its spec and rejects degenerate draws") {
  RandomSchemeSpec spec;
  spec.ambient_dim = 2;
  spec.num_points = 5;
  spec.max_multiplicity = 3;
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomSchemeResult r = random_scheme(spec, seed);
    CHECK(r.scheme.num_points() == 5);
    CHECK(r.scheme.ambient_dim() == 2);
    CHECK(r.scheme.has_full_rank_support());
    CHECK(r.scheme.max_multiplicity() <= 3);
    CHECK(r.rejections >= 0);
    seen.insert(r.scheme.str());
    RandomSchemeResult again = random_scheme(spec, seed);
    CHECK(again.scheme.str() == r.scheme.str());
  }
  CHECK(seen.size() == 20);

  RandomSchemeSpec gf3;
  gf3.field = FieldSpec::prime(3);
  gf3.num_points = 4;
  RandomSchemeResult r = random_scheme(gf3, 9);
  CHECK(r.scheme.field().is_prime());
  CHECK(r.scheme.num_points() == 4);
}

TEST_CASE("every proved statement holds on a randomized panel") {
  RandomSchemeSpec fat;
  fat.num_points = 5;
  fat.max_multiplicity = 3;
  for (std::uint64_t seed = 100; seed < 112; ++seed) {
    FatPointScheme z = random_scheme(fat, seed).scheme;
    SurveyResult sv = survey(z, seed);
    CHECK(sv.skipped.empty());
    for (const BoundReport& r : sv.reports) {
      if (r.id == StatementId::OpenQuestion || r.id == StatementId::ConjectureCI) continue;
      CHECK_MESSAGE(r.holds, statement_id_name(r.id), " on ", z.str());
    }
  }
}

TEST_CASE("reduced schemes satisfy the distance, socle, alpha chain") {
  RandomSchemeSpec reduced;
  reduced.num_points = 6;
  reduced.max_multiplicity = 1;
  for (std::uint64_t seed = 200; seed < 212; ++seed) {
    FatPointScheme x = random_scheme(reduced, seed).scheme;
    std::int64_t d = minimum_distance(x).d;
    std::int64_t socle = min_socle_degree(x, seed);
    std::int64_t a = alpha(x);
    CHECK(d >= socle);
    CHECK(socle >= a - 1);
  }
}
