#include <doctest.h>

#include "realspec/errors.hpp"
#include "realspec/example_data.hpp"
#include "realspec/regions.hpp"
#include "realspec/syzygy.hpp"

using namespace realspec;

namespace {

GroupVec g2(long a, long b) { return GroupVec({Rat(a), Rat(b)}); }

std::size_t count_magnitude(const Region& r) {
  std::size_t n = 0;
  for (const auto& c : r.constraints) n += std::holds_alternative<MagnitudeGE>(c.kind) ? 1 : 0;
  return n;
}

}  // namespace

TEST_SUITE("regions") {
  TEST_CASE("value region contains both points") {
    const RootSystem sys = example_system();
    const SemiCurvette a = example_curvette(1, 3);
    const SemiCurvette b = example_curvette(2, 5);
    const Region c = build_C(example_forms(), sys, a);
    CHECK(member(c, sys, a));
    CHECK(member(c, sys, b));
    const Region empty = build_C({}, sys, a);
    CHECK(member(empty, sys, a));
    // x negative on the point: sign of a dominant generator flips.
    const SemiCurvette flipped(a.entries(), SignChar({1, -1}));
    CHECK_FALSE(member(c, sys, flipped));
    CHECK(to_json(c, sys).at("constraints").size() == c.constraints.size());
  }

  TEST_CASE("magnitude region") {
    const RootSystem sys = example_system();
    const SemiCurvette a = example_curvette(1, 3);
    const SemiCurvette b = example_curvette(2, 5);
    const Region cp = build_Cprime(example_forms(), sys, a);
    CHECK(member(cp, sys, a));
    CHECK(member(cp, sys, b));
    const StandardForm two({{1, 1}, {2, 1}}, {{Rat(3), {{4, 1}}}, {Rat(-1), {{5, 1}}}});
    CHECK(count_magnitude(build_Cprime({two}, sys, a)) == 2);
  }

  TEST_CASE("property: magnitude region inside value region on samples") {
    const RootSystem sys = example_system();
    const SemiCurvette a = example_curvette(1, 3);
    const Region c = build_C(example_forms(), sys, a);
    const Region cp = build_Cprime(example_forms(), sys, a);
    CurvetteSampler s(a, 99);
    int members = 0;
    for (int i = 0; i < 200; ++i) {
      const SemiCurvette d = s.next();
      if (!member(cp, sys, d)) continue;
      ++members;
      CHECK(member(c, sys, d));
    }
    CHECK(members > 0);
  }

  TEST_CASE("sampled sign constancy and the negative control") {
    const RootSystem sys = example_system();
    const SemiCurvette a = example_curvette(1, 3);
    const auto forms = example_forms();
    const Region cp = build_Cprime(forms, sys, a);
    const auto rep = sign_constancy_sample(cp, forms, sys, a, 1, 100);
    CHECK(rep.samples == 100);
    CHECK(rep.members > 0);
    CHECK(rep.violations.empty());
    const auto bad = sign_constancy_sample(corrupted_region(build_C(forms, sys, a)), forms, sys, a, 1, 100);
    CHECK_FALSE(bad.violations.empty());
    const auto none = sign_constancy_sample(cp, forms, sys, a, 1, 0);
    CHECK(none.samples == 0);
    CHECK(none.violations.empty());
    // Same seed, same report.
    const auto again = sign_constancy_sample(cp, forms, sys, a, 1, 100);
    CHECK(again.members == rep.members);
  }

  TEST_CASE("eliminated region") {
    const RootSystem sys = example_system();
    const SemiCurvette a = example_curvette(1, 3);
    const SemiCurvette b = example_curvette(2, 5);
    const auto r = sys.roots();
    const auto syz = build_syzygy(r[0], r[1], r[2], example_weights());
    const DRegion d = build_D(example_forms(), sys, syz, a, b);
    CHECK(member(d.region, sys, a));
    CHECK(member(d.region, sys, b));
    CHECK(d.roles.epsilon > Rat(0));
    CHECK(d.roles.epsilon < Rat(1));
    CHECK_THROWS_AS(build_D(example_forms(), sys, syz, a, b, Rat(1)), PreconditionError);
    CHECK_THROWS_AS(build_D(example_forms(), sys, syz, a, b, Rat(0)), PreconditionError);
  }

  TEST_CASE("strengthening replaces units by margins") {
    const RootSystem sys = example_system();
    const SemiCurvette a = example_curvette(1, 3);
    Region r;
    r.constraints.push_back({MagnitudeGE{Rat(1), {{1, 4}}, Poly::parse("3 + x", 3), Rat(1), {{2, 3}},
                                         Poly::parse("1 + y", 3), false},
                             "unit"});
    r.constraints.push_back({ValueLT{{{1, 1}}, {{4, 1}}}, "plain"});
    const Region s = strengthen_monomial(r);
    REQUIRE(s.constraints.size() == 2);
    const auto& m = std::get<MagnitudeGE>(s.constraints[0].kind);
    CHECK(m.lc == Rat(3, 2));
    CHECK(m.rc == Rat(2));
    CHECK_FALSE(m.lunit.has_value());
    CHECK(std::holds_alternative<ValueLT>(s.constraints[1].kind));

    CurvetteSampler sampler(a, 5);
    int inside = 0;
    for (int i = 0; i < 100; ++i) {
      const SemiCurvette d = sampler.next();
      if (!member(s, sys, d)) continue;
      ++inside;
      CHECK(member(r, sys, d));
    }
    CHECK(inside > 0);

    Region zero;
    zero.constraints.push_back(
        {MagnitudeGE{Rat(1), {{1, 1}}, Poly::parse("x", 3), Rat(1), {{2, 1}}, std::nullopt, false}, "bad"});
    CHECK_THROWS_AS(strengthen_monomial(zero), PreconditionError);
  }

  TEST_CASE("value constraint with a vanishing factor") {
    const RootSystem sys = example_system();
    // Q4 vanishes on (t^(0,2), t^(0,3), t^(0,4)): nu(Q4) = inf.
    const SemiCurvette z({GenSeries::monomial(g2(0, 2)), GenSeries::monomial(g2(0, 3)),
                          GenSeries::monomial(g2(0, 4))},
                         SignChar::positive(2));
    CHECK(satisfies({ValueLT{{{1, 1}}, {{4, 1}}}, ""}, sys, z));
    CHECK_FALSE(satisfies({ValueLT{{{4, 1}}, {{1, 1}}}, ""}, sys, z));
    CHECK(value(example_polys()[0], z).is_inf());
  }
}
