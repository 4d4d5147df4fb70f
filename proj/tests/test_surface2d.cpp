#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "realspec/errors.hpp"
#include "realspec/surface2d.hpp"

using namespace realspec;

namespace {

GroupVec g1(const Rat& a) { return GroupVec({a}); }

// Series in one variable t from a polynomial written in x.
GenSeries ts(const char* text) {
  const Poly p = Poly::parse(text, std::vector<std::string>{"t"});
  GenSeries s(1);
  for (const auto& [e, c] : p.terms()) s.add_term(g1(Rat(e[0])), c);
  return s;
}

Curvette2 c2(const char* x, const char* y, int xsign = 1) {
  return Curvette2(ts(x), ts(y), SignChar({xsign}));
}

Poly P2(const char* s) { return Poly::parse(s, 2); }

CoeffExpansion ce(std::vector<Rat> c) { return CoeffExpansion{std::move(c)}; }

}  // namespace

TEST_SUITE("surface2d") {
  TEST_CASE("blowups") {
    auto b1 = blowup(c2("t^2", "t^3"));
    CHECK(b1.chart == Chart::YOverX);
    CHECK(b1.curvette.x == ts("t^2"));
    CHECK(b1.curvette.y == ts("t"));
    auto b2 = blowup(c2("t^2", "t"));
    CHECK(b2.chart == Chart::XOverY);
    CHECK(b2.curvette.x == ts("t"));
    CHECK(b2.curvette.y == ts("t"));
    auto b3 = blowup(c2("t", "2*t + t^2"));
    CHECK(b3.chart == Chart::YOverX);
    CHECK(b3.curvette.y == ts("2 + t"));
  }

  TEST_CASE("property: blowup round trip") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> e(1, 5);
    std::uniform_int_distribution<long> c(-4, 4);
    for (int i = 0; i < 100; ++i) {
      GenSeries x(1);
      GenSeries y(1);
      for (int k = 0; k < 3; ++k) {
        x.add_term(g1(Rat(e(rng))), Rat(c(rng)));
        y.add_term(g1(Rat(e(rng))), Rat(c(rng)));
      }
      if (x.is_zero() || y.is_zero()) continue;
      const Curvette2 a(x, y, SignChar::positive(1));
      const auto b = blowup(a);
      const GroupVec top = std::max(x.leading_exp(), y.leading_exp());
      // Only terms below the division order are guaranteed.
      const GroupVec order = Rat(2) * top;
      if (b.chart == Chart::YOverX) {
        CHECK(b.curvette.x == x);
        CHECK((b.curvette.x * b.curvette.y).truncated(order) == y.truncated(order));
      } else {
        CHECK(b.curvette.y == y);
        CHECK((b.curvette.x * b.curvette.y).truncated(order) == x.truncated(order));
      }
    }
  }

  TEST_CASE("slopes") {
    CHECK(slope(c2("t", "2*t + t^2")) == Slope(Rat(2)));
    CHECK_FALSE(slope(c2("t^2", "t")).has_value());
    CHECK(slope(c2("t", "t^2")) == Slope(Rat(0)));
    CHECK(slope_str(std::nullopt) == "inf");
  }

  TEST_CASE("property: slope unchanged by a common positive unit") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> e(1, 4);
    std::uniform_int_distribution<long> c(1, 5);
    for (int i = 0; i < 50; ++i) {
      GenSeries x = GenSeries::monomial(g1(Rat(e(rng))), Rat(c(rng)));
      GenSeries y = GenSeries::monomial(g1(Rat(e(rng))), Rat(-c(rng)));
      x.add_term(g1(Rat(6)), Rat(1));
      const GenSeries unit = GenSeries::constant(1, Rat(c(rng))) + GenSeries::monomial(g1(Rat(1)), Rat(c(rng)));
      CHECK(slope(Curvette2(x, y, SignChar::positive(1))) ==
            slope(Curvette2(unit * x, unit * y, SignChar::positive(1))));
    }
  }

  TEST_CASE("directions") {
    CHECK(same_direction(c2("t", "2*t"), c2("t", "2*t + t^2")));
    CHECK_FALSE(same_direction(c2("t", "2*t"), c2("t", "2*t", -1)));
    CHECK_THROWS_AS(same_direction(c2("t", "2*t"), c2("t", "3*t")), PreconditionError);
  }

  TEST_CASE("lockstep blowups separate slopes") {
    const auto r = separate_slopes(c2("t", "t^2 + t^3"), c2("t", "t^2 - t^4"));
    CHECK(r.steps >= 1);
    CHECK(slope(r.a) != slope(r.b));
  }

  TEST_CASE("series roots") {
    CHECK(newton_expand(P2("y - x"), 1) == ce({Rat(-1)}));
    const Poly g = P2("y - x + x*y");
    const auto e = newton_expand(g, 3);
    CHECK(e == ce({Rat(-1), Rat(1), Rat(-1)}));
    const auto ord = residual_order(g, e);
    CHECK((!ord || *ord > 3));
    CHECK_THROWS_AS(newton_expand(P2("y^2"), 3), PreconditionError);
    CHECK_THROWS_AS(newton_expand(P2("y - 1"), 3), PreconditionError);
  }

  TEST_CASE("property: series roots against Newton iteration") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> e(0, 3);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int i = 0; i < 40; ++i) {
      Poly g = P2("y");
      g = Rat(1 + (i % 3)) * g;
      for (int k = 0; k < 4; ++k) {
        const long a = e(rng);
        const long b = e(rng);
        if (a + b >= 2 || (a == 1 && b == 0)) g.add_term({a, b}, Rat(c(rng)));
      }
      const int n = 5;
      const auto got = newton_expand(g, n);
      const auto root = oracle::newton_root(g, n);
      for (int k = 0; k < n; ++k) CHECK(got.c[k].raw() == -root[k]);
      const auto ord = residual_order(g, got);
      CHECK((!ord || *ord > n));
    }
  }

  TEST_CASE("coefficient ordering") {
    CHECK(prec_compare(ce({Rat(2), Rat(1)}), ce({Rat(2), Rat(3)})) == Ordering::LT);
    CHECK(prec_compare(ce({Rat(0)}), ce({Rat(1)})) == Ordering::LT);
    CHECK(prec_compare(ce({Rat(1)}), ce({Rat(0)})) == Ordering::GT);
    CHECK_THROWS_AS(prec_compare(ce({Rat(2), Rat(1)}), ce({Rat(2), Rat(1)})), Undecidable);
  }

  TEST_CASE("property: coefficient ordering is a strict total order") {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<long> c(-2, 2);
    std::vector<CoeffExpansion> es;
    for (int i = 0; i < 30; ++i) es.push_back(ce({Rat(c(rng)), Rat(c(rng)), Rat(c(rng))}));
    for (const auto& a : es)
      for (const auto& b : es) {
        if (a == b) continue;
        const Ordering ab = prec_compare(a, b);
        CHECK(ab != Ordering::EQ);
        CHECK(prec_compare(b, a) == (ab == Ordering::LT ? Ordering::GT : Ordering::LT));
        for (const auto& d : es) {
          if (d == a || d == b) continue;
          if (ab == Ordering::LT && prec_compare(b, d) == Ordering::LT) CHECK(prec_compare(a, d) == Ordering::LT);
        }
      }
  }

  TEST_CASE("inclusion of positivity sets") {
    // y' - 2x' precedes y' - x'.
    const auto first = ce({Rat(-2)});
    const auto second = ce({Rat(-1)});
    const auto ok = lemma35_check(first, second, 3, 200);
    CHECK(ok.violations.empty());
    CHECK(ok.relevant > 0);
    CHECK_FALSE(lemma35_check(second, first, 3, 200).violations.empty());
    CHECK(lemma35_check(first, first, 3, 10).skipped);
    const auto deep = lemma35_check(ce({Rat(1), Rat(2), Rat(-1)}), ce({Rat(1), Rat(2), Rat(3)}), 4, 300);
    CHECK(deep.violations.empty());
  }

  TEST_CASE("first coefficients of the extreme expansions") {
    const auto first = ce({Rat(1)});
    const auto last = ce({Rat(-1)});
    const Curvette2 a = c2("t", "t^2");
    const Curvette2 b = c2("2*t", "t");
    const auto good = lemma36_check(first, last, a, b);
    CHECK(good.holds);
    CHECK(good.violations.empty());
    const auto swapped = lemma36_check(last, first, a, b);
    CHECK_FALSE(swapped.holds);
    CHECK_FALSE(swapped.violations.empty());
    CHECK_THROWS_AS(lemma36_check(first, last, a, c2("t", "t^2 + t^3")), PreconditionError);
  }

  TEST_CASE("sign of the divisor on the region") {
    const auto ok = corollary37_check(ce({Rat(1)}), ce({Rat(-1)}), 7, 300);
    CHECK(ok.violations.empty());
    CHECK(ok.relevant > 0);
    CHECK_FALSE(corollary37_check(ce({Rat(-1)}), ce({Rat(1)}), 7, 300).violations.empty());
  }

  TEST_CASE("expansion sign") {
    CHECK(expansion_sign(ce({Rat(-1)}), c2("t", "2*t")) == 1);
    CHECK(expansion_sign(ce({Rat(-2)}), c2("t", "t")) == -1);
  }
}
