#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "oracles.hpp"
#include "realspec/curvette.hpp"
#include "realspec/errors.hpp"
#include "realspec/example_data.hpp"
#include "realspec/roots.hpp"

using namespace realspec;

namespace {

GroupVec g2(long a, long b) { return GroupVec({Rat(a), Rat(b)}); }
GroupVec g1(long a) { return GroupVec({Rat(a)}); }

Poly P(const char* s) { return Poly::parse(s, 3); }

SemiCurvette plane_curve(const char* x, const char* y) {
  // x and y given as polynomials in t (one variable named x).
  auto series = [](const char* text) {
    const Poly p = Poly::parse(text, std::vector<std::string>{"t"});
    GenSeries s(1);
    for (const auto& [e, c] : p.terms()) s.add_term(g1(e[0]), c);
    return s;
  };
  return SemiCurvette({series(x), series(y)}, SignChar::positive(1));
}

Weights line_weights(long a, long b, long c) { return {g1(a), g1(b), g1(c)}; }

// Polynomials up to sign, for comparing root lists.
std::set<std::string> up_to_sign(const std::vector<Poly>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) {
    const std::string a = p.str();
    const std::string b = (-p).str();
    out.insert(std::min(a, b));
  }
  return out;
}

std::vector<Poly> classified_polys(const Weights& w) {
  std::vector<Poly> out;
  for (const auto& r : classify_roots(w)) out.push_back(r.root.poly());
  return out;
}

// Brute force over exponents <= 10: for each shape the least-degree
// binomial in the kernel of w, or nothing.
std::array<std::optional<Poly>, 3> lattice_oracle(long a, long b, long c) {
  std::array<std::optional<Poly>, 3> out;
  long best[3] = {0, 0, 0};
  for (long i = 0; i <= 10; ++i)
    for (long j = 0; j <= 10; ++j)
      for (long k = 0; k <= 10; ++k) {
        std::array<Poly, 3> cand;
        std::array<bool, 3> ok{};
        // u2^j u3^k = u1^i
        ok[0] = i >= 1 && j >= 1 && k >= 1 && j * b + k * c == i * a;
        cand[0] = Poly::monomial({0, j, k}) - Poly::monomial({i, 0, 0});
        // u2^j = u1^i u3^k
        ok[1] = j >= 1 && i >= 1 && j * b == i * a + k * c;
        cand[1] = Poly::monomial({0, j, 0}) - Poly::monomial({i, 0, k});
        // u3^k = u1^i u2^j
        ok[2] = k >= 1 && i + j >= 1 && k * c == i * a + j * b;
        cand[2] = Poly::monomial({0, 0, k}) - Poly::monomial({i, j, 0});
        const long deg[3] = {i * a, j * b, k * c};
        for (int s = 0; s < 3; ++s) {
          if (ok[s] && (!out[s] || deg[s] < best[s])) {
            out[s] = cand[s];
            best[s] = deg[s];
          }
        }
      }
  return out;
}

}  // namespace

TEST_SUITE("curvette") {
  TEST_CASE("evaluation of the worked relations") {
    const SemiCurvette a = example_curvette(1, 3);
    const auto f = example_polys();
    CHECK(evaluate(f[0], a) == GenSeries::from_terms(2, {{g2(1, 4), Rat(1)}, {g2(2, 0), Rat(-1)}}));
    CHECK(evaluate(f[1], a) == GenSeries::from_terms(2, {{g2(1, 5), Rat(-4)}, {g2(2, 1), Rat(-3)}}));
    CHECK(evaluate(f[2], a) == GenSeries::from_terms(2, {{g2(1, 6), Rat(-5)}, {g2(2, 2), Rat(-9)}}));
  }

  TEST_CASE("evaluation agrees with the naive oracle on random inputs") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> e(0, 3);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int i = 0; i < 40; ++i) {
      const SemiCurvette a = example_curvette(Rat(c(rng), 2), Rat(c(rng), 3));
      Poly f(3);
      for (int k = 0; k < 5; ++k) f.add_term({e(rng), e(rng), e(rng)}, Rat(c(rng)));
      CHECK(oracle::from(evaluate(f, a)) == oracle::eval(f, a));
    }
  }

  TEST_CASE("values") {
    const SemiCurvette a = example_curvette(1, 3);
    CHECK(value(P("x*z - y^2"), a) == Val(g2(1, 4)));
    CHECK(value(Poly(3), a).is_inf());
    CHECK(value(P("x"), a) == Val(g2(0, 3)));
    const Weights w = example_weights();
    CHECK(monomial_value(P("x*z - y^2"), w) == Val(g2(0, 8)));
    CHECK(monomial_value(P("x^2*y"), w) == Val(g2(0, 10)));
    CHECK(monomial_value(Poly(3), w).is_inf());
    const std::array<long, 3> first{4, 5, 6};
    const std::array<long, 3> second{8, 9, 10};
    const auto f = example_polys();
    for (int i = 0; i < 3; ++i) {
      CHECK(value(f[i], a) == Val(g2(1, first[i])));
      CHECK(monomial_value(f[i], w) == Val(g2(0, second[i])));
    }
  }

  TEST_CASE("initial coefficients") {
    const auto f = example_polys();
    CHECK(initial_coeff(f[0], example_curvette(1, 3)) == Rat(1));
    CHECK(initial_coeff(f[1], example_curvette(2, 5)) == Rat(-7));
    CHECK(initial_coeff(P("x"), example_curvette(1, 3)) == Rat(1));
    CHECK_THROWS_AS(initial_coeff(Poly(3), example_curvette(1, 3)), PreconditionError);
  }

  TEST_CASE("sign changes") {
    const SemiCurvette a = example_curvette(1, 3);
    const SemiCurvette b = example_curvette(2, 5);
    CHECK(changes_sign(example_separator(), a, b));
    CHECK_FALSE(changes_sign(example_polys()[0], a, b));
    CHECK_FALSE(changes_sign(example_polys()[0], a, a));
    // xz - y^2 vanishes on (t^(0,2), t^(0,3), t^(0,4)).
    const SemiCurvette z({GenSeries::monomial(g2(0, 2)), GenSeries::monomial(g2(0, 3)),
                          GenSeries::monomial(g2(0, 4))},
                         SignChar::positive(2));
    CHECK(changes_sign(example_polys()[0], z, z));
  }

  TEST_CASE("tangency") {
    const SemiCurvette a = plane_curve("t", "t^2");
    CHECK(is_tangent(Poly::parse("y", 2), a));
    CHECK_FALSE(is_tangent(Poly::parse("x", 2), a));
    CHECK_FALSE(is_tangent(Poly::parse("x + y", 2), a));
  }

  TEST_CASE("curvettes must be centered and exact") {
    CHECK_THROWS_AS(SemiCurvette({GenSeries::constant(1, Rat(1))}, SignChar::positive(1)), PreconditionError);
    CHECK_THROWS_AS(SemiCurvette({GenSeries::zero(1)}, SignChar::positive(1)), PreconditionError);
    CHECK_THROWS_AS(SemiCurvette({GenSeries::monomial(g2(0, 1))}, SignChar::positive(1)), RankMismatch);
  }

  TEST_CASE("property: value laws") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> e(0, 3);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int i = 0; i < 60; ++i) {
      const Rat bb(c(rng) == 0 ? 1 : c(rng), 1 + (i % 3));
      const SemiCurvette a = example_curvette(bb, Rat(c(rng), 2));
      const SemiCurvette b = example_curvette(Rat(c(rng), 5), Rat(1 + (i % 4)));
      Poly f(3);
      Poly g(3);
      for (int k = 0; k < 3; ++k) {
        f.add_term({e(rng), e(rng), e(rng)}, Rat(c(rng)));
        g.add_term({e(rng), e(rng), e(rng)}, Rat(c(rng)));
      }
      const Val vf = value(f, a);
      const Val vg = value(g, a);
      if (!vf.is_inf() && !vg.is_inf()) CHECK(value(f * g, a) == vf + vg);
      CHECK(vf >= monomial_value(f, a.variable_values()));
      CHECK(changes_sign(f, a, b) == changes_sign(f, b, a));
      CHECK(changes_sign(f, a, b) == changes_sign(-f, a, b));
    }
  }
}

TEST_SUITE("roots") {
  TEST_CASE("classification of (3,4,5)") {
    const auto got = classified_polys(line_weights(3, 4, 5));
    CHECK(got.size() == 3);
    CHECK(up_to_sign(got) == up_to_sign({P("y*z - x^3"), P("y^2 - x*z"), P("z^2 - x^2*y")}));
  }

  TEST_CASE("classification of (2,3,7) against the lattice oracle") {
    const auto got = classified_polys(line_weights(2, 3, 7));
    CHECK(up_to_sign(got) == up_to_sign({P("y*z - x^5"), P("y^2 - x^3"), P("z - x^2*y")}));
    std::vector<Poly> brute;
    for (const auto& p : lattice_oracle(2, 3, 7))
      if (p) brute.push_back(*p);
    CHECK(up_to_sign(got) == up_to_sign(brute));
  }

  TEST_CASE("classification with a rank-2 weight split") {
    const Weights w{g2(1, 0), g2(0, 1), g2(0, 2)};
    CHECK(up_to_sign(classified_polys(w)) == up_to_sign({P("z - y^2")}));
  }

  TEST_CASE("classification rejects nonpositive weights") {
    CHECK_THROWS(classify_roots(line_weights(0, 4, 5)));
    CHECK_THROWS(classify_roots(line_weights(-3, 4, 5)));
  }

  TEST_CASE("property: classification invariants against the oracle") {
    for (long a = 1; a <= 7; ++a)
      for (long b = a; b <= 8; ++b)
        for (long c = b; c <= 9; ++c) {
          const Weights w = line_weights(a, b, c);
          const auto roots = classify_roots(w);
          CHECK(roots.size() <= 3);
          for (const auto& r : roots) CHECK(r.root.is_quasi_homogeneous(w));
          // Least degree per shape agrees with brute force wherever brute
          // force finds a binomial.
          const auto expected = lattice_oracle(a, b, c);
          for (int s = 0; s < 3; ++s) {
            if (!expected[s]) continue;
            const auto it = std::find_if(roots.begin(), roots.end(),
                                         [&](const ClassifiedRoot& r) { return static_cast<int>(r.shape) == s; });
            REQUIRE_MESSAGE(it != roots.end(), "weights ", a, ",", b, ",", c, " shape ", s);
            CHECK_MESSAGE(monomial_value(it->root.poly(), w) == monomial_value(*expected[s], w), "weights ", a, ",",
                          b, ",", c, " shape ", s);
          }
        }
    std::vector<BinomialRoot> plain;
    for (const auto& r : classify_roots(line_weights(3, 4, 5))) plain.push_back(r.root);
    CHECK(initial_divisibility_conflicts(plain).empty());
  }

  TEST_CASE("normalization") {
    const auto roots = example_roots();
    const NormalizedRoot n4 = normalize(roots[0]);
    CHECK(n4.exponent == ExpVec{1, -2, 1});
    CHECK(n4.lambda == Rat(1));
    CHECK(normalize(BinomialRoot({0, 0, 2}, {2, 1, 0})).exponent == ExpVec{-2, -1, 2});
    const SemiCurvette a = example_curvette(1, 3);
    CHECK(normalized_value(roots[0], a) == g2(1, -4));
    for (const auto& q : roots) {
      CHECK(Val(normalized_value(q, a)) ==
            Val(value(q.poly(), a).get() - monomial_value(q.poly(), a.variable_values()).get()));
    }
  }

  TEST_CASE("relevance and pair complexity") {
    const Weights w = example_weights();
    const auto roots = example_roots();
    CHECK(is_relevant(roots[0], g2(1, 8), w));
    CHECK_FALSE(is_relevant(roots[0], g2(0, 7), w));
    CHECK(pair_complexity(roots, g2(1, 8), w) == 1);
    CHECK(pair_complexity({}, g2(1, 8), w) == 0);
    CHECK(pair_complexity(roots, g2(0, 8), w) == 0);
  }

  TEST_CASE("generalized monomial ordering") {
    const RootSystem sys = example_system();
    const SemiCurvette a = example_curvette(1, 3);
    CHECK(genmon_compare({{1, 2}}, {{2, 1}}, sys, a) == Ordering::GT);
    CHECK(genmon_compare({{4, 1}, {1, 1}}, {{4, 1}, {1, 1}}, sys, a) == Ordering::EQ);
    CHECK(genmon_compare({{4, 1}}, {{1, 1}, {2, 1}}, sys, a) == Ordering::GT);
  }

  TEST_CASE("standard forms check dominance at both points") {
    const RootSystem sys = example_system();
    const SemiCurvette a = example_curvette(1, 3);
    const SemiCurvette b = example_curvette(2, 5);
    CHECK_NOTHROW(StandardForm::checked({{1, 1}, {2, 1}}, {{Rat(3), {{4, 1}}}}, sys, a, b));
    CHECK_THROWS_AS(StandardForm::checked({{4, 1}}, {{Rat(1), {{1, 1}}}}, sys, a, b), PreconditionError);
    // Q4 keeps its monomial value (0,8) when the leading terms do not cancel.
    const SemiCurvette z({GenSeries::monomial(g2(0, 3)), GenSeries::monomial(g2(0, 4), Rat(2)),
                          GenSeries::monomial(g2(0, 5))},
                         SignChar::positive(2));
    CHECK_NOTHROW(StandardForm::checked({{1, 2}, {2, 2}}, {{Rat(1), {{4, 1}}}}, sys, a, b));
    CHECK_THROWS_AS(StandardForm::checked({{1, 2}, {2, 2}}, {{Rat(1), {{4, 1}}}}, sys, a, z), PreconditionError);
  }

  TEST_CASE("root file round trip") {
    const BinomialRoot q({1, 0, 1}, {0, 2, 0}, Rat(2, 3));
    CHECK(q.poly() == P("x*z - 2/3*y^2"));
  }
}
