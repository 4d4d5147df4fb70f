#include "realspec/example_data.hpp"

#include <algorithm>

namespace realspec {

namespace {

GroupVec gv(long a, long b) { return GroupVec({Rat(a), Rat(b)}); }

}  // namespace

SemiCurvette example_curvette(const Rat& b, const Rat& c, SignChar sc) {
  GenSeries x = GenSeries::monomial(gv(0, 3));
  GenSeries y = GenSeries::monomial(gv(0, 4)) + GenSeries::monomial(gv(1, 0), b);
  GenSeries z = GenSeries::monomial(gv(0, 5)) + GenSeries::monomial(gv(1, 1), c);
  return SemiCurvette({x, y, z}, std::move(sc));
}

std::array<Poly, 3> example_polys() {
  const auto roots = example_roots();
  return {roots[0].poly(), roots[1].poly(), roots[2].poly()};
}

std::vector<BinomialRoot> example_roots() {
  return {BinomialRoot({1, 0, 1}, {0, 2, 0}), BinomialRoot({3, 0, 0}, {0, 1, 1}), BinomialRoot({2, 1, 0}, {0, 0, 2})};
}

RootSystem example_system() { return RootSystem(3, example_roots()); }

Poly example_separator() {
  const auto f = example_polys();
  return Poly::var(3, 1) * f[0] + Rat(1, 5) * Poly::var(3, 0) * f[1];
}

std::vector<Poly> example_basis() {
  const auto f = example_polys();
  return {Poly::constant(3, Rat(1)), f[0], f[1], f[2]};
}

Weights example_weights() { return {gv(0, 3), gv(0, 4), gv(0, 5)}; }

std::vector<StandardForm> example_forms() {
  // Indices: 1..3 are x, y, z; 4..6 are the roots.
  return {
      StandardForm({{1, 1}, {2, 1}}, {{Rat(3), {{4, 1}}}}),
      StandardForm({{5, 1}}, {{Rat(-2), {{1, 1}, {4, 1}}}}),
      StandardForm({{6, 1}}, {{Rat(5), {{2, 1}, {5, 1}}}, {Rat(-1), {{3, 1}, {4, 1}}}}),
      StandardForm({{3, 1}}, {{Rat(-7), {{1, 1}, {2, 1}}}}),
      StandardForm({{1, 2}, {2, 2}}, {{Rat(1), {{4, 1}}}}),
  };
}

Region corrupted_region(const Region& c) {
  const GenMonomial left = {{1, 2}, {2, 2}};
  const GenMonomial right = {{4, 1}};
  Region out = c;
  out.provenance = c.provenance + " (corrupted)";
  std::erase_if(out.constraints, [&](const Constraint& k) {
    const auto* v = std::get_if<ValueLT>(&k.kind);
    return v && v->left == left && v->right == right;
  });
  return out;
}

}  // namespace realspec
