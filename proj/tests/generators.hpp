#pragma once

// Seeded random inputs shared by the unit and acceptance suites.

#include <random>
#include <vector>

#include "realspec/example_data.hpp"
#include "realspec/tetra.hpp"

namespace gen {

inline realspec::Rat small_rat(std::mt19937_64& rng, long num_max, long den_max, bool nonzero = true) {
  std::uniform_int_distribution<long> num(-num_max, num_max);
  std::uniform_int_distribution<long> den(1, den_max);
  for (;;) {
    realspec::Rat r(num(rng), den(rng));
    if (!nonzero || !r.is_zero()) return r;
  }
}

// A point on the worked curvette family with random b, c and, sometimes,
// extra higher-order terms on y and z.
inline realspec::SemiCurvette jittered_point(std::mt19937_64& rng) {
  using realspec::GenSeries;
  using realspec::GroupVec;
  using realspec::Rat;
  const Rat b = small_rat(rng, 9, 4);
  const Rat c = small_rat(rng, 9, 4);
  auto base = realspec::example_curvette(b, c);
  std::bernoulli_distribution extra(0.5);
  if (!extra(rng)) return base;
  std::vector<GenSeries> e = base.entries();
  std::uniform_int_distribution<long> hi(1, 3);
  e[1].add_term(GroupVec({Rat(hi(rng) + 1), Rat(hi(rng))}), small_rat(rng, 5, 3));
  e[2].add_term(GroupVec({Rat(hi(rng) + 1), Rat(hi(rng))}), small_rat(rng, 5, 3));
  return realspec::SemiCurvette(e, base.sign_char());
}

struct TetraInstance {
  realspec::BaryPoint a, b;
  std::vector<realspec::AxisConstraint> cs;
};

inline realspec::Rat unit_rat(std::mt19937_64& rng, long den = 97) {
  std::uniform_int_distribution<long> n(1, den - 1);
  return realspec::Rat(n(rng), den);
}

// A with u = v <= w, B with v = w <= u, all coordinates positive, and
// one-axis constraints that hold at both.
inline TetraInstance tetra_instance(std::mt19937_64& rng) {
  using realspec::Rat;
  TetraInstance inst;
  for (;;) {
    const Rat s = unit_rat(rng);                 // 2u + w
    const Rat u = s * unit_rat(rng) / Rat(2);    // u <= s/2
    const Rat w = s - Rat(2) * u;
    if (u > w || u.is_zero()) continue;
    inst.a = {u, u, w, Rat(1) - s};
    break;
  }
  for (;;) {
    const Rat s = unit_rat(rng);
    const Rat v = s * unit_rat(rng) / Rat(2);
    const Rat u = s - Rat(2) * v;
    if (v > u || v.is_zero()) continue;
    inst.b = {u, v, v, Rat(1) - s};
    break;
  }
  auto coord = [](const realspec::BaryPoint& p, realspec::Axis ax) {
    return ax == realspec::Axis::U ? p.u : (ax == realspec::Axis::V ? p.v : p.w);
  };
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> axis(0, 2);
  std::bernoulli_distribution ge(0.6);
  const int m = count(rng);
  for (int i = 0; i < m; ++i) {
    realspec::AxisConstraint c;
    c.axis = static_cast<realspec::Axis>(axis(rng));
    const Rat ra = coord(inst.a, c.axis) / inst.a.t;
    const Rat rb = coord(inst.b, c.axis) / inst.b.t;
    if (ge(rng)) {
      c.sense = realspec::Sense::GE;
      c.k = std::min(ra, rb) * unit_rat(rng, 11);
    } else {
      c.sense = realspec::Sense::LE;
      c.k = std::max(ra, rb) * (Rat(1) + unit_rat(rng, 11));
    }
    inst.cs.push_back(c);
  }
  return inst;
}

}  // namespace gen
