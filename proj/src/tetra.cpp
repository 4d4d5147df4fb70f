#include "realspec/tetra.hpp"

#include <algorithm>
#include <numeric>

#include "realspec/errors.hpp"
#include "realspec/syzygy.hpp"

namespace realspec {

namespace {

const Rat& coord(const BaryPoint& p, Axis a) {
  switch (a) {
    case Axis::U:
      return p.u;
    case Axis::V:
      return p.v;
    case Axis::W:
      return p.w;
  }
  return p.u;
}

void check_bary(const BaryPoint& p, const char* name) {
  if (p.u + p.v + p.w + p.t != Rat(1)) throw PreconditionError(std::string(name) + " coordinates do not sum to 1");
  if (p.u.sign() <= 0 || p.v.sign() <= 0 || p.w.sign() <= 0 || p.t.sign() <= 0) {
    throw PreconditionError(std::string(name) + " must have positive coordinates");
  }
}

// lambda at which axis/t on the diagonal equals k.
Rat threshold(const Rat& k) { return Rat(3) * k / (Rat(1) + Rat(3) * k); }

Rat min_positive(const std::array<Rat, 3>& v) {
  Rat m = v[0];
  for (const auto& x : v) m = std::min(m, x);
  return m;
}

}  // namespace

std::string BaryPoint::str() const {
  return "(" + u.str() + ", " + v.str() + ", " + w.str() + ", " + t.str() + ")";
}

BaryPoint diagonal_point(const Rat& lambda) {
  const Rat third = lambda / Rat(3);
  return {third, third, third, Rat(1) - lambda};
}

Rat AxisConstraint::eval(const BaryPoint& p) const {
  const Rat g = coord(p, axis) - k * p.t;
  return sense == Sense::GE ? g : -g;
}

std::string AxisConstraint::str() const {
  return to_string(axis) + " - " + k.str() + "*t" + (sense == Sense::GE ? " >= 0" : " <= 0");
}

Axis parse_axis(const std::string& s) {
  if (s == "u") return Axis::U;
  if (s == "v") return Axis::V;
  if (s == "w") return Axis::W;
  throw ParseError("axis must be one of u, v, w (got '" + s + "')");
}

Sense parse_sense(const std::string& s) {
  if (s == ">=" || s == "ge") return Sense::GE;
  if (s == "<=" || s == "le") return Sense::LE;
  throw ParseError("sense must be >= or <= (got '" + s + "')");
}

std::string to_string(Axis a) {
  switch (a) {
    case Axis::U:
      return "u";
    case Axis::V:
      return "v";
    case Axis::W:
      return "w";
  }
  return "?";
}

std::string to_string(Sense s) { return s == Sense::GE ? ">=" : "<="; }

TetraSolution tetra_solve(const BaryPoint& a, const BaryPoint& b, const std::vector<AxisConstraint>& cs) {
  check_bary(a, "A");
  check_bary(b, "B");
  if (a.u != a.v || a.v > a.w) throw PreconditionError("A must satisfy u = v <= w");
  if (b.v != b.w || b.w > b.u) throw PreconditionError("B must satisfy v = w <= u");

  Rat lo(0);
  Rat hi(1);
  for (const auto& c : cs) {
    if (c.k.sign() < 0) throw PreconditionError("constraint " + c.str() + " has negative k");
    if (!c.holds(a)) throw PreconditionError("constraint " + c.str() + " fails at A");
    if (!c.holds(b)) throw PreconditionError("constraint " + c.str() + " fails at B");
    const Rat th = threshold(c.k);
    if (c.sense == Sense::GE) {
      lo = std::max(lo, th);
    } else {
      hi = std::min(hi, th);
    }
  }
  if (lo > hi) throw Violation("empty feasible interval [" + lo.str() + ", " + hi.str() + "] on the diagonal");

  TetraSolution s;
  s.lo = lo;
  s.hi = hi;
  s.lambda = (lo + hi) / Rat(2);
  s.d = diagonal_point(s.lambda);

  s.bprime_lambda = Rat(3) * b.v / (Rat(1) - b.u + b.v);
  s.bprime = diagonal_point(s.bprime_lambda);
  s.bprime_feasible = std::all_of(cs.begin(), cs.end(), [&](const AxisConstraint& c) { return c.holds(s.bprime); });

  const Rat rho = std::max(a.u / a.t, b.v / b.t);
  s.witness_lambda = Rat(3) * rho / (Rat(1) + Rat(3) * rho);
  return s;
}

std::vector<Rat> grid_oracle(const BaryPoint& a, const BaryPoint& b, const std::vector<AxisConstraint>& cs,
                             const Rat& resolution) {
  (void)a;
  (void)b;
  if (resolution.sign() <= 0) throw PreconditionError("resolution must be positive");
  std::vector<Rat> out;
  for (Rat lambda(0); lambda <= Rat(1); lambda += resolution) {
    const BaryPoint d = diagonal_point(lambda);
    if (std::all_of(cs.begin(), cs.end(), [&](const AxisConstraint& c) { return c.holds(d); })) out.push_back(lambda);
  }
  return out;
}

std::string PhiPoint::str() const {
  return "(" + a[0].str() + ", " + a[1].str() + ", " + a[2].str() + ", " + a[3].str() + ")";
}

bool phi_image_check(const PhiPoint& p) {
  for (const auto& x : p.a) {
    if (x.sign() <= 0) throw PreconditionError("point coordinates must be positive: " + p.str());
  }
  const Rat& a2 = p.a[1];
  const Rat& a3 = p.a[2];
  const Rat& a4 = p.a[3];
  return (a2 == a3 && a2 <= a4) || (a2 == a4 && a2 <= a3) || (a3 == a4 && a3 <= a2);
}

PhiPoint phi_measure(const SemiCurvette& d, const std::vector<BinomialRoot>& roots) {
  if (d.rank() != 1) throw PreconditionError("values must lie on a rational line (rank-1 curvette expected)");
  if (roots.size() != 3) throw PreconditionError("three roots expected");
  PhiPoint p;
  p.a[0] = d.entry(0).leading_exp()[0];
  for (std::size_t i = 0; i < 3; ++i) p.a[i + 1] = normalized_value(roots[i], d)[0];
  return p;
}

PhiWitness phi_witness(const PhiPoint& p, const Weights& w) {
  if (!phi_image_check(p)) throw PreconditionError(p.str() + " is not in the image");
  const std::size_t n = w.size();
  if (n != 3) throw PreconditionError("three variables expected");
  for (const auto& x : w) {
    if (x.rank() != 1 || x[0].sign() <= 0) throw PreconditionError("positive rank-1 weights expected");
  }
  std::vector<BinomialRoot> roots;
  for (const auto& cr : classify_roots(w)) roots.push_back(cr.root);
  if (roots.size() != 3) throw PreconditionError("the weights do not give three roots");
  for (const auto& q : roots) {
    if (q.lambda != Rat(1)) throw PreconditionError("roots with lambda != 1 are not supported");
  }
  std::array<ExpVec, 3> d;
  for (std::size_t i = 0; i < 3; ++i) d[i] = roots[i].diff();
  const auto mu = find_mu(d[0], d[1], d[2]);

  // Log-coordinates L_i = <d_i, ell> with values a_{i+2} and sum mu_i L_i = 0.
  const std::array<Rat, 3> target = {p.a[1], p.a[2], p.a[3]};
  std::optional<std::array<GenSeries, 3>> logs;
  for (std::size_t r = 0; r < 3 && !logs; ++r) {
    if (mu[r] == 0) continue;
    for (long c1 = 1; c1 <= 3 && !logs; ++c1) {
      for (long c2 = 1; c2 <= 3 && !logs; ++c2) {
        std::array<GenSeries, 3> L;
        GenSeries derived(1);
        long coeffs[2] = {c1, c2};
        std::size_t f = 0;
        for (std::size_t i = 0; i < 3; ++i) {
          if (i == r) continue;
          L[i] = GenSeries::monomial(GroupVec({target[i]}), Rat(coeffs[f++]));
          derived -= Rat(mu[i]) * L[i];
        }
        L[r] = Rat(1, mu[r]) * derived;
        if (!L[r].is_zero() && L[r].leading_exp()[0] == target[r]) logs = L;
      }
    }
  }
  if (!logs) throw Error("no log-coordinates realize " + p.str());

  // Solve <d_0, ell> = L_0, <d_1, ell> = L_1 on two coordinates.
  std::size_t i0 = 0;
  std::size_t i1 = 1;
  if (mu[2] == 0) {
    // d_0, d_1 dependent; use d_0 and d_2.
    i1 = 2;
  }
  std::array<GenSeries, 3> ell = {GenSeries(1), GenSeries(1), GenSeries(1)};
  bool solved = false;
  for (std::size_t p0 = 0; p0 < 3 && !solved; ++p0) {
    for (std::size_t p1 = p0 + 1; p1 < 3 && !solved; ++p1) {
      const Rat m00(d[i0][p0]), m01(d[i0][p1]), m10(d[i1][p0]), m11(d[i1][p1]);
      const Rat det = m00 * m11 - m01 * m10;
      if (det.is_zero()) continue;
      ell[p0] = (m11 / det) * (*logs)[i0] - (m01 / det) * (*logs)[i1];
      ell[p1] = (m00 / det) * (*logs)[i1] - (m10 / det) * (*logs)[i0];
      solved = true;
    }
  }
  if (!solved) throw Error("root exponent differences are dependent");

  const Rat top = std::max({target[0], target[1], target[2]});
  const Rat bottom = min_positive(target);
  const GroupVec cut({top});
  const long depth = (top / bottom).numerator().get_si() + 1;
  std::vector<GenSeries> entries;
  std::vector<Rat> exponents;
  for (std::size_t q = 0; q < 3; ++q) {
    // Truncated exp(ell_q), keeping exponents <= top.
    GenSeries e = GenSeries::constant(1, Rat(1));
    GenSeries power = GenSeries::constant(1, Rat(1));
    mpz_class fact = 1;
    for (long m = 1; m <= depth; ++m) {
      power = power * ell[q];
      GenSeries kept(1);
      for (const auto& [g, c] : power.terms()) {
        if (g <= cut) kept.add_term(g, c);
      }
      power = kept;
      fact *= m;
      e += Rat(mpq_class(1, fact)) * power;
    }
    const GroupVec shift({p.a[0] * w[q][0] / w[0][0]});
    GenSeries u(1);
    for (const auto& [g, c] : e.terms()) {
      u.add_term(g + shift, c);
      exponents.push_back((g + shift)[0]);
    }
    entries.push_back(std::move(u));
  }
  const mpz_class den = common_denominator(exponents);
  if (!den.fits_slong_p()) throw BoundExceeded("exponent denominators too large");
  SemiCurvette delta(std::move(entries), SignChar({1}, den.get_si()));
  if (phi_measure(delta, roots) != p) {
    throw Error("chart construction did not reproduce " + p.str() + " (got " + phi_measure(delta, roots).str() + ")");
  }
  return {std::move(delta), std::move(roots)};
}

Rat LinearForm::eval(const PhiPoint& p) const {
  Rat s = c0;
  for (std::size_t i = 0; i < 4; ++i) s += c[i] * p.a[i];
  return s;
}

std::optional<PhiPoint> segment_hyperplane(const PhiPoint& e1, const PhiPoint& e2, const LinearForm& h) {
  const Rat h1 = h.eval(e1);
  const Rat h2 = h.eval(e2);
  if (h1 == h2) {
    if (h1.is_zero()) throw PreconditionError("the hyperplane contains the whole segment");
    return std::nullopt;
  }
  const Rat s = h1 / (h1 - h2);
  if (s.sign() < 0 || s > Rat(1)) return std::nullopt;
  PhiPoint out;
  for (std::size_t i = 0; i < 4; ++i) out.a[i] = e1.a[i] + s * (e2.a[i] - e1.a[i]);
  return out;
}

}  // namespace realspec
