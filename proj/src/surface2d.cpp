#include "realspec/surface2d.hpp"

#include <algorithm>

#include "realspec/errors.hpp"

namespace realspec {

namespace {

using Univariate = std::vector<Rat>;  // coefficient of x^i at index i

Univariate mul_trunc(const Univariate& a, const Univariate& b, std::size_t limit) {
  Univariate out(std::min(limit, a.size() + b.size() - 1), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// g(x, y(x)) keeping powers below `limit`.
Univariate substitute(const Poly& g, const Univariate& y, std::size_t limit) {
  Univariate out(limit, Rat(0));
  std::vector<Univariate> ypow = {Univariate{Rat(1)}};
  for (const auto& [e, c] : g.terms()) {
    while (static_cast<long>(ypow.size()) <= e[1]) ypow.push_back(mul_trunc(ypow.back(), y, limit));
    const auto& yp = ypow[static_cast<std::size_t>(e[1])];
    for (std::size_t i = 0; i < yp.size(); ++i) {
      const std::size_t k = i + static_cast<std::size_t>(e[0]);
      if (k < limit) out[k] += c * yp[i];
    }
  }
  return out;
}

GroupVec max_exponent(const GenSeries& s) {
  GroupVec m = s.terms().begin()->first;
  for (const auto& [g, c] : s.terms()) m = std::max(m, g);
  return m;
}

GenSeries expansion_series(const CoeffExpansion& e, const Curvette2& d) {
  GenSeries out = d.y;
  GenSeries power = GenSeries::constant(d.rank(), Rat(1));
  for (const auto& c : e.c) {
    power = power * d.x;
    out += c * power;
  }
  return out;
}

}  // namespace

Curvette2::Curvette2(GenSeries x_, GenSeries y_, SignChar sc_) : x(std::move(x_)), y(std::move(y_)), sc(std::move(sc_)) {
  if (x.rank() != sc.rank() || y.rank() != sc.rank()) throw RankMismatch("plane curvette ranks differ");
  if (x.empty() || y.empty()) throw PreconditionError("plane curvette entries must be nonzero");
}

bool Curvette2::centered() const {
  const GroupVec zero = GroupVec::zero(rank());
  return x.leading_exp() > zero && y.leading_exp() > zero;
}

std::string Curvette2::str() const { return "(" + x.str() + ", " + y.str() + ")"; }

std::string to_string(Chart c) { return c == Chart::YOverX ? "y/x" : "x/y"; }

Blowup blowup(const Curvette2& a) {
  if (!a.centered()) throw PreconditionError("blowup needs a centered curvette");
  const GroupVec order = Rat(2) * std::max(max_exponent(a.x), max_exponent(a.y));
  if (a.y.leading_exp() >= a.x.leading_exp()) {
    return {Chart::YOverX, Curvette2(a.x, div_truncated(a.y, a.x, order), a.sc)};
  }
  return {Chart::XOverY, Curvette2(div_truncated(a.x, a.y, order), a.y, a.sc)};
}

Slope slope(const Curvette2& a) {
  const GroupVec& vx = a.x.leading_exp();
  const GroupVec& vy = a.y.leading_exp();
  if (vx > vy) return std::nullopt;
  if (vy > vx) return Rat(0);
  return a.y.leading_coeff() / a.x.leading_coeff();
}

std::string slope_str(const Slope& s) { return s ? s->str() : "inf"; }

bool same_direction(const Curvette2& a, const Curvette2& b) {
  const Slope sa = slope(a);
  const Slope sb = slope(b);
  if (sa != sb) throw PreconditionError("direction is only defined at equal slopes");
  if (sa) return series_sign(a.x, a.sc) == series_sign(b.x, b.sc);
  return series_sign(a.y, a.sc) == series_sign(b.y, b.sc);
}

LockstepResult separate_slopes(const Curvette2& a, const Curvette2& b, int max_steps) {
  LockstepResult r{a, b, 0};
  while (slope(r.a) == slope(r.b) && same_direction(r.a, r.b)) {
    if (r.steps == max_steps) throw BoundExceeded("slopes still agree after " + std::to_string(max_steps) + " blowups");
    const Slope s = slope(r.a);
    Blowup ba = blowup(r.a);
    Blowup bb = blowup(r.b);
    if (s && !s->is_zero()) {
      const GenSeries shift = GenSeries::constant(r.a.rank(), *s);
      ba.curvette.y -= shift;
      bb.curvette.y -= shift;
    }
    if (ba.curvette.y.empty() || bb.curvette.y.empty()) {
      throw PreconditionError("a curvette lies on the line of its slope; the sequence does not separate them");
    }
    r.a = ba.curvette;
    r.b = bb.curvette;
    ++r.steps;
  }
  return r;
}

Poly CoeffExpansion::poly() const {
  Poly out = Poly::var(2, 1);
  for (std::size_t i = 0; i < c.size(); ++i) out = out + Poly::monomial({static_cast<long>(i + 1), 0}, c[i]);
  return out;
}

std::string CoeffExpansion::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].str();
  return s + ")";
}

CoeffExpansion newton_expand(const Poly& g, int n) {
  if (g.nvars() != 2) throw PreconditionError("expansion needs a polynomial in two variables");
  if (n < 1) throw PreconditionError("truncation must be at least 1");
  if (!g.coeff({0, 0}).is_zero()) throw PreconditionError("g does not vanish at the origin");
  const Rat gy = g.coeff({0, 1});
  if (gy.is_zero()) throw PreconditionError("dg/dy' vanishes at the origin (tangent or singular)");
  const auto limit = static_cast<std::size_t>(n) + 1;
  Univariate y(limit, Rat(0));
  for (std::size_t i = 1; i < limit; ++i) {
    const Univariate h = substitute(g, y, i + 1);
    y[i] = -h[i] / gy;
  }
  CoeffExpansion e;
  for (std::size_t i = 1; i < limit; ++i) e.c.push_back(-y[i]);
  return e;
}

std::optional<long> residual_order(const Poly& g, const CoeffExpansion& e) {
  Univariate y(e.c.size() + 1, Rat(0));
  for (std::size_t i = 0; i < e.c.size(); ++i) y[i + 1] = -e.c[i];
  long degx = 0;
  long degy = 0;
  for (const auto& [ex, c] : g.terms()) {
    degx = std::max(degx, ex[0]);
    degy = std::max(degy, ex[1]);
  }
  const auto limit = static_cast<std::size_t>(degx + degy * static_cast<long>(e.c.size()) + 1);
  const Univariate h = substitute(g, y, limit);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!h[i].is_zero()) return static_cast<long>(i);
  }
  return std::nullopt;
}

Ordering prec_compare(const CoeffExpansion& e1, const CoeffExpansion& e2) {
  const std::size_t n = std::min(e1.c.size(), e2.c.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (e1.c[i] < e2.c[i]) return Ordering::LT;
    if (e1.c[i] > e2.c[i]) return Ordering::GT;
  }
  throw Undecidable("expansions agree up to order " + std::to_string(n) + "; extend the truncation");
}

int expansion_sign(const CoeffExpansion& e, const Curvette2& d) { return series_sign(expansion_series(e, d), d.sc); }

Curvette2Sampler::Curvette2Sampler(std::vector<CoeffExpansion> guides, std::uint64_t seed, bool positive_x)
    : guides_(std::move(guides)), rng_(seed), positive_x_(positive_x) {}

Rat Curvette2Sampler::small_rat(bool allow_negative) {
  std::uniform_int_distribution<long> num(1, 6);
  std::uniform_int_distribution<long> den(1, 4);
  Rat r(num(rng_), den(rng_));
  if (allow_negative && std::bernoulli_distribution(0.5)(rng_)) r = -r;
  return r;
}

Curvette2 Curvette2Sampler::next() {
  std::uniform_int_distribution<long> xexp(1, 3);
  const long p = xexp(rng_);
  GenSeries x = GenSeries::monomial(GroupVec({Rat(p)}), small_rat(!positive_x_));
  if (std::bernoulli_distribution(0.5)(rng_)) x.add_term(GroupVec({Rat(p + 1)}), small_rat(true));

  GenSeries y(1);
  long depth = 0;
  if (!guides_.empty() && std::bernoulli_distribution(0.6)(rng_)) {
    const auto& g = guides_[std::uniform_int_distribution<std::size_t>(0, guides_.size() - 1)(rng_)];
    depth = std::uniform_int_distribution<long>(0, static_cast<long>(g.c.size()))(rng_);
    GenSeries power = GenSeries::constant(1, Rat(1));
    for (long i = 0; i < depth; ++i) {
      power = power * x;
      y -= g.c[static_cast<std::size_t>(i)] * power;
    }
  }
  // Remainder between the orders of x^depth and x^(depth+1), inclusive.
  const long lo = std::max<long>(1, p * depth);
  const long q = std::uniform_int_distribution<long>(lo, p * (depth + 1) + 1)(rng_);
  y += GenSeries::monomial(GroupVec({Rat(q)}), small_rat(true));
  if (y.empty()) y = GenSeries::monomial(GroupVec({Rat(q)}), Rat(1));
  return Curvette2(std::move(x), std::move(y), SignChar::positive(1));
}

CheckReport lemma35_check(const CoeffExpansion& first, const CoeffExpansion& second, std::uint64_t seed,
                          std::size_t samples) {
  CheckReport rep;
  try {
    (void)prec_compare(first, second);
  } catch (const Undecidable&) {
    rep.skipped = true;
    return rep;
  }
  Curvette2Sampler sampler({first, second}, seed, true);
  for (std::size_t k = 0; k < samples; ++k) {
    const Curvette2 d = sampler.next();
    ++rep.samples;
    if (expansion_sign(first, d) <= 0) continue;
    ++rep.relevant;
    if (expansion_sign(second, d) <= 0) {
      rep.violations.push_back({k, "first > 0 but second <= 0 at " + d.str()});
    }
  }
  return rep;
}

Lemma36Report lemma36_check(const CoeffExpansion& first, const CoeffExpansion& last, const Curvette2& a,
                            const Curvette2& b) {
  if (first.c.empty() || last.c.empty()) throw PreconditionError("expansions need a first coefficient");
  if (slope(a) == slope(b)) {
    throw PreconditionError("the two curvettes have the same slope " + slope_str(slope(a)));
  }
  Lemma36Report rep;
  const std::pair<const char*, const Curvette2*> points[] = {{"alpha'", &a}, {"beta'", &b}};
  for (const auto& [name, d] : points) {
    if (series_sign(d->x, d->sc) <= 0) rep.violations.push_back(std::string("x' is not positive at ") + name);
    if (expansion_sign(first, *d) <= 0) rep.violations.push_back(std::string("first form is not positive at ") + name);
    if (expansion_sign(last, *d) >= 0) rep.violations.push_back(std::string("last form is not negative at ") + name);
  }
  rep.holds = first.c[0] > last.c[0];
  if (!rep.holds) {
    rep.violations.push_back("first coefficient " + first.c[0].str() + " does not exceed " + last.c[0].str());
  }
  return rep;
}

CheckReport corollary37_check(const CoeffExpansion& first, const CoeffExpansion& last, std::uint64_t seed,
                              std::size_t samples) {
  CheckReport rep;
  Curvette2Sampler sampler({first, last}, seed, false);
  for (std::size_t k = 0; k < samples; ++k) {
    const Curvette2 d = sampler.next();
    ++rep.samples;
    if (expansion_sign(first, d) <= 0 || expansion_sign(last, d) >= 0) continue;
    ++rep.relevant;
    if (series_sign(d.x, d.sc) <= 0) rep.violations.push_back({k, "member with x' <= 0: " + d.str()});
  }
  return rep;
}

}  // namespace realspec
