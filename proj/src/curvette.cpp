#include "realspec/curvette.hpp"

#include "realspec/errors.hpp"

namespace realspec {

SemiCurvette::SemiCurvette(std::vector<GenSeries> entries, SignChar sc)
    : entries_(std::move(entries)), sc_(std::move(sc)) {
  if (entries_.empty()) throw PreconditionError("curvette needs at least one entry");
  const GroupVec zero = GroupVec::zero(sc_.rank());
  for (std::size_t q = 0; q < entries_.size(); ++q) {
    const auto& s = entries_[q];
    if (s.rank() != sc_.rank()) throw RankMismatch("curvette entry rank differs from sign character");
    if (!s.is_exact()) throw PreconditionError("curvette entries must be exact");
    if (s.is_zero()) throw PreconditionError("curvette entry " + std::to_string(q + 1) + " is zero");
    if (s.leading_exp() <= zero) {
      throw PreconditionError("curvette entry " + std::to_string(q + 1) + " is not centered (value <= 0)");
    }
  }
}

Weights SemiCurvette::variable_values() const {
  Weights w;
  for (const auto& s : entries_) w.push_back(s.leading_exp());
  return w;
}

GenSeries evaluate(const Poly& f, const SemiCurvette& a) {
  if (f.nvars() != a.nvars()) throw RankMismatch("polynomial and curvette have different variable counts");
  const std::size_t n = a.nvars();
  // Powers are cached per variable; exponents in practice are small.
  std::vector<std::vector<GenSeries>> powers(n);
  auto power = [&](std::size_t q, long e) -> const GenSeries& {
    auto& cache = powers[q];
    if (cache.empty()) cache.push_back(GenSeries::constant(a.rank(), Rat(1)));
    while (static_cast<long>(cache.size()) <= e) cache.push_back(cache.back() * a.entry(q));
    return cache[static_cast<std::size_t>(e)];
  };
  GenSeries out(a.rank());
  for (const auto& [e, c] : f.terms()) {
    GenSeries term = GenSeries::constant(a.rank(), c);
    for (std::size_t q = 0; q < n; ++q) {
      if (e[q] != 0) term = term * power(q, e[q]);
    }
    out += term;
  }
  return out;
}

GenSeries evaluate_laurent(const ExpVec& e, const Rat& c, const SemiCurvette& a, const GroupVec& order) {
  if (e.size() != a.nvars()) throw RankMismatch("exponent length differs from curvette");
  ExpVec num(e.size(), 0);
  ExpVec den(e.size(), 0);
  bool has_den = false;
  for (std::size_t q = 0; q < e.size(); ++q) {
    if (e[q] >= 0) {
      num[q] = e[q];
    } else {
      den[q] = -e[q];
      has_den = true;
    }
  }
  const GenSeries top = evaluate(Poly::monomial(num, c), a);
  if (!has_den) return top;
  return div_truncated(top, evaluate(Poly::monomial(den), a), order);
}

GroupVec monomial_curve_value(const ExpVec& e, const SemiCurvette& a) {
  if (e.size() != a.nvars()) throw RankMismatch("exponent length differs from curvette");
  GroupVec out = GroupVec::zero(a.rank());
  for (std::size_t q = 0; q < e.size(); ++q) out += Rat(e[q]) * a.entry(q).leading_exp();
  return out;
}

Rat monomial_curve_coeff(const ExpVec& e, const SemiCurvette& a) {
  if (e.size() != a.nvars()) throw RankMismatch("exponent length differs from curvette");
  Rat out(1);
  for (std::size_t q = 0; q < e.size(); ++q) out *= pow(a.entry(q).leading_coeff(), e[q]);
  return out;
}

Val value(const Poly& f, const SemiCurvette& a) { return evaluate(f, a).valuation(); }

GroupVec weighted_degree(const ExpVec& e, const Weights& w) {
  if (e.size() != w.size()) throw RankMismatch("exponent length differs from weight count");
  GroupVec out = GroupVec::zero(w.at(0).rank());
  for (std::size_t q = 0; q < e.size(); ++q) out += Rat(e[q]) * w[q];
  return out;
}

Val monomial_value(const Poly& f, const Weights& w) {
  Val best = Val::infinity();
  for (const auto& [e, c] : f.terms()) {
    Val v(weighted_degree(e, w));
    if (v < best) best = v;
  }
  return best;
}

Rat initial_coeff(const Poly& f, const SemiCurvette& a) {
  const GenSeries s = evaluate(f, a);
  if (s.is_zero()) throw PreconditionError("initial coefficient of a function vanishing on the curvette");
  return s.leading_coeff();
}

int sign_at(const Poly& f, const SemiCurvette& a) { return series_sign(evaluate(f, a), a.sign_char()); }

bool changes_sign(const Poly& f, const SemiCurvette& a, const SemiCurvette& b) {
  if (a.nvars() != b.nvars() || a.rank() != b.rank()) throw RankMismatch("curvettes live in different sessions");
  const int sa = sign_at(f, a);
  const int sb = sign_at(f, b);
  return (sa >= 0 && sb <= 0) || (sa <= 0 && sb >= 0);
}

bool is_tangent(const Poly& f, const SemiCurvette& a) {
  GroupVec lowest = a.entry(0).leading_exp();
  for (const auto& s : a.entries()) lowest = std::min(lowest, s.leading_exp());
  return value(f, a) > Val(lowest);
}

}  // namespace realspec
