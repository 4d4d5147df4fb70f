#include "realspec/series.hpp"

#include <algorithm>

#include "realspec/errors.hpp"

namespace realspec {

namespace {

void require_rank(std::size_t a, std::size_t b) {
  if (a != b) throw RankMismatch("series ranks differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::optional<GroupVec> min_opt(const std::optional<GroupVec>& a, const std::optional<GroupVec>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

constexpr int kMaxDivisionSteps = 20000;

}  // namespace

GenSeries GenSeries::constant(std::size_t rank, const Rat& c) {
  GenSeries s(rank);
  s.add_term(GroupVec::zero(rank), c);
  return s;
}

GenSeries GenSeries::monomial(const GroupVec& g, const Rat& c) {
  GenSeries s(g.rank());
  s.add_term(g, c);
  return s;
}

GenSeries GenSeries::from_terms(std::size_t rank, const std::vector<std::pair<GroupVec, Rat>>& terms,
                                std::optional<GroupVec> truncation) {
  GenSeries s(rank);
  for (const auto& [g, c] : terms) s.add_term(g, c);
  if (truncation) {
    require_rank(rank, truncation->rank());
    for (const auto& [g, c] : s.terms_) {
      if (g >= *truncation) throw PreconditionError("series term " + g.str() + " not below its truncation");
    }
  }
  s.trunc_ = std::move(truncation);
  return s;
}

void GenSeries::add_term(const GroupVec& g, const Rat& c) {
  require_rank(k_, g.rank());
  if (c.is_zero()) return;
  if (trunc_ && g >= *trunc_) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GenSeries::set_truncation(std::optional<GroupVec> t) {
  trunc_ = std::move(t);
  if (trunc_) {
    auto it = terms_.lower_bound(*trunc_);
    terms_.erase(it, terms_.end());
  }
}

std::optional<GroupVec> GenSeries::low() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return trunc_;
}

Val GenSeries::valuation() const {
  if (!terms_.empty()) return Val(terms_.begin()->first);
  if (trunc_) throw Undecidable("series vanishes below its truncation " + trunc_->str());
  return Val::infinity();
}

const GroupVec& GenSeries::leading_exp() const {
  if (terms_.empty()) {
    if (trunc_) throw Undecidable("leading term lies beyond truncation " + trunc_->str());
    throw PreconditionError("zero series has no leading term");
  }
  return terms_.begin()->first;
}

const Rat& GenSeries::leading_coeff() const {
  (void)leading_exp();
  return terms_.begin()->second;
}

Rat GenSeries::coeff(const GroupVec& g) const {
  if (trunc_ && g >= *trunc_) throw Undecidable("coefficient requested beyond truncation");
  auto it = terms_.find(g);
  return it == terms_.end() ? Rat(0) : it->second;
}

GenSeries GenSeries::truncated(const GroupVec& order) const {
  GenSeries out = *this;
  out.set_truncation(min_opt(trunc_, order));
  return out;
}

std::string GenSeries::str() const {
  std::string out;
  for (const auto& [g, c] : terms_) {
    const std::string piece = c.abs().str() + "*t^" + g.str();
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + piece;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + piece;
    }
  }
  if (trunc_) {
    out += (out.empty() ? "" : " + ") + std::string("O(t^") + trunc_->str() + ")";
  }
  return out.empty() ? "0" : out;
}

GenSeries& GenSeries::operator+=(const GenSeries& o) {
  require_rank(k_, o.k_);
  set_truncation(min_opt(trunc_, o.trunc_));
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GenSeries& GenSeries::operator-=(const GenSeries& o) {
  require_rank(k_, o.k_);
  set_truncation(min_opt(trunc_, o.trunc_));
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GenSeries operator*(const GenSeries& a, const GenSeries& b) {
  require_rank(a.k_, b.k_);
  GenSeries out(a.k_);
  if (a.is_zero() || b.is_zero()) return out;
  std::optional<GroupVec> t;
  const auto la = a.low();
  const auto lb = b.low();
  if (a.trunc_) t = min_opt(t, *a.trunc_ + *lb);
  if (b.trunc_) t = min_opt(t, *b.trunc_ + *la);
  out.trunc_ = t;
  for (const auto& [g1, c1] : a.terms_) {
    for (const auto& [g2, c2] : b.terms_) out.add_term(g1 + g2, c1 * c2);
  }
  return out;
}

GenSeries operator*(const Rat& s, const GenSeries& a) {
  GenSeries out(a.k_);
  out.trunc_ = a.trunc_;
  if (s.is_zero()) return out;
  for (const auto& [g, c] : a.terms_) out.terms_.emplace(g, s * c);
  return out;
}

bool operator==(const GenSeries& a, const GenSeries& b) {
  return a.k_ == b.k_ && a.terms_ == b.terms_ && a.trunc_ == b.trunc_;
}

GenSeries pow(const GenSeries& s, long e) {
  if (e < 0) throw PreconditionError("negative power of a series; use div_truncated");
  GenSeries result = GenSeries::constant(s.rank(), Rat(1));
  for (long i = 0; i < e; ++i) result = result * s;
  return result;
}

GenSeries div_truncated(const GenSeries& s1, const GenSeries& s2, const GroupVec& order) {
  require_rank(s1.rank(), s2.rank());
  require_rank(s1.rank(), order.rank());
  if (s2.empty()) throw PreconditionError("division by a zero series");
  const GroupVec v2 = s2.leading_exp();
  const Rat c2 = s2.leading_coeff();
  const GroupVec stop = order + v2;

  GenSeries q(s1.rank());
  GenSeries r = s1;
  int steps = 0;
  while (!r.empty() && r.leading_exp() < stop) {
    if (++steps > kMaxDivisionSteps) throw BoundExceeded("series division did not converge");
    const GroupVec g = r.leading_exp() - v2;
    const Rat c = r.leading_coeff() / c2;
    q.add_term(g, c);
    r -= GenSeries::monomial(g, c) * s2;
  }
  if (r.is_zero()) return q;  // exact quotient
  std::optional<GroupVec> t = order;
  if (r.truncation()) t = std::min(*t, *r.truncation() - v2);
  return q.truncated(*t);
}

SignChar::SignChar(std::vector<int> basis_signs, long denominator) : signs_(std::move(basis_signs)), den_(denominator) {
  if (den_ <= 0) throw PreconditionError("sign character denominator must be positive");
  for (int s : signs_) {
    if (s != 1 && s != -1) throw PreconditionError("basis signs must be +1 or -1");
  }
}

int SignChar::sigma(const GroupVec& g) const {
  if (g.rank() != signs_.size()) throw RankMismatch("sign character rank differs from exponent rank");
  int out = 1;
  for (std::size_t j = 0; j < signs_.size(); ++j) {
    const Rat scaled = Rat(den_) * g[j];
    if (!scaled.is_integer()) {
      throw PreconditionError("sign of t^" + g.str() + " undefined for denominator " + std::to_string(den_));
    }
    if (signs_[j] < 0 && mpz_odd_p(scaled.numerator().get_mpz_t())) out = -out;
  }
  return out;
}

int series_sign(const GenSeries& s, const SignChar& sc) {
  if (s.is_zero()) return 0;
  return s.leading_coeff().sign() * sc.sigma(s.leading_exp());
}

GenSeries series_abs(const GenSeries& s, const SignChar& sc) {
  return series_sign(s, sc) < 0 ? -s : s;
}

bool abs_ge(const GenSeries& s1, const GenSeries& s2, const SignChar& sc) {
  return series_sign(series_abs(s1, sc) - series_abs(s2, sc), sc) >= 0;
}

}  // namespace realspec
