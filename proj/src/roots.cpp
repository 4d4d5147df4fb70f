#include "realspec/roots.hpp"

#include <algorithm>
#include <optional>

#include "realspec/errors.hpp"

namespace realspec {

BinomialRoot::BinomialRoot(ExpVec p, ExpVec m, Rat l) : plus(std::move(p)), minus(std::move(m)), lambda(std::move(l)) {
  if (plus.size() != minus.size()) throw RankMismatch("binomial sides have different lengths");
  if (plus == minus) throw PreconditionError("binomial with equal monomials");
  if (lambda.is_zero()) throw PreconditionError("binomial with zero lambda");
  for (std::size_t q = 0; q < plus.size(); ++q) {
    if (plus[q] < 0 || minus[q] < 0) throw PreconditionError("binomial exponents must be non-negative");
    if (plus[q] > 0 && minus[q] > 0) throw PreconditionError("binomial sides share a variable");
  }
}

Poly BinomialRoot::poly() const { return Poly::monomial(plus) - Poly::monomial(minus, lambda); }

bool BinomialRoot::is_quasi_homogeneous(const Weights& w) const {
  return weighted_degree(plus, w) == weighted_degree(minus, w);
}

std::string to_string(RootShape s) {
  switch (s) {
    case RootShape::MixedOverFirst: return "u2^b*u3^c - u1^a";
    case RootShape::SecondAlone: return "u2^b - u1^a*u3^c";
    case RootShape::ThirdAlone: return "u3^c - u1^a*u2^b";
  }
  return "?";
}

namespace {

// Integer rows of the 3 x k weight matrix after clearing denominators.
using IntWeights = std::vector<std::vector<long>>;

IntWeights clear_weights(const Weights& w) {
  std::vector<Rat> all;
  for (const auto& g : w) all.insert(all.end(), g.coords().begin(), g.coords().end());
  const mpz_class d = common_denominator(all);
  IntWeights out;
  for (const auto& g : w) {
    std::vector<long> row;
    for (const auto& c : g.coords()) {
      const Rat scaled = c * Rat(mpq_class(d));
      // Keeps every product in the bounded search well inside a long.
      if (abs(scaled.numerator()) > 1000000000) throw BoundExceeded("weights too large for lattice search");
      row.push_back(scaled.numerator().get_si());
    }
    out.push_back(std::move(row));
  }
  return out;
}

bool in_kernel(const IntWeights& w, long m1, long m2, long m3) {
  for (std::size_t j = 0; j < w[0].size(); ++j) {
    if (m1 * w[0][j] + m2 * w[1][j] + m3 * w[2][j] != 0) return false;
  }
  return true;
}

// Kernel of m -> sum m_q w_q over Q, as a basis of rational vectors.
std::vector<std::vector<Rat>> rational_kernel(const Weights& w) {
  const std::size_t k = w[0].rank();
  // Rows: coordinates; columns: the three variables.
  std::vector<std::vector<Rat>> a(k, std::vector<Rat>(3));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t q = 0; q < 3; ++q) a[j][q] = w[q][j];
  }
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < 3 && row < k; ++col) {
    std::size_t p = row;
    while (p < k && a[p][col].is_zero()) ++p;
    if (p == k) continue;
    std::swap(a[p], a[row]);
    const Rat inv = a[row][col].inverse();
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rat f = a[r][col];
      for (std::size_t c = 0; c < 3; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < 3; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<Rat> v(3, Rat(0));
    v[static_cast<std::size_t>(free)] = Rat(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      v[static_cast<std::size_t>(pivot_col[r])] = -a[r][static_cast<std::size_t>(free)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<long> primitive_integer(const std::vector<Rat>& v) {
  const mpz_class d = common_denominator(v);
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class z = (x * Rat(mpq_class(d))).numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  std::vector<long> out;
  for (auto& z : ints) {
    z /= g;
    if (!z.fits_slong_p()) throw BoundExceeded("lattice vector too large");
    out.push_back(z.get_si());
  }
  return out;
}

// Sign pattern of plus - minus for each shape.
bool matches_shape(RootShape s, const std::vector<long>& m) {
  switch (s) {
    case RootShape::MixedOverFirst: return m[0] <= -1 && m[1] >= 1 && m[2] >= 1;
    case RootShape::SecondAlone: return m[0] <= -1 && m[1] >= 1 && m[2] <= 0;
    case RootShape::ThirdAlone: return m[0] <= 0 && m[1] <= 0 && m[0] + m[1] <= -1 && m[2] >= 1;
  }
  return false;
}

BinomialRoot from_diff(long d1, long d2, long d3) {
  const ExpVec d{d1, d2, d3};
  ExpVec plus(3, 0);
  ExpVec minus(3, 0);
  for (std::size_t q = 0; q < 3; ++q) {
    if (d[q] > 0) plus[q] = d[q];
    if (d[q] < 0) minus[q] = -d[q];
  }
  return BinomialRoot(plus, minus);
}

std::optional<BinomialRoot> search_shape(RootShape s, const IntWeights& w, long bound) {
  switch (s) {
    case RootShape::MixedOverFirst:
      for (long a = 1; a <= bound; ++a)
        for (long b = 1; b <= bound; ++b)
          for (long c = 1; c <= bound; ++c)
            if (in_kernel(w, -a, b, c)) return from_diff(-a, b, c);
      break;
    case RootShape::SecondAlone:
      for (long b = 1; b <= bound; ++b)
        for (long a = 1; a <= bound; ++a)
          for (long c = 0; c <= bound; ++c)
            if (in_kernel(w, -a, b, -c)) return from_diff(-a, b, -c);
      break;
    case RootShape::ThirdAlone:
      for (long c = 1; c <= bound; ++c)
        for (long a = 0; a <= bound; ++a)
          for (long b = 0; b <= bound; ++b)
            if (a + b >= 1 && in_kernel(w, -a, -b, c)) return from_diff(-a, -b, c);
      break;
  }
  return std::nullopt;
}

}  // namespace

std::vector<ClassifiedRoot> classify_roots(const Weights& w, long bound) {
  if (w.size() != 3) throw PreconditionError("root classification needs exactly three weights");
  const GroupVec zero = GroupVec::zero(w[0].rank());
  for (const auto& g : w) {
    if (g.rank() != w[0].rank()) throw RankMismatch("weights of different rank");
    if (g <= zero) throw PreconditionError("weights must be positive");
  }
  const auto kernel = rational_kernel(w);
  const IntWeights iw = clear_weights(w);
  std::vector<ClassifiedRoot> out;
  for (RootShape s : {RootShape::MixedOverFirst, RootShape::SecondAlone, RootShape::ThirdAlone}) {
    bool exists = false;
    if (kernel.size() >= 2) {
      exists = true;
    } else if (kernel.size() == 1) {
      const auto v = primitive_integer(kernel[0]);
      const std::vector<long> neg{-v[0], -v[1], -v[2]};
      exists = matches_shape(s, v) || matches_shape(s, neg);
    }
    if (!exists) continue;
    auto found = search_shape(s, iw, bound);
    if (!found) {
      throw BoundExceeded("no binomial of shape " + to_string(s) + " with exponents <= " + std::to_string(bound));
    }
    out.push_back({s, *found});
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> initial_divisibility_conflicts(
    const std::vector<BinomialRoot>& roots) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i != j && exp_divides(roots[i].plus, roots[j].plus)) out.emplace_back(i, j);
    }
  }
  return out;
}

NormalizedRoot normalize(const BinomialRoot& q) { return {q.diff(), q.lambda}; }

GroupVec normalized_value(const BinomialRoot& q, const SemiCurvette& d) {
  const Val v = value(q.poly(), d);
  if (v.is_inf()) throw PreconditionError("root " + q.str() + " vanishes on the curvette");
  return v.get() - monomial_curve_value(q.minus, d);
}

Rat normalized_initial(const BinomialRoot& q, const SemiCurvette& d) {
  return initial_coeff(q.poly(), d) / monomial_curve_coeff(q.minus, d);
}

bool is_relevant(const BinomialRoot& q, const GroupVec& mu_alpha, const Weights& w) {
  return monomial_value(q.poly(), w) < Val(mu_alpha);
}

int pair_complexity(const std::vector<BinomialRoot>& roots, const GroupVec& mu_alpha, const Weights& w) {
  for (const auto& q : roots) {
    if (is_relevant(q, mu_alpha, w)) return 1;
  }
  return 0;
}

GenMonomial genmon_mul(const GenMonomial& a, const GenMonomial& b) {
  GenMonomial out = a;
  for (const auto& [i, e] : b) {
    out[i] += e;
    if (out[i] == 0) out.erase(i);
  }
  return out;
}

GenMonomial genmon_pow(const GenMonomial& a, long e) {
  GenMonomial out;
  if (e == 0) return out;
  for (const auto& [i, x] : a) out[i] = x * e;
  return out;
}

bool genmon_divides(const GenMonomial& a, const GenMonomial& b) {
  for (const auto& [i, e] : a) {
    auto it = b.find(i);
    const long have = it == b.end() ? 0 : it->second;
    if (e > have) return false;
  }
  return true;
}

bool genmon_is_polynomial(const GenMonomial& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second >= 0; });
}

RootSystem::RootSystem(std::size_t n, std::vector<BinomialRoot> roots) : n_(n), roots_(std::move(roots)) {
  for (const auto& q : roots_) {
    if (q.nvars() != n_) throw RankMismatch("root in a different number of variables");
  }
}

void RootSystem::check_index(int idx) const {
  if (idx < 1 || idx > index_count()) throw PreconditionError("generator index " + std::to_string(idx) + " out of range");
}

const BinomialRoot& RootSystem::root(int idx) const {
  check_index(idx);
  if (is_variable(idx)) throw PreconditionError("index " + std::to_string(idx) + " is a variable");
  return roots_[static_cast<std::size_t>(idx) - n_ - 1];
}

Poly RootSystem::element(int idx) const {
  check_index(idx);
  if (is_variable(idx)) return Poly::var(n_, static_cast<std::size_t>(idx) - 1);
  return root(idx).poly();
}

std::string RootSystem::name(int idx) const {
  check_index(idx);
  if (is_variable(idx)) return default_names(n_)[static_cast<std::size_t>(idx) - 1];
  return "Q" + std::to_string(idx);
}

std::string RootSystem::str(const GenMonomial& m) const {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [i, e] : m) {
    if (!out.empty()) out += "*";
    out += name(i);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

GenSeries RootSystem::eval(int idx, const SemiCurvette& d) const {
  if (is_variable(idx)) return d.entry(static_cast<std::size_t>(idx) - 1);
  return evaluate(element(idx), d);
}

Poly RootSystem::expand(const GenMonomial& m) const {
  Poly out = Poly::constant(n_, Rat(1));
  for (const auto& [i, e] : m) {
    if (e < 0) throw PreconditionError("cannot expand a Laurent monomial into a polynomial");
    out *= pow(element(i), e);
  }
  return out;
}

GroupVec RootSystem::value(const GenMonomial& m, const SemiCurvette& d) const {
  GroupVec out = GroupVec::zero(d.rank());
  for (const auto& [i, e] : m) {
    const GenSeries s = eval(i, d);
    if (s.is_zero()) throw PreconditionError(name(i) + " vanishes on the curvette");
    out += Rat(e) * s.leading_exp();
  }
  return out;
}

Rat RootSystem::initial(const GenMonomial& m, const SemiCurvette& d) const {
  Rat out(1);
  for (const auto& [i, e] : m) {
    const GenSeries s = eval(i, d);
    if (s.is_zero()) throw PreconditionError(name(i) + " vanishes on the curvette");
    out *= pow(s.leading_coeff(), e);
  }
  return out;
}

int RootSystem::sign(const GenMonomial& m, const SemiCurvette& d) const {
  int out = 1;
  for (const auto& [i, e] : m) {
    const int s = series_sign(eval(i, d), d.sign_char());
    if (s == 0) throw PreconditionError(name(i) + " vanishes on the curvette");
    if (s < 0 && (e % 2 != 0)) out = -out;
  }
  return out;
}

bool RootSystem::magnitude_ge(const Rat& c1, const GenMonomial& m1, const Rat& c2, const GenMonomial& m2,
                              const SemiCurvette& d, bool strict) const {
  GenSeries left = GenSeries::constant(d.rank(), c1);
  GenSeries right = GenSeries::constant(d.rank(), c2);
  for (const auto& [i, e] : m1) {
    const GenSeries s = eval(i, d);
    if (e > 0) left = left * pow(s, e); else right = right * pow(s, -e);
  }
  for (const auto& [i, e] : m2) {
    const GenSeries s = eval(i, d);
    if (e > 0) right = right * pow(s, e); else left = left * pow(s, -e);
  }
  const int diff = series_sign(series_abs(left, d.sign_char()) - series_abs(right, d.sign_char()), d.sign_char());
  return strict ? diff > 0 : diff >= 0;
}

Ordering genmon_compare(const GenMonomial& m1, const GenMonomial& m2, const RootSystem& sys, const SemiCurvette& d) {
  const Ordering by_value = lex_compare(sys.value(m1, d), sys.value(m2, d));
  if (by_value != Ordering::EQ) return by_value;
  for (int i = 1; i <= sys.index_count(); ++i) {
    auto get = [i](const GenMonomial& m) {
      auto it = m.find(i);
      return it == m.end() ? 0L : it->second;
    };
    if (get(m1) != get(m2)) return get(m1) < get(m2) ? Ordering::LT : Ordering::GT;
  }
  return Ordering::EQ;
}

StandardForm::StandardForm(GenMonomial dominant, std::vector<TailTerm> tail, Rat coeff)
    : dominant_(std::move(dominant)), coeff_(std::move(coeff)), tail_(std::move(tail)) {
  if (coeff_.is_zero()) throw PreconditionError("standard form with zero dominant coefficient");
  for (const auto& t : tail_) {
    if (t.coeff.is_zero()) throw PreconditionError("standard form with zero tail coefficient");
  }
}

StandardForm StandardForm::checked(GenMonomial dominant, std::vector<TailTerm> tail, const RootSystem& sys,
                                   const SemiCurvette& a, const SemiCurvette& b, Rat coeff) {
  StandardForm f(std::move(dominant), std::move(tail), std::move(coeff));
  if (!f.dominates_at(sys, a)) throw PreconditionError("dominant monomial fails dominance at the first point");
  if (!f.dominates_at(sys, b)) throw PreconditionError("dominant monomial fails dominance at the second point");
  return f;
}

bool StandardForm::dominates_at(const RootSystem& sys, const SemiCurvette& d) const {
  const GroupVec v = sys.value(dominant_, d);
  return std::all_of(tail_.begin(), tail_.end(), [&](const TailTerm& t) { return v < sys.value(t.mono, d); });
}

Poly StandardForm::expand(const RootSystem& sys) const {
  Poly out = coeff_ * sys.expand(dominant_);
  for (const auto& t : tail_) out += t.coeff * sys.expand(t.mono);
  return out;
}

std::string StandardForm::str(const RootSystem& sys) const {
  std::string out = (coeff_ == Rat(1) ? "" : coeff_.str() + "*") + sys.str(dominant_);
  for (const auto& t : tail_) {
    out += (t.coeff.sign() < 0 ? " - " : " + ");
    const Rat mag = t.coeff.abs();
    out += (mag == Rat(1) ? "" : mag.str() + "*") + sys.str(t.mono);
  }
  return out;
}

}  // namespace realspec
