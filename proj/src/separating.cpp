#include "realspec/separating.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace realspec {

namespace {

bool sign_change(int sa, int sb) { return (sa >= 0 && sb <= 0) || (sa <= 0 && sb >= 0); }

SignChangerCertificate certify(const Poly& f, const SemiCurvette& a, const SemiCurvette& b) {
  const GenSeries ea = evaluate(f, a);
  const GenSeries eb = evaluate(f, b);
  return {f, ea.valuation(), eb.valuation(), series_sign(ea, a.sign_char()), series_sign(eb, b.sign_char())};
}

std::vector<ExpVec> monomials_up_to(std::size_t n, int degree) {
  std::vector<ExpVec> out;
  ExpVec e(n, 0);
  // Odometer over exponent vectors with total degree <= degree.
  while (true) {
    out.push_back(e);
    std::size_t q = 0;
    while (q < n) {
      ++e[q];
      long total = 0;
      for (long x : e) total += x;
      if (total <= degree) break;
      e[q] = 0;
      ++q;
    }
    if (q == n) break;
  }
  return out;
}

// Leading data of one product at one point.
struct Lead {
  GenSeries series;
  GroupVec value;
  Rat coeff;
  int sigma = 1;
  bool zero = false;
};

Lead lead_of(const GenSeries& s, const SignChar& sc) {
  Lead l{s, {}, Rat(0), 1, s.is_zero()};
  if (!l.zero) {
    l.value = s.leading_exp();
    l.coeff = s.leading_coeff();
    l.sigma = sc.sigma(l.value);
  }
  return l;
}

// Sign of A + s*B from leading data, valid away from the cancellation point.
int interval_sign(const Lead& A, const Lead& B, const Rat& s) {
  if (B.zero || s.is_zero()) return A.zero ? 0 : A.coeff.sign() * A.sigma;
  if (A.zero || A.value > B.value) return s.sign() * B.coeff.sign() * B.sigma;
  if (A.value < B.value) return A.coeff.sign() * A.sigma;
  return (A.coeff + s * B.coeff).sign() * A.sigma;
}

// Value of A + s*B from leading data, same validity.
GroupVec interval_value(const Lead& A, const Lead& B, const Rat& s) {
  if (B.zero || s.is_zero()) return A.value;
  if (A.zero) return B.value;
  return std::min(A.value, B.value);
}

std::optional<Rat> cancel_point(const Lead& A, const Lead& B) {
  if (A.zero || B.zero || A.value != B.value) return std::nullopt;
  return -A.coeff / B.coeff;
}

}  // namespace

bool revalidate(const SignChangerCertificate& c, const SemiCurvette& a, const SemiCurvette& b) {
  const auto fresh = certify(c.element, a, b);
  return fresh.value_alpha == c.value_alpha && fresh.value_beta == c.value_beta && fresh.sign_alpha == c.sign_alpha &&
         fresh.sign_beta == c.sign_beta && sign_change(c.sign_alpha, c.sign_beta);
}

UpperBound mu_upper_bound(const std::vector<Poly>& candidates, const SemiCurvette& a, const SemiCurvette& b) {
  std::optional<UpperBound> best;
  for (const auto& f : candidates) {
    auto cert = certify(f, a, b);
    if (!sign_change(cert.sign_alpha, cert.sign_beta) || cert.value_alpha.is_inf()) continue;
    if (!best || cert.value_alpha.get() < best->value) best = UpperBound{cert.value_alpha.get(), std::move(cert)};
  }
  if (!best) throw NoSignChanger("no candidate changes sign between the two points");
  return *best;
}

SearchReport exhaustive_min_search(const SearchSpace& space, const SemiCurvette& a, const SemiCurvette& b) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  if (space.basis.empty()) return report;
  const std::size_t n = a.nvars();
  const auto monos = monomials_up_to(n, space.degree_bound);

  struct Product {
    Poly poly;
    Lead at_a;
    Lead at_b;
  };
  std::vector<Product> prods;
  for (const auto& bp : space.basis) {
    for (const auto& m : monos) {
      Poly p = Poly::monomial(m) * bp;
      if (p.is_zero()) continue;
      Lead la = lead_of(evaluate(p, a), a.sign_char());
      Lead lb = lead_of(evaluate(p, b), b.sign_char());
      prods.push_back({std::move(p), std::move(la), std::move(lb)});
    }
  }
  report.products = prods.size();

  GroupVec ceiling = space.value_bound;  // strictly-below target, tightened as we go
  auto consider = [&](const Poly& f, const GroupVec& va, int sa, int sb) {
    ++report.candidates;
    if (!sign_change(sa, sb) || !(va < ceiling)) return;
    auto cert = certify(f, a, b);
    ceiling = va;
    report.best = UpperBound{va, std::move(cert)};
  };

  for (const auto& p : prods) {
    if (p.at_a.zero) continue;
    consider(p.poly, p.at_a.value, p.at_a.coeff.sign() * p.at_a.sigma, p.at_b.zero ? 0 : p.at_b.coeff.sign() * p.at_b.sigma);
  }

  for (std::size_t i = 0; i < prods.size(); ++i) {
    for (std::size_t j = i + 1; j < prods.size(); ++j) {
      ++report.pairs;
      const Product& A = prods[i];
      const Product& B = prods[j];
      if (A.at_a.zero && B.at_a.zero) {
        ++report.pairs_pruned;
        continue;
      }
      // No s can push the value at the first point below the smaller
      // leading value except at a cancellation, which only raises it.
      GroupVec floor_a = A.at_a.zero ? B.at_a.value : A.at_a.value;
      if (!B.at_a.zero) floor_a = std::min(floor_a, B.at_a.value);
      if (!(floor_a < ceiling)) {
        ++report.pairs_pruned;
        continue;
      }
      std::set<Rat> breaks{Rat(0)};
      const auto ca = cancel_point(A.at_a, B.at_a);
      const auto cb = cancel_point(A.at_b, B.at_b);
      if (ca) breaks.insert(*ca);
      if (cb) breaks.insert(*cb);
      std::vector<Rat> reps;
      const std::vector<Rat> sorted(breaks.begin(), breaks.end());
      reps.push_back(sorted.front() - Rat(1));
      for (std::size_t k = 0; k + 1 < sorted.size(); ++k) reps.push_back((sorted[k] + sorted[k + 1]) / Rat(2));
      reps.push_back(sorted.back() + Rat(1));

      for (const auto& s : reps) {
        const int sa = interval_sign(A.at_a, B.at_a, s);
        const int sb = interval_sign(A.at_b, B.at_b, s);
        if (sa == 0) continue;
        const GroupVec va = interval_value(A.at_a, B.at_a, s);
        ++report.candidates;
        if (!sign_change(sa, sb) || !(va < ceiling)) continue;
        Poly f = A.poly + s * B.poly;
        ceiling = va;
        report.best = UpperBound{va, certify(f, a, b)};
      }
      for (const auto& s : sorted) {
        if (s.is_zero()) continue;  // single products handled above
        const GenSeries ea = A.at_a.series + s * B.at_a.series;
        if (ea.is_zero()) continue;
        const GenSeries eb = A.at_b.series + s * B.at_b.series;
        const GroupVec va = ea.leading_exp();
        consider(A.poly + s * B.poly, va, series_sign(ea, a.sign_char()), series_sign(eb, b.sign_char()));
      }
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool in_localized_separating(const Poly& g, const SemiCurvette& a, const GroupVec& mu_a, const GroupVec& p_value) {
  const Val v = value(g, a);
  if (v.is_inf() || !(v.get() < mu_a)) return false;
  const GroupVec d = v.get() - p_value;
  if (d.is_zero()) return true;
  return isolated_level(d) > isolated_level(p_value);
}

std::vector<bool> strong_hypothesis_check(const std::vector<Poly>& gs, const SemiCurvette& a, const SemiCurvette& b,
                                          const GroupVec& mu_a, const GroupVec& mu_b) {
  std::vector<bool> out;
  for (const auto& g : gs) {
    out.push_back(value(g, a) <= Val(mu_a) && value(g, b) <= Val(mu_b) && !changes_sign(g, a, b));
  }
  return out;
}

}  // namespace realspec
