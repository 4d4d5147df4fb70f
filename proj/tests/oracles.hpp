#pragma once

// Independent reference computations for the tests. They share only the
// input types with the library and redo the arithmetic on raw GMP values.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <vector>

#include "realspec/curvette.hpp"
#include "realspec/poly.hpp"

namespace oracle {

using Exp = std::vector<mpq_class>;
using Series = std::map<Exp, mpq_class>;

inline Exp add(const Exp& a, const Exp& b) {
  Exp c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline void clean(Series& s) {
  for (auto it = s.begin(); it != s.end();) {
    if (it->second == 0) {
      it = s.erase(it);
    } else {
      ++it;
    }
  }
}

inline Series mul(const Series& a, const Series& b) {
  Series c;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) c[add(ea, eb)] += ca * cb;
  }
  clean(c);
  return c;
}

inline Series from(const realspec::GenSeries& s) {
  Series out;
  for (const auto& [g, c] : s.terms()) {
    Exp e;
    for (const auto& x : g.coords()) e.push_back(x.raw());
    out[e] = c.raw();
  }
  return out;
}

// f on the curvette by expanding every monomial with repeated products.
inline Series eval(const realspec::Poly& f, const realspec::SemiCurvette& a) {
  Series out;
  const Exp zero(a.rank(), 0);
  for (const auto& [e, c] : f.terms()) {
    Series term = {{zero, c.raw()}};
    for (std::size_t q = 0; q < e.size(); ++q) {
      const Series x = from(a.entry(q));
      for (long k = 0; k < e[q]; ++k) term = mul(term, x);
    }
    for (const auto& [g, v] : term) out[g] += v;
  }
  clean(out);
  return out;
}

using PolyMap = std::map<std::vector<long>, mpq_class>;

inline PolyMap pmap(const realspec::Poly& p) {
  PolyMap m;
  for (const auto& [e, c] : p.terms()) m[e] = c.raw();
  return m;
}

inline PolyMap pmul(const PolyMap& a, const PolyMap& b) {
  PolyMap c;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<long> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c[e] += ca * cb;
    }
  }
  std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  return c;
}

inline PolyMap padd(PolyMap a, const PolyMap& b) {
  for (const auto& [e, c] : b) a[e] += c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

// Truncated power series in one variable, coefficient i at index i.
using Univ = std::vector<mpq_class>;

inline Univ umul(const Univ& a, const Univ& b, std::size_t n) {
  Univ c(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Univ uinv(const Univ& a, std::size_t n) {
  Univ r(n, 0);
  r[0] = 1 / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class s = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

// p(x, y(x)) truncated to n coefficients.
inline Univ usubst(const PolyMap& p, const Univ& y, std::size_t n) {
  Univ out(n, 0);
  for (const auto& [e, c] : p) {
    Univ t(n, 0);
    if (static_cast<std::size_t>(e[0]) < n) t[static_cast<std::size_t>(e[0])] = c;
    for (long k = 0; k < e[1]; ++k) t = umul(t, y, n);
    for (std::size_t i = 0; i < n; ++i) out[i] += t[i];
  }
  return out;
}

// Newton iteration y <- y - g(x,y)/g_y(x,y); returns y_1..y_n of the root.
inline Univ newton_root(const realspec::Poly& g, std::size_t n) {
  const PolyMap gm = pmap(g);
  PolyMap gy;
  for (const auto& [e, c] : gm) {
    if (e[1] > 0) gy[{e[0], e[1] - 1}] += c * e[1];
  }
  Univ y(n + 1, 0);
  for (std::size_t it = 0; it < n + 2; ++it) {
    const Univ num = usubst(gm, y, n + 1);
    const Univ den = usubst(gy, y, n + 1);
    const Univ step = umul(num, uinv(den, n + 1), n + 1);
    for (std::size_t i = 0; i <= n; ++i) y[i] -= step[i];
  }
  return Univ(y.begin() + 1, y.end());
}

// The point is in the image when the smallest of the last three
// coordinates is attained at least twice.
inline bool phi_image(const mpq_class& a2, const mpq_class& a3, const mpq_class& a4) {
  const mpq_class m = std::min({a2, a3, a4});
  return (a2 == m) + (a3 == m) + (a4 == m) >= 2;
}

inline bool phi_three_clause(const mpq_class& a2, const mpq_class& a3, const mpq_class& a4) {
  if (a2 == a3 && a2 <= a4) return true;
  if (a2 == a4 && a2 <= a3) return true;
  return a3 == a4 && a3 <= a2;
}

}  // namespace oracle
