#include "realspec/syzygy.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "realspec/errors.hpp"
#include "realspec/serialize.hpp"

namespace realspec {

namespace {

bool collinear(const ExpVec& a, const ExpVec& b) {
  // Cross product vanishes.
  return a[1] * b[2] - a[2] * b[1] == 0 && a[2] * b[0] - a[0] * b[2] == 0 && a[0] * b[1] - a[1] * b[0] == 0;
}

bool equal_up_to_sign(const ExpVec& a, const ExpVec& b) { return a == b || a == exp_scale(-1, b); }

bool is_zero_vec(const ExpVec& a) {
  return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

ExpVec monomial_gcd(const Poly& p, ExpVec acc, bool& first) {
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      acc = e;
      first = false;
    } else {
      for (std::size_t q = 0; q < acc.size(); ++q) acc[q] = std::min(acc[q], e[q]);
    }
  }
  return acc;
}

Poly divide_monomial(const Poly& p, const ExpVec& m) {
  Poly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(exp_sub(e, m), c);
  return out;
}

}  // namespace

std::array<long, 3> find_mu(const ExpVec& vi, const ExpVec& vj, const ExpVec& vk) {
  const std::array<const ExpVec*, 3> v{&vi, &vj, &vk};
  for (const auto* x : v) {
    if (x->size() != 3) throw RankMismatch("relation search needs vectors in three variables");
    if (is_zero_vec(*x)) throw PreconditionError("zero exponent difference");
  }
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      if (collinear(*v[a], *v[b]) && !equal_up_to_sign(*v[a], *v[b])) {
        throw PreconditionError("collinear exponent differences " + exp_str(*v[a]) + " and " + exp_str(*v[b]));
      }
    }
  }
  // Kernel of the 3x3 matrix with columns v: cross products of its rows.
  std::array<ExpVec, 3> rows;
  for (std::size_t r = 0; r < 3; ++r) rows[r] = {vi[r], vj[r], vk[r]};
  const long det = vi[0] * (vj[1] * vk[2] - vj[2] * vk[1]) - vj[0] * (vi[1] * vk[2] - vi[2] * vk[1]) +
                   vk[0] * (vi[1] * vj[2] - vi[2] * vj[1]);
  if (det != 0) throw PreconditionError("exponent differences are not coplanar");
  std::array<long, 3> mu{0, 0, 0};
  bool found = false;
  for (std::size_t a = 0; a < 3 && !found; ++a) {
    for (std::size_t b = a + 1; b < 3 && !found; ++b) {
      const ExpVec& r = rows[a];
      const ExpVec& s = rows[b];
      const std::array<long, 3> cross{r[1] * s[2] - r[2] * s[1], r[2] * s[0] - r[0] * s[2], r[0] * s[1] - r[1] * s[0]};
      if (cross[0] != 0 || cross[1] != 0 || cross[2] != 0) {
        mu = cross;
        found = true;
      }
    }
  }
  if (!found) throw PreconditionError("exponent differences span less than a plane");
  const long g = std::gcd(std::gcd(std::labs(mu[0]), std::labs(mu[1])), std::labs(mu[2]));
  for (auto& m : mu) m /= g;
  const long first = mu[0] != 0 ? mu[0] : (mu[1] != 0 ? mu[1] : mu[2]);
  if (first < 0) {
    for (auto& m : mu) m = -m;
  }
  return mu;
}

SyzygyCertificate build_syzygy(const BinomialRoot& qi, const BinomialRoot& qj, const BinomialRoot& qk,
                               const Weights& w) {
  SyzygyCertificate cert;
  cert.roots = {qi, qj, qk};
  const std::size_t n = qi.nvars();
  for (const auto& q : cert.roots) {
    if (q.nvars() != 3 || q.nvars() != w.size()) throw RankMismatch("syzygies are built in three variables");
    if (q.lambda != Rat(1)) throw PreconditionError("rescale variables so that lambda = 1 before building a syzygy");
    if (!q.is_quasi_homogeneous(w)) throw PreconditionError("root " + q.str() + " is not quasi-homogeneous");
  }
  cert.mu = find_mu(qi.diff(), qj.diff(), qk.diff());

  // Orient every root so its multiplier is non-negative.
  std::array<ExpVec, 3> a;
  std::array<ExpVec, 3> b;
  std::array<long, 3> m{};
  cert.clearing_monomial = ExpVec(n, 0);
  for (std::size_t r = 0; r < 3; ++r) {
    cert.flipped[r] = cert.mu[r] < 0;
    m[r] = std::labs(cert.mu[r]);
    a[r] = cert.flipped[r] ? cert.roots[r].minus : cert.roots[r].plus;
    b[r] = cert.flipped[r] ? cert.roots[r].plus : cert.roots[r].minus;
    if (cert.flipped[r]) {
      cert.clearing_monomial =
          exp_add(cert.clearing_monomial, exp_scale(m[r], exp_add(cert.roots[r].plus, cert.roots[r].minus)));
    }
    cert.depth = std::max(cert.depth, m[r]);
  }

  // a^m - b^m = (a - b) * sum a^(m-1-l) b^l.
  auto telescope = [&](std::size_t r) {
    Poly phi(n);
    for (long l = 0; l < m[r]; ++l) phi.add_term(exp_add(exp_scale(m[r] - 1 - l, a[r]), exp_scale(l, b[r])), Rat(1));
    return phi;
  };
  auto mono = [&](const ExpVec& e, long k) { return Poly::monomial(exp_scale(k, e)); };

  std::array<Poly, 3> omega{
      telescope(0) * mono(a[1], m[1]) * mono(a[2], m[2]),
      telescope(1) * mono(b[0], m[0]) * mono(a[2], m[2]),
      telescope(2) * mono(b[0], m[0]) * mono(b[1], m[1]),
  };
  for (std::size_t r = 0; r < 3; ++r) {
    if (cert.flipped[r]) omega[r] = -omega[r];
  }

  bool first = true;
  ExpVec g(n, 0);
  for (const auto& o : omega) g = monomial_gcd(o, g, first);
  cert.removed_factor = first ? ExpVec(n, 0) : g;
  for (std::size_t r = 0; r < 3; ++r) {
    cert.omegas[r] = divide_monomial(omega[r], cert.removed_factor);
    if (cert.omegas[r].is_zero()) cert.degenerate = true;
  }

  Json input = Json::array();
  for (const auto& q : cert.roots) input.push_back(to_json(q));
  cert.input_hash = json_hash(input);
  return cert;
}

Poly syzygy_expansion(const SyzygyCertificate& c) {
  Poly out(c.roots[0].nvars());
  for (std::size_t r = 0; r < 3; ++r) out += c.omegas[r] * c.roots[r].poly();
  return out;
}

GenSeries sigma_image(const Poly& p, const Weights& w) {
  if (p.nvars() != w.size()) throw RankMismatch("weight count differs from variable count");
  GenSeries out(w.at(0).rank());
  for (const auto& [e, c] : p.terms()) out.add_term(weighted_degree(e, w), c);
  return out;
}

bool is_quasi_homogeneous(const Poly& p, const Weights& w) {
  if (p.is_zero()) return false;
  const GroupVec d = weighted_degree(p.terms().begin()->first, w);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return weighted_degree(t.first, w) == d; });
}

CertificateCheck check_certificate(const SyzygyCertificate& c, const Weights& w) {
  CertificateCheck out;
  out.zero_expansion = syzygy_expansion(c).is_zero();
  out.quasi_homogeneous = std::all_of(c.omegas.begin(), c.omegas.end(),
                                      [&](const Poly& o) { return is_quasi_homogeneous(o, w); });
  out.sigma_nonzero = std::all_of(c.omegas.begin(), c.omegas.end(),
                                  [&](const Poly& o) { return !sigma_image(o, w).is_zero(); });
  return out;
}

bool verify_certificate(const SyzygyCertificate& c, const Weights& w) { return check_certificate(c, w).ok(); }

}  // namespace realspec
