#include "realspec/regions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "realspec/errors.hpp"
#include "realspec/serialize.hpp"

namespace realspec {

namespace {

Constraint centering(const RootSystem& sys, int q) {
  return {ValueLT{{}, {{q, 1}}}, "center:" + sys.name(q)};
}

void add_centering(Region& r, const RootSystem& sys) {
  for (int q = 1; q <= static_cast<int>(sys.nvars()); ++q) r.constraints.push_back(centering(sys, q));
}

void add_dominant_signs(Region& r, const std::vector<StandardForm>& forms, const RootSystem& sys,
                        const SemiCurvette& a, const std::string& tag) {
  std::set<int> seen;
  for (const auto& f : forms) {
    for (const auto& [idx, e] : f.dominant()) {
      if (e == 0 || !seen.insert(idx).second) continue;
      r.constraints.push_back({SignIs{{{idx, 1}}, sys.sign({{idx, 1}}, a)}, tag + ":sign:" + sys.name(idx)});
    }
  }
}

std::string pair_tag(const std::string& prefix, std::size_t i, std::size_t j) {
  return prefix + ":i=" + std::to_string(i + 1) + ",j=" + std::to_string(j + 1);
}

// Series of c * unit * (positive part of m) * (negative part of other).
std::optional<GenSeries> side_series(const Rat& c, const std::optional<Poly>& unit, const GenMonomial& m,
                                     const GenMonomial& other, const RootSystem& sys, const SemiCurvette& d) {
  GenSeries s = GenSeries::constant(d.rank(), c);
  if (unit) s = s * evaluate(*unit, d);
  for (const auto& [i, e] : m) {
    if (e > 0) s = s * pow(sys.eval(i, d), e);
  }
  for (const auto& [i, e] : other) {
    if (e >= 0) continue;
    const GenSeries x = sys.eval(i, d);
    if (x.is_zero()) return std::nullopt;  // a denominator vanishes
    s = s * pow(x, -e);
  }
  // Denominators on this side must not vanish either.
  for (const auto& [i, e] : m) {
    if (e < 0 && sys.eval(i, d).is_zero()) return std::nullopt;
  }
  return s;
}

// Value of a Laurent monomial, infinity when a positive factor vanishes,
// nullopt when a denominator does.
std::optional<Val> genmon_val(const GenMonomial& m, const RootSystem& sys, const SemiCurvette& d) {
  Val out(GroupVec::zero(d.rank()));
  bool infinite = false;
  for (const auto& [i, e] : m) {
    const GenSeries x = sys.eval(i, d);
    if (x.is_zero()) {
      if (e < 0) return std::nullopt;
      infinite = true;
      continue;
    }
    out = out + Val(Rat(e) * x.leading_exp());
  }
  if (infinite) return Val::infinity();
  return out;
}

struct LaurentTerm {
  Rat coeff;
  GenMonomial mono;
};

// omega_p / omega_e as a Laurent term over the variables.
LaurentTerm cofactor_ratio(const Poly& num, const Poly& den) {
  const auto& [en, cn] = *num.terms().begin();
  const auto& [ed, cd] = *den.terms().begin();
  GenMonomial m;
  for (std::size_t q = 0; q < en.size(); ++q) {
    const long e = en[q] - ed[q];
    if (e != 0) m[static_cast<int>(q) + 1] = e;
  }
  return {cn / cd, m};
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::string describe(const Constraint& c, const RootSystem& sys) {
  if (const auto* m = std::get_if<MagnitudeGE>(&c.kind)) {
    auto side = [&](const Rat& k, const std::optional<Poly>& u, const GenMonomial& g) {
      std::string s = k.str();
      if (u) s += "*(" + u->str() + ")";
      return s + "*" + sys.str(g);
    };
    return "|" + side(m->lc, m->lunit, m->lm) + (m->strict ? "| > |" : "| >= |") + side(m->rc, m->runit, m->rm) + "|";
  }
  if (const auto* s = std::get_if<SignIs>(&c.kind)) {
    return "sgn(" + sys.str(s->target) + ") = " + (s->sign > 0 ? "+1" : "-1");
  }
  const auto& v = std::get<ValueLT>(c.kind);
  return "nu(" + sys.str(v.left) + ") < nu(" + sys.str(v.right) + ")";
}

nlohmann::json to_json(const Region& r, const RootSystem& sys) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : r.constraints) {
    nlohmann::json j = {{"provenance", c.provenance}, {"text", describe(c, sys)}};
    if (const auto* m = std::get_if<MagnitudeGE>(&c.kind)) {
      j["kind"] = "MagnitudeGE";
      j["left"] = {{"c", to_json(m->lc)}, {"m", to_json(m->lm)}};
      j["right"] = {{"c", to_json(m->rc)}, {"m", to_json(m->rm)}};
      if (m->lunit) j["left"]["unit"] = to_json(*m->lunit);
      if (m->runit) j["right"]["unit"] = to_json(*m->runit);
      j["strict"] = m->strict;
    } else if (const auto* s = std::get_if<SignIs>(&c.kind)) {
      j["kind"] = "Sign";
      j["target"] = to_json(s->target);
      j["sign"] = s->sign;
    } else {
      const auto& v = std::get<ValueLT>(c.kind);
      j["kind"] = "ValueLT";
      j["left"] = to_json(v.left);
      j["right"] = to_json(v.right);
    }
    cs.push_back(std::move(j));
  }
  return {{"provenance", r.provenance}, {"constraints", cs}};
}

Region build_C(const std::vector<StandardForm>& forms, const RootSystem& sys, const SemiCurvette& a) {
  Region r;
  r.provenance = "value-dominance region";
  add_centering(r, sys);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = 0; j < forms[i].tail().size(); ++j) {
      r.constraints.push_back({ValueLT{forms[i].dominant(), forms[i].tail()[j].mono}, pair_tag("C:value", i, j)});
    }
  }
  add_dominant_signs(r, forms, sys, a, "C");
  return r;
}

Region build_Cprime(const std::vector<StandardForm>& forms, const RootSystem& sys, const SemiCurvette& a) {
  Region r;
  r.provenance = "magnitude region";
  add_centering(r, sys);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Rat n(static_cast<long>(forms[i].tail().size()));
    for (std::size_t j = 0; j < forms[i].tail().size(); ++j) {
      const auto& t = forms[i].tail()[j];
      MagnitudeGE m{forms[i].coeff(), forms[i].dominant(), std::nullopt, n * t.coeff, t.mono, std::nullopt, true};
      r.constraints.push_back({m, pair_tag("Cprime:magnitude", i, j)});
    }
  }
  add_dominant_signs(r, forms, sys, a, "Cprime");
  return r;
}

DRegion build_D(const std::vector<StandardForm>& forms, const RootSystem& sys, const SyzygyCertificate& syz,
                const SemiCurvette& a, const SemiCurvette& b, std::optional<Rat> epsilon) {
  if (epsilon && (epsilon->sign() <= 0 || *epsilon >= Rat(1))) {
    throw PreconditionError("epsilon must lie strictly between 0 and 1");
  }
  if (sys.roots().size() != 3) throw PreconditionError("elimination needs a system with three roots");
  // Match certificate roots to system indices.
  std::array<int, 3> idx{};
  for (std::size_t r = 0; r < 3; ++r) {
    idx[r] = 0;
    for (int i = static_cast<int>(sys.nvars()) + 1; i <= sys.index_count(); ++i) {
      if (sys.root(i) == syz.roots[r]) idx[r] = i;
    }
    if (idx[r] == 0) throw PreconditionError("syzygy root " + syz.roots[r].str() + " is not in the root system");
    if (syz.omegas[r].terms().size() != 1) {
      throw PreconditionError("elimination needs monomial cofactors; got " + syz.omegas[r].str());
    }
  }

  // Candidates for the eliminated root: smallest normalized value at a.
  std::array<GroupVec, 3> nv_a;
  std::array<GroupVec, 3> nv_b;
  for (std::size_t r = 0; r < 3; ++r) {
    nv_a[r] = normalized_value(syz.roots[r], a);
    nv_b[r] = normalized_value(syz.roots[r], b);
  }
  const GroupVec min_a = std::min({nv_a[0], nv_a[1], nv_a[2]});
  const GroupVec min_b = std::min({nv_b[0], nv_b[1], nv_b[2]});
  const auto ties = [](const std::array<GroupVec, 3>& v, const GroupVec& m) {
    return std::count(v.begin(), v.end(), m);
  };
  const bool tie_flag = (ties(nv_a, min_a) > 1) != (ties(nv_b, min_b) > 1);

  std::vector<std::size_t> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return idx[x] < idx[y]; });

  for (std::size_t e : order) {
    if (nv_a[e] != min_a) continue;
    std::array<std::size_t, 2> others{};
    std::size_t k = 0;
    for (std::size_t r = 0; r < 3; ++r) {
      if (r != e) others[k++] = r;
    }
    std::array<LaurentTerm, 2> term;
    for (std::size_t s = 0; s < 2; ++s) {
      term[s] = cofactor_ratio(syz.omegas[others[s]], syz.omegas[e]);
      term[s].mono = genmon_mul(term[s].mono, {{idx[others[s]], 1}});
    }
    // Which term is larger in magnitude at a point, with leading ratio.
    struct Cmp {
      int larger;  // 0 or 1, -1 for equal magnitude
      Rat ratio;
    };
    auto compare_at = [&](const SemiCurvette& d) -> Cmp {
      const GroupVec v0 = sys.value(term[0].mono, d);
      const GroupVec v1 = sys.value(term[1].mono, d);
      if (v0 < v1) return {0, Rat(0)};
      if (v1 < v0) return {1, Rat(0)};
      const Rat l0 = (term[0].coeff * sys.initial(term[0].mono, d)).abs();
      const Rat l1 = (term[1].coeff * sys.initial(term[1].mono, d)).abs();
      if (l0 == l1) return {-1, Rat(1)};
      return l0 > l1 ? Cmp{0, l1 / l0} : Cmp{1, l0 / l1};
    };
    const Cmp ca = compare_at(a);
    const Cmp cb = compare_at(b);
    if (ca.larger < 0 || ca.larger != cb.larger) continue;

    const std::size_t big = static_cast<std::size_t>(ca.larger);
    const std::size_t small = 1 - big;
    DRoles roles;
    roles.eliminated = idx[e];
    roles.larger = idx[others[big]];
    roles.smaller = idx[others[small]];
    roles.ratio_alpha = ca.ratio;
    roles.ratio_beta = cb.ratio;
    roles.tie_flagged = tie_flag;
    roles.epsilon = epsilon ? *epsilon : (ca.ratio.is_zero() && cb.ratio.is_zero()
                                              ? Rat(1, 2)
                                              : (Rat(1) - std::max(ca.ratio, cb.ratio)) / Rat(2));

    const LaurentTerm& T4 = term[big];
    const LaurentTerm& T5 = term[small];
    const std::string tag = tie_flag ? "D[tie]" : "D";
    Constraint elim{MagnitudeGE{(Rat(1) - roles.epsilon) * T4.coeff.abs(), T4.mono, std::nullopt, T5.coeff.abs(),
                                T5.mono, std::nullopt, true},
                    tag + ":elimination"};
    if (!satisfies(elim, sys, a) || !satisfies(elim, sys, b)) {
      if (epsilon) throw PreconditionError("the elimination margin fails for epsilon = " + epsilon->str());
      continue;
    }

    DRegion out;
    out.roles = roles;
    Region& r = out.region;
    r.provenance = "eliminated region";
    add_centering(r, sys);

    const int q6 = idx[e];
    for (std::size_t i = 0; i < forms.size(); ++i) {
      const auto& f = forms[i];
      // Dominant: Q6^k -> (epsilon * T4)^k in magnitude.
      Rat dc = f.coeff();
      GenMonomial dm = f.dominant();
      if (auto it = dm.find(q6); it != dm.end()) {
        const long kq = it->second;
        if (kq < 0) throw PreconditionError("eliminated root appears with a negative exponent");
        dm.erase(it);
        dc *= pow(roles.epsilon * T4.coeff, kq);
        dm = genmon_mul(dm, genmon_pow(T4.mono, kq));
      }
      // Tail: Q6^k -> (-T4 - T5)^k expanded.
      std::map<GenMonomial, Rat> tail;
      for (const auto& t : f.tail()) {
        GenMonomial base = t.mono;
        long kq = 0;
        if (auto it = base.find(q6); it != base.end()) {
          kq = it->second;
          base.erase(it);
        }
        if (kq < 0) throw PreconditionError("eliminated root appears with a negative exponent");
        for (long l = 0; l <= kq; ++l) {
          const Rat c = t.coeff * Rat(binomial(kq, l)) * pow(-T4.coeff, l) * pow(-T5.coeff, kq - l);
          const GenMonomial m = genmon_mul(base, genmon_mul(genmon_pow(T4.mono, l), genmon_pow(T5.mono, kq - l)));
          tail[m] += c;
        }
      }
      std::vector<std::pair<GenMonomial, Rat>> kept;
      for (const auto& [m, c] : tail) {
        if (!c.is_zero()) kept.emplace_back(m, c);
      }
      const Rat n(static_cast<long>(kept.size()));
      for (std::size_t j = 0; j < kept.size(); ++j) {
        r.constraints.push_back({MagnitudeGE{dc.abs(), dm, std::nullopt, n * kept[j].second.abs(), kept[j].first,
                                             std::nullopt, true},
                                 pair_tag(tag + ":dominance", i, j)});
      }
    }
    r.constraints.push_back(elim);
    for (int q = 1; q <= static_cast<int>(sys.nvars()); ++q) {
      r.constraints.push_back({SignIs{{{q, 1}}, sys.sign({{q, 1}}, a)}, tag + ":sign:" + sys.name(q)});
    }
    for (int q : {roles.larger, roles.smaller}) {
      r.constraints.push_back({SignIs{{{q, 1}}, sys.sign({{q, 1}}, a)}, tag + ":sign:" + sys.name(q)});
    }
    return out;
  }
  throw PreconditionError("no choice of eliminated root satisfies the elimination margin at both points");
}

Region strengthen_monomial(const Region& region) {
  Region out;
  out.provenance = region.provenance + " (constant coefficients)";
  for (const auto& c : region.constraints) {
    const auto* m = std::get_if<MagnitudeGE>(&c.kind);
    if (!m || (!m->lunit && !m->runit)) {
      out.constraints.push_back(c);
      continue;
    }
    auto constant_term = [](const std::optional<Poly>& u) {
      if (!u) return Rat(1);
      const Rat k = u->coeff(ExpVec(u->nvars(), 0));
      if (k.is_zero()) throw PreconditionError("unit factor " + u->str() + " has zero constant term");
      return k;
    };
    MagnitudeGE s = *m;
    // Large side halved, small side doubled.
    s.lc = m->lc * constant_term(m->lunit) / Rat(2);
    s.rc = m->rc * constant_term(m->runit) * Rat(2);
    s.lunit.reset();
    s.runit.reset();
    out.constraints.push_back({s, c.provenance + ":strengthened"});
  }
  return out;
}

bool satisfies(const Constraint& c, const RootSystem& sys, const SemiCurvette& d) {
  if (const auto* m = std::get_if<MagnitudeGE>(&c.kind)) {
    const auto left = side_series(m->lc, m->lunit, m->lm, m->rm, sys, d);
    const auto right = side_series(m->rc, m->runit, m->rm, m->lm, sys, d);
    if (!left || !right) return false;
    const int diff = series_sign(series_abs(*left, d.sign_char()) - series_abs(*right, d.sign_char()), d.sign_char());
    return m->strict ? diff > 0 : diff >= 0;
  }
  if (const auto* s = std::get_if<SignIs>(&c.kind)) {
    int sign = 1;
    for (const auto& [i, e] : s->target) {
      const int x = series_sign(sys.eval(i, d), d.sign_char());
      if (x == 0) return false;
      if (x < 0 && e % 2 != 0) sign = -sign;
    }
    return sign == s->sign;
  }
  const auto& v = std::get<ValueLT>(c.kind);
  const auto l = genmon_val(v.left, sys, d);
  const auto r = genmon_val(v.right, sys, d);
  return l && r && *l < *r;
}

bool member(const Region& region, const RootSystem& sys, const SemiCurvette& d) {
  return std::all_of(region.constraints.begin(), region.constraints.end(),
                     [&](const Constraint& c) { return satisfies(c, sys, d); });
}

Rat CurvetteSampler::jitter_factor() {
  std::uniform_int_distribution<long> qd(1, 6);
  const long q = qd(rng_);
  std::uniform_int_distribution<long> pd((q + 1) / 2, 2 * q);
  return Rat(pd(rng_), q);
}

SemiCurvette CurvetteSampler::next() {
  std::bernoulli_distribution lead_jitter(0.25);
  std::bernoulli_distribution tail_jitter(0.5);
  std::bernoulli_distribution negate(0.125);
  std::vector<GenSeries> entries;
  for (const auto& s : base_.entries()) {
    GenSeries out(s.rank());
    bool leading = true;
    for (const auto& [g, c] : s.terms()) {
      Rat coeff = c;
      if (leading ? lead_jitter(rng_) : tail_jitter(rng_)) {
        coeff *= jitter_factor();
        if (negate(rng_)) coeff = -coeff;
      }
      out.add_term(g, coeff);
      leading = false;
    }
    entries.push_back(std::move(out));
  }
  return SemiCurvette(std::move(entries), base_.sign_char());
}

SampleReport sign_constancy_sample(const Region& region, const std::vector<StandardForm>& forms,
                                   const RootSystem& sys, const SemiCurvette& a, std::uint64_t seed,
                                   std::size_t count) {
  SampleReport rep;
  CurvetteSampler sampler(a, seed);
  std::vector<Poly> expanded;
  std::vector<int> base_sign;
  for (const auto& f : forms) {
    expanded.push_back(f.expand(sys));
    base_sign.push_back(f.coeff().sign() * sys.sign(f.dominant(), a));
  }
  for (std::size_t k = 0; k < count; ++k) {
    const SemiCurvette d = sampler.next();
    ++rep.samples;
    if (!member(region, sys, d)) continue;
    ++rep.members;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      const int sg = sign_at(expanded[i], d);
      int sd = 0;
      try {
        sd = forms[i].coeff().sign() * sys.sign(forms[i].dominant(), d);
      } catch (const PreconditionError&) {
        sd = 0;
      }
      if (sg == 0) {
        rep.violations.push_back({k, i, "form vanishes"});
      } else if (sd == 0) {
        rep.violations.push_back({k, i, "dominant monomial vanishes"});
      } else if (sg != sd) {
        rep.violations.push_back({k, i, "sign differs from dominant monomial"});
      } else if (sd != base_sign[i]) {
        rep.violations.push_back({k, i, "dominant sign differs from base point"});
      }
    }
  }
  return rep;
}

}  // namespace realspec
