#include "realspec/compare.hpp"

#include "realspec/errors.hpp"
#include "realspec/serialize.hpp"

namespace realspec {

std::string to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::ComparableLT: return "ComparableLT";
    case VerdictTag::ComparableGT: return "ComparableGT";
    case VerdictTag::ComparableEQ: return "ComparableEQ";
    case VerdictTag::Incomparable: return "Incomparable";
    case VerdictTag::StronglyComparable: return "StronglyComparable";
  }
  return "?";
}

std::string to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::AllComparable: return "AllComparable";
    case Trichotomy::AllIncomparable: return "AllIncomparable";
    case Trichotomy::Violation: return "VIOLATION";
  }
  return "?";
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json out = {
      {"verdict", to_string(v.tag)},
      {"alpha", {{"value_i", to_json(v.value_i_alpha)}, {"value_j", to_json(v.value_j_alpha)}, {"ratio", to_json(v.ratio_alpha)}}},
      {"beta", {{"value_i", to_json(v.value_i_beta)}, {"value_j", to_json(v.value_j_beta)}, {"ratio", to_json(v.ratio_beta)}}},
      {"input_hashes", {v.hash_i, v.hash_j}},
  };
  if (v.ratio) out["ratio"] = to_json(*v.ratio);
  return out;
}

Verdict compare_roots(const BinomialRoot& qi, const BinomialRoot& qj, const SemiCurvette& a, const SemiCurvette& b) {
  Verdict v;
  v.value_i_alpha = normalized_value(qi, a);
  v.value_j_alpha = normalized_value(qj, a);
  v.value_i_beta = normalized_value(qi, b);
  v.value_j_beta = normalized_value(qj, b);
  v.ratio_alpha = normalized_initial(qi, a) / normalized_initial(qj, a);
  v.ratio_beta = normalized_initial(qi, b) / normalized_initial(qj, b);
  v.hash_i = json_hash(to_json(qi));
  v.hash_j = json_hash(to_json(qj));

  const auto ca = lex_compare(v.value_i_alpha, v.value_j_alpha);
  const auto cb = lex_compare(v.value_i_beta, v.value_j_beta);
  if (ca == Ordering::LT && cb == Ordering::LT) {
    v.tag = VerdictTag::ComparableLT;
  } else if (ca == Ordering::GT && cb == Ordering::GT) {
    v.tag = VerdictTag::ComparableGT;
  } else if (ca == Ordering::EQ && cb == Ordering::EQ && v.ratio_alpha == v.ratio_beta) {
    v.tag = VerdictTag::ComparableEQ;
    v.ratio = v.ratio_alpha;
  } else {
    v.tag = VerdictTag::Incomparable;
  }
  return v;
}

bool strongly_comparable(const BinomialRoot& qi, const BinomialRoot& qj, const SemiCurvette& a,
                         const SemiCurvette& b, const GroupVec& mu_a, const GroupVec& mu_b) {
  auto holds = [](const BinomialRoot& p, const BinomialRoot& q, const SemiCurvette& d, const GroupVec& mu) {
    return value(p.poly(), d) + monomial_value(q.poly(), d.variable_values()) < Val(mu);
  };
  for (int order = 0; order < 2; ++order) {
    const BinomialRoot& p = order == 0 ? qi : qj;
    const BinomialRoot& q = order == 0 ? qj : qi;
    if (holds(p, q, a, mu_a)) {
      if (!holds(p, q, b, mu_b)) {
        throw Violation("strong comparability holds at the first point but not at the second for " + p.str() +
                        ", " + q.str());
      }
      return true;
    }
  }
  return false;
}

TrichotomyReport trichotomy_check(const BinomialRoot& q4, const BinomialRoot& q5, const BinomialRoot& q6,
                                  const SemiCurvette& a, const SemiCurvette& b) {
  TrichotomyReport r;
  r.verdicts = {compare_roots(q4, q5, a, b), compare_roots(q4, q6, a, b), compare_roots(q5, q6, a, b)};
  int comparable = 0;
  for (const auto& v : r.verdicts) comparable += v.comparable() ? 1 : 0;
  if (comparable == 3) {
    r.outcome = Trichotomy::AllComparable;
  } else if (comparable == 0) {
    r.outcome = Trichotomy::AllIncomparable;
  } else {
    r.outcome = Trichotomy::Violation;
  }
  return r;
}

bool half_mu_check(const std::vector<BinomialRoot>& roots, const SemiCurvette& a, const SemiCurvette& b,
                   const GroupVec& mu_a) {
  if (roots.size() != 3) throw PreconditionError("the half-value check needs exactly three roots");
  const auto t = trichotomy_check(roots[0], roots[1], roots[2], a, b);
  if (t.outcome != Trichotomy::AllIncomparable) {
    throw PreconditionError("the half-value check needs a pairwise incomparable triple");
  }
  int above = 0;
  for (const auto& q : roots) {
    const Val v = value(q.poly(), a);
    if (v.is_inf() || Rat(2) * v.get() > mu_a) ++above;
  }
  return above >= 2;
}

SeparatingMembership monomial_in_separating(const GenMonomial& m, const RootSystem& sys, const SemiCurvette& a,
                                            const SemiCurvette& b, const GroupVec& mu_a, const GroupVec& mu_b) {
  if (sys.roots().size() != 3) throw PreconditionError("membership test needs a system with three roots");
  const auto& r = sys.roots();
  if (trichotomy_check(r[0], r[1], r[2], a, b).outcome != Trichotomy::AllIncomparable) {
    throw PreconditionError("membership test needs pairwise incomparable roots");
  }
  const int i4 = static_cast<int>(sys.nvars()) + 1;
  const int i5 = i4 + 1;
  const int i6 = i4 + 2;
  // Listed divisors: pairs (kept root, expanded root).
  const std::vector<std::pair<int, int>> divisors = {{i5, i4}, {i6, i4}, {i6, i5}, {i5, i5}, {i6, i6}};

  SeparatingMembership out;
  for (const auto& [keep, expand] : divisors) {
    const GenMonomial d = genmon_mul({{keep, 1}}, {{expand, 1}});
    if (!genmon_divides(d, m)) continue;
    out.in_ideal = true;
    out.divisor = d;
    // m = rest * keep * (omega - eps) where expand = omega - eps.
    const GenMonomial rest = genmon_mul(m, genmon_pow(d, -1));
    const BinomialRoot& q = sys.root(expand);
    for (const ExpVec& side : {q.plus, q.minus}) {
      GenMonomial g = genmon_mul(rest, {{keep, 1}});
      for (std::size_t v = 0; v < side.size(); ++v) {
        if (side[v] != 0) g = genmon_mul(g, {{static_cast<int>(v) + 1, side[v]}});
      }
      out.rewrite.push_back(g);
      out.values_alpha.push_back(sys.value(g, a));
      out.values_beta.push_back(sys.value(g, b));
    }
    out.generators_reach_mu = true;
    for (std::size_t k = 0; k < out.rewrite.size(); ++k) {
      if (out.values_alpha[k] < mu_a || out.values_beta[k] < mu_b) out.generators_reach_mu = false;
    }
    return out;
  }
  return out;
}

}  // namespace realspec
