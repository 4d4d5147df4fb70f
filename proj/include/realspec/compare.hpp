#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "realspec/curvette.hpp"
#include "realspec/roots.hpp"

namespace realspec {

enum class VerdictTag { ComparableLT, ComparableGT, ComparableEQ, Incomparable, StronglyComparable };

std::string to_string(VerdictTag t);

struct Verdict {
  VerdictTag tag = VerdictTag::Incomparable;
  /// Common initial-form ratio, set for ComparableEQ.
  std::optional<Rat> ratio;
  // Values of Q'_i, Q'_j and the ratios in(Q'_i)/in(Q'_j) at both points.
  GroupVec value_i_alpha, value_j_alpha, value_i_beta, value_j_beta;
  Rat ratio_alpha, ratio_beta;
  std::string hash_i, hash_j;

  [[nodiscard]] bool comparable() const { return tag != VerdictTag::Incomparable; }
};

nlohmann::json to_json(const Verdict& v);

Verdict compare_roots(const BinomialRoot& qi, const BinomialRoot& qj, const SemiCurvette& a, const SemiCurvette& b);

/// nu_a(Q_i) + nu_a0(Q_j) < mu_a for some ordering of the pair. Throws
/// Violation when the inequality holds at the first point but the same
/// ordering fails at the second.
bool strongly_comparable(const BinomialRoot& qi, const BinomialRoot& qj, const SemiCurvette& a,
                         const SemiCurvette& b, const GroupVec& mu_a, const GroupVec& mu_b);

enum class Trichotomy { AllComparable, AllIncomparable, Violation };

std::string to_string(Trichotomy t);

struct TrichotomyReport {
  Trichotomy outcome;
  std::array<Verdict, 3> verdicts;  // pairs (0,1), (0,2), (1,2)
};

TrichotomyReport trichotomy_check(const BinomialRoot& q4, const BinomialRoot& q5, const BinomialRoot& q6,
                                  const SemiCurvette& a, const SemiCurvette& b);

/// At least two of the three roots satisfy 2 nu_a(Q) > mu_a. The triple must
/// be pairwise incomparable for (a, b).
bool half_mu_check(const std::vector<BinomialRoot>& roots, const SemiCurvette& a, const SemiCurvette& b,
                   const GroupVec& mu_a);

struct SeparatingMembership {
  bool in_ideal = false;
  GenMonomial divisor;                 // the product of two roots found
  std::vector<GenMonomial> rewrite;    // generators replacing the monomial
  std::vector<GroupVec> values_alpha;  // their values at the two points
  std::vector<GroupVec> values_beta;
  /// Every rewrite generator has value >= mu at both points.
  bool generators_reach_mu = false;
};

/// Membership of a generalized monomial in the separating ideal through
/// divisibility by a product of two of the three roots of `sys`.
SeparatingMembership monomial_in_separating(const GenMonomial& m, const RootSystem& sys, const SemiCurvette& a,
                                            const SemiCurvette& b, const GroupVec& mu_a, const GroupVec& mu_b);

}  // namespace realspec
