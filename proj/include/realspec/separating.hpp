#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realspec/curvette.hpp"
#include "realspec/errors.hpp"

namespace realspec {

class NoSignChanger : public Error {
 public:
  using Error::Error;
};

struct SignChangerCertificate {
  Poly element;
  Val value_alpha;
  Val value_beta;
  int sign_alpha = 0;
  int sign_beta = 0;
};

/// Re-evaluates the element and checks stored values, signs and the sign change.
bool revalidate(const SignChangerCertificate& c, const SemiCurvette& a, const SemiCurvette& b);

struct UpperBound {
  GroupVec value;
  SignChangerCertificate certificate;
};

/// Smallest value at the first point among the sign-changing candidates.
/// Candidates vanishing identically on the first point are ignored.
UpperBound mu_upper_bound(const std::vector<Poly>& candidates, const SemiCurvette& a, const SemiCurvette& b);

struct SearchSpace {
  std::vector<Poly> basis;
  int degree_bound = 0;
  GroupVec value_bound;
};

struct SearchReport {
  std::size_t products = 0;       // monomial * basis elements
  std::size_t pairs = 0;          // unordered pairs of products
  std::size_t pairs_pruned = 0;   // skipped by the leading-value bound
  std::size_t candidates = 0;     // elements whose sign change was decided
  std::optional<UpperBound> best; // strictly below the value bound
  double elapsed_ms = 0;
};

/// Exhaustive search over m1*b_p + s*m2*b_q with deg m <= bound. The scalar
/// s ranges over the points where a leading coefficient cancels at either
/// curvette plus one representative of each open interval between them.
SearchReport exhaustive_min_search(const SearchSpace& space, const SemiCurvette& a, const SemiCurvette& b);

/// value(g) < mu and value(g) - p_value lies in the greatest isolated
/// subgroup not containing p_value (zero included).
bool in_localized_separating(const Poly& g, const SemiCurvette& a, const GroupVec& mu_a, const GroupVec& p_value);

/// Per g: value <= mu at both points and no sign change.
std::vector<bool> strong_hypothesis_check(const std::vector<Poly>& gs, const SemiCurvette& a, const SemiCurvette& b,
                                          const GroupVec& mu_a, const GroupVec& mu_b);

}  // namespace realspec
