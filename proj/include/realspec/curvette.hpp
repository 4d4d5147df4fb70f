#pragma once

#include <vector>

#include "realspec/group_vec.hpp"
#include "realspec/poly.hpp"
#include "realspec/series.hpp"

namespace realspec {

using Weights = std::vector<GroupVec>;

/// A point of the real spectrum: n exact series with positive values plus
/// sign data for t.
class SemiCurvette {
 public:
  SemiCurvette(std::vector<GenSeries> entries, SignChar sc);

  [[nodiscard]] std::size_t nvars() const { return entries_.size(); }
  [[nodiscard]] std::size_t rank() const { return sc_.rank(); }
  [[nodiscard]] const std::vector<GenSeries>& entries() const { return entries_; }
  [[nodiscard]] const GenSeries& entry(std::size_t q) const { return entries_.at(q); }
  [[nodiscard]] const SignChar& sign_char() const { return sc_; }
  /// Values of the variables, the weights of the induced monomial valuation.
  [[nodiscard]] Weights variable_values() const;

  friend bool operator==(const SemiCurvette&, const SemiCurvette&) = default;

 private:
  std::vector<GenSeries> entries_;
  SignChar sc_;
};

/// Exact substitution of the curvette into f.
GenSeries evaluate(const Poly& f, const SemiCurvette& a);

/// c * u^e for an exponent vector with possibly negative entries; the
/// inverses are expanded below `order`.
GenSeries evaluate_laurent(const ExpVec& e, const Rat& c, const SemiCurvette& a, const GroupVec& order);

/// Exact value of a Laurent monomial u^e, read off leading terms.
GroupVec monomial_curve_value(const ExpVec& e, const SemiCurvette& a);
/// Leading coefficient of u^e along the curvette.
Rat monomial_curve_coeff(const ExpVec& e, const SemiCurvette& a);

Val value(const Poly& f, const SemiCurvette& a);
GroupVec weighted_degree(const ExpVec& e, const Weights& w);
Val monomial_value(const Poly& f, const Weights& w);
Rat initial_coeff(const Poly& f, const SemiCurvette& a);
/// Sign of f at the point: -1, 0 or +1.
int sign_at(const Poly& f, const SemiCurvette& a);
bool changes_sign(const Poly& f, const SemiCurvette& a, const SemiCurvette& b);
bool is_tangent(const Poly& f, const SemiCurvette& a);

}  // namespace realspec
