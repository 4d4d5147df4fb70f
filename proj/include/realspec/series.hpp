#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "realspec/group_vec.hpp"
#include "realspec/rat.hpp"

namespace realspec {

/// Finite-support generalized power series sum c_g t^g with g in Q^k. A
/// finite truncation means every term at or above it is unknown.
class GenSeries {
 public:
  using Terms = std::map<GroupVec, Rat>;

  GenSeries() = default;
  explicit GenSeries(std::size_t rank) : k_(rank) {}

  static GenSeries zero(std::size_t rank) { return GenSeries(rank); }
  static GenSeries constant(std::size_t rank, const Rat& c);
  static GenSeries monomial(const GroupVec& g, const Rat& c = Rat(1));
  static GenSeries from_terms(std::size_t rank, const std::vector<std::pair<GroupVec, Rat>>& terms,
                              std::optional<GroupVec> truncation = std::nullopt);

  [[nodiscard]] std::size_t rank() const { return k_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] const std::optional<GroupVec>& truncation() const { return trunc_; }
  [[nodiscard]] bool is_exact() const { return !trunc_.has_value(); }
  /// True when no terms are stored (the series may still be truncated).
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  /// Exactly zero: no terms and no truncation.
  [[nodiscard]] bool is_zero() const { return terms_.empty() && !trunc_; }

  /// Throws Undecidable when every known term vanished below the truncation.
  [[nodiscard]] Val valuation() const;
  [[nodiscard]] const GroupVec& leading_exp() const;
  [[nodiscard]] const Rat& leading_coeff() const;
  [[nodiscard]] Rat coeff(const GroupVec& g) const;

  /// Drops terms at or above `order` and lowers the truncation to it.
  [[nodiscard]] GenSeries truncated(const GroupVec& order) const;
  [[nodiscard]] std::string str() const;

  void add_term(const GroupVec& g, const Rat& c);

  GenSeries& operator+=(const GenSeries& o);
  GenSeries& operator-=(const GenSeries& o);
  friend GenSeries operator+(GenSeries a, const GenSeries& b) { return a += b; }
  friend GenSeries operator-(GenSeries a, const GenSeries& b) { return a -= b; }
  friend GenSeries operator*(const GenSeries& a, const GenSeries& b);
  friend GenSeries operator*(const Rat& s, const GenSeries& a);
  GenSeries operator-() const { return Rat(-1) * *this; }
  friend bool operator==(const GenSeries& a, const GenSeries& b);

 private:
  void set_truncation(std::optional<GroupVec> t);
  // Lowest exponent that may carry a nonzero term, or nullopt for exact zero.
  [[nodiscard]] std::optional<GroupVec> low() const;

  std::size_t k_ = 0;
  Terms terms_;
  std::optional<GroupVec> trunc_;
};

GenSeries pow(const GenSeries& s, long e);

/// Quotient s1 / s2 correct below `order`: nu(s1 - s2*q) >= order + nu(s2).
GenSeries div_truncated(const GenSeries& s1, const GenSeries& s2, const GroupVec& order);

/// Sign data: the sign of t^g is the product of basis signs raised to the
/// parities of the coordinates of D*g.
class SignChar {
 public:
  SignChar() = default;
  explicit SignChar(std::vector<int> basis_signs, long denominator = 1);
  static SignChar positive(std::size_t rank) { return SignChar(std::vector<int>(rank, 1)); }

  [[nodiscard]] std::size_t rank() const { return signs_.size(); }
  [[nodiscard]] const std::vector<int>& basis_signs() const { return signs_; }
  [[nodiscard]] long denominator() const { return den_; }
  /// +1 or -1. Throws PreconditionError when D*g has a non-integer coordinate.
  [[nodiscard]] int sigma(const GroupVec& g) const;

  friend bool operator==(const SignChar&, const SignChar&) = default;

 private:
  std::vector<int> signs_;
  long den_ = 1;
};

/// -1, 0 or +1. Throws Undecidable when the leading term is not known.
int series_sign(const GenSeries& s, const SignChar& sc);

/// |s1| >= |s2| in the ordering given by sc.
bool abs_ge(const GenSeries& s1, const GenSeries& s2, const SignChar& sc);

/// |s| = sign(s) * s.
GenSeries series_abs(const GenSeries& s, const SignChar& sc);

}  // namespace realspec
