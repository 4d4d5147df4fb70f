#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "realspec/curvette.hpp"
#include "realspec/poly.hpp"

namespace realspec {

/// u^plus - lambda * u^minus.
struct BinomialRoot {
  ExpVec plus;
  ExpVec minus;
  Rat lambda{1};

  BinomialRoot() = default;
  BinomialRoot(ExpVec p, ExpVec m, Rat l = Rat(1));

  [[nodiscard]] std::size_t nvars() const { return plus.size(); }
  [[nodiscard]] ExpVec diff() const { return exp_sub(plus, minus); }
  [[nodiscard]] Poly poly() const;
  [[nodiscard]] bool is_quasi_homogeneous(const Weights& w) const;
  [[nodiscard]] std::string str() const { return poly().str(); }

  friend bool operator==(const BinomialRoot&, const BinomialRoot&) = default;
};

/// Which of the three binomial layouts a complexity-one root takes.
enum class RootShape {
  MixedOverFirst,  // u2^b u3^c - u1^a
  SecondAlone,     // u2^b - u1^a u3^c
  ThirdAlone,      // u3^c - u1^a u2^b
};

std::string to_string(RootShape s);

struct ClassifiedRoot {
  RootShape shape;
  BinomialRoot root;
};

/// Minimal binomial of each shape in the relation lattice of three weights.
/// Throws BoundExceeded when a shape is known to exist but no exponent
/// within `bound` realizes it.
std::vector<ClassifiedRoot> classify_roots(const Weights& w, long bound = 50);

/// Pairs (i, j) of roots whose initial monomial (the plus side) divides
/// the other's.
std::vector<std::pair<std::size_t, std::size_t>> initial_divisibility_conflicts(
    const std::vector<BinomialRoot>& roots);

/// The Laurent form u^diff - lambda of a root divided by u^minus.
struct NormalizedRoot {
  ExpVec exponent;
  Rat lambda;
};

NormalizedRoot normalize(const BinomialRoot& q);

/// Value of Q' = Q / u^minus along the curvette.
GroupVec normalized_value(const BinomialRoot& q, const SemiCurvette& d);
/// Initial coefficient of Q' along the curvette.
Rat normalized_initial(const BinomialRoot& q, const SemiCurvette& d);

bool is_relevant(const BinomialRoot& q, const GroupVec& mu_alpha, const Weights& w);
int pair_complexity(const std::vector<BinomialRoot>& roots, const GroupVec& mu_alpha, const Weights& w);

/// Product of powers of variables and roots. Index 1..n names the
/// variables, n+1.. the roots of the system. Negative exponents allowed.
using GenMonomial = std::map<int, long>;

GenMonomial genmon_mul(const GenMonomial& a, const GenMonomial& b);
GenMonomial genmon_pow(const GenMonomial& a, long e);
bool genmon_divides(const GenMonomial& a, const GenMonomial& b);
bool genmon_is_polynomial(const GenMonomial& m);

/// Variables followed by complexity-one roots.
class RootSystem {
 public:
  RootSystem(std::size_t n, std::vector<BinomialRoot> roots);

  [[nodiscard]] std::size_t nvars() const { return n_; }
  [[nodiscard]] const std::vector<BinomialRoot>& roots() const { return roots_; }
  [[nodiscard]] int index_count() const { return static_cast<int>(n_ + roots_.size()); }
  [[nodiscard]] bool is_variable(int idx) const { return idx >= 1 && idx <= static_cast<int>(n_); }
  [[nodiscard]] const BinomialRoot& root(int idx) const;
  [[nodiscard]] Poly element(int idx) const;
  [[nodiscard]] std::string name(int idx) const;
  [[nodiscard]] std::string str(const GenMonomial& m) const;

  /// Exact series of a generator along a curvette.
  [[nodiscard]] GenSeries eval(int idx, const SemiCurvette& d) const;
  /// Polynomial product for a monomial with non-negative exponents.
  [[nodiscard]] Poly expand(const GenMonomial& m) const;

  /// Value, leading coefficient and sign of a (possibly Laurent) monomial.
  /// Throw PreconditionError when a factor vanishes on the curvette.
  [[nodiscard]] GroupVec value(const GenMonomial& m, const SemiCurvette& d) const;
  [[nodiscard]] Rat initial(const GenMonomial& m, const SemiCurvette& d) const;
  [[nodiscard]] int sign(const GenMonomial& m, const SemiCurvette& d) const;
  /// Exact |c1 m1| >= |c2 m2| (strict when requested) after clearing
  /// negative exponents on both sides.
  [[nodiscard]] bool magnitude_ge(const Rat& c1, const GenMonomial& m1, const Rat& c2, const GenMonomial& m2,
                                  const SemiCurvette& d, bool strict) const;

 private:
  void check_index(int idx) const;

  std::size_t n_;
  std::vector<BinomialRoot> roots_;
};

/// Lexicographic on (value, exponent tuple).
Ordering genmon_compare(const GenMonomial& m1, const GenMonomial& m2, const RootSystem& sys, const SemiCurvette& d);

struct TailTerm {
  Rat coeff;
  GenMonomial mono;
};

/// g = coeff * dominant + sum of tail terms, with the dominant monomial of
/// strictly smaller value at both designated points.
class StandardForm {
 public:
  StandardForm(GenMonomial dominant, std::vector<TailTerm> tail, Rat coeff = Rat(1));

  /// Validates dominance at both points; throws PreconditionError otherwise.
  static StandardForm checked(GenMonomial dominant, std::vector<TailTerm> tail, const RootSystem& sys,
                              const SemiCurvette& a, const SemiCurvette& b, Rat coeff = Rat(1));

  [[nodiscard]] const GenMonomial& dominant() const { return dominant_; }
  [[nodiscard]] const Rat& coeff() const { return coeff_; }
  [[nodiscard]] const std::vector<TailTerm>& tail() const { return tail_; }
  [[nodiscard]] bool dominates_at(const RootSystem& sys, const SemiCurvette& d) const;
  /// The ring element represented, when every exponent is non-negative.
  [[nodiscard]] Poly expand(const RootSystem& sys) const;
  [[nodiscard]] std::string str(const RootSystem& sys) const;

 private:
  GenMonomial dominant_;
  Rat coeff_;
  std::vector<TailTerm> tail_;
};

}  // namespace realspec
