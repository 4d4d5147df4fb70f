#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "realspec/group_vec.hpp"
#include "realspec/poly.hpp"
#include "realspec/series.hpp"

namespace realspec {

/// Plane curvette (x(t), y(t)). Entries are exact and nonzero; after a
/// blowup the second entry may be a unit.
struct Curvette2 {
  GenSeries x, y;
  SignChar sc;

  Curvette2(GenSeries x_, GenSeries y_, SignChar sc_);
  [[nodiscard]] std::size_t rank() const { return sc.rank(); }
  [[nodiscard]] bool centered() const;
  [[nodiscard]] std::string str() const;
};

enum class Chart { YOverX, XOverY };
std::string to_string(Chart c);

struct Blowup {
  Chart chart;
  Curvette2 curvette;
};

/// Chart y/x when nu(y) >= nu(x), else x/y. The quotient is exact when the
/// division terminates, else correct below twice the largest input exponent.
Blowup blowup(const Curvette2& a);

/// Limit of y/x; nullopt stands for infinity.
using Slope = std::optional<Rat>;
Slope slope(const Curvette2& a);
std::string slope_str(const Slope& s);

/// Same sign of x (finite slope) or of y (infinite slope). Throws
/// PreconditionError when the slopes differ.
bool same_direction(const Curvette2& a, const Curvette2& b);

struct LockstepResult {
  Curvette2 a, b;
  int steps = 0;
};
/// Blows up both curvettes while their slopes and directions agree,
/// recentering the chart coordinate at the common slope.
LockstepResult separate_slopes(const Curvette2& a, const Curvette2& b, int max_steps = 64);

/// g' = y' + sum_{i=1..N} c_i x'^i.
struct CoeffExpansion {
  std::vector<Rat> c;  // c[0] is c_1

  [[nodiscard]] std::size_t truncation() const { return c.size(); }
  [[nodiscard]] Poly poly() const;  // in (x', y')
  [[nodiscard]] std::string str() const;
  friend bool operator==(const CoeffExpansion&, const CoeffExpansion&) = default;
};

/// Coefficients of the series root y'(x') = -sum c_i x'^i of g up to order N.
CoeffExpansion newton_expand(const Poly& g, int n);

/// Lowest power of x' in g(x', -sum c_i x'^i), or nullopt when it vanishes.
std::optional<long> residual_order(const Poly& g, const CoeffExpansion& e);

/// Lexicographic on the coefficient sequences. Throws Undecidable when the
/// common prefix agrees.
Ordering prec_compare(const CoeffExpansion& e1, const CoeffExpansion& e2);

/// Sign of g'(delta) for an expansion.
int expansion_sign(const CoeffExpansion& e, const Curvette2& d);

struct CheckViolation {
  std::size_t sample;
  std::string reason;
};
struct CheckReport {
  std::size_t samples = 0;
  std::size_t relevant = 0;  // samples the inclusion actually constrained
  bool skipped = false;
  std::vector<CheckViolation> violations;
};

/// Random plane curvettes, some built to follow one of the given expansions
/// to a random depth so the comparisons are exercised past the first term.
class Curvette2Sampler {
 public:
  Curvette2Sampler(std::vector<CoeffExpansion> guides, std::uint64_t seed, bool positive_x);
  Curvette2 next();

 private:
  Rat small_rat(bool allow_negative);
  std::vector<CoeffExpansion> guides_;
  std::mt19937_64 rng_;
  bool positive_x_;
};

/// With the order taken as given (first precedes second), checks on sampled
/// curvettes with x' > 0 that first > 0 implies second > 0. Equal
/// expansions are skipped.
CheckReport lemma35_check(const CoeffExpansion& first, const CoeffExpansion& second, std::uint64_t seed,
                          std::size_t samples);

struct Lemma36Report {
  bool holds = false;  // first coefficient of `first` exceeds that of `last`
  std::vector<std::string> violations;
};
/// Hypotheses: `first` positive and `last` negative at both curvettes, which
/// must have different slopes (PreconditionError otherwise). Broken sign
/// hypotheses and a false conclusion are reported as violations.
Lemma36Report lemma36_check(const CoeffExpansion& first, const CoeffExpansion& last, const Curvette2& a,
                            const Curvette2& b);

/// Samples {first > 0, last < 0} and checks x' > 0 on every member.
CheckReport corollary37_check(const CoeffExpansion& first, const CoeffExpansion& last, std::uint64_t seed,
                              std::size_t samples);

}  // namespace realspec
