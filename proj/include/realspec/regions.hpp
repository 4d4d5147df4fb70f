#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "realspec/curvette.hpp"
#include "realspec/roots.hpp"
#include "realspec/syzygy.hpp"

namespace realspec {

/// |lc * lunit * lm| >= |rc * runit * rm| (or > when strict). Units are
/// polynomials with nonzero constant term; absent means 1.
struct MagnitudeGE {
  Rat lc{1};
  GenMonomial lm;
  std::optional<Poly> lunit;
  Rat rc{1};
  GenMonomial rm;
  std::optional<Poly> runit;
  bool strict = false;
};

/// The sign of a generalized monomial is fixed.
struct SignIs {
  GenMonomial target;
  int sign = 1;
};

/// nu(left) < nu(right).
struct ValueLT {
  GenMonomial left;
  GenMonomial right;
};

struct Constraint {
  std::variant<MagnitudeGE, SignIs, ValueLT> kind;
  std::string provenance;
};

struct Region {
  std::vector<Constraint> constraints;
  std::string provenance;
};

nlohmann::json to_json(const Region& r, const RootSystem& sys);
std::string describe(const Constraint& c, const RootSystem& sys);

/// Value dominance for every tail term, signs of the generators in each
/// dominant monomial copied from `a`, and centering.
Region build_C(const std::vector<StandardForm>& forms, const RootSystem& sys, const SemiCurvette& a);

/// Strict magnitude form |coeff * dominant| > N_i |c_ji * tail_ji| plus the
/// same signs and centering.
Region build_Cprime(const std::vector<StandardForm>& forms, const RootSystem& sys, const SemiCurvette& a);

struct DRoles {
  int eliminated = 0;  // index of the root written through the others
  int larger = 0;      // root whose term dominates in the elimination
  int smaller = 0;
  Rat epsilon;
  Rat ratio_alpha;     // |smaller term| / |larger term| leading ratios, or 0
  Rat ratio_beta;      // when the smaller term is infinitesimally smaller
  bool tie_flagged = false;
};

struct DRegion {
  Region region;
  DRoles roles;
};

/// Eliminates one root via the syzygy (whose cofactors must be monomials),
/// then emits the strengthened dominance, elimination and sign constraints.
/// `epsilon` absent selects it automatically.
DRegion build_D(const std::vector<StandardForm>& forms, const RootSystem& sys, const SyzygyCertificate& syz,
                const SemiCurvette& a, const SemiCurvette& b, std::optional<Rat> epsilon = std::nullopt);

/// Replaces each unit factor by its constant term with the halving/doubling
/// safety margin on the side that makes the constraint stronger.
Region strengthen_monomial(const Region& region);

bool member(const Region& region, const RootSystem& sys, const SemiCurvette& d);
bool satisfies(const Constraint& c, const RootSystem& sys, const SemiCurvette& d);

/// Coefficient jitter around a base curvette: exponents are kept, each
/// coefficient is rescaled by a random rational in [1/2, 2] with some
/// probability and occasionally negated.
class CurvetteSampler {
 public:
  CurvetteSampler(SemiCurvette base, std::uint64_t seed) : base_(std::move(base)), rng_(seed) {}
  SemiCurvette next();

 private:
  Rat jitter_factor();
  SemiCurvette base_;
  std::mt19937_64 rng_;
};

struct SignViolation {
  std::size_t sample = 0;
  std::size_t form = 0;
  std::string reason;
};

struct SampleReport {
  std::size_t samples = 0;
  std::size_t members = 0;
  std::vector<SignViolation> violations;
};

SampleReport sign_constancy_sample(const Region& region, const std::vector<StandardForm>& forms,
                                   const RootSystem& sys, const SemiCurvette& a, std::uint64_t seed,
                                   std::size_t count);

}  // namespace realspec
