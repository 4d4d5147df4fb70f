#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "realspec/curvette.hpp"
#include "realspec/rat.hpp"
#include "realspec/roots.hpp"

namespace realspec {

/// Barycentric coordinates (u, v, w, t) summing to 1.
struct BaryPoint {
  Rat u, v, w, t;

  [[nodiscard]] std::string str() const;
  friend bool operator==(const BaryPoint&, const BaryPoint&) = default;
};

/// The point (lambda/3, lambda/3, lambda/3, 1 - lambda) of the diagonal segment.
BaryPoint diagonal_point(const Rat& lambda);

enum class Axis { U, V, W };
enum class Sense { GE, LE };

/// sign * (axis - k t) >= 0, with sign +1 for GE and -1 for LE.
struct AxisConstraint {
  Axis axis = Axis::U;
  Rat k;
  Sense sense = Sense::GE;

  [[nodiscard]] Rat eval(const BaryPoint& p) const;
  [[nodiscard]] bool holds(const BaryPoint& p) const { return eval(p).sign() >= 0; }
  [[nodiscard]] std::string str() const;
};

Axis parse_axis(const std::string& s);
Sense parse_sense(const std::string& s);
std::string to_string(Axis a);
std::string to_string(Sense s);

struct TetraSolution {
  Rat lo, hi;
  Rat lambda;  // midpoint
  BaryPoint d;
  // Intersection of the line from the u-vertex through B with the diagonal.
  Rat bprime_lambda;
  BaryPoint bprime;
  bool bprime_feasible = false;
  // Diagonal point with the larger of the two base-point ratios axis/t,
  // always feasible under the hypotheses.
  Rat witness_lambda;
};

/// Exact feasible interval of lambda on the diagonal. Throws
/// PreconditionError when A, B or the constraints break the hypotheses and
/// Violation when the interval is empty.
TetraSolution tetra_solve(const BaryPoint& a, const BaryPoint& b, const std::vector<AxisConstraint>& cs);

/// Grid values j * resolution in [0, 1] at which every constraint holds.
std::vector<Rat> grid_oracle(const BaryPoint& a, const BaryPoint& b, const std::vector<AxisConstraint>& cs,
                             const Rat& resolution);

struct PhiPoint {
  std::array<Rat, 4> a;

  [[nodiscard]] std::string str() const;
  friend bool operator==(const PhiPoint&, const PhiPoint&) = default;
};

/// One of a2 = a3 <= a4, a2 = a4 <= a3, a3 = a4 <= a2.
bool phi_image_check(const PhiPoint& p);

/// (value of u1, normalized values of the three roots), for rank-1 curvettes.
PhiPoint phi_measure(const SemiCurvette& d, const std::vector<BinomialRoot>& roots);

struct PhiWitness {
  SemiCurvette curvette;
  std::vector<BinomialRoot> roots;
};

/// Rank-1 curvette whose measured point is p, for the three roots of the
/// positive weight vector w (rank 1). Verified by re-measurement.
PhiWitness phi_witness(const PhiPoint& p, const Weights& w);

/// Linear form sum c_i x_i + c0 on R^4.
struct LinearForm {
  std::array<Rat, 4> c;
  Rat c0;

  [[nodiscard]] Rat eval(const PhiPoint& p) const;
};

/// The point of segment [e1, e2] on {h = 0}, or nullopt when the segment
/// does not reach the hyperplane. Throws when h vanishes on the whole segment.
std::optional<PhiPoint> segment_hyperplane(const PhiPoint& e1, const PhiPoint& e2, const LinearForm& h);

}  // namespace realspec
