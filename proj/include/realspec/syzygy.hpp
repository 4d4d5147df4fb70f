#pragma once

#include <array>
#include <string>

#include "realspec/curvette.hpp"
#include "realspec/roots.hpp"

namespace realspec {

/// Primitive integer relation mu_i v_i + mu_j v_j + mu_k v_k = 0 with the
/// first nonzero entry positive. Vectors equal up to sign count as a
/// duplicate; any other collinear pair, or a non-coplanar triple, throws.
std::array<long, 3> find_mu(const ExpVec& vi, const ExpVec& vj, const ExpVec& vk);

struct SyzygyCertificate {
  std::array<long, 3> mu{};
  std::array<Poly, 3> omegas;
  std::array<BinomialRoot, 3> roots;
  /// Roots whose binomial was reversed to make its multiplier positive.
  std::array<bool, 3> flipped{};
  /// Product of (u^plus u^minus)^|mu| over the reversed roots: the monomial
  /// that clears the negative powers in the quotient identity.
  ExpVec clearing_monomial;
  /// Common monomial factor divided out of the three cofactors.
  ExpVec removed_factor;
  /// Largest telescoping length |mu|.
  long depth = 0;
  /// Some cofactor is zero (duplicate roots).
  bool degenerate = false;
  std::string input_hash;
};

SyzygyCertificate build_syzygy(const BinomialRoot& qi, const BinomialRoot& qj, const BinomialRoot& qk,
                               const Weights& w);

/// Sum of omega * Q.
Poly syzygy_expansion(const SyzygyCertificate& c);

/// Substitutes u_q -> t^(w_q).
GenSeries sigma_image(const Poly& p, const Weights& w);

struct CertificateCheck {
  bool zero_expansion = false;
  bool quasi_homogeneous = false;
  bool sigma_nonzero = false;
  [[nodiscard]] bool ok() const { return zero_expansion && quasi_homogeneous && sigma_nonzero; }
};

CertificateCheck check_certificate(const SyzygyCertificate& c, const Weights& w);
bool verify_certificate(const SyzygyCertificate& c, const Weights& w);

/// All terms share one weighted degree. The zero polynomial is not.
bool is_quasi_homogeneous(const Poly& p, const Weights& w);

}  // namespace realspec
