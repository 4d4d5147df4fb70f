#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "realspec/rat.hpp"

namespace realspec {

/// Integer exponent vector; negative entries denote Laurent monomials.
using ExpVec = std::vector<long>;

ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_sub(const ExpVec& a, const ExpVec& b);
ExpVec exp_scale(long s, const ExpVec& a);
bool exp_divides(const ExpVec& a, const ExpVec& b);  // a | b componentwise
std::string exp_str(const ExpVec& e);

/// Default variable names: x,y,z for n <= 3, u1..un otherwise.
std::vector<std::string> default_names(std::size_t n);

/// Sparse polynomial in n variables over Q.
class Poly {
 public:
  using Terms = std::map<ExpVec, Rat>;

  Poly() = default;
  explicit Poly(std::size_t n) : n_(n) {}

  static Poly constant(std::size_t n, const Rat& c);
  static Poly var(std::size_t n, std::size_t i);
  static Poly monomial(const ExpVec& e, const Rat& c = Rat(1));
  /// Parses expressions like "x*z - y^2" or "y*(x*z-y^2) + 1/5*x*(x^3-y*z)".
  static Poly parse(std::string_view text, const std::vector<std::string>& names);
  static Poly parse(std::string_view text, std::size_t n) { return parse(text, default_names(n)); }

  [[nodiscard]] std::size_t nvars() const { return n_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rat coeff(const ExpVec& e) const;
  [[nodiscard]] long total_degree() const;
  [[nodiscard]] std::string str(const std::vector<std::string>& names) const;
  [[nodiscard]] std::string str() const { return str(default_names(n_)); }

  void add_term(const ExpVec& e, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(const Rat& s, const Poly& p);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

Poly pow(const Poly& p, long e);

/// Partial derivative with respect to variable i.
Poly derivative(const Poly& p, std::size_t i);

}  // namespace realspec
