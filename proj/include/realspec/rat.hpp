#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace realspec {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rat {
 public:
  Rat() = default;

  template <std::integral I>
  Rat(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rat(long num, long den);
  explicit Rat(mpq_class q);

  /// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or a
  /// zero denominator.
  static Rat parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] Rat abs() const;
  [[nodiscard]] Rat inverse() const;
  [[nodiscard]] double to_double() const { return q_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

Rat pow(const Rat& base, long exponent);

// Least common multiple of the denominators of a collection of rationals.
template <typename Range>
mpz_class common_denominator(const Range& values) {
  mpz_class d = 1;
  for (const Rat& v : values) {
    mpz_class den = v.denominator();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
  }
  return d;
}

}  // namespace realspec
