#include "realspec/rat.hpp"

#include <cctype>

#include "realspec/errors.hpp"

namespace realspec {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpq_class q;
  q.get_num() = parse_integer(num_text);
  if (slash == std::string_view::npos) {
    q.get_den() = 1;
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text[0] == '-') {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    q.get_den() = parse_integer(den_text);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  return Rat(std::move(q));
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(q_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  return Rat(mpq_class(1 / q_));
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
  q_ += o.q_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  q_ -= o.q_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  q_ *= o.q_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-q_)); }

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(mpq_class(num, den));
}

}  // namespace realspec
