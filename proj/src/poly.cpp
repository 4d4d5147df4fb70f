#include "realspec/poly.hpp"

#include <cctype>

#include "realspec/errors.hpp"

namespace realspec {

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw RankMismatch("exponent vectors of different length");
  ExpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw RankMismatch("exponent vectors of different length");
  ExpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

ExpVec exp_scale(long s, const ExpVec& a) {
  ExpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

bool exp_divides(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw RankMismatch("exponent vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::string exp_str(const ExpVec& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

std::vector<std::string> default_names(std::size_t n) {
  if (n <= 3) {
    static const std::vector<std::string> xyz = {"x", "y", "z"};
    return {xyz.begin(), xyz.begin() + static_cast<long>(n)};
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("u" + std::to_string(i + 1));
  return out;
}

Poly Poly::constant(std::size_t n, const Rat& c) {
  Poly p(n);
  p.add_term(ExpVec(n, 0), c);
  return p;
}

Poly Poly::var(std::size_t n, std::size_t i) {
  if (i >= n) throw PreconditionError("variable index out of range");
  ExpVec e(n, 0);
  e[i] = 1;
  return monomial(e);
}

Poly Poly::monomial(const ExpVec& e, const Rat& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

Rat Poly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

long Poly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (long x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const ExpVec& e, const Rat& c) {
  if (e.size() != n_) throw RankMismatch("monomial has wrong number of variables");
  for (long x : e) {
    if (x < 0) throw PreconditionError("polynomial exponents must be non-negative");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.n_ != n_) throw RankMismatch("polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.n_ != n_) throw RankMismatch("polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (o.n_ != n_) throw RankMismatch("polynomials in different rings");
  Poly out(n_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) out.add_term(exp_add(e1, e2), c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

Poly operator*(const Rat& s, const Poly& p) {
  Poly out(p.n_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
  return out;
}

Poly Poly::operator-() const { return Rat(-1) * *this; }

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const Rat mag = c.abs();
    std::string piece;
    if (mono.empty()) {
      piece = mag.str();
    } else if (mag == Rat(1)) {
      piece = mono;
    } else {
      piece = mag.str() + "*" + mono;
    }
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + piece;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + piece;
    }
  }
  return out;
}

Poly pow(const Poly& p, long e) {
  if (e < 0) throw PreconditionError("negative power of a polynomial");
  Poly result = Poly::constant(p.nvars(), Rat(1));
  Poly base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly derivative(const Poly& p, std::size_t i) {
  Poly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e.at(i) == 0) continue;
    ExpVec d = e;
    d[i] -= 1;
    out.add_term(d, c * Rat(e[i]));
  }
  return out;
}

// Recursive descent parser.
namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& names) : s_(s), names_(names) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(names_.size());
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (eat('-')) {
        sign = -1;
      } else if (eat('+')) {
      } else if (!first) {
        break;
      }
      Poly t = term();
      if (sign < 0) t = -t;
      acc += t;
      first = false;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    while (true) {
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        Poly d = power();
        if (d.terms().size() != 1 || d.total_degree() != 0) fail("division only by a nonzero constant");
        acc = d.terms().begin()->second.inverse() * acc;
      } else {
        break;
      }
    }
    return acc;
  }

  Poly power() {
    Poly b = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = pow(b, std::stol(std::string(s_.substr(start, pos_ - start))));
    }
    return b;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(names_.size(), Rat::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                   s_[pos_] == '\'')) {
        ++pos_;
      }
      const std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return Poly::var(names_.size(), i);
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }
};

}  // namespace

Poly Poly::parse(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).run();
}

}  // namespace realspec
