#include "realspec/group_vec.hpp"

#include "realspec/errors.hpp"

namespace realspec {

namespace {

void require_same_rank(const GroupVec& a, const GroupVec& b) {
  if (a.rank() != b.rank()) {
    throw RankMismatch("group ranks differ: " + std::to_string(a.rank()) + " vs " +
                       std::to_string(b.rank()));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
  return s;
}

}  // namespace

GroupVec GroupVec::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty group vector");
  std::vector<Rat> coords;
  while (true) {
    const auto comma = text.find(',');
    auto piece = text.substr(0, comma);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    coords.push_back(Rat::parse(piece));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return GroupVec(std::move(coords));
}

GroupVec GroupVec::unit(std::size_t rank, std::size_t j) {
  GroupVec g(rank);
  g.c_.at(j) = Rat(1);
  return g;
}

bool GroupVec::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string GroupVec::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += c_[i].str();
  }
  return out + ")";
}

GroupVec& GroupVec::operator+=(const GroupVec& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

GroupVec& GroupVec::operator-=(const GroupVec& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

GroupVec GroupVec::operator-() const {
  GroupVec out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

GroupVec operator*(const Rat& s, const GroupVec& g) {
  GroupVec out = g;
  for (auto& x : out.c_) x *= s;
  return out;
}

bool operator==(const GroupVec& a, const GroupVec& b) {
  require_same_rank(a, b);
  return a.c_ == b.c_;
}

std::strong_ordering operator<=>(const GroupVec& a, const GroupVec& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::LT: return "LT";
    case Ordering::EQ: return "EQ";
    case Ordering::GT: return "GT";
  }
  return "?";
}

Ordering lex_compare(const GroupVec& a, const GroupVec& b) {
  const auto c = a <=> b;
  if (c < 0) return Ordering::LT;
  if (c > 0) return Ordering::GT;
  return Ordering::EQ;
}

int isolated_level(const GroupVec& g) {
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (!g[i].is_zero()) return static_cast<int>(i) + 1;
  }
  throw PreconditionError("isolated level of the zero vector is undefined");
}

const GroupVec& Val::get() const {
  if (inf_) throw PreconditionError("value is infinite");
  return g_;
}

Val operator+(const Val& a, const Val& b) {
  if (a.inf_ || b.inf_) return Val::infinity();
  return Val(a.g_ + b.g_);
}

bool operator==(const Val& a, const Val& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.g_ == b.g_;
}

std::strong_ordering operator<=>(const Val& a, const Val& b) {
  if (a.inf_ && b.inf_) return std::strong_ordering::equal;
  if (a.inf_) return std::strong_ordering::greater;
  if (b.inf_) return std::strong_ordering::less;
  return a.g_ <=> b.g_;
}

}  // namespace realspec
