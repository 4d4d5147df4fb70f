#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "realspec/rat.hpp"

namespace realspec {

/// Element of the lexicographically ordered group Q^k.
class GroupVec {
 public:
  GroupVec() = default;
  explicit GroupVec(std::size_t rank) : c_(rank, Rat(0)) {}
  explicit GroupVec(std::vector<Rat> coords) : c_(std::move(coords)) {}
  GroupVec(std::initializer_list<Rat> coords) : c_(coords) {}

  /// Parses a comma separated list such as "1,8" or "(1/2,-3)".
  static GroupVec parse(std::string_view text);
  static GroupVec zero(std::size_t rank) { return GroupVec(rank); }
  /// Unit vector e_j (0-based index).
  static GroupVec unit(std::size_t rank, std::size_t j);

  [[nodiscard]] std::size_t rank() const { return c_.size(); }
  [[nodiscard]] const Rat& operator[](std::size_t i) const { return c_[i]; }
  [[nodiscard]] const std::vector<Rat>& coords() const { return c_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string str() const;

  GroupVec& operator+=(const GroupVec& o);
  GroupVec& operator-=(const GroupVec& o);
  friend GroupVec operator+(GroupVec a, const GroupVec& b) { return a += b; }
  friend GroupVec operator-(GroupVec a, const GroupVec& b) { return a -= b; }
  GroupVec operator-() const;
  friend GroupVec operator*(const Rat& s, const GroupVec& g);

  friend bool operator==(const GroupVec& a, const GroupVec& b);
  friend std::strong_ordering operator<=>(const GroupVec& a, const GroupVec& b);

 private:
  std::vector<Rat> c_;
};

enum class Ordering { LT, EQ, GT };

std::string to_string(Ordering o);
Ordering lex_compare(const GroupVec& a, const GroupVec& b);

/// 1-based index of the first nonzero coordinate. The greatest isolated
/// subgroup not containing g consists of the vectors whose level is larger.
int isolated_level(const GroupVec& g);

/// A group value or infinity (the value of zero).
class Val {
 public:
  Val() : inf_(true) {}
  Val(GroupVec g) : inf_(false), g_(std::move(g)) {}  // NOLINT(google-explicit-constructor)
  static Val infinity() { return Val(); }

  [[nodiscard]] bool is_inf() const { return inf_; }
  /// Throws PreconditionError on infinity.
  [[nodiscard]] const GroupVec& get() const;
  [[nodiscard]] std::string str() const { return inf_ ? "inf" : g_.str(); }

  friend Val operator+(const Val& a, const Val& b);
  friend bool operator==(const Val& a, const Val& b);
  friend std::strong_ordering operator<=>(const Val& a, const Val& b);

 private:
  bool inf_;
  GroupVec g_;
};

}  // namespace realspec
