#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tropigraph/rational.hpp"

namespace tropigraph {

enum class Algebra { MinPlus, MaxPlus };

std::string_view algebra_name(Algebra alg);  // "min-plus" | "max-plus"
Algebra parse_algebra(std::string_view text);  // also accepts "min" | "max"

// An element of R extended by +inf (min-plus zero) and -inf (max-plus zero).
// Which infinity is legal depends on the algebra; that is checked by
// Representation, not here.
class TropicalValue {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  TropicalValue() = default;
  TropicalValue(Rational value) : value_(std::move(value)) {}  // NOLINT
  TropicalValue(long long value) : value_(value) {}             // NOLINT
  TropicalValue(long long num, long long den);

  static TropicalValue pos_inf() { return TropicalValue(Kind::PosInf); }
  static TropicalValue neg_inf() { return TropicalValue(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  // Precondition: is_finite().
  const Rational& value() const;

  // Total order: -inf < every finite value < +inf.
  friend bool operator==(const TropicalValue& a, const TropicalValue& b);
  friend std::strong_ordering operator<=>(const TropicalValue& a,
                                          const TropicalValue& b);

  // "inf", "-inf" or "p/q".
  std::string to_string() const;
  static TropicalValue parse(std::string_view text);

 private:
  explicit TropicalValue(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rational value_{0};
};

// Tropical sum: min for MinPlus, max for MaxPlus.
TropicalValue trop_add(const TropicalValue& a, const TropicalValue& b,
                       Algebra alg);

// Tropical product (classical sum). Infinities absorb finite values; the
// product of +inf and -inf throws MixedInfinity.
TropicalValue trop_mul(const TropicalValue& a, const TropicalValue& b);

// Tropical quotient (classical difference), finite operands only.
TropicalValue trop_div(const TropicalValue& a, const TropicalValue& b);

// Classical negation; swaps the two infinities.
TropicalValue negate(const TropicalValue& a);

class TropicalVector {
 public:
  // Throws BadParameter when entries is empty.
  explicit TropicalVector(std::vector<TropicalValue> entries);
  TropicalVector(std::initializer_list<TropicalValue> entries);

  std::size_t dim() const { return entries_.size(); }
  const TropicalValue& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<TropicalValue>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const TropicalVector&, const TropicalVector&) = default;

  // Vector of `dim` copies of `value`.
  static TropicalVector filled(std::size_t dim, const TropicalValue& value);

 private:
  std::vector<TropicalValue> entries_;
};

// Tropical sum over i of u_i (x) v_i. Throws DimensionMismatch or
// MixedInfinity.
TropicalValue trop_dot(const TropicalVector& u, const TropicalVector& v,
                       Algebra alg);

// c (x) u: adds c to every entry.
TropicalVector trop_scale(const TropicalValue& c, const TropicalVector& u);

// Entrywise classical negation.
TropicalVector negate(const TropicalVector& u);

// u with `extra` appended as a last coordinate.
TropicalVector append(const TropicalVector& u, const TropicalValue& extra);

}  // namespace tropigraph
