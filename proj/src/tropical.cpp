#include "tropigraph/tropical.hpp"

#include "tropigraph/error.hpp"

namespace tropigraph {

std::string_view algebra_name(Algebra alg) {
  return alg == Algebra::MinPlus ? "min-plus" : "max-plus";
}

Algebra parse_algebra(std::string_view text) {
  if (text == "min-plus" || text == "min") return Algebra::MinPlus;
  if (text == "max-plus" || text == "max") return Algebra::MaxPlus;
  throw ParseError("unknown algebra '" + std::string(text) + "'");
}

TropicalValue::TropicalValue(long long num, long long den) {
  if (den == 0) throw BadParameter("zero denominator");
  value_ = Rational(num, den);
}

const Rational& TropicalValue::value() const {
  if (!is_finite()) throw BadParameter("value() of an infinite entry");
  return value_;
}

bool operator==(const TropicalValue& a, const TropicalValue& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const TropicalValue& a,
                                 const TropicalValue& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  if (!a.is_finite() || a.value_ == b.value_) return std::strong_ordering::equal;
  return a.value_ < b.value_ ? std::strong_ordering::less
                             : std::strong_ordering::greater;
}

std::string TropicalValue::to_string() const {
  switch (kind_) {
    case Kind::PosInf:
      return "inf";
    case Kind::NegInf:
      return "-inf";
    case Kind::Finite:
      break;
  }
  return format_rational(value_);
}

TropicalValue TropicalValue::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return TropicalValue(parse_rational(text));
}

TropicalValue trop_add(const TropicalValue& a, const TropicalValue& b,
                       Algebra alg) {
  if (alg == Algebra::MinPlus) return b < a ? b : a;
  return a < b ? b : a;
}

TropicalValue trop_mul(const TropicalValue& a, const TropicalValue& b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw MixedInfinity("product of +inf and -inf is undefined");
  }
  if (!a.is_finite()) return a;
  if (!b.is_finite()) return b;
  return TropicalValue(a.value() + b.value());
}

TropicalValue trop_div(const TropicalValue& a, const TropicalValue& b) {
  if (!a.is_finite() || !b.is_finite()) {
    throw BadParameter("tropical division is defined on finite values only");
  }
  return TropicalValue(a.value() - b.value());
}

TropicalValue negate(const TropicalValue& a) {
  if (a.is_pos_inf()) return TropicalValue::neg_inf();
  if (a.is_neg_inf()) return TropicalValue::pos_inf();
  return TropicalValue(Rational(-a.value()));
}

TropicalVector::TropicalVector(std::vector<TropicalValue> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw BadParameter("tropical vector must have dim >= 1");
}

TropicalVector::TropicalVector(std::initializer_list<TropicalValue> entries)
    : TropicalVector(std::vector<TropicalValue>(entries)) {}

TropicalVector TropicalVector::filled(std::size_t dim,
                                      const TropicalValue& value) {
  return TropicalVector(std::vector<TropicalValue>(dim, value));
}

TropicalValue trop_dot(const TropicalVector& u, const TropicalVector& v,
                       Algebra alg) {
  if (u.dim() != v.dim()) {
    throw DimensionMismatch("dot product of vectors of dimension " +
                            std::to_string(u.dim()) + " and " +
                            std::to_string(v.dim()));
  }
  TropicalValue acc = trop_mul(u[0], v[0]);
  for (std::size_t i = 1; i < u.dim(); ++i) {
    acc = trop_add(acc, trop_mul(u[i], v[i]), alg);
  }
  return acc;
}

TropicalVector trop_scale(const TropicalValue& c, const TropicalVector& u) {
  std::vector<TropicalValue> out;
  out.reserve(u.dim());
  for (const auto& x : u) out.push_back(trop_mul(c, x));
  return TropicalVector(std::move(out));
}

TropicalVector negate(const TropicalVector& u) {
  std::vector<TropicalValue> out;
  out.reserve(u.dim());
  for (const auto& x : u) out.push_back(negate(x));
  return TropicalVector(std::move(out));
}

TropicalVector append(const TropicalVector& u, const TropicalValue& extra) {
  std::vector<TropicalValue> out = u.entries();
  out.push_back(extra);
  return TropicalVector(std::move(out));
}

}  // namespace tropigraph
