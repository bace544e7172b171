#include <random>

#include "doctest.h"
#include "tropigraph/error.hpp"
#include "tropigraph/tropical.hpp"

using namespace tropigraph;

namespace {

TropicalValue frac(long long p, long long q) { return TropicalValue(p, q); }
const TropicalValue kInf = TropicalValue::pos_inf();
const TropicalValue kNegInf = TropicalValue::neg_inf();

struct ValueGen {
  std::mt19937 rng{20240611};

  TropicalValue finite() {
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 12);
    return TropicalValue(num(rng), den(rng));
  }

  // Finite values plus the algebra's own zero element.
  TropicalValue any(Algebra alg) {
    if (std::uniform_int_distribution<int>(0, 5)(rng) == 0) {
      return alg == Algebra::MinPlus ? kInf : kNegInf;
    }
    return finite();
  }

  TropicalVector finite_vector(std::size_t dim) {
    std::vector<TropicalValue> out;
    for (std::size_t i = 0; i < dim; ++i) out.push_back(finite());
    return TropicalVector(out);
  }
};

}  // namespace

TEST_CASE("tropical sum picks min or max with the right identity") {
  CHECK(trop_add(7, 11, Algebra::MinPlus) == TropicalValue(7));
  CHECK(trop_add(7, 11, Algebra::MaxPlus) == TropicalValue(11));
  CHECK(trop_add(frac(2, 3), kInf, Algebra::MinPlus) == frac(2, 3));
  CHECK(trop_add(frac(-5, 2), kNegInf, Algebra::MaxPlus) == frac(-5, 2));
}

TEST_CASE("tropical product is the classical sum") {
  CHECK(trop_mul(frac(9, 4), 0) == frac(9, 4));
  CHECK(trop_mul(frac(-1, 2), frac(-1, 2)) == TropicalValue(-1));
  CHECK(trop_mul(kInf, 5) == kInf);
  CHECK(trop_mul(5, kNegInf) == kNegInf);
  CHECK(trop_mul(kInf, kInf) == kInf);
  CHECK_THROWS_AS(trop_mul(kInf, kNegInf), MixedInfinity);
  CHECK_THROWS_AS(trop_mul(kNegInf, kInf), MixedInfinity);
}

TEST_CASE("tropical division is subtraction on finite values") {
  CHECK(trop_div(frac(4, 3), frac(1, 3)) == TropicalValue(1));
  CHECK_THROWS_AS(trop_div(kInf, 1), BadParameter);
}

TEST_CASE("tropical dot product") {
  CHECK(trop_dot({frac(1, 3), 1}, {kInf, frac(1, 3)}, Algebra::MinPlus) == frac(4, 3));
  CHECK(trop_dot({0, 1}, {0, 1}, Algebra::MinPlus) == TropicalValue(0));
  CHECK(trop_dot({1, 0, 0, 1, 0}, {0, 1, 1, 0, 1}, Algebra::MaxPlus) == TropicalValue(1));
  CHECK_THROWS_AS(trop_dot({1, 2}, {1}, Algebra::MinPlus), DimensionMismatch);
  CHECK_THROWS_AS(trop_dot({kInf}, {kNegInf}, Algebra::MaxPlus), MixedInfinity);
  CHECK_THROWS_AS(TropicalVector(std::vector<TropicalValue>{}), BadParameter);
}

TEST_CASE("ordering puts the infinities at the ends") {
  CHECK(kNegInf < TropicalValue(-1000000));
  CHECK(TropicalValue(1000000) < kInf);
  CHECK(frac(1, 3) < frac(1, 2));
  CHECK(frac(2, 4) == frac(1, 2));
}

TEST_CASE("text form") {
  CHECK(frac(4, 3).to_string() == "4/3");
  CHECK(frac(-2, 4).to_string() == "-1/2");
  CHECK(TropicalValue(3).to_string() == "3/1");
  CHECK(kInf.to_string() == "inf");
  CHECK(kNegInf.to_string() == "-inf");
  CHECK(TropicalValue::parse("6/8") == frac(3, 4));
  CHECK(TropicalValue::parse("-7") == TropicalValue(-7));
  CHECK(TropicalValue::parse("inf") == kInf);
  CHECK(TropicalValue::parse("-inf") == kNegInf);
  CHECK_THROWS_AS(TropicalValue::parse("1/0"), ParseError);
  CHECK_THROWS_AS(TropicalValue::parse("x"), ParseError);
  CHECK_THROWS_AS(TropicalValue::parse(""), ParseError);
  CHECK_THROWS_AS(TropicalValue::parse("1/-2"), ParseError);
}

TEST_CASE("semiring laws on sampled values") {
  ValueGen gen;
  for (Algebra alg : {Algebra::MinPlus, Algebra::MaxPlus}) {
    for (int trial = 0; trial < 400; ++trial) {
      const auto a = gen.any(alg);
      const auto b = gen.any(alg);
      const auto c = gen.any(alg);
      CHECK(trop_add(a, b, alg) == trop_add(b, a, alg));
      CHECK(trop_add(trop_add(a, b, alg), c, alg) == trop_add(a, trop_add(b, c, alg), alg));
      CHECK(trop_add(a, a, alg) == a);
      CHECK(trop_mul(a, b) == trop_mul(b, a));
      CHECK(trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c)));
    }
  }
  for (int trial = 0; trial < 400; ++trial) {
    const auto a = gen.finite();
    const auto b = gen.finite();
    const auto c = gen.finite();
    for (Algebra alg : {Algebra::MinPlus, Algebra::MaxPlus}) {
      CHECK(trop_mul(a, trop_add(b, c, alg)) ==
            trop_add(trop_mul(a, b), trop_mul(a, c), alg));
    }
  }
}

TEST_CASE("dot product symmetry, scaling and min/max duality") {
  ValueGen gen;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 1 + trial % 6;
    const auto u = gen.finite_vector(dim);
    const auto v = gen.finite_vector(dim);
    const auto c = gen.finite();
    for (Algebra alg : {Algebra::MinPlus, Algebra::MaxPlus}) {
      CHECK(trop_dot(u, v, alg) == trop_dot(v, u, alg));
      CHECK(trop_dot(trop_scale(c, u), v, alg) == trop_mul(c, trop_dot(u, v, alg)));
    }
    CHECK(trop_dot(u, v, Algebra::MinPlus) ==
          negate(trop_dot(negate(u), negate(v), Algebra::MaxPlus)));
  }
}
