#include <doctest.h>

#include "cyclotomic.hpp"

using namespace bol;

namespace {
IntPolynomial poly(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}
}  // namespace

TEST_CASE("cyclotomic polynomials for small d") {
  CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
  CHECK(cyclotomic_polynomial(3) == poly({1, 1, 1}));
  CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
}

TEST_CASE("zeta powers satisfy the defining relations") {
  for (long d : {2L, 3L, 4L, 5L, 6L, 8L}) {
    CyclotomicField f(d);
    auto one = CyclotomicElement::from_rational(f, BigRat(1));
    CHECK(CyclotomicElement::zeta_power(f, d) == one);
    // 1 + zeta + ... + zeta^{d-1} = 0 for d > 1
    CyclotomicElement sum(f);
    for (long e = 0; e < d; ++e) sum = sum + CyclotomicElement::zeta_power(f, e);
    CHECK(sum.is_zero());
    // zeta^a zeta^b = zeta^{a+b}
    auto prod = CyclotomicElement::zeta_power(f, 3) * CyclotomicElement::zeta_power(f, d - 1);
    CHECK(prod == CyclotomicElement::zeta_power(f, 3 + d - 1));
  }
}

TEST_CASE("zero test is exact") {
  CyclotomicField f(4);
  auto z = CyclotomicElement::zeta_power(f, 1);  // i
  auto expr = z * z + CyclotomicElement::from_rational(f, BigRat(1));  // i^2 + 1
  CHECK(expr.is_zero());
  auto not_zero = z + CyclotomicElement::from_rational(f, BigRat(1));
  CHECK_FALSE(not_zero.is_zero());
}

TEST_CASE("integer combinations reduce correctly") {
  CyclotomicField f(3);
  // zeta^0 + zeta^1 + zeta^2 = 0
  CHECK(CyclotomicElement::integer_combination(f, {1, 1, 1}).is_zero());
  CHECK_FALSE(CyclotomicElement::integer_combination(f, {2, 1, 1}).is_zero());
}
