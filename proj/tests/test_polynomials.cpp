#include <doctest.h>

#include "polynomials.hpp"
#include "weights.hpp"

using namespace bol;

namespace {
IntPolynomial poly(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return IntPolynomial(std::move(v));
}

// Independent convolution oracle for (1 + ... + t^d)^p.
std::vector<BigInt> convolve_power(long d, long p) {
  std::vector<BigInt> r{1};
  for (long rep = 0; rep < p; ++rep) {
    std::vector<BigInt> out(r.size() + static_cast<size_t>(d), BigInt(0));
    for (size_t i = 0; i < r.size(); ++i)
      for (long j = 0; j <= d; ++j) out[i + static_cast<size_t>(j)] += r[i];
    r = std::move(out);
  }
  return r;
}
}  // namespace

TEST_CASE("expand_power base case and convolution oracle") {
  CHECK(expand_power(1, 1).coeffs() == std::vector<BigInt>{1, 1});
  CHECK(expand_power(2, 2).coeffs() == std::vector<BigInt>{1, 2, 3, 2, 1});
  for (long d = 1; d <= 4; ++d)
    for (long p = 1; p <= 4; ++p) CHECK(expand_power(d, p).coeffs() == convolve_power(d, p));
}

TEST_CASE("expand_power is palindromic with positive coefficients") {
  for (long d = 1; d <= 5; ++d) {
    for (long p = 1; p <= 5; ++p) {
      auto f = expand_power(d, p);
      REQUIRE(f.degree() == d * p);
      for (long i = 0; i <= f.degree(); ++i) {
        CHECK(f.coeff(i) > 0);
        CHECK(f.coeff(i) == f.coeff(d * p - i));
      }
    }
  }
}

TEST_CASE("polynomial ring basics") {
  auto f = poly({1, 1});
  auto g = f * f;
  CHECK(g.coeffs() == std::vector<BigInt>{1, 2, 1});
  CHECK((g - f * f).is_zero());
  CHECK(g.eval(2) == 9);
  auto q = g.divide_exact(f);
  CHECK(q == f);
  CHECK_THROWS_AS((void)poly({1, 1, 1}).divide_exact(poly({1, 1})), Error);
}

TEST_CASE("is_log_concave_no_internal_zeros") {
  CHECK(is_log_concave_no_internal_zeros(poly({1, 1, 1})));
  CHECK_FALSE(is_log_concave_no_internal_zeros(poly({1, 0, 1})));
  CHECK_FALSE(is_log_concave_no_internal_zeros(poly({1, 3, 2, 4})));
  CHECK_THROWS_AS((void)is_log_concave_no_internal_zeros(poly({1, -1})), Error);
}

TEST_CASE("schur_polynomial shapes") {
  auto s10 = schur_polynomial(1, 0);
  CHECK(s10.coeff(1, 0) == 1);
  CHECK(s10.coeff(0, 1) == 1);
  CHECK(s10.terms().size() == 2);

  auto s21 = schur_polynomial(2, 1);
  CHECK(s21.coeff(2, 1) == 1);
  CHECK(s21.coeff(1, 2) == 1);
  CHECK(s21.terms().size() == 2);

  auto s33 = schur_polynomial(3, 3);
  CHECK(s33.terms().size() == 1);
  CHECK(s33.coeff(3, 3) == 1);

  CHECK_THROWS_AS((void)schur_polynomial(1, 2), Error);
}

TEST_CASE("tri polynomial substitution T3 -> zw") {
  TriPolynomial q;
  q.add_term(0, 0, 0, 1);
  q.add_term(1, 0, 0, 1);
  q.add_term(0, 1, 0, 1);
  q.add_term(0, 0, 1, 1);
  auto sub = q.substitute_zw();
  // 1 + z + w + zw = (1+z)(1+w)
  auto expect = BiPolynomial::separable_product(poly({1, 1}), poly({1, 1}));
  CHECK(sub == expect);
}

TEST_CASE("alternating-binomial closed form at (d, p) = (2, 2)") {
  // a_2 of (1+t+t^2)^2 via sum_l (-1)^l C(p,l) C(k+p-(d+1)l-1, p-1)
  long d = 2, p = 2, k = 2;
  BigInt closed = 0;
  for (long l = 0; l <= k / (d + 1); ++l) {
    BigInt term = binomial(p, l) * binomial(k + p - (d + 1) * l - 1, p - 1);
    closed += (l % 2 == 0) ? term : -term;
  }
  CHECK(closed == 3);
  CHECK(expand_power(2, 2).coeff(2) == 3);
}
