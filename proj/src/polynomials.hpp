#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "support.hpp"

namespace bol {

// Univariate polynomial with arbitrary-precision integer coefficients,
// coeffs[i] = coefficient of t^i. Highest stored coefficient is nonzero
// unless the polynomial is zero (empty coeffs).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({BigInt(1)}); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }  // -1 for zero
  BigInt coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(i)];
  }

  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  // Exact division, requires o to divide *this with integer quotient (monic o).
  IntPolynomial divide_exact(const IntPolynomial& o) const;

  BigInt eval(const BigInt& x) const;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

// Sparse polynomial in two variables z, w over the integers.
class BiPolynomial {
 public:
  using Key = std::pair<long, long>;

  void add_term(long ez, long ew, const BigInt& c);
  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(long ez, long ew) const;
  bool operator==(const BiPolynomial& o) const { return terms_ == o.terms_; }
  BiPolynomial operator-(const BiPolynomial& o) const;

  // f(z) * g(w) as a two-variable polynomial.
  static BiPolynomial separable_product(const IntPolynomial& f, const IntPolynomial& g);

 private:
  std::map<Key, BigInt> terms_;
};

// Sparse polynomial in T1, T2, T3 over the integers.
class TriPolynomial {
 public:
  using Key = std::tuple<long, long, long>;

  void add_term(long e1, long e2, long e3, const BigInt& c);
  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long total_degree() const;

  // Substitution (T1,T2,T3) -> (z, w, z*w), giving a two-variable polynomial.
  BiPolynomial substitute_zw() const;

 private:
  std::map<Key, BigInt> terms_;
};

}  // namespace bol
