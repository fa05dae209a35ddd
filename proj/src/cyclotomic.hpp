#pragma once

#include <memory>
#include <vector>

#include "polynomials.hpp"
#include "support.hpp"

namespace bol {

// d-th cyclotomic polynomial, computed by the recursive quotient
// Phi_d(t) = (t^d - 1) / prod_{e | d, e < d} Phi_e(t).
IntPolynomial cyclotomic_polynomial(long d);

// The field Q(zeta_d) = Q[t]/(Phi_d), elements in the power basis.
class CyclotomicField {
 public:
  explicit CyclotomicField(long d);

  long order() const { return d_; }
  long degree() const { return deg_; }  // phi(d)
  const IntPolynomial& modulus() const { return phi_; }

  // Reduces an arbitrary-length coefficient vector modulo Phi_d in place.
  void reduce(std::vector<BigRat>& v) const;

 private:
  long d_;
  long deg_;
  IntPolynomial phi_;
};

// Exact element of Q(zeta_d); equality with zero is decidable.
class CyclotomicElement {
 public:
  CyclotomicElement() : field_(nullptr) {}
  explicit CyclotomicElement(const CyclotomicField& f)
      : field_(&f), rep_(static_cast<size_t>(f.degree()), BigRat(0)) {}

  static CyclotomicElement from_rational(const CyclotomicField& f, const BigRat& q);
  // zeta^e where zeta = t is the fixed primitive d-th root.
  static CyclotomicElement zeta_power(const CyclotomicField& f, long e);
  // sum_r a_r zeta^r for integer weights indexed by exponent.
  static CyclotomicElement integer_combination(const CyclotomicField& f,
                                               const std::vector<BigInt>& by_exponent);

  const std::vector<BigRat>& rep() const { return rep_; }
  bool is_zero() const;

  CyclotomicElement operator+(const CyclotomicElement& o) const;
  CyclotomicElement operator-(const CyclotomicElement& o) const;
  CyclotomicElement operator*(const CyclotomicElement& o) const;
  bool operator==(const CyclotomicElement& o) const;

 private:
  const CyclotomicField* field_;
  std::vector<BigRat> rep_;
};

}  // namespace bol
