#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bol {

using BigInt = mpz_class;
using BigRat = mpq_class;
using cdx = std::complex<double>;

enum class Errc {
  invalid_argument,
  negative_coefficient,
  invalid_partition,
  not_schur_positive,
  dimension_mismatch,
  not_faithful,
  out_of_chart,
  curvature_degenerate,
  quadrature_unconverged,
  not_positive_definite,
  ill_conditioned,
  insufficient_samples,
  config_error,
  numeric_failure,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline double to_double(const BigRat& q) { return q.get_d(); }
inline double to_double(const BigInt& z) { return z.get_d(); }

// Compensated (Neumaier) accumulator; summation order still matters for
// bit-stable output, callers must iterate in a fixed order.
struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct NeumaierC {
  Neumaier re, im;
  void add(cdx x) {
    re.add(x.real());
    im.add(x.imag());
  }
  cdx value() const { return {re.value(), im.value()}; }
};

}  // namespace bol
