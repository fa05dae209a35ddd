#pragma once

#include <vector>

#include "support.hpp"

namespace bol::exact {

// Gaussian rational x + iy, x, y in Q. Reference scalar for the exact mode;
// covers rational matrices and roots of unity of order 1, 2, 4.
struct GaussQ {
  BigRat re{0}, im{0};

  GaussQ() = default;
  GaussQ(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussQ(long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
  GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
  GaussQ operator*(const GaussQ& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
};

struct MatQ {
  long rows = 0, cols = 0;
  std::vector<GaussQ> data;

  MatQ() = default;
  MatQ(long r, long c) : rows(r), cols(c), data(static_cast<size_t>(r * c)) {}
  GaussQ& at(long r, long c) { return data[static_cast<size_t>(r * cols + c)]; }
  const GaussQ& at(long r, long c) const { return data[static_cast<size_t>(r * cols + c)]; }
  static MatQ identity(long n);
  MatQ operator*(const MatQ& o) const;
  bool operator==(const MatQ& o) const { return rows == o.rows && cols == o.cols && data == o.data; }
  GaussQ trace() const;
};

// Sym^i in the unnormalized monomial basis f_mu = e1^mu1 e2^mu2 (columns
// indexed mu1 descending); entries are polynomial in the matrix entries, so
// everything stays in Q(i). Exactly multiplicative.
MatQ sym_power_unnormalized(const MatQ& m, long i);

// d Sym^i |_Id in the same basis; same diagonal (and trace) as the
// normalized-basis version.
MatQ frak_s_unnormalized(const MatQ& m, long i);

}  // namespace bol::exact
