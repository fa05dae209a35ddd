#include "symrep_exact.hpp"

namespace bol::exact {

MatQ MatQ::identity(long n) {
  MatQ m(n, n);
  for (long r = 0; r < n; ++r) m.at(r, r) = GaussQ(1);
  return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
  if (cols != o.rows) fail(Errc::dimension_mismatch, "MatQ: size mismatch");
  MatQ out(rows, o.cols);
  for (long r = 0; r < rows; ++r)
    for (long k = 0; k < cols; ++k) {
      if (at(r, k).is_zero()) continue;
      for (long c = 0; c < o.cols; ++c) out.at(r, c) = out.at(r, c) + at(r, k) * o.at(k, c);
    }
  return out;
}

GaussQ MatQ::trace() const {
  GaussQ t;
  for (long r = 0; r < rows; ++r) t = t + at(r, r);
  return t;
}

namespace {
BigRat binq(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRat(b);
}
GaussQ qpow(const GaussQ& z, long e) {
  GaussQ r(1);
  for (long t = 0; t < e; ++t) r = r * z;
  return r;
}
}  // namespace

MatQ sym_power_unnormalized(const MatQ& m, long i) {
  if (m.rows != 2 || m.cols != 2) fail(Errc::dimension_mismatch, "sym_power_unnormalized: 2x2 required");
  MatQ out(i + 1, i + 1);
  for (long c = 0; c <= i; ++c) {
    long n1 = i - c, n2 = c;
    for (long r = 0; r <= i; ++r) {
      long m1 = i - r;
      GaussQ acc;
      for (long s = std::max<long>(0, m1 - n2); s <= std::min(n1, m1); ++s) {
        long t = m1 - s;
        acc = acc + GaussQ(binq(n1, s) * binq(n2, t), BigRat(0)) * qpow(m.at(0, 0), s) *
                        qpow(m.at(1, 0), n1 - s) * qpow(m.at(0, 1), t) * qpow(m.at(1, 1), n2 - t);
      }
      out.at(r, c) = acc;
    }
  }
  return out;
}

MatQ frak_s_unnormalized(const MatQ& m, long i) {
  if (m.rows != 2 || m.cols != 2) fail(Errc::dimension_mismatch, "frak_s_unnormalized: 2x2 required");
  MatQ out(i + 1, i + 1);
  for (long c = 0; c <= i; ++c) {
    long n1 = i - c, n2 = c;
    out.at(c, c) = GaussQ(BigRat(n1), BigRat(0)) * m.at(0, 0) +
                   GaussQ(BigRat(n2), BigRat(0)) * m.at(1, 1);
    if (c + 1 <= i) out.at(c + 1, c) = GaussQ(BigRat(n1), BigRat(0)) * m.at(1, 0);
    if (c >= 1) out.at(c - 1, c) = GaussQ(BigRat(n2), BigRat(0)) * m.at(0, 1);
  }
  return out;
}

}  // namespace bol::exact
