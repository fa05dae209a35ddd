#include "symrep.hpp"

#include <cmath>
#include <numbers>

namespace bol {

double hermitian_defect(const Mat& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

double fact(long n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(171);
    t[0] = 1.0;
    for (long i = 1; i <= 170; ++i) t[static_cast<size_t>(i)] = t[static_cast<size_t>(i - 1)] * i;
    return t;
  }();
  return table.at(static_cast<size_t>(n));
}

double binom_d(long n, long k) {
  if (k < 0 || k > n) return 0.0;
  return fact(n) / (fact(k) * fact(n - k));
}

// Integer power by repeated multiplication; std::pow(complex, 0) is NaN at 0.
cdx cpow_int(cdx z, long e) {
  cdx r = 1.0;
  for (long t = 0; t < e; ++t) r *= z;
  return r;
}

void require_2x2(const Mat& m, const char* who) {
  if (m.rows() != 2 || m.cols() != 2) fail(Errc::dimension_mismatch, std::string(who) + ": 2x2 matrix required");
}

}  // namespace

Mat sym_power(const Mat& m, long i) {
  require_2x2(m, "sym_power");
  if (i < 0) fail(Errc::invalid_argument, "sym_power: i >= 0 required");
  MultiIndexBasis basis{i};
  Mat out = Mat::Zero(i + 1, i + 1);
  for (long col = 0; col <= i; ++col) {
    auto [n1, n2] = basis.mu(col);
    // Sym^i(M) e_nu = (M e1)^{n1} (M e2)^{n2} / sqrt(n1! n2!)
    for (long row = 0; row <= i; ++row) {
      auto [m1, m2] = basis.mu(row);
      cdx acc = 0;
      for (long s = std::max<long>(0, m1 - n2); s <= std::min(n1, m1); ++s) {
        long t = m1 - s;
        acc += binom_d(n1, s) * binom_d(n2, t) * cpow_int(m(0, 0), s) *
               cpow_int(m(1, 0), n1 - s) * cpow_int(m(0, 1), t) * cpow_int(m(1, 1), n2 - t);
      }
      out(row, col) = acc * std::sqrt(fact(m1) * fact(m2) / (fact(n1) * fact(n2)));
    }
  }
  return out;
}

Mat frak_s(const Mat& m, long i) {
  require_2x2(m, "frak_s");
  if (i < 0) fail(Errc::invalid_argument, "frak_s: i >= 0 required");
  MultiIndexBasis basis{i};
  Mat out = Mat::Zero(i + 1, i + 1);
  for (long r = 0; r <= i; ++r) {
    auto [m1, m2] = basis.mu(r);
    out(r, r) = static_cast<double>(m1) * m(0, 0) + static_cast<double>(m2) * m(1, 1);
    if (r + 1 <= i) out(r, r + 1) = std::sqrt(static_cast<double>(m1 * (m2 + 1))) * m(0, 1);
    if (r >= 1) out(r, r - 1) = std::sqrt(static_cast<double>((m1 + 1) * m2)) * m(1, 0);
  }
  return out;
}

Mat a_ik(const Mat& b, long i, long k) {
  require_2x2(b, "a_ik");
  return frak_s(b, i) + static_cast<double>(k) * b.trace() * Mat::Identity(i + 1, i + 1);
}

Mat tau_ik(const Mat& a, long i, long k) {
  if (a.rows() != i + 1 || a.cols() != i + 1)
    fail(Errc::dimension_mismatch, "tau_ik: matrix of size i+1 required");
  MultiIndexBasis basis{i};
  cdx tr = a.trace();
  cdx s1 = 0, s2 = 0, off12 = 0, off21 = 0;
  for (long r = 0; r <= i; ++r) {
    auto [m1, m2] = basis.mu(r);
    s1 += static_cast<double>(m1) * a(r, r);
    s2 += static_cast<double>(m2) * a(r, r);
    if (m2 >= 1) off12 += std::sqrt(static_cast<double>((m1 + 1) * m2)) * a(r - 1, r);
    if (m1 >= 1) off21 += std::sqrt(static_cast<double>(m1 * (m2 + 1))) * a(r + 1, r);
  }
  Mat out(2, 2);
  double kd = static_cast<double>(k);
  out(0, 0) = kd * tr + s1;
  out(0, 1) = off12;
  out(1, 0) = off21;
  out(1, 1) = kd * tr + s2;
  return out;
}

cdx unit_root(long num, long den) {
  long r = ((num % den) + den) % den;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den));
}

GroupSpec::GroupSpec(long a_, long b_, std::pair<long, long> c1, std::pair<long, long> c2)
    : a(a_), b(b_), char1(c1), char2(c2) {
  if (a < 1 || b < 1) fail(Errc::invalid_argument, "GroupSpec: a, b >= 1 required");
  // Faithfulness: only (0,0) may act as the identity on C^2. zeta_a^{x g1} zeta_b^{y g2} = 1
  // iff x g1 b + y g2 a = 0 mod ab.
  for (long g1 = 0; g1 < a; ++g1) {
    for (long g2 = 0; g2 < b; ++g2) {
      if (g1 == 0 && g2 == 0) continue;
      long e1 = ((char1.first * g1 * b + char1.second * g2 * a) % (a * b) + a * b) % (a * b);
      long e2 = ((char2.first * g1 * b + char2.second * g2 * a) % (a * b) + a * b) % (a * b);
      if (e1 == 0 && e2 == 0)
        fail(Errc::not_faithful, "GroupSpec: representation has nontrivial kernel");
    }
  }
}

std::vector<std::pair<long, long>> GroupSpec::elements() const {
  std::vector<std::pair<long, long>> out;
  out.reserve(static_cast<size_t>(a * b));
  for (long g1 = 0; g1 < a; ++g1)
    for (long g2 = 0; g2 < b; ++g2) out.emplace_back(g1, g2);
  return out;
}

Mat rho(const GroupSpec& g, std::pair<long, long> elem) {
  auto [g1, g2] = elem;
  Mat out = Mat::Zero(2, 2);
  out(0, 0) = unit_root(g.char1.first * g1, g.a) * unit_root(g.char1.second * g2, g.b);
  out(1, 1) = unit_root(g.char2.first * g1, g.a) * unit_root(g.char2.second * g2, g.b);
  return out;
}

Mat rho_ik(const GroupSpec& g, std::pair<long, long> elem, long i, long k) {
  auto [g1, g2] = elem;
  // det(rho(g))^k with the phase reduced exactly before going to doubles.
  cdx detk = unit_root(k * (g.char1.first + g.char2.first) * g1, g.a) *
             unit_root(k * (g.char1.second + g.char2.second) * g2, g.b);
  return sym_power(rho(g, elem), i) * detk;
}

}  // namespace bol
