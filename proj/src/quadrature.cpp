#include "quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace bol {

namespace {

void gauss_legendre_compute(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<size_t>(i)] = -x;
    nodes[static_cast<size_t>(n - 1 - i)] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[static_cast<size_t>(i)] = w;
    weights[static_cast<size_t>(n - 1 - i)] = w;
  }
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::pair<std::vector<double>, std::vector<double>> entry;
    gauss_legendre_compute(n, entry.first, entry.second);
    it = cache.emplace(n, std::move(entry)).first;
  }
  nodes = it->second.first;
  weights = it->second.second;
}

namespace {

// int over the unit disk of z^a zbar^b (1+|z|^2)^{-m-2} / pi dA, factorized in
// polar coordinates: radial Gauss-Legendre times a uniform angular rule.
// Both 1-d sums are memoized; Gram assembly reuses them heavily.
double radial_part(long q, long m, int radial) {
  static std::map<std::tuple<long, long, int>, double> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({q, m, radial});
    if (it != cache.end()) return it->second;
  }
  std::vector<double> x, w;
  gauss_legendre(radial, x, w);
  Neumaier rad;
  for (int n = 0; n < radial; ++n) {
    double r = 0.5 * (x[static_cast<size_t>(n)] + 1.0);
    double val = std::pow(r, static_cast<double>(q + 1)) *
                 std::pow(1.0 + r * r, static_cast<double>(-(m + 2)));
    rad.add(0.5 * w[static_cast<size_t>(n)] * val);
  }
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(std::make_tuple(q, m, radial), rad.value()).first->second;
}

cdx angular_part(long delta, int angular) {
  static std::map<std::pair<long, int>, cdx> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({delta, angular});
    if (it != cache.end()) return it->second;
  }
  NeumaierC ang;
  for (int j = 0; j < angular; ++j) {
    double th = 2.0 * std::numbers::pi * j / angular;
    ang.add(std::polar(2.0 * std::numbers::pi / angular, delta * th));
  }
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(std::make_pair(delta, angular), ang.value()).first->second;
}

cdx unit_disk_part(long a, long b, long m, int radial, int angular) {
  return radial_part(a + b, m, radial) * angular_part(a - b, angular) / std::numbers::pi;
}

}  // namespace

cdx fs_monomial_integral(long a, long b, long m, const QuadratureSpec& spec) {
  if (a < 0 || b < 0 || a > m || b > m)
    fail(Errc::invalid_argument, "fs_monomial_integral: need 0 <= a, b <= m");
  int angular = spec.angular_nodes;
  if (angular <= 0) angular = std::max<long>(32, 2 * std::abs(a - b) + 8);
  return unit_disk_part(a, b, m, spec.radial_nodes, angular) +
         unit_disk_part(m - a, m - b, m, spec.radial_nodes, angular);
}

}  // namespace bol
