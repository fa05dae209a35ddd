#pragma once

#include <vector>

#include "support.hpp"

namespace bol {

struct QuadratureSpec {
  int radial_nodes = 160;
  int angular_nodes = 0;  // 0 = derived from the maximal angular frequency
};

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// int_C z^a zbar^b (1+|z|^2)^{-m} omega_FS, with omega_FS the unit-volume
// Fubini-Study form. Two-chart rule: unit disk plus the inversion chart,
// where the integrand reappears with exponents (m-a, m-b).
cdx fs_monomial_integral(long a, long b, long m, const QuadratureSpec& spec);

}  // namespace bol
