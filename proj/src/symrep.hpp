#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "support.hpp"

namespace bol {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// max |A - A^*| over entries.
double hermitian_defect(const Mat& a);

// Basis of Sym^i C^2: e_mu = e1^mu1 e2^mu2 / sqrt(mu1! mu2!), index r <-> mu = (i-r, r),
// i.e. mu1 descending.
struct MultiIndexBasis {
  long i = 0;
  long size() const { return i + 1; }
  std::pair<long, long> mu(long r) const { return {i - r, r}; }
};

// Matrix of Sym^i(M) on Sym^i C^2 in the normalized monomial basis;
// multiplicative in M and Hermitian-preserving.
Mat sym_power(const Mat& m, long i);

// Lie-algebra map s^i = d Sym^i |_Id: tridiagonal,
// diag (mu1 M11 + mu2 M22), super sqrt(mu1(mu2+1)) M12, sub sqrt((mu1+1)mu2) M21.
Mat frak_s(const Mat& m, long i);

// Derivative of Sym^i tensor det^k at the identity: frak_s(B, i) + k tr(B) Id.
Mat a_ik(const Mat& b, long i, long k);

// Trace-dual of a_ik, End(Sym^i C^2) -> End(C^2):
// tr(tau_ik(A) B) = tr(A a_ik(B)) for all B.
Mat tau_ik(const Mat& a, long i, long k);

// G = Z/a x Z/b acting diagonally on C^2 through the two characters; the
// representation must be faithful (checked exhaustively on construction).
struct GroupSpec {
  long a = 1, b = 1;
  std::pair<long, long> char1{1, 0};  // (alpha1, beta1)
  std::pair<long, long> char2{0, 1};  // (alpha2, beta2)

  GroupSpec() = default;
  GroupSpec(long a_, long b_, std::pair<long, long> c1, std::pair<long, long> c2);

  long order() const { return a * b; }
  std::vector<std::pair<long, long>> elements() const;
};

// rho(g) = diag(zeta_a^{alpha1 g1} zeta_b^{beta1 g2}, zeta_a^{alpha2 g1} zeta_b^{beta2 g2}).
Mat rho(const GroupSpec& g, std::pair<long, long> elem);

// Sym^i(rho(g)) * det(rho(g))^k, a diagonal unitary of size i+1.
Mat rho_ik(const GroupSpec& g, std::pair<long, long> elem, long i, long k);

// Unit complex number e^{2 pi i num/den} with the phase reduced exactly mod den.
cdx unit_root(long num, long den);

}  // namespace bol
