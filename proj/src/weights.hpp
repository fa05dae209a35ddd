#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cyclotomic.hpp"
#include "polynomials.hpp"
#include "support.hpp"

namespace bol {

// c_ij (rank2) or c_i (cyclic) weight constants. Zero weights are omitted;
// iteration is lexicographic in (i, j).
struct WeightTable {
  enum class Kind { rank2, cyclic };

  Kind kind = Kind::rank2;
  std::map<std::pair<long, long>, BigInt> rank2_entries;
  std::map<long, BigInt> cyclic_entries;

  // Generating parameters, when the table came from a generator:
  // rank2 -> (d, p), cyclic -> (m, L).
  std::optional<std::pair<long, long>> provenance;

  bool empty() const {
    return kind == Kind::rank2 ? rank2_entries.empty() : cyclic_entries.empty();
  }

  std::string to_json() const;
  static WeightTable from_json(const std::string& text);
};

// Coefficients of (1 + t + ... + t^d)^p by repeated convolution.
IntPolynomial expand_power(long d, long p);

// a_i^2 >= a_{i-1} a_{i+1} for interior i, and no zero strictly between
// two nonzero coefficients.
bool is_log_concave_no_internal_zeros(const IntPolynomial& f);

// c_ij = a_{i+j} a_j - a_{i+j+1} a_{j-1} from expand_power(d, p).
WeightTable weight_table(long d, long p);

// S_{(l1,l2)}(z,w) = z^{l1} w^{l2} + ... + z^{l2} w^{l1}.
BiPolynomial schur_polynomial(long lambda1, long lambda2);

// Unique table with f(z) f(w) = sum c_ij S_{(i+j,j)}, found by peeling
// homogeneous pieces; throws not_schur_positive naming the first negative
// coefficient. Result verified by re-expansion.
WeightTable schur_decompose(const IntPolynomial& f);

// Q(T1,T2,T3) = sum c_ij (sum_{|mu|=i} T1^mu1 T2^mu2) T3^j.
TriPolynomial weight_polynomial(const WeightTable& w);

// Total order of Q at (zeta^m1, zeta^m2, zeta^m3), zeta a fixed primitive
// d-th root of unity; nullopt means +infinity (Q = 0).
std::optional<long> total_order_at(const TriPolynomial& q, long m1, long m2, long m3, long d);

// Minimum of total_order_at over all (m1, m2) with (zeta^m1, zeta^m2) != (1,1),
// at m3 = m1 + m2; nullopt when ord = 1 (no excluded points).
std::optional<long> hypothesis_min_order(const WeightTable& w, long ord);

// c_i = coefficients of (1 + t + ... + t^{m-1})^{L+1}; checked against
// check_cyclic_weights before returning.
WeightTable gen_cyclic_weights(long m, long L);

// m * sum_{i = u mod m} i^l c_i == sum_i i^l c_i for all residues u and
// 0 <= l <= L, exact arithmetic, 0^0 = 1.
bool check_cyclic_weights(const WeightTable& c, long m, long L);

}  // namespace bol
