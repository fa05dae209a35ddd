#include "polynomials.hpp"

namespace bol {

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& o) const {
  if (o.is_zero()) fail(Errc::invalid_argument, "division by zero polynomial");
  if (is_zero()) return zero();
  std::vector<BigInt> rem = coeffs_;
  long dq = degree() - o.degree();
  if (dq < 0) fail(Errc::invalid_argument, "divide_exact: degree underflow");
  std::vector<BigInt> quot(static_cast<size_t>(dq) + 1, BigInt(0));
  const BigInt& lead = o.coeffs_.back();
  for (long i = dq; i >= 0; --i) {
    BigInt c = rem[static_cast<size_t>(i + o.degree())];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
      fail(Errc::invalid_argument, "divide_exact: not divisible");
    c /= lead;
    quot[static_cast<size_t>(i)] = c;
    for (long j = 0; j <= o.degree(); ++j)
      rem[static_cast<size_t>(i + j)] -= c * o.coeffs_[static_cast<size_t>(j)];
  }
  for (const auto& r : rem)
    if (r != 0) fail(Errc::invalid_argument, "divide_exact: nonzero remainder");
  return IntPolynomial(std::move(quot));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void BiPolynomial::add_term(long ez, long ew, const BigInt& c) {
  if (c == 0) return;
  auto key = Key{ez, ew};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BiPolynomial::coeff(long ez, long ew) const {
  auto it = terms_.find({ez, ew});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BiPolynomial BiPolynomial::operator-(const BiPolynomial& o) const {
  BiPolynomial out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, -c);
  return out;
}

BiPolynomial BiPolynomial::separable_product(const IntPolynomial& f, const IntPolynomial& g) {
  BiPolynomial out;
  for (long i = 0; i <= f.degree(); ++i)
    for (long j = 0; j <= g.degree(); ++j) out.add_term(i, j, f.coeff(i) * g.coeff(j));
  return out;
}

void TriPolynomial::add_term(long e1, long e2, long e3, const BigInt& c) {
  if (c == 0) return;
  auto key = Key{e1, e2, e3};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long TriPolynomial::total_degree() const {
  long d = -1;
  for (const auto& [k, c] : terms_)
    d = std::max(d, std::get<0>(k) + std::get<1>(k) + std::get<2>(k));
  return d;
}

BiPolynomial TriPolynomial::substitute_zw() const {
  BiPolynomial out;
  for (const auto& [k, c] : terms_) {
    auto [e1, e2, e3] = k;
    out.add_term(e1 + e3, e2 + e3, c);
  }
  return out;
}

}  // namespace bol
