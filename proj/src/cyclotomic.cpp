#include "cyclotomic.hpp"

namespace bol {

IntPolynomial cyclotomic_polynomial(long d) {
  if (d < 1) fail(Errc::invalid_argument, "cyclotomic_polynomial: d must be positive");
  // t^d - 1
  std::vector<BigInt> c(static_cast<size_t>(d) + 1, BigInt(0));
  c[0] = -1;
  c[static_cast<size_t>(d)] = 1;
  IntPolynomial num{std::move(c)};
  for (long e = 1; e < d; ++e)
    if (d % e == 0) num = num.divide_exact(cyclotomic_polynomial(e));
  return num;
}

CyclotomicField::CyclotomicField(long d) : d_(d), phi_(cyclotomic_polynomial(d)) {
  deg_ = phi_.degree();
}

void CyclotomicField::reduce(std::vector<BigRat>& v) const {
  const auto& m = phi_.coeffs();
  for (long i = static_cast<long>(v.size()) - 1; i >= deg_; --i) {
    BigRat c = v[static_cast<size_t>(i)];
    if (c == 0) continue;
    v[static_cast<size_t>(i)] = 0;
    // t^i = t^{i-deg} * t^deg, t^deg = -sum_{j<deg} m_j t^j (Phi monic).
    for (long j = 0; j < deg_; ++j)
      v[static_cast<size_t>(i - deg_ + j)] -= c * BigRat(m[static_cast<size_t>(j)]);
  }
  v.resize(static_cast<size_t>(deg_), BigRat(0));
  while (static_cast<long>(v.size()) < deg_) v.emplace_back(0);
}

CyclotomicElement CyclotomicElement::from_rational(const CyclotomicField& f, const BigRat& q) {
  CyclotomicElement e(f);
  e.rep_[0] = q;
  return e;
}

CyclotomicElement CyclotomicElement::zeta_power(const CyclotomicField& f, long e) {
  long d = f.order();
  long r = ((e % d) + d) % d;
  std::vector<BigRat> v(static_cast<size_t>(r) + 1, BigRat(0));
  v[static_cast<size_t>(r)] = 1;
  f.reduce(v);
  CyclotomicElement out(f);
  out.rep_ = std::move(v);
  return out;
}

CyclotomicElement CyclotomicElement::integer_combination(const CyclotomicField& f,
                                                         const std::vector<BigInt>& by_exponent) {
  long d = f.order();
  std::vector<BigRat> v(static_cast<size_t>(d), BigRat(0));
  for (size_t e = 0; e < by_exponent.size(); ++e)
    v[e % static_cast<size_t>(d)] += BigRat(by_exponent[e]);
  f.reduce(v);
  CyclotomicElement out(f);
  out.rep_ = std::move(v);
  return out;
}

bool CyclotomicElement::is_zero() const {
  for (const auto& q : rep_)
    if (q != 0) return false;
  return true;
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& o) const {
  CyclotomicElement out = *this;
  for (size_t i = 0; i < rep_.size(); ++i) out.rep_[i] += o.rep_[i];
  return out;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& o) const {
  CyclotomicElement out = *this;
  for (size_t i = 0; i < rep_.size(); ++i) out.rep_[i] -= o.rep_[i];
  return out;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
  std::vector<BigRat> conv(2 * rep_.size(), BigRat(0));
  for (size_t i = 0; i < rep_.size(); ++i) {
    if (rep_[i] == 0) continue;
    for (size_t j = 0; j < o.rep_.size(); ++j) conv[i + j] += rep_[i] * o.rep_[j];
  }
  field_->reduce(conv);
  CyclotomicElement out(*field_);
  out.rep_ = std::move(conv);
  return out;
}

bool CyclotomicElement::operator==(const CyclotomicElement& o) const { return rep_ == o.rep_; }

}  // namespace bol
