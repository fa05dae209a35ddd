#include "weights.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace bol {

IntPolynomial expand_power(long d, long p) {
  if (d < 1 || p < 1) fail(Errc::invalid_argument, "expand_power: need d, p >= 1");
  std::vector<BigInt> ones(static_cast<size_t>(d) + 1, BigInt(1));
  IntPolynomial base{std::move(ones)};
  IntPolynomial out = IntPolynomial::one();
  for (long i = 0; i < p; ++i) out = out * base;
  return out;
}

bool is_log_concave_no_internal_zeros(const IntPolynomial& f) {
  const auto& a = f.coeffs();
  for (const auto& c : a)
    if (c < 0) fail(Errc::negative_coefficient, "is_log_concave: negative coefficient");
  for (size_t i = 1; i + 1 < a.size(); ++i)
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
  // internal zero: a_i != 0, a_j = 0, a_k != 0 with i < j < k
  long first = -1, last = -1;
  for (long i = 0; i < static_cast<long>(a.size()); ++i)
    if (a[static_cast<size_t>(i)] != 0) {
      if (first < 0) first = i;
      last = i;
    }
  for (long j = first + 1; j < last; ++j)
    if (a[static_cast<size_t>(j)] == 0) return false;
  return true;
}

WeightTable weight_table(long d, long p) {
  IntPolynomial f = expand_power(d, p);
  auto a = [&](long k) { return f.coeff(k); };
  WeightTable w;
  w.kind = WeightTable::Kind::rank2;
  w.provenance = {d, p};
  long dp = d * p;
  for (long i = 0; i <= dp; ++i) {
    for (long j = 0; j <= dp; ++j) {
      BigInt c = a(i + j) * a(j) - a(i + j + 1) * a(j - 1);
      if (c < 0)
        fail(Errc::numeric_failure, "weight_table: negative c_ij contradicts log-concavity");
      if (c != 0) w.rank2_entries[{i, j}] = c;
    }
  }
  return w;
}

BiPolynomial schur_polynomial(long lambda1, long lambda2) {
  if (lambda1 < lambda2 || lambda2 < 0)
    fail(Errc::invalid_partition, "schur_polynomial: need lambda1 >= lambda2 >= 0");
  BiPolynomial s;
  for (long t = lambda2; t <= lambda1; ++t) s.add_term(t, lambda1 + lambda2 - t, 1);
  return s;
}

WeightTable schur_decompose(const IntPolynomial& f) {
  for (const auto& c : f.coeffs())
    if (c < 0) fail(Errc::negative_coefficient, "schur_decompose: negative coefficient");
  BiPolynomial p = BiPolynomial::separable_product(f, f);
  // Peel each homogeneous degree r: with b_t = coeff of z^t w^{r-t}, the Schur
  // coefficient of S_{(r-l, l)} is b_l - b_{l-1} for l = 0..floor(r/2).
  WeightTable w;
  w.kind = WeightTable::Kind::rank2;
  BiPolynomial rebuilt;
  long deg = 2 * std::max<long>(f.degree(), 0);
  for (long r = 0; r <= deg; ++r) {
    BigInt prev = 0;
    for (long l = 0; 2 * l <= r; ++l) {
      BigInt b = p.coeff(l, r - l);
      BigInt c = b - prev;
      prev = b;
      if (c == 0) continue;
      long lam1 = r - l, lam2 = l;
      if (c < 0) {
        std::ostringstream os;
        os << "schur_decompose: coefficient of S_(" << lam1 << "," << lam2 << ") is " << c;
        fail(Errc::not_schur_positive, os.str());
      }
      w.rank2_entries[{lam1 - lam2, lam2}] = c;
    }
  }
  for (const auto& [ij, c] : w.rank2_entries) {
    BiPolynomial s = schur_polynomial(ij.first + ij.second, ij.second);
    for (const auto& [k, sc] : s.terms()) rebuilt.add_term(k.first, k.second, sc * c);
  }
  if (!(rebuilt == p)) fail(Errc::numeric_failure, "schur_decompose: re-expansion mismatch");
  return w;
}

TriPolynomial weight_polynomial(const WeightTable& w) {
  if (w.kind != WeightTable::Kind::rank2)
    fail(Errc::invalid_argument, "weight_polynomial: rank2 table required");
  TriPolynomial q;
  for (const auto& [ij, c] : w.rank2_entries) {
    auto [i, j] = ij;
    for (long mu1 = 0; mu1 <= i; ++mu1) q.add_term(mu1, i - mu1, j, c);
  }
  return q;
}

std::optional<long> total_order_at(const TriPolynomial& q, long m1, long m2, long m3, long d) {
  if (d < 1) fail(Errc::invalid_argument, "total_order_at: d >= 1 required");
  if (q.is_zero()) return std::nullopt;
  CyclotomicField field(d);
  long maxdeg = q.total_degree();
  for (long g = 0; g <= maxdeg; ++g) {
    // Graded piece of degree g around the point: coefficient of S1^g1 S2^g2 S3^g3
    // is sum_e q_e C(e1,g1) C(e2,g2) C(e3,g3) zeta^{m1(e1-g1)+m2(e2-g2)+m3(e3-g3)}.
    for (long g1 = 0; g1 <= g; ++g1) {
      for (long g2 = 0; g2 + g1 <= g; ++g2) {
        long g3 = g - g1 - g2;
        std::vector<BigInt> by_exp(static_cast<size_t>(d), BigInt(0));
        for (const auto& [key, c] : q.terms()) {
          auto [e1, e2, e3] = key;
          if (e1 < g1 || e2 < g2 || e3 < g3) continue;
          BigInt coef = c * binomial(e1, g1) * binomial(e2, g2) * binomial(e3, g3);
          long r = m1 * (e1 - g1) + m2 * (e2 - g2) + m3 * (e3 - g3);
          r = ((r % d) + d) % d;
          by_exp[static_cast<size_t>(r)] += coef;
        }
        if (!CyclotomicElement::integer_combination(field, by_exp).is_zero()) return g;
      }
    }
  }
  return std::nullopt;  // q vanishes to all orders, only possible for q = 0
}

std::optional<long> hypothesis_min_order(const WeightTable& w, long ord) {
  if (ord < 1) fail(Errc::invalid_argument, "hypothesis_min_order: ord >= 1 required");
  if (ord == 1) return std::nullopt;
  TriPolynomial q = weight_polynomial(w);
  std::optional<long> best;
  for (long m1 = 0; m1 < ord; ++m1) {
    for (long m2 = 0; m2 < ord; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      auto o = total_order_at(q, m1, m2, (m1 + m2) % ord, ord);
      if (!o) continue;  // infinite order at this point
      if (!best || *o < *best) best = o;
      if (best && *best == 0) return best;
    }
  }
  if (!best) return std::nullopt;
  return best;
}

WeightTable gen_cyclic_weights(long m, long L) {
  if (m < 1 || L < 0) fail(Errc::invalid_argument, "gen_cyclic_weights: need m >= 1, L >= 0");
  WeightTable w;
  w.kind = WeightTable::Kind::cyclic;
  w.provenance = {m, L};
  if (m == 1) {
    w.cyclic_entries[0] = 1;
  } else {
    std::vector<BigInt> ones(static_cast<size_t>(m), BigInt(1));
    IntPolynomial base{std::move(ones)};
    IntPolynomial f = IntPolynomial::one();
    for (long i = 0; i <= L; ++i) f = f * base;
    for (long i = 0; i <= f.degree(); ++i)
      if (f.coeff(i) != 0) w.cyclic_entries[i] = f.coeff(i);
  }
  if (!check_cyclic_weights(w, m, L))
    fail(Errc::numeric_failure, "gen_cyclic_weights: generated table fails the moment condition");
  return w;
}

bool check_cyclic_weights(const WeightTable& c, long m, long L) {
  if (c.kind != WeightTable::Kind::cyclic)
    fail(Errc::invalid_argument, "check_cyclic_weights: cyclic table required");
  auto ipow = [](long base, long e) {
    BigInt r = 1;
    for (long t = 0; t < e; ++t) r *= base;
    return r;  // 0^0 = 1
  };
  for (long l = 0; l <= L; ++l) {
    BigInt total = 0;
    std::vector<BigInt> per_residue(static_cast<size_t>(m), BigInt(0));
    for (const auto& [i, ci] : c.cyclic_entries) {
      BigInt term = ipow(i, l) * ci;
      total += term;
      per_residue[static_cast<size_t>(((i % m) + m) % m)] += term;
    }
    for (long u = 0; u < m; ++u)
      if (BigInt(m) * per_residue[static_cast<size_t>(u)] != total) return false;
  }
  return true;
}

std::string WeightTable::to_json() const {
  nlohmann::json j;
  if (kind == Kind::rank2) {
    j["kind"] = "rank2";
    if (provenance) {
      j["d"] = provenance->first;
      j["p"] = provenance->second;
    }
    auto entries = nlohmann::json::array();
    for (const auto& [ij, c] : rank2_entries)
      entries.push_back({ij.first, ij.second, c.get_str()});
    j["entries"] = entries;
  } else {
    j["kind"] = "cyclic";
    if (provenance) {
      j["m"] = provenance->first;
      j["L"] = provenance->second;
    }
    auto entries = nlohmann::json::array();
    for (const auto& [i, c] : cyclic_entries) entries.push_back({i, c.get_str()});
    j["entries"] = entries;
  }
  return j.dump();
}

WeightTable WeightTable::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::config_error, std::string("WeightTable::from_json: ") + e.what());
  }
  WeightTable w;
  std::string kind = j.at("kind").get<std::string>();
  auto parse_big = [](const nlohmann::json& v) {
    if (v.is_string()) return BigInt(v.get<std::string>());
    return BigInt(v.get<long>());
  };
  if (kind == "rank2") {
    w.kind = Kind::rank2;
    if (j.contains("d") && j.contains("p"))
      w.provenance = {j["d"].get<long>(), j["p"].get<long>()};
    for (const auto& e : j.at("entries")) {
      BigInt c = parse_big(e.at(2));
      if (c <= 0) fail(Errc::config_error, "WeightTable: entries must be positive");
      w.rank2_entries[{e.at(0).get<long>(), e.at(1).get<long>()}] = c;
    }
  } else if (kind == "cyclic") {
    w.kind = Kind::cyclic;
    if (j.contains("m") && j.contains("L"))
      w.provenance = {j["m"].get<long>(), j["L"].get<long>()};
    for (const auto& e : j.at("entries")) {
      BigInt c = parse_big(e.at(1));
      if (c <= 0) fail(Errc::config_error, "WeightTable: entries must be positive");
      w.cyclic_entries[e.at(0).get<long>()] = c;
    }
  } else {
    fail(Errc::config_error, "WeightTable: unknown kind " + kind);
  }
  return w;
}

}  // namespace bol
