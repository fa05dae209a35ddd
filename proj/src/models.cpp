#include "models.hpp"

#include <cmath>
#include <numeric>

namespace bol {

namespace {

constexpr double kChartRadius = 1e8;

double norm2(cdx z) { return z.real() * z.real() + z.imag() * z.imag(); }

cdx cpow_int(cdx z, long e) {
  cdx r = 1.0;
  for (long t = 0; t < e; ++t) r *= z;
  return r;
}

// s! (m-s)! / (m+1)!
BigRat beta_norm(long s, long m) {
  if (s < 0 || s > m) fail(Errc::invalid_argument, "beta_norm: 0 <= s <= m required");
  return BigRat(factorial(s) * factorial(m - s)) / BigRat(factorial(m + 1));
}

long mod_norm(long x, long m) { return ((x % m) + m) % m; }

}  // namespace

OrbifoldModel OrbifoldModel::smooth_p1() {
  OrbifoldModel md;
  md.variant_ = ModelVariant::smooth_p1;
  md.n_ = 1;
  md.rank_ = 1;
  return md;
}

OrbifoldModel OrbifoldModel::cyclic_p1(long m, long bundle_char) {
  if (m < 1) fail(Errc::invalid_argument, "cyclic_p1: m >= 1 required");
  OrbifoldModel md;
  md.variant_ = ModelVariant::cyclic_p1;
  md.n_ = 1;
  md.rank_ = 1;
  md.m_ = m;
  md.bundle_char_ = mod_norm(bundle_char, m);
  return md;
}

OrbifoldModel OrbifoldModel::product_p1p1(const GroupSpec& g) {
  OrbifoldModel md;
  md.variant_ = ModelVariant::product_p1p1;
  md.n_ = 2;
  md.rank_ = 2;
  md.group_ = g;
  return md;
}

long OrbifoldModel::ord() const {
  switch (variant_) {
    case ModelVariant::smooth_p1:
      return 1;
    case ModelVariant::cyclic_p1:
      return m_;
    case ModelVariant::product_p1p1:
      return std::lcm(group_.a, group_.b);
  }
  return 1;
}

long OrbifoldModel::group_order() const {
  switch (variant_) {
    case ModelVariant::smooth_p1:
      return 1;
    case ModelVariant::cyclic_p1:
      return m_;
    case ModelVariant::product_p1p1:
      return group_.order();
  }
  return 1;
}

std::vector<std::pair<long, long>> OrbifoldModel::group_elements() const {
  switch (variant_) {
    case ModelVariant::smooth_p1:
      return {{0, 0}};
    case ModelVariant::cyclic_p1: {
      std::vector<std::pair<long, long>> out;
      for (long g = 0; g < m_; ++g) out.emplace_back(g, 0);
      return out;
    }
    case ModelVariant::product_p1p1:
      return group_.elements();
  }
  return {{0, 0}};
}

SamplePoint OrbifoldModel::make_point(std::vector<cdx> coords) const {
  if (static_cast<long>(coords.size()) != n_)
    fail(Errc::invalid_argument, "make_point: wrong coordinate count");
  SamplePoint pt;
  pt.coords = std::move(coords);
  auto near_axis_fixed = [](cdx z) { return std::abs(z) < 0.25 || std::abs(z) > 4.0; };
  switch (variant_) {
    case ModelVariant::smooth_p1:
      pt.near_orbifold = false;
      break;
    case ModelVariant::cyclic_p1:
      pt.near_orbifold = m_ > 1 && near_axis_fixed(pt.coords[0]);
      break;
    case ModelVariant::product_p1p1:
      pt.near_orbifold = (group_.a > 1 && near_axis_fixed(pt.coords[0])) ||
                         (group_.b > 1 && near_axis_fixed(pt.coords[1]));
      break;
  }
  return pt;
}

SamplePoint OrbifoldModel::act(std::pair<long, long> g, const SamplePoint& pt) const {
  SamplePoint out = pt;
  switch (variant_) {
    case ModelVariant::smooth_p1:
      break;
    case ModelVariant::cyclic_p1:
      out.coords[0] *= unit_root(g.first, m_);
      break;
    case ModelVariant::product_p1p1:
      out.coords[0] *= unit_root(g.first, group_.a);
      out.coords[1] *= unit_root(g.second, group_.b);
      break;
  }
  return out;
}

Mat OrbifoldModel::rho_ik_matrix(std::pair<long, long> g, long i, long k) const {
  switch (variant_) {
    case ModelVariant::smooth_p1: {
      Mat out = Mat::Identity(1, 1);
      return out;
    }
    case ModelVariant::cyclic_p1: {
      if (i != 0) fail(Errc::invalid_argument, "rho_ik: line model has i = 0 only");
      Mat out(1, 1);
      out(0, 0) = unit_root(-k * bundle_char_ * g.first, m_);
      return out;
    }
    case ModelVariant::product_p1p1:
      return rho_ik(group_, g, i, k);
  }
  return Mat::Identity(1, 1);
}

void OrbifoldModel::check_in_chart(const SamplePoint& pt) const {
  for (const auto& z : pt.coords)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > kChartRadius)
      fail(Errc::out_of_chart, "point outside the affine chart");
}

double OrbifoldModel::kahler_potential(const SamplePoint& pt) const {
  check_in_chart(pt);
  double phi = 0.0;
  for (const auto& z : pt.coords) phi += std::log1p(norm2(z));
  return phi;
}

Mat OrbifoldModel::hermitian_metric(const SamplePoint& pt) const {
  check_in_chart(pt);
  if (rank_ == 1) {
    Mat h(1, 1);
    h(0, 0) = std::exp(-kahler_potential(pt));
    return h;
  }
  Mat h = Mat::Zero(2, 2);
  h(0, 0) = 1.0 / (1.0 + norm2(pt.coords[0]));
  h(1, 1) = 1.0 / (1.0 + norm2(pt.coords[1]));
  return h;
}

Eigen::MatrixXcd complex_hessian(const std::function<double(const std::vector<cdx>&)>& f,
                                 const std::vector<cdx>& at, double h) {
  const long n = static_cast<long>(at.size());
  // real coordinates: axis 2a = Re z_a, axis 2a+1 = Im z_a
  auto shift = [&](long axis, double d) {
    std::vector<cdx> p = at;
    long a = axis / 2;
    if (axis % 2 == 0)
      p[static_cast<size_t>(a)] += d;
    else
      p[static_cast<size_t>(a)] += cdx(0.0, d);
    return p;
  };
  auto second = [&](long axis) {
    // 4th-order: (-f(-2h) + 16 f(-h) - 30 f(0) + 16 f(h) - f(2h)) / (12 h^2)
    return (-f(shift(axis, -2 * h)) + 16 * f(shift(axis, -h)) - 30 * f(at) +
            16 * f(shift(axis, h)) - f(shift(axis, 2 * h))) /
           (12 * h * h);
  };
  auto mixed = [&](long ax1, long ax2) {
    static const double c[4] = {1.0, -8.0, 8.0, -1.0};
    static const double o[4] = {-2.0, -1.0, 1.0, 2.0};
    double acc = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        std::vector<cdx> pt = at;
        long a1 = ax1 / 2, a2 = ax2 / 2;
        cdx d1 = (ax1 % 2 == 0) ? cdx(o[p] * h, 0) : cdx(0, o[p] * h);
        cdx d2 = (ax2 % 2 == 0) ? cdx(o[q] * h, 0) : cdx(0, o[q] * h);
        pt[static_cast<size_t>(a1)] += d1;
        pt[static_cast<size_t>(a2)] += d2;
        acc += c[p] * c[q] * f(pt);
      }
    return acc / (144 * h * h);
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (long a = 0; a < n; ++a) {
    out(a, a) = 0.25 * (second(2 * a) + second(2 * a + 1));
    for (long b = a + 1; b < n; ++b) {
      // d_{z_a} d_{zbar_b} = (1/4)[dxa dxb + dya dyb + i (dxa dyb - dya dxb)]
      double xx = mixed(2 * a, 2 * b);
      double yy = mixed(2 * a + 1, 2 * b + 1);
      double xy = mixed(2 * a, 2 * b + 1);
      double yx = mixed(2 * a + 1, 2 * b);
      out(a, b) = 0.25 * cdx(xx + yy, xy - yx);
      out(b, a) = std::conj(out(a, b));
    }
  }
  return out;
}

namespace {

// det of a small Hermitian matrix, real by symmetry
double herm_det(const Eigen::MatrixXcd& g) {
  if (g.rows() == 1) return g(0, 0).real();
  return (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
}

}  // namespace

double OrbifoldModel::scalar_curvature(const SamplePoint& pt, CurvaturePath path) const {
  check_in_chart(pt);
  if (path == CurvaturePath::analytic) {
    // Fubini-Study factors: rho_omega = 2 omega per factor, trace gives 2n.
    return 2.0 * static_cast<double>(n_);
  }
  // Potential relative to a base point, via log1p of the exact norm-square
  // difference; keeps the stencil values near zero so the second-difference
  // cancellation stays below truncation level.
  auto phi_rel = [](const std::vector<cdx>& c, const std::vector<cdx>& base) {
    double v = 0.0;
    for (size_t f = 0; f < c.size(); ++f) {
      cdx delta = c[f] - base[f];
      double dr = 2.0 * (std::conj(base[f]) * delta).real() + norm2(delta);
      v += std::log1p(dr / (1.0 + norm2(base[f])));
    }
    return v;
  };
  const double h_inner = 4e-3, h_outer = 2e-2;
  auto metric = [&](const std::vector<cdx>& c) {
    return complex_hessian([&](const std::vector<cdx>& x) { return phi_rel(x, c); }, c, h_inner);
  };
  auto u = [&](const std::vector<cdx>& c) {
    double det = herm_det(metric(c));
    if (det <= 0) fail(Errc::curvature_degenerate, "scalar_curvature: det g <= 0");
    return -std::log(det);
  };
  // Richardson over the outer step cancels the h^4 truncation term.
  Eigen::MatrixXcd coarse = complex_hessian(u, pt.coords, h_outer);
  Eigen::MatrixXcd fine = complex_hessian(u, pt.coords, 0.5 * h_outer);
  Eigen::MatrixXcd big_u = (16.0 * fine - coarse) / 15.0;
  Eigen::MatrixXcd g = metric(pt.coords);
  return (g.inverse() * big_u).trace().real();
}

Mat OrbifoldModel::curvature_matrix(const SamplePoint& pt, CurvaturePath path) const {
  check_in_chart(pt);
  if (rank_ == 1) {
    // curvature of O(1) with the Fubini-Study fiber metric
    Mat out(1, 1);
    out(0, 0) = 1.0;
    if (path == CurvaturePath::finite_difference) {
      auto u0 = [&](const std::vector<cdx>& c) { return std::log1p(norm2(c[0])); };
      auto phi = [&](const std::vector<cdx>& c) { return std::log1p(norm2(c[0])); };
      Eigen::MatrixXcd g = complex_hessian(phi, pt.coords, 2e-3);
      out(0, 0) = (g.inverse() * complex_hessian(u0, pt.coords, 2e-3)).trace().real();
    }
    return out;
  }
  if (path == CurvaturePath::analytic) {
    Mat out = Mat::Zero(2, 2);
    out(0, 0) = 1.0;
    out(1, 1) = 1.0;
    return out;
  }
  // Diagonal H: M_aa = trace_omega ddbar(-log H_aa).
  auto phi = [&](const std::vector<cdx>& c) {
    double v = 0.0;
    for (const auto& z : c) v += std::log1p(norm2(z));
    return v;
  };
  Eigen::MatrixXcd g = complex_hessian(phi, pt.coords, 2e-3);
  Mat out = Mat::Zero(2, 2);
  for (long a = 0; a < 2; ++a) {
    auto ua = [&](const std::vector<cdx>& c) {
      return std::log1p(norm2(c[static_cast<size_t>(a)]));
    };
    out(a, a) = (g.inverse() * complex_hessian(ua, pt.coords, 2e-3)).trace().real();
  }
  return out;
}

OrbifoldModel OrbifoldModel::cover() const {
  switch (variant_) {
    case ModelVariant::smooth_p1:
      return smooth_p1();
    case ModelVariant::cyclic_p1:
      return smooth_p1();
    case ModelVariant::product_p1p1:
      return product_p1p1(GroupSpec(1, 1, group_.char1, group_.char2));
  }
  return smooth_p1();
}

SectionBasis OrbifoldModel::enumerate_sections(long i, long k) const {
  if (i < 0 || k < 1) fail(Errc::invalid_argument, "enumerate_sections: need i >= 0, k >= 1");
  SectionBasis basis;
  basis.i = i;
  basis.k = k;
  switch (variant_) {
    case ModelVariant::smooth_p1: {
      if (i != 0) fail(Errc::invalid_argument, "enumerate_sections: line model has i = 0 only");
      for (long s = 0; s <= k; ++s) basis.elements.push_back({0, 0, {s}});
      break;
    }
    case ModelVariant::cyclic_p1: {
      if (i != 0) fail(Errc::invalid_argument, "enumerate_sections: line model has i = 0 only");
      for (long s = 0; s <= k; ++s)
        if (mod_norm(s + k * bundle_char_, m_) == 0) basis.elements.push_back({0, 0, {s}});
      break;
    }
    case ModelVariant::product_p1p1: {
      const auto& [a1, b1] = group_.char1;
      const auto& [a2, b2] = group_.char2;
      for (long r = 0; r <= i; ++r) {
        long mu1 = i - r, mu2 = r;
        long s_char = mod_norm(a1 * mu1 + a2 * mu2 + k * (a1 + a2), group_.a);
        long t_char = mod_norm(b1 * mu1 + b2 * mu2 + k * (b1 + b2), group_.b);
        for (long s = 0; s <= k + mu1; ++s) {
          if (mod_norm(s, group_.a) != s_char) continue;
          for (long t = 0; t <= k + mu2; ++t) {
            if (mod_norm(t, group_.b) != t_char) continue;
            basis.elements.push_back({mu1, mu2, {s, t}});
          }
        }
      }
      break;
    }
  }
  return basis;
}

BigRat OrbifoldModel::section_norm_cover(const Section& s, long i, long k) const {
  if (n_ == 1) return beta_norm(s.exps[0], k);
  (void)i;
  return beta_norm(s.exps[0], k + s.mu1) * beta_norm(s.exps[1], k + s.mu2);
}

Vec OrbifoldModel::eval_section_raw(const Section& s, long i, const SamplePoint& pt) const {
  check_in_chart(pt);
  Vec v = Vec::Zero(i + 1);
  long row = s.mu2;  // basis index with mu1 descending
  cdx val = cpow_int(pt.coords[0], s.exps[0]);
  if (n_ == 2) val *= cpow_int(pt.coords[1], s.exps[1]);
  v(row) = val;
  return v;
}

Vec OrbifoldModel::eval_section_scaled(const Section& s, long i, long k,
                                       const SamplePoint& pt) const {
  check_in_chart(pt);
  // z^e (1+|z|^2)^{-mpow/2}, evaluated in polar form so it stays bounded.
  auto factor = [&](cdx z, long e, long mpow) {
    double rr = norm2(z);
    if (rr == 0.0) return (e == 0) ? cdx(1.0) : cdx(0.0);
    double r = std::sqrt(rr);
    double mag = std::exp(e * std::log(r) - 0.5 * mpow * std::log1p(rr));
    return cpow_int(z / r, e) * mag;
  };
  Vec v = Vec::Zero(i + 1);
  long row = s.mu2;
  if (n_ == 1) {
    v(row) = factor(pt.coords[0], s.exps[0], k);
  } else {
    v(row) = factor(pt.coords[0], s.exps[0], k + s.mu1) *
             factor(pt.coords[1], s.exps[1], k + s.mu2);
  }
  return v;
}

std::vector<SamplePoint> OrbifoldModel::default_sample_points(int count) const {
  std::vector<SamplePoint> pts;
  if (n_ == 1) {
    const double radii[] = {0.6, 0.8, 1.0, 1.3, 1.7, 2.0, 0.7, 0.9, 1.1, 1.5};
    for (int idx = 0; idx < count; ++idx) {
      double r = radii[idx % 10];
      double th = 0.37 + 0.61 * idx;
      pts.push_back(make_point({std::polar(r, th)}));
    }
  } else {
    const double radii1[] = {1.0, 1.0, 0.8, 1.2, 0.7, 1.3, 0.9, 1.1, 1.0, 0.75};
    const double radii2[] = {1.0, 1.0, 1.1, 0.9, 0.75, 1.25, 1.0, 0.85, 1.15, 1.3};
    for (int idx = 0; idx < count; ++idx) {
      double th1 = 0.3 + 0.83 * idx, th2 = 1.1 + 0.57 * idx;
      pts.push_back(make_point({std::polar(radii1[idx % 10], th1),
                                std::polar(radii2[idx % 10], th2)}));
    }
  }
  return pts;
}

double twist_trace(const Mat& m, long i) {
  if (i == 0) return 0.0;
  if (m.rows() != 2 || m.cols() != 2) fail(Errc::dimension_mismatch, "twist_trace: 2x2 required");
  double half = static_cast<double>(i) * static_cast<double>(i + 1) / 2.0;
  return half * (m(0, 0) + m(1, 1)).real();
}

}  // namespace bol
