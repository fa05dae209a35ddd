#include "bergman.hpp"

#include <cmath>
#include <sstream>

namespace bol {

namespace {

Mat gram_analytic(const OrbifoldModel& model, const SectionBasis& basis) {
  const long n = static_cast<long>(basis.elements.size());
  Mat g = Mat::Zero(n, n);
  BigRat inv_group(1, model.group_order());
  for (long a = 0; a < n; ++a) {
    BigRat nrm = model.section_norm_cover(basis.elements[static_cast<size_t>(a)], basis.i, basis.k);
    g(a, a) = to_double(nrm * inv_group);
  }
  return g;
}

Mat gram_quadrature_once(const OrbifoldModel& model, const SectionBasis& basis,
                         const QuadratureSpec& spec) {
  const long n = static_cast<long>(basis.elements.size());
  Mat g = Mat::Zero(n, n);
  const double inv_group = 1.0 / static_cast<double>(model.group_order());
  for (long a = 0; a < n; ++a) {
    const Section& sa = basis.elements[static_cast<size_t>(a)];
    for (long b = a; b < n; ++b) {
      const Section& sb = basis.elements[static_cast<size_t>(b)];
      cdx val = 0.0;
      if (model.dimension() == 1) {
        val = fs_monomial_integral(sa.exps[0], sb.exps[0], basis.k, spec);
      } else if (sa.mu1 == sb.mu1) {
        // H^i is diagonal, so cross-component entries vanish identically.
        val = fs_monomial_integral(sa.exps[0], sb.exps[0], basis.k + sa.mu1, spec) *
              fs_monomial_integral(sa.exps[1], sb.exps[1], basis.k + sa.mu2, spec);
      }
      g(a, b) = val * inv_group;
      if (b != a) g(b, a) = std::conj(g(a, b));
    }
  }
  return g;
}

Mat gram_quadrature(const OrbifoldModel& model, const SectionBasis& basis,
                    const InnerProductScheme& scheme) {
  Mat g = gram_quadrature_once(model, basis, scheme.quad);
  if (scheme.validate) {
    QuadratureSpec doubled = scheme.quad;
    doubled.radial_nodes *= 2;
    if (doubled.angular_nodes > 0) doubled.angular_nodes *= 2;
    Mat g2 = gram_quadrature_once(model, basis, doubled);
    for (long a = 0; a < g.rows(); ++a) {
      for (long b = 0; b < g.cols(); ++b) {
        double scale = std::sqrt(std::abs(g2(a, a).real()) * std::abs(g2(b, b).real()));
        if (scale <= 0) scale = 1.0;
        if (std::abs(g(a, b) - g2(a, b)) > 1e-8 * scale) {
          std::ostringstream os;
          os << "gram: node doubling moved entry (" << a << "," << b << ") by "
             << std::abs(g(a, b) - g2(a, b)) / scale << " relative";
          fail(Errc::quadrature_unconverged, os.str());
        }
      }
    }
    g = g2;  // keep the finer result
  }
  return g;
}

}  // namespace

GramMatrix gram(const OrbifoldModel& model, const SectionBasis& basis,
                const InnerProductScheme& scheme) {
  if (basis.elements.empty()) fail(Errc::invalid_argument, "gram: empty basis");
  GramMatrix out;
  out.i = basis.i;
  out.k = basis.k;
  out.scheme = scheme;
  out.mat = scheme.mode == InnerProductScheme::Mode::analytic
                ? gram_analytic(model, basis)
                : gram_quadrature(model, basis, scheme);
  return out;
}

OrthonormalBasis orthonormal_basis(const GramMatrix& g) {
  const long n = g.mat.rows();
  bool diagonal = true;
  for (long r = 0; r < n && diagonal; ++r)
    for (long c = 0; c < n && diagonal; ++c)
      if (r != c && g.mat(r, c) != cdx(0.0)) diagonal = false;
  if (diagonal) {
    OrthonormalBasis out;
    out.diagonal = true;
    out.coeff = Mat::Zero(n, n);
    for (long j = 0; j < n; ++j) {
      double d = g.mat(j, j).real();
      if (d <= 0.0) {
        std::ostringstream os;
        os << "orthonormal_basis: pivot " << j << " not positive (" << d << ")";
        fail(Errc::not_positive_definite, os.str());
      }
      out.coeff(j, j) = 1.0 / std::sqrt(d);
    }
    return out;
  }
  // Cholesky G = L L^*, explicit so a failing pivot is reported by index.
  // The pivot floor is relative to the column's own diagonal: exact Grams are
  // diagonal with dynamic range ~2^k, so a global floor would reject honest
  // tiny norms while a cancellation-degenerate pivot still trips the check.
  Mat l = Mat::Zero(n, n);
  for (long j = 0; j < n; ++j) {
    cdx diag = g.mat(j, j);
    for (long p = 0; p < j; ++p) diag -= l(j, p) * std::conj(l(j, p));
    if (diag.real() <= 1e-13 * std::abs(g.mat(j, j).real())) {
      std::ostringstream os;
      os << "orthonormal_basis: pivot " << j << " not positive (" << diag.real() << ")";
      fail(Errc::not_positive_definite, os.str());
    }
    l(j, j) = std::sqrt(diag.real());
    for (long r = j + 1; r < n; ++r) {
      cdx v = g.mat(r, j);
      for (long p = 0; p < j; ++p) v -= l(r, p) * std::conj(l(j, p));
      l(r, j) = v / l(j, j).real();
    }
  }
  // coeff = (L^{-1})^*, so coeff^* G coeff = Id.
  Mat linv = Mat::Identity(n, n);
  for (long c = 0; c < n; ++c) {
    for (long r = c; r < n; ++r) {
      if (r == c) {
        linv(r, c) = 1.0 / l(r, r).real();
      } else {
        cdx acc = 0;
        for (long p = c; p < r; ++p) acc += l(r, p) * linv(p, c);
        linv(r, c) = -acc / l(r, r).real();
      }
    }
  }
  OrthonormalBasis out;
  out.coeff = linv.adjoint();
  return out;
}

Pipeline build_pipeline(const OrbifoldModel& model, long i, long k,
                        const InnerProductScheme& scheme) {
  Pipeline p;
  p.basis = model.enumerate_sections(i, k);
  p.gram.i = i;
  p.gram.k = k;
  p.gram.scheme = scheme;
  if (p.basis.elements.empty()) {
    p.gram.mat = Mat::Zero(0, 0);
    p.onb.coeff = Mat::Zero(0, 0);
    return p;
  }
  p.gram = gram(model, p.basis, scheme);
  p.onb = orthonormal_basis(p.gram);
  return p;
}

std::shared_ptr<const Pipeline> PipelineCache::get(const OrbifoldModel& model, long i, long k,
                                                   const InnerProductScheme& scheme) {
  auto key = std::make_tuple(i, k, static_cast<int>(scheme.mode));
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
  }
  auto built = std::make_shared<Pipeline>(build_pipeline(model, i, k, scheme));
  std::lock_guard<std::mutex> lk(mu_);
  auto [it, inserted] = map_.emplace(key, built);
  return it->second;  // first writer wins, later builds are identical
}

namespace {

// Matrix of scaled section values, (i+1) x basis count.
Mat scaled_value_matrix(const OrbifoldModel& model, const Pipeline& pipe, const SamplePoint& pt) {
  const long m = pipe.dim();
  Mat s = Mat::Zero(pipe.basis.i + 1, m);
  for (long a = 0; a < m; ++a)
    s.col(a) =
        model.eval_section_scaled(pipe.basis.elements[static_cast<size_t>(a)], pipe.basis.i,
                                  pipe.basis.k, pt);
  return s;
}

Mat raw_value_matrix(const OrbifoldModel& model, const Pipeline& pipe, const SamplePoint& pt) {
  const long m = pipe.dim();
  Mat s = Mat::Zero(pipe.basis.i + 1, m);
  for (long a = 0; a < m; ++a)
    s.col(a) = model.eval_section_raw(pipe.basis.elements[static_cast<size_t>(a)], pipe.basis.i, pt);
  return s;
}

// Diagonal of (H^i)^{1/2} at pt in the multi-index basis (H is diagonal on
// all built-in models).
std::vector<double> sym_metric_sqrt(const OrbifoldModel& model, long i, const SamplePoint& pt) {
  Mat h = model.hermitian_metric(pt);
  std::vector<double> w(static_cast<size_t>(i + 1), 1.0);
  if (model.rank() == 1) return w;
  double h1 = h(0, 0).real(), h2 = h(1, 1).real();
  for (long r = 0; r <= i; ++r) {
    long mu1 = i - r, mu2 = r;
    w[static_cast<size_t>(r)] = std::pow(h1, 0.5 * mu1) * std::pow(h2, 0.5 * mu2);
  }
  return w;
}

}  // namespace

Mat bergman_endo(const OrbifoldModel& model, const Pipeline& pipe, const SamplePoint& pt) {
  const long dim = pipe.basis.i + 1;
  if (pipe.dim() == 0) return Mat::Zero(dim, dim);
  Mat shat = scaled_value_matrix(model, pipe, pt);
  Mat uhat;
  if (pipe.onb.diagonal) {
    uhat = shat;
    for (long b = 0; b < uhat.cols(); ++b) uhat.col(b) *= pipe.onb.coeff(b, b);
  } else {
    uhat = shat * pipe.onb.coeff;  // scaled orthonormal values
  }
  // Bhat = sum_b u u^*, accumulated in fixed column order.
  Mat bhat = Mat::Zero(dim, dim);
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) {
      NeumaierC acc;
      for (long b = 0; b < uhat.cols(); ++b) acc.add(uhat(r, b) * std::conj(uhat(c, b)));
      bhat(r, c) = acc.value();
    }
  }
  // Unscale the frame: B = W^{-1} Bhat W.
  auto w = sym_metric_sqrt(model, pipe.basis.i, pt);
  Mat b = bhat;
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c)
      b(r, c) *= w[static_cast<size_t>(c)] / w[static_cast<size_t>(r)];
  return b;
}

double reproduce_check(const OrbifoldModel& model, const Pipeline& pipe, const Vec& u_coeffs,
                       const SamplePoint& pt) {
  if (u_coeffs.size() != pipe.dim())
    fail(Errc::invalid_argument, "reproduce_check: coefficient length mismatch");
  if (pipe.dim() == 0) return 0.0;
  Mat shat = scaled_value_matrix(model, pipe, pt);
  // (u, t_b)_{k,G} over the orthonormal basis t, then resynthesize at pt.
  Vec q = (pipe.gram.mat * pipe.onb.coeff.conjugate()).transpose() * u_coeffs;
  Vec synth = shat * (pipe.onb.coeff * q);
  Vec direct = shat * u_coeffs;
  return (synth - direct).norm();
}

Mat kernel_matrix(const OrbifoldModel& model, const Pipeline& pipe, const SamplePoint& y,
                  const SamplePoint& x) {
  const long dim = pipe.basis.i + 1;
  if (pipe.dim() == 0) return Mat::Zero(dim, dim);
  Mat ty = raw_value_matrix(model, pipe, y) * pipe.onb.coeff;
  Mat tx = raw_value_matrix(model, pipe, x) * pipe.onb.coeff;
  return ty * tx.adjoint();
}

Mat average_kernel(const KernelFn& cover_kernel, const OrbifoldModel& model, long i, long k,
                   const SamplePoint& y, const SamplePoint& x) {
  auto elems = model.group_elements();
  const long dim = (model.rank() == 2) ? i + 1 : 1;
  Mat acc = Mat::Zero(dim, dim);
  auto inverse = [&](std::pair<long, long> g) {
    long a = model.variant() == ModelVariant::product_p1p1 ? model.group().a : model.cyclic_m();
    long b = model.variant() == ModelVariant::product_p1p1 ? model.group().b : 1;
    return std::make_pair(((a - g.first) % a + a) % a, ((b - g.second) % b + b) % b);
  };
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      Mat rho_h_inv = model.rho_ik_matrix(inverse(h), i, k);
      Mat rho_g_inv = model.rho_ik_matrix(inverse(g), i, k);
      acc += rho_h_inv.conjugate() * cover_kernel(model.act(g, y), model.act(h, x)) *
             rho_g_inv.transpose();
    }
  }
  return acc / static_cast<double>(model.group_order());
}

Mat orbifold_bergman(const OrbifoldModel& model, const WeightTable& weights, long k,
                     const SamplePoint& pt, const InnerProductScheme& scheme,
                     PipelineCache& cache) {
  if (weights.kind != WeightTable::Kind::rank2)
    fail(Errc::invalid_argument, "orbifold_bergman: rank2 weights required");
  if (model.rank() != 2)
    fail(Errc::invalid_argument, "orbifold_bergman: rank-2 model required");
  Mat out = Mat::Zero(2, 2);
  for (const auto& [ij, c] : weights.rank2_entries) {
    auto [i, j] = ij;
    auto pipe = cache.get(model, i, k + j, scheme);
    Mat b = bergman_endo(model, *pipe, pt);
    out += to_double(c) * tau_ik(b, i, k + j);
  }
  return out;
}

double scalar_weighted_bergman(const OrbifoldModel& model, const WeightTable& weights, long k,
                               const SamplePoint& pt, const InnerProductScheme& scheme,
                               PipelineCache& cache) {
  if (weights.kind != WeightTable::Kind::cyclic)
    fail(Errc::invalid_argument, "scalar_weighted_bergman: cyclic weights required");
  if (model.rank() != 1)
    fail(Errc::invalid_argument, "scalar_weighted_bergman: line-bundle model required");
  Neumaier acc;
  for (const auto& [i, c] : weights.cyclic_entries) {
    auto pipe = cache.get(model, 0, k + i, scheme);
    Mat b = bergman_endo(model, *pipe, pt);
    acc.add(to_double(c) * b(0, 0).real());
  }
  return acc.value();
}

}  // namespace bol
