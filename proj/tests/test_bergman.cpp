#include <doctest.h>

#include <random>

#include "bergman.hpp"

using namespace bol;

namespace {
std::mt19937_64 rng(5551234);
cdx random_point(double rmin = 0.3, double rmax = 2.0) {
  std::uniform_real_distribution<double> ur(rmin, rmax), ut(0.0, 6.283185307179586);
  return std::polar(ur(rng), ut(rng));
}

// Independent Beta-integral oracle: <z^s, z^s>_k = s!(k-s)!/(k+1)!.
BigRat beta_oracle(long s, long k) {
  return BigRat(factorial(s) * factorial(k - s)) / BigRat(factorial(k + 1));
}
}  // namespace

TEST_CASE("analytic gram on smooth P^1 matches the Beta oracle") {
  auto md = OrbifoldModel::smooth_p1();
  InnerProductScheme scheme;
  long k = 12;
  auto basis = md.enumerate_sections(0, k);
  auto g = gram(md, basis, scheme);
  for (long s = 0; s <= k; ++s) {
    CHECK(std::abs(g.mat(s, s).real() - to_double(beta_oracle(s, k))) <
          1e-15 * to_double(beta_oracle(s, k)));
    for (long t = 0; t <= k; ++t)
      if (t != s) CHECK(std::abs(g.mat(s, t)) == 0.0);
  }
}

TEST_CASE("group order scales the gram by 1/|G|") {
  auto cyc = OrbifoldModel::cyclic_p1(2, 0);
  auto cover = cyc.cover();
  InnerProductScheme scheme;
  long k = 8;
  auto basis = cyc.enumerate_sections(0, k);
  auto g_orb = gram(cyc, basis, scheme);
  auto g_cov = gram(cover, basis, scheme);
  CHECK((g_orb.mat * 2.0 - g_cov.mat).cwiseAbs().maxCoeff() < 1e-16);
}

TEST_CASE("quadrature gram agrees with the analytic gram") {
  InnerProductScheme quad;
  quad.mode = InnerProductScheme::Mode::quadrature;
  quad.quad.radial_nodes = 160;
  InnerProductScheme ana;

  auto smooth = OrbifoldModel::smooth_p1();
  for (long k : {3L, 10L, 20L}) {
    auto basis = smooth.enumerate_sections(0, k);
    auto gq = gram(smooth, basis, quad);
    auto ga = gram(smooth, basis, ana);
    for (long s = 0; s < gq.mat.rows(); ++s) {
      for (long t = 0; t < gq.mat.cols(); ++t) {
        double scale = std::sqrt(ga.mat(s, s).real() * ga.mat(t, t).real());
        CHECK(std::abs(gq.mat(s, t) - ga.mat(s, t)) < 1e-9 * scale);
      }
    }
  }

  auto prod = OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}));
  for (long i : {0L, 1L}) {
    long k = 6;
    auto basis = prod.enumerate_sections(i, k);
    auto gq = gram(prod, basis, quad);
    auto ga = gram(prod, basis, ana);
    for (long s = 0; s < gq.mat.rows(); ++s)
      for (long t = 0; t < gq.mat.cols(); ++t) {
        double scale = std::sqrt(ga.mat(s, s).real() * ga.mat(t, t).real());
        CHECK(std::abs(gq.mat(s, t) - ga.mat(s, t)) < 1e-9 * scale);
      }
  }
}

TEST_CASE("orthonormal basis from cholesky") {
  // diagonal gram -> d^{-1/2}
  GramMatrix g;
  g.mat = Mat::Zero(3, 3);
  g.mat(0, 0) = 4.0;
  g.mat(1, 1) = 9.0;
  g.mat(2, 2) = 16.0;
  auto onb = orthonormal_basis(g);
  CHECK(std::abs(onb.coeff(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(onb.coeff(1, 1) - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(onb.coeff(2, 2) - 0.25) < 1e-15);

  // random SPD: transformed gram is the identity
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat a(5, 5);
  for (long r = 0; r < 5; ++r)
    for (long c = 0; c < 5; ++c) a(r, c) = cdx(u(rng), u(rng));
  GramMatrix spd;
  spd.mat = a * a.adjoint() + 0.5 * Mat::Identity(5, 5);
  auto onb2 = orthonormal_basis(spd);
  Mat check = onb2.coeff.adjoint() * spd.mat * onb2.coeff;
  CHECK((check - Mat::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);

  // duplicated section -> rank deficient, reported pivot
  GramMatrix sing;
  sing.mat = Mat::Ones(2, 2);
  try {
    (void)orthonormal_basis(sing);
    FAIL("expected NotPositiveDefinite");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_positive_definite);
    CHECK(std::string(e.what()).find("pivot 1") != std::string::npos);
  }
}

TEST_CASE("smooth Bergman function equals k + 1 everywhere") {
  auto md = OrbifoldModel::smooth_p1();
  InnerProductScheme scheme;
  for (long k : {1L, 7L, 25L, 40L}) {
    auto pipe = build_pipeline(md, 0, k, scheme);
    for (int t = 0; t < 6; ++t) {
      auto pt = md.make_point({random_point(0.0, 2.5)});
      double b = bergman_endo(md, pipe, pt)(0, 0).real();
      CHECK(std::abs(b - static_cast<double>(k + 1)) < 1e-9 * (k + 1));
    }
  }
}

TEST_CASE("bergman endo of an empty basis is zero") {
  // cyclic P^1 with m = 2, bundleChar = 1, k even has sections only at odd s;
  // k = 1 with char 0 gives s = 0 mod 2 -> s = 0 only; craft an empty case
  auto md = OrbifoldModel::cyclic_p1(5, 1);
  InnerProductScheme scheme;
  // k = 1: need s + 1*1 = 0 mod 5 -> s = 4 > k, empty
  auto pipe = build_pipeline(md, 0, 1, scheme);
  CHECK(pipe.dim() == 0);
  auto pt = md.make_point({random_point()});
  CHECK(bergman_endo(md, pipe, pt).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("trace integral of the Bergman endo counts sections") {
  // (1/|G|) int_cover tr B_{i,k} omega^n/n! = equivariant dim. The trace is
  // torus-invariant, so integrate radially per factor; the FS radial density
  // 2r/(1+r^2)^2 is invariant under r -> 1/r, which folds each factor onto
  // [0,1] with the integrand g(r) + g(1/r).
  auto md = OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}));
  InnerProductScheme scheme;
  long i = 1, k = 5;
  auto pipe = build_pipeline(md, i, k, scheme);
  std::vector<double> nodes, weights;
  gauss_legendre(80, nodes, weights);
  auto dens = [](double r) { return 2.0 * r / ((1 + r * r) * (1 + r * r)); };
  double total = 0.0;
  for (size_t a = 0; a < nodes.size(); ++a) {
    double ra = 0.5 * (nodes[a] + 1.0);
    double ma = dens(ra) * 0.5 * weights[a];
    for (size_t b = 0; b < nodes.size(); ++b) {
      double rb = 0.5 * (nodes[b] + 1.0);
      double mb = dens(rb) * 0.5 * weights[b];
      double vals = 0.0;
      for (double r1 : {ra, 1.0 / ra})
        for (double r2 : {rb, 1.0 / rb}) {
          auto pt = md.make_point({std::polar(r1, 0.4), std::polar(r2, 1.2)});
          vals += bergman_endo(md, pipe, pt).trace().real();
        }
      total += ma * mb * vals;
    }
  }
  total /= static_cast<double>(md.group_order());
  CHECK(std::abs(total - static_cast<double>(pipe.dim())) < 1e-6 * pipe.dim());
}

TEST_CASE("reproduce_check residuals") {
  auto md = OrbifoldModel::smooth_p1();
  InnerProductScheme scheme;
  long k = 9;
  auto pipe = build_pipeline(md, 0, k, scheme);
  auto pt = md.make_point({random_point()});

  Vec zero = Vec::Zero(pipe.dim());
  CHECK(reproduce_check(md, pipe, zero, pt) == 0.0);

  Vec first = pipe.onb.coeff.col(0);
  CHECK(reproduce_check(md, pipe, first, pt) < 1e-8);

  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    Vec rnd(pipe.dim());
    for (long q = 0; q < pipe.dim(); ++q) rnd(q) = cdx(u(rng), u(rng));
    CHECK(reproduce_check(md, pipe, rnd, pt) < 1e-6 * rnd.norm());
  }
}

TEST_CASE("averaging the cover kernel reproduces the equivariant kernel") {
  InnerProductScheme scheme;

  // trivial group: averaging is the identity
  auto smooth = OrbifoldModel::smooth_p1();
  auto pipe_s = build_pipeline(smooth, 0, 5, scheme);
  auto y = smooth.make_point({random_point()});
  auto x = smooth.make_point({random_point()});
  KernelFn cover_fn = [&](const SamplePoint& a, const SamplePoint& b) {
    return kernel_matrix(smooth, pipe_s, a, b);
  };
  Mat avg = average_kernel(cover_fn, smooth, 0, 5, y, x);
  CHECK((avg - kernel_matrix(smooth, pipe_s, y, x)).cwiseAbs().maxCoeff() < 1e-12);

  // cyclic m=2, i=0, k=6
  auto cyc = OrbifoldModel::cyclic_p1(2, 1);
  auto cover_c = cyc.cover();
  auto pipe_cover = build_pipeline(cover_c, 0, 6, scheme);
  auto pipe_eq = build_pipeline(cyc, 0, 6, scheme);
  KernelFn cyc_cover_fn = [&](const SamplePoint& a, const SamplePoint& b) {
    return kernel_matrix(cover_c, pipe_cover, a, b);
  };
  for (int t = 0; t < 10; ++t) {
    auto py = cyc.make_point({random_point(0.3, 1.6)});
    auto px = cyc.make_point({random_point(0.3, 1.6)});
    Mat lhs = average_kernel(cyc_cover_fn, cyc, 0, 6, py, px);
    Mat rhs = kernel_matrix(cyc, pipe_eq, py, px);
    double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9 * scale);
  }

  // product a=b=2, i=1, k=6
  auto prod = OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}));
  auto cover_p = prod.cover();
  auto pipe_pc = build_pipeline(cover_p, 1, 6, scheme);
  auto pipe_pe = build_pipeline(prod, 1, 6, scheme);
  KernelFn prod_cover_fn = [&](const SamplePoint& a, const SamplePoint& b) {
    return kernel_matrix(cover_p, pipe_pc, a, b);
  };
  for (int t = 0; t < 10; ++t) {
    auto py = prod.make_point({random_point(0.4, 1.5), random_point(0.4, 1.5)});
    auto px = prod.make_point({random_point(0.4, 1.5), random_point(0.4, 1.5)});
    Mat lhs = average_kernel(prod_cover_fn, prod, 1, 6, py, px);
    Mat rhs = kernel_matrix(prod, pipe_pe, py, px);
    double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-8 * scale);
  }
}

TEST_CASE("orbifold bergman: i = 0 weights reduce to k B Id") {
  auto prod = OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}));
  InnerProductScheme scheme;
  PipelineCache cache;
  WeightTable w;
  w.kind = WeightTable::Kind::rank2;
  w.rank2_entries[{0, 0}] = 1;
  long k = 6;
  auto pt = prod.make_point({random_point(0.5, 1.4), random_point(0.5, 1.4)});
  Mat out = orbifold_bergman(prod, w, k, pt, scheme, cache);
  auto pipe = cache.get(prod, 0, k, scheme);
  double b0k = bergman_endo(prod, *pipe, pt)(0, 0).real();
  CHECK((out - static_cast<double>(k) * b0k * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-10 * std::abs(k * b0k));
}

TEST_CASE("weight scaling is exact and hermitianity holds") {
  auto prod = OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}));
  InnerProductScheme scheme;
  PipelineCache cache;
  auto w = weight_table(1, 2);
  WeightTable w3 = w;
  for (auto& [ij, c] : w3.rank2_entries) c *= 3;
  long k = 5;
  auto pt = prod.make_point({random_point(0.5, 1.4), random_point(0.5, 1.4)});
  Mat b1 = orbifold_bergman(prod, w, k, pt, scheme, cache);
  Mat b3 = orbifold_bergman(prod, w3, k, pt, scheme, cache);
  CHECK((b3 - 3.0 * b1).cwiseAbs().maxCoeff() < 1e-12 * b1.cwiseAbs().maxCoeff());
  CHECK(hermitian_defect(b1) < 1e-10 * b1.cwiseAbs().maxCoeff());
}

TEST_CASE("scalar weighted bergman on smooth P^1") {
  auto md = OrbifoldModel::smooth_p1();
  InnerProductScheme scheme;
  PipelineCache cache;

  WeightTable single;
  single.kind = WeightTable::Kind::cyclic;
  single.cyclic_entries[0] = 1;
  auto pt = md.make_point({random_point()});
  for (long k : {4L, 11L})
    CHECK(scalar_weighted_bergman(md, single, k, pt, scheme, cache) ==
          doctest::Approx(k + 1.0).epsilon(1e-12));

  WeightTable w121;
  w121.kind = WeightTable::Kind::cyclic;
  w121.cyclic_entries[0] = 1;
  w121.cyclic_entries[1] = 2;
  w121.cyclic_entries[2] = 1;
  for (long k : {6L, 17L})
    CHECK(scalar_weighted_bergman(md, w121, k, pt, scheme, cache) ==
          doctest::Approx(4.0 * k + 8.0).epsilon(1e-12));
}

TEST_CASE("cyclic P^1 weighted sum is near-polynomial away from orbifold points") {
  auto md = OrbifoldModel::cyclic_p1(2, 1);
  InnerProductScheme scheme;
  PipelineCache cache;
  auto w = gen_cyclic_weights(2, 1);  // [1, 2, 1]
  auto pt = md.make_point({std::polar(1.0, 0.7)});  // |z| = 1 kills the parity term
  for (long k : {8L, 9L, 14L, 15L}) {
    double v = scalar_weighted_bergman(md, w, k, pt, scheme, cache);
    // sum c_i (k+i+1) = 4k + 8
    CHECK(v == doctest::Approx(4.0 * k + 8.0).epsilon(1e-10));
  }
}

TEST_CASE("gram error paths") {
  auto md = OrbifoldModel::smooth_p1();
  SectionBasis empty;
  empty.i = 0;
  empty.k = 4;
  InnerProductScheme scheme;
  CHECK_THROWS_AS((void)gram(md, empty, scheme), Error);

  // starving the radial rule at high k must trip the doubling check
  InnerProductScheme coarse;
  coarse.mode = InnerProductScheme::Mode::quadrature;
  coarse.quad.radial_nodes = 4;
  auto basis = md.enumerate_sections(0, 20);
  try {
    (void)gram(md, basis, coarse);
    FAIL("expected QuadratureUnconverged");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::quadrature_unconverged);
  }
}

TEST_CASE("averaging equivalence sweep over group sizes") {
  InnerProductScheme scheme;
  struct Case {
    long a, b, i, k;
  };
  for (const auto& cs : {Case{3, 3, 2, 8}, Case{2, 3, 3, 12}, Case{1, 2, 1, 7}}) {
    auto md = OrbifoldModel::product_p1p1(GroupSpec(cs.a, cs.b, {1, 0}, {0, 1}));
    auto cover = md.cover();
    auto pipe_cover = build_pipeline(cover, cs.i, cs.k, scheme);
    auto pipe_eq = build_pipeline(md, cs.i, cs.k, scheme);
    KernelFn fn = [&](const SamplePoint& a, const SamplePoint& b) {
      return kernel_matrix(cover, pipe_cover, a, b);
    };
    for (int t = 0; t < 3; ++t) {
      auto y = md.make_point({random_point(0.4, 1.4), random_point(0.4, 1.4)});
      auto x = md.make_point({random_point(0.4, 1.4), random_point(0.4, 1.4)});
      Mat lhs = average_kernel(fn, md, cs.i, cs.k, y, x);
      Mat rhs = kernel_matrix(md, pipe_eq, y, x);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <=
            1e-8 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("reproduce_check under quadrature gram") {
  auto md = OrbifoldModel::smooth_p1();
  InnerProductScheme quad;
  quad.mode = InnerProductScheme::Mode::quadrature;
  quad.quad.radial_nodes = 160;
  auto pipe = build_pipeline(md, 0, 8, quad);
  auto pt = md.make_point({random_point()});
  for (long c = 0; c < pipe.dim(); ++c)
    CHECK(reproduce_check(md, pipe, Vec(pipe.onb.coeff.col(c)), pt) < 1e-6);
}
