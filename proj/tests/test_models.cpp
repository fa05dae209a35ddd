#include <doctest.h>

#include <random>

#include "models.hpp"
#include "quadrature.hpp"

using namespace bol;

namespace {
std::mt19937_64 rng(987645);
cdx random_point(double rmin = 0.2, double rmax = 2.5) {
  std::uniform_real_distribution<double> ur(rmin, rmax), ut(0.0, 6.283185307179586);
  return std::polar(ur(rng), ut(rng));
}
}  // namespace

TEST_CASE("kahler potential values and invariance") {
  auto smooth = OrbifoldModel::smooth_p1();
  CHECK(smooth.kahler_potential(smooth.make_point({cdx(0, 0)})) == doctest::Approx(0.0));
  CHECK(smooth.kahler_potential(smooth.make_point({cdx(1, 0)})) ==
        doctest::Approx(std::log(2.0)));
  CHECK(smooth.kahler_potential(smooth.make_point({cdx(0, 1)})) ==
        doctest::Approx(std::log(2.0)));

  auto cyc = OrbifoldModel::cyclic_p1(3, 1);
  for (int t = 0; t < 5; ++t) {
    auto pt = cyc.make_point({random_point()});
    double base = cyc.kahler_potential(pt);
    for (auto g : cyc.group_elements())
      CHECK(std::abs(cyc.kahler_potential(cyc.act(g, pt)) - base) < 1e-14);
  }

  auto prod = OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}));
  auto ppt = prod.make_point({cdx(0.5, 0.1), cdx(-0.3, 0.8)});
  double expect = std::log1p(0.26) + std::log1p(0.73);
  CHECK(prod.kahler_potential(ppt) == doctest::Approx(expect).epsilon(1e-12));

  CHECK_THROWS_AS((void)smooth.kahler_potential(smooth.make_point({cdx(1e12, 0)})), Error);
}

TEST_CASE("det H = e^{-phi} for every built-in model") {
  auto models = {OrbifoldModel::smooth_p1(), OrbifoldModel::cyclic_p1(2, 1),
                 OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}))};
  for (const auto& md : models) {
    for (int t = 0; t < 100; ++t) {
      std::vector<cdx> coords;
      for (long q = 0; q < md.dimension(); ++q) coords.push_back(random_point(0.05, 3.0));
      auto pt = md.make_point(coords);
      Mat h = md.hermitian_metric(pt);
      double det = h.determinant().real();
      CHECK(std::abs(det - std::exp(-md.kahler_potential(pt))) < 1e-12 * det);
    }
  }
}

TEST_CASE("scalar curvature: analytic values and the finite-difference path") {
  auto smooth = OrbifoldModel::smooth_p1();
  auto prod = OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}));

  for (int t = 0; t < 10; ++t) {
    auto pt = smooth.make_point({random_point(0.3, 1.8)});
    CHECK(smooth.scalar_curvature(pt) == doctest::Approx(2.0));
    CHECK(std::abs(smooth.scalar_curvature(pt, CurvaturePath::finite_difference) - 2.0) < 1e-6);
  }
  for (int t = 0; t < 10; ++t) {
    auto pt = prod.make_point({random_point(0.3, 1.8), random_point(0.3, 1.8)});
    CHECK(prod.scalar_curvature(pt) == doctest::Approx(4.0));
    CHECK(std::abs(prod.scalar_curvature(pt, CurvaturePath::finite_difference) - 4.0) < 1e-6);
  }
}

TEST_CASE("curvature matrix: diagonal, constant trace, hermitian") {
  auto prod = OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}));
  double trace0 = 0.0;
  for (int t = 0; t < 6; ++t) {
    auto pt = prod.make_point({random_point(0.3, 1.6), random_point(0.3, 1.6)});
    Mat m = prod.curvature_matrix(pt);
    CHECK(hermitian_defect(m) < 1e-10);
    CHECK(std::abs(m(0, 1)) < 1e-12);
    double tr = (m(0, 0) + m(1, 1)).real();
    if (t == 0) trace0 = tr;
    CHECK(std::abs(tr - trace0) < 1e-10);
    Mat fd = prod.curvature_matrix(pt, CurvaturePath::finite_difference);
    CHECK((m - fd).cwiseAbs().maxCoeff() < 1e-6);
  }
  CHECK(twist_trace(prod.curvature_matrix(
                        prod.make_point({cdx(0.5, 0), cdx(0.5, 0)})), 0) == 0.0);
}

TEST_CASE("enumerate_sections counts") {
  auto smooth = OrbifoldModel::smooth_p1();
  CHECK(smooth.enumerate_sections(0, 5).elements.size() == 6);

  auto cyc = OrbifoldModel::cyclic_p1(2, 0);
  auto basis = cyc.enumerate_sections(0, 4);
  REQUIRE(basis.elements.size() == 3);
  CHECK(basis.elements[0].exps[0] == 0);
  CHECK(basis.elements[1].exps[0] == 2);
  CHECK(basis.elements[2].exps[0] == 4);

  auto trivial = OrbifoldModel::product_p1p1(GroupSpec(1, 1, {1, 0}, {0, 1}));
  CHECK(trivial.enumerate_sections(1, 3).elements.size() == 40);
}

TEST_CASE("every enumerated section is equivariant") {
  auto models = {OrbifoldModel::cyclic_p1(3, 1),
                 OrbifoldModel::product_p1p1(GroupSpec(2, 3, {1, 0}, {0, 1})),
                 OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 1}, {0, 1}))};
  for (const auto& md : models) {
    for (long i = 0; i <= (md.rank() == 2 ? 2 : 0); ++i) {
      long k = 5;
      auto basis = md.enumerate_sections(i, k);
      for (const auto& sec : basis.elements) {
        for (int t = 0; t < 5; ++t) {
          std::vector<cdx> coords;
          for (long q = 0; q < md.dimension(); ++q) coords.push_back(random_point(0.3, 1.5));
          auto pt = md.make_point(coords);
          for (auto g : md.group_elements()) {
            Vec lhs = md.eval_section_raw(sec, i, md.act(g, pt));
            Vec rhs = md.rho_ik_matrix(g, i, k) * md.eval_section_raw(sec, i, pt);
            CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, rhs.norm()));
          }
        }
      }
    }
  }
}

TEST_CASE("equivariant counts match brute-force group filtering") {
  for (long a = 1; a <= 3; ++a) {
    for (long b = 1; b <= 3; ++b) {
      auto md = OrbifoldModel::product_p1p1(GroupSpec(a, b, {1, 0}, {0, 1}));
      auto cover = md.cover();
      for (long i = 0; i <= 4; ++i) {
        for (long k : {1L, 4L, 10L}) {
          auto fast = md.enumerate_sections(i, k);
          // brute force: filter the cover basis by the character congruences
          // evaluated numerically at a random point for every group element
          auto full = cover.enumerate_sections(i, k);
          long count = 0;
          auto pt = md.make_point({random_point(0.4, 1.4), random_point(0.4, 1.4)});
          for (const auto& sec : full.elements) {
            bool eq = true;
            for (auto g : md.group_elements()) {
              Vec lhs = md.eval_section_raw(sec, i, md.act(g, pt));
              Vec rhs = md.rho_ik_matrix(g, i, k) * md.eval_section_raw(sec, i, pt);
              if ((lhs - rhs).norm() > 1e-9 * std::max(1.0, rhs.norm())) {
                eq = false;
                break;
              }
            }
            if (eq) ++count;
          }
          CHECK(count == static_cast<long>(fast.elements.size()));
        }
      }
    }
  }
}

TEST_CASE("volume quadrature matches the orbifold convention") {
  QuadratureSpec spec;
  spec.radial_nodes = 120;
  double vol_factor = fs_monomial_integral(0, 0, 0, spec).real();
  auto models = {OrbifoldModel::smooth_p1(), OrbifoldModel::cyclic_p1(2, 1),
                 OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}))};
  for (const auto& md : models) {
    double vol = std::pow(vol_factor, static_cast<double>(md.dimension())) /
                 static_cast<double>(md.group_order());
    CHECK(std::abs(vol - 1.0 / static_cast<double>(md.group_order())) < 1e-8);
  }
}

TEST_CASE("line models reject i > 0") {
  auto smooth = OrbifoldModel::smooth_p1();
  CHECK_THROWS_AS((void)smooth.enumerate_sections(1, 4), Error);
}
