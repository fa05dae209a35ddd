#include <doctest.h>

#include "fitting.hpp"

using namespace bol;

namespace {
Mat scalar(double v) {
  Mat m(1, 1);
  m(0, 0) = v;
  return m;
}
}  // namespace

TEST_CASE("exact polynomial recovery") {
  std::vector<std::pair<double, Mat>> samples;
  for (long k = 10; k <= 20; ++k)
    samples.emplace_back(static_cast<double>(k), scalar(3.0 * k * k + 5.0 * k));
  auto fit = fit_expansion(samples, 2, 1);
  CHECK(std::abs(fit.coeffs[0](0, 0).real() - 3.0) < 1e-10);
  CHECK(std::abs(fit.coeffs[1](0, 0).real() - 5.0) < 1e-10);
  CHECK(fit.residual_rms < 1e-9);
  CHECK(fit.condition_number < 1e3);
}

TEST_CASE("tail contamination shrinks as kmin grows") {
  auto run = [&](long kmin) {
    std::vector<std::pair<double, Mat>> samples;
    for (long k = kmin; k <= 2 * kmin; k += std::max<long>(1, kmin / 10))
      samples.emplace_back(static_cast<double>(k),
                           scalar(3.0 * k * k + 5.0 * k + 200.0 / k));
    auto fit = fit_expansion(samples, 2, 1);
    return std::abs(fit.coeffs[0](0, 0).real() - 3.0);
  };
  double e10 = run(10), e20 = run(20), e40 = run(40);
  CHECK(e20 < e10);
  CHECK(e40 < e20);
}

TEST_CASE("interpolation boundary and insufficient samples") {
  std::vector<std::pair<double, Mat>> two;
  two.emplace_back(4.0, scalar(9.0));
  two.emplace_back(5.0, scalar(11.0));
  auto fit = fit_expansion(two, 1, 1);  // 2 coefficients from 2 samples: exact
  CHECK(std::abs(fit.coeffs[0](0, 0).real() - 2.0) < 1e-12);
  CHECK(std::abs(fit.coeffs[1](0, 0).real() - 1.0) < 1e-12);

  std::vector<std::pair<double, Mat>> three;
  three.emplace_back(4.0, scalar(9.0));
  three.emplace_back(5.0, scalar(11.0));
  three.emplace_back(6.0, scalar(13.0));
  CHECK_THROWS_AS((void)fit_expansion(three, 3, 3), Error);
}

TEST_CASE("matrix-valued fit and weight scaling equivariance") {
  std::vector<std::pair<double, Mat>> samples;
  Mat a(2, 2), b(2, 2);
  a << 2.0, cdx(0, 0.5), cdx(0, -0.5), 3.0;
  b << 1.0, 0.0, 0.0, -1.0;
  for (long k = 5; k <= 15; ++k)
    samples.emplace_back(static_cast<double>(k),
                         Mat(a * static_cast<double>(k * k) + b * static_cast<double>(k)));
  auto fit = fit_expansion(samples, 2, 1);
  CHECK((fit.coeffs[0] - a).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((fit.coeffs[1] - b).cwiseAbs().maxCoeff() < 1e-10);

  for (auto& [k, v] : samples) v *= 7.0;
  auto fit7 = fit_expansion(samples, 2, 1);
  CHECK((fit7.coeffs[0] - 7.0 * a).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("predicted b0 and b1 values") {
  WeightTable single;
  single.kind = WeightTable::Kind::rank2;
  single.rank2_entries[{0, 0}] = 1;
  CHECK(predicted_b0(single) == 1.0);

  auto w11 = weight_table(1, 1);
  CHECK(predicted_b0(w11) == 4.0);  // 1*1 + 1*2 + 1*1

  WeightTable empty;
  empty.kind = WeightTable::Kind::rank2;
  CHECK(predicted_b0(empty) == 0.0);

  auto prod = OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}));
  auto pt = prod.make_point({cdx(0.7, 0.2), cdx(-0.4, 0.5)});
  // c00 = 1 only: both forms reduce to Scal/2
  double scal = prod.scalar_curvature(pt);
  CHECK(predicted_b1(single, prod, pt, B1Form::final_form) == doctest::Approx(scal / 2));
  CHECK(predicted_b1(single, prod, pt, B1Form::intermediate) == doctest::Approx(scal / 2));
}

TEST_CASE("predicted cyclic pair") {
  auto smooth = OrbifoldModel::smooth_p1();
  auto pt = smooth.make_point({cdx(0.5, 0.5)});

  WeightTable single;
  single.kind = WeightTable::Kind::cyclic;
  single.cyclic_entries[0] = 1;
  auto [b0, b1] = predicted_cyclic(single, smooth, pt);
  CHECK(b0 == 1.0);
  CHECK(b1 == doctest::Approx(1.0));

  WeightTable w121;
  w121.kind = WeightTable::Kind::cyclic;
  w121.cyclic_entries[0] = 1;
  w121.cyclic_entries[1] = 2;
  w121.cyclic_entries[2] = 1;
  auto [c0, c1] = predicted_cyclic(w121, smooth, pt);
  CHECK(c0 == 4.0);
  CHECK(c1 == doctest::Approx(8.0));  // sum c_i i + sum c_i * Scal/2 = 4 + 4

  WeightTable empty;
  empty.kind = WeightTable::Kind::cyclic;
  auto [e0, e1] = predicted_cyclic(empty, smooth, pt);
  CHECK(e0 == 0.0);
  CHECK(e1 == 0.0);
}

TEST_CASE("ill-conditioned fit is rejected") {
  std::vector<std::pair<double, Mat>> samples;
  for (long k = 1000; k <= 1016; ++k)
    samples.emplace_back(static_cast<double>(k), scalar(static_cast<double>(k)));
  try {
    (void)fit_expansion(samples, 12, 12);
    FAIL("expected IllConditioned");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ill_conditioned);
  }
}
