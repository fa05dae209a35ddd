#pragma once

#include <functional>
#include <vector>

#include "support.hpp"
#include "symrep.hpp"

namespace bol {

// Affine coordinates in the principal chart; the flag marks proximity to the
// model's orbifold points (informational, used to pick default samples).
struct SamplePoint {
  std::vector<cdx> coords;
  bool near_orbifold = false;
};

// A vector-valued monomial section: the coefficient function of e_mu is
// z^{exps[0]} (w^{exps[1]} for n = 2). Line-bundle models use mu = (0,0) and a
// single component.
struct Section {
  long mu1 = 0, mu2 = 0;
  std::vector<long> exps;
};

struct SectionBasis {
  long i = 0;
  long k = 1;
  std::vector<Section> elements;
};

enum class ModelVariant { smooth_p1, cyclic_p1, product_p1p1 };
enum class CurvaturePath { analytic, finite_difference };

// Global-quotient models over P^1 and P^1 x P^1 with Fubini-Study data,
// normalized so the cover has unit volume.
class OrbifoldModel {
 public:
  static OrbifoldModel smooth_p1();
  static OrbifoldModel cyclic_p1(long m, long bundle_char);
  static OrbifoldModel product_p1p1(const GroupSpec& g);

  ModelVariant variant() const { return variant_; }
  long dimension() const { return n_; }
  long rank() const { return rank_; }
  long ord() const;
  long group_order() const;
  double kahler_normalization() const { return 1.0; }
  long cyclic_m() const { return m_; }
  long bundle_char() const { return bundle_char_; }
  const GroupSpec& group() const { return group_; }

  std::vector<std::pair<long, long>> group_elements() const;
  SamplePoint make_point(std::vector<cdx> coords) const;
  SamplePoint act(std::pair<long, long> g, const SamplePoint& pt) const;
  // Character matrix of size (i+1) (1x1 for line models) for the equivariance
  // convention u(g x) = rho^{i,k}(g) u(x).
  Mat rho_ik_matrix(std::pair<long, long> g, long i, long k) const;

  double kahler_potential(const SamplePoint& pt) const;
  // Fiber metric of E in the chart trivialization; 1x1 (= e^{-phi}) for line
  // models, diag(1/(1+|z|^2), 1/(1+|w|^2)) for the product.
  Mat hermitian_metric(const SamplePoint& pt) const;

  // Calibrated convention: Scal = trace_omega rho_omega with
  // rho_omega = (i/2pi) ddbar(-log det g), omega = (i/2pi) ddbar phi;
  // smooth P^1 gives exactly 2.
  double scalar_curvature(const SamplePoint& pt,
                          CurvaturePath path = CurvaturePath::analytic) const;

  // sqrt(-1) Lambda_omega F_H under the same trace convention, rank x rank.
  Mat curvature_matrix(const SamplePoint& pt,
                       CurvaturePath path = CurvaturePath::analytic) const;

  OrbifoldModel cover() const;

  SectionBasis enumerate_sections(long i, long k) const;
  // ||s||^2 under (.,.)_{i,k} on the cover (no 1/|G| factor); exact rational.
  BigRat section_norm_cover(const Section& s, long i, long k) const;
  // Raw coefficient vector of the section at pt.
  Vec eval_section_raw(const Section& s, long i, const SamplePoint& pt) const;
  // Scaled frame (H^i)^{1/2} e^{-k phi / 2} * raw value; bounded for large k.
  Vec eval_section_scaled(const Section& s, long i, long k, const SamplePoint& pt) const;

  std::vector<SamplePoint> default_sample_points(int count) const;

 private:
  OrbifoldModel() = default;
  void check_in_chart(const SamplePoint& pt) const;

  ModelVariant variant_ = ModelVariant::smooth_p1;
  long n_ = 1;
  long rank_ = 1;
  long m_ = 1;
  long bundle_char_ = 0;
  GroupSpec group_;
};

// sum_{|mu|=i} (mu1 M11 + mu2 M22) = (i(i+1)/2) tr(M); 0 at i = 0.
double twist_trace(const Mat& m, long i);

// Fourth-order complex Hessian (d_{z_a} d_{zbar_b} f) of a real scalar
// function of n complex variables.
Eigen::MatrixXcd complex_hessian(const std::function<double(const std::vector<cdx>&)>& f,
                                 const std::vector<cdx>& at, double h);

}  // namespace bol
