#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "models.hpp"
#include "quadrature.hpp"
#include "weights.hpp"

namespace bol {

struct InnerProductScheme {
  enum class Mode { analytic, quadrature };
  Mode mode = Mode::analytic;
  QuadratureSpec quad;
  bool validate = true;  // node-doubling self check in quadrature mode
};

struct GramMatrix {
  Mat mat;
  long i = 0, k = 1;
  InnerProductScheme scheme;
};

// Entry (a,b) = (s_a, s_b)_{i,k} including the orbifold 1/|G| factor.
GramMatrix gram(const OrbifoldModel& model, const SectionBasis& basis,
                const InnerProductScheme& scheme);

// coeff = inverse adjoint Cholesky factor; columns express an orthonormal
// basis in terms of the raw sections. diagonal marks the monomial-orthogonal
// case so evaluation can skip the dense transform.
struct OrthonormalBasis {
  Mat coeff;
  bool diagonal = false;
};
OrthonormalBasis orthonormal_basis(const GramMatrix& g);

// enumerate -> gram -> orthonormalize for one (i, k); immutable afterwards.
struct Pipeline {
  SectionBasis basis;
  GramMatrix gram;
  OrthonormalBasis onb;
  long dim() const { return static_cast<long>(basis.elements.size()); }
};
Pipeline build_pipeline(const OrbifoldModel& model, long i, long k,
                        const InnerProductScheme& scheme);

class PipelineCache {
 public:
  std::shared_ptr<const Pipeline> get(const OrbifoldModel& model, long i, long k,
                                      const InnerProductScheme& scheme);

 private:
  std::map<std::tuple<long, long, int>, std::shared_ptr<const Pipeline>> map_;
  std::mutex mu_;
};

// B_{i,k}(pt) as an endomorphism matrix in the multi-index basis; trace equals
// the metric norm-square sum of the orthonormal sections at pt.
Mat bergman_endo(const OrbifoldModel& model, const Pipeline& pipe, const SamplePoint& pt);

// |(u, K(.,pt))_{k,G} - u(pt)| for u given by coefficients over the raw basis,
// measured in the scaled frame.
double reproduce_check(const OrbifoldModel& model, const Pipeline& pipe, const Vec& u_coeffs,
                       const SamplePoint& pt);

// Raw kernel matrix sum_b t_b(y) t_b(x)^* of a pipeline's orthonormal basis.
Mat kernel_matrix(const OrbifoldModel& model, const Pipeline& pipe, const SamplePoint& y,
                  const SamplePoint& x);

// (1/|G|) sum_{g,h} conj(rho^{i,k}(h^{-1})) K(g y, h x) rho^{i,k}(g^{-1})^t
// for a caller-supplied kernel on the cover.
using KernelFn = std::function<Mat(const SamplePoint&, const SamplePoint&)>;
Mat average_kernel(const KernelFn& cover_kernel, const OrbifoldModel& model, long i, long k,
                   const SamplePoint& y, const SamplePoint& x);

// B_k^orb(pt) = sum_ij c_ij tau_{i,k+j}(B_{i,k+j}(pt)).
Mat orbifold_bergman(const OrbifoldModel& model, const WeightTable& weights, long k,
                     const SamplePoint& pt, const InnerProductScheme& scheme,
                     PipelineCache& cache);

// sum_i c_i B_{k+i}(pt) for line-bundle models.
double scalar_weighted_bergman(const OrbifoldModel& model, const WeightTable& weights, long k,
                               const SamplePoint& pt, const InnerProductScheme& scheme,
                               PipelineCache& cache);

}  // namespace bol
