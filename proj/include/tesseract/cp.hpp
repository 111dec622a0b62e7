#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tesseract/tensor.hpp"

namespace tesseract {

// Rank-k CP form: sum_r weights[r] * outer(factors[0].col(r), ...,
// factors.back().col(r)). Factor columns are kept at unit l2 norm with
// magnitudes absorbed into the weights.
struct CPModel {
  int rank = 0;
  Eigen::VectorXd weights;               // size rank
  std::vector<Eigen::MatrixXd> factors;  // one per mode, mode_size x rank

  std::vector<int> shape() const;
  bool columns_normalized(double tol = 1e-9) const;
};

enum class CpInit { kRandomNormal, kHosvdLike };

struct ALSOptions {
  int max_sweeps = 200;
  double rel_tol = 1e-12;
  CpInit init_scheme = CpInit::kRandomNormal;
  double ridge = 0.0;
  std::uint64_t seed = 0;
};

// Partially observed tensor; `count` is the number of samples behind an
// entry and weights its residual in the completion objective.
struct ObservedEntry {
  MultiIndex index;
  double value = 0.0;
  int count = 1;
};

struct ObservedEntrySet {
  std::vector<int> shape;
  std::vector<ObservedEntry> entries;
};

DenseTensor cp_reconstruct(const CPModel& model);

// <model, outer(action_vectors)> without materializing the tensor; O(nkm).
double factored_inner_product(const CPModel& model,
                              const std::vector<std::vector<double>>& action_vectors);

// Alternating least squares fit of a dense tensor. Residual (||t - recon||_F
// relative to ||t||_F) is non-increasing across sweeps.
CPModel cp_als(const DenseTensor& t, int rank, const ALSOptions& opts = {});

// Same, reporting the per-sweep relative residual trace.
struct CpFit {
  CPModel model;
  std::vector<double> residual_trace;
};
CpFit cp_als_fit(const DenseTensor& t, int rank, const ALSOptions& opts = {});
CpFit cp_als_fit_warm(const DenseTensor& t, int rank, const ALSOptions& opts,
                      const CPModel* warm_start);

// Masked ALS over the observed entries only, count-weighted and
// ridge-regularized. The objective trace is non-increasing.
CPModel cp_complete(const ObservedEntrySet& obs, int rank, const ALSOptions& opts = {});
CpFit cp_complete_fit(const ObservedEntrySet& obs, int rank, const ALSOptions& opts = {});

double cp_relative_residual(const DenseTensor& t, const CPModel& model);

// mu = sqrt(n) * max |factor entry|; w_max / w_min over the weights.
struct CoherenceStats {
  double mu = 0.0;
  double w_max = 0.0;
  double w_min = 0.0;
};
CoherenceStats coherence(const CPModel& model);

// Minimum joint-action probability (up to the problem-dependent constant)
// a behaviour policy must place on every joint action for low-rank recovery
// of the dynamics to go through. Natural log throughout.
double policy_floor(const CoherenceStats& stats, int n_agents, int actions_per_agent,
                    int rank, double log_term);

// Number of independent estimates needed to boost confidence: the smallest
// M with M >= ln(3*S/delta) / (2*eta^2).
int boost_count(double eta, int num_states, double delta);

// Member of the largest subset of estimates that is pairwise within
// Frobenius distance 2*eps/3. Ties break toward the lowest estimate index.
DenseTensor cluster_boost(const std::vector<DenseTensor>& estimates, double eps);
std::size_t cluster_boost_index(const std::vector<DenseTensor>& estimates, double eps);

// Serialized as a weights line followed by one tensor block (shape line +
// row-major line) per factor matrix.
void save_cp_model(std::ostream& os, const CPModel& model);
CPModel load_cp_model(std::istream& is);
void save_cp_model_file(const std::string& path, const CPModel& model);
CPModel load_cp_model_file(const std::string& path);

}  // namespace tesseract
