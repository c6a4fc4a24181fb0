#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace ogw {

// A frame is an n x n complex matrix whose columns span a subspace of C^n;
// the subspace is totally real exactly when the complex determinant is
// nonzero.
using Frame = Eigen::MatrixXcd;

bool is_totally_real(const Frame& frame, double tol);

struct MaslovOptions {
  double tol = 1e-9;          // determinant degeneracy threshold
  int max_refine_depth = 12;  // bisection levels for oversized phase steps
  double closure_tol = 1e-6;  // tolerance for the real closure witness
};

// Sampled closed loop of totally real subspaces of C^n. The last sample
// spans the same subspace as the first: F(t_0) g = F(t_{N-1}) for some
// real invertible g (the closure witness).
class TotallyRealLoop {
 public:
  static TotallyRealLoop from_samples(std::vector<Frame> samples,
                                      const MaslovOptions& opts = {});

  int rank() const { return static_cast<int>(samples_.front().rows()); }
  int sample_count() const { return static_cast<int>(samples_.size()); }
  const std::vector<Frame>& samples() const { return samples_; }
  const MaslovOptions& options() const { return opts_; }
  const Eigen::MatrixXd& closure_witness() const { return closure_; }

 private:
  TotallyRealLoop() = default;

  std::vector<Frame> samples_;
  Eigen::MatrixXd closure_;
  MaslovOptions opts_;
};

// Winding number of the squared determinant phase around the loop, as an
// exact integer. Phase increments are taken on the principal branch and
// steps of at least pi/2 are bisected by linear frame interpolation;
// running out of refinement depth raises "undersampled loop".
int maslov_index(const TotallyRealLoop& loop);

// First Stiefel-Whitney class of the loop: the index mod 2.
int loop_w1(const TotallyRealLoop& loop);

// Blockwise direct sum; the coarser loop is resampled by linear
// interpolation when the sample counts differ.
TotallyRealLoop direct_sum(const TotallyRealLoop& a, const TotallyRealLoop& b);

// Entrywise complex conjugation; negates the index.
TotallyRealLoop conjugate_loop(const TotallyRealLoop& a);

// Topological classification data of a bundle pair over a bordered
// surface: rank, total index, and per-boundary-component w1 bits.
struct BundlePairDescriptor {
  int rank = 1;
  long long maslov = 0;
  std::vector<int> w1_bits;
};

// Bundle pairs are isomorphic iff rank, component count, total index and
// the w1 lists agree. Mismatched shapes yield false with a diagnostic.
bool pairs_isomorphic(const BundlePairDescriptor& a, const BundlePairDescriptor& b,
                      std::string* why = nullptr);

}  // namespace ogw
