#include "ogw/maslov.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace ogw {

namespace {

std::complex<double> frame_det(const Frame& f, double tol) {
  std::complex<double> d = f.determinant();
  if (std::abs(d) <= tol) throw std::runtime_error("degenerate frame");
  return d;
}

// Principal-branch increment of arg(det^2) between two frames, bisecting
// by linear interpolation while a step reaches pi/2.
double phase_increment(const Frame& f0, const Frame& f1, const MaslovOptions& opts, int depth) {
  const std::complex<double> d0 = frame_det(f0, opts.tol);
  const std::complex<double> d1 = frame_det(f1, opts.tol);
  const std::complex<double> q = d1 / d0;
  const double delta = std::arg(q * q);
  if (std::abs(delta) < std::numbers::pi / 2) return delta;
  if (depth >= opts.max_refine_depth) throw std::runtime_error("undersampled loop");
  const Frame mid = (f0 + f1) / 2.0;
  return phase_increment(f0, mid, opts, depth + 1) + phase_increment(mid, f1, opts, depth + 1);
}

}  // namespace

bool is_totally_real(const Frame& frame, double tol) {
  if (frame.rows() != frame.cols()) {
    throw std::invalid_argument("frame must be a square matrix of column vectors");
  }
  if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
  return std::abs(frame.determinant()) > tol;
}

TotallyRealLoop TotallyRealLoop::from_samples(std::vector<Frame> samples,
                                              const MaslovOptions& opts) {
  if (samples.size() < 2) throw std::invalid_argument("a loop needs at least two samples");
  const Eigen::Index n = samples.front().rows();
  for (const Frame& f : samples) {
    if (f.rows() != n || f.cols() != n) {
      throw std::invalid_argument("loop samples must all be n x n");
    }
    if (!is_totally_real(f, opts.tol)) {
      throw std::runtime_error("loop sample is not totally real");
    }
  }
  // Closure witness: g with F(t_0) g = F(t_{N-1}), real and invertible.
  Eigen::MatrixXcd g = samples.front().fullPivLu().solve(samples.back());
  if (g.imag().cwiseAbs().maxCoeff() > opts.closure_tol) {
    throw std::runtime_error("loop does not close: closure witness is not real");
  }
  Eigen::MatrixXd g_real = g.real();
  if (std::abs(g_real.determinant()) <= opts.tol) {
    throw std::runtime_error("loop does not close: closure witness is singular");
  }
  TotallyRealLoop loop;
  loop.samples_ = std::move(samples);
  loop.closure_ = std::move(g_real);
  loop.opts_ = opts;
  return loop;
}

int maslov_index(const TotallyRealLoop& loop) {
  const auto& s = loop.samples();
  const MaslovOptions& opts = loop.options();
  double total = 0;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    total += phase_increment(s[i], s[i + 1], opts, 0);
  }
  const double winding = total / (2 * std::numbers::pi);
  const long long mu = std::llround(winding);
  if (std::abs(total - 2 * std::numbers::pi * static_cast<double>(mu)) > 1e-6) {
    throw std::runtime_error("accumulated phase is not an integer winding");
  }
  return static_cast<int>(mu);
}

int loop_w1(const TotallyRealLoop& loop) {
  return ((maslov_index(loop) % 2) + 2) % 2;
}

namespace {

std::vector<Frame> resample(const std::vector<Frame>& s, int count) {
  const int n = static_cast<int>(s.size());
  if (n == count) return s;
  std::vector<Frame> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) * (n - 1) / (count - 1);
    const int j = std::min(static_cast<int>(t), n - 2);
    const double frac = t - j;
    out.push_back((1 - frac) * s[j] + frac * s[j + 1]);
  }
  return out;
}

}  // namespace

TotallyRealLoop direct_sum(const TotallyRealLoop& a, const TotallyRealLoop& b) {
  const int count = std::max(a.sample_count(), b.sample_count());
  const std::vector<Frame> sa = resample(a.samples(), count);
  const std::vector<Frame> sb = resample(b.samples(), count);
  const int na = a.rank();
  const int nb = b.rank();
  std::vector<Frame> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Frame f = Frame::Zero(na + nb, na + nb);
    f.topLeftCorner(na, na) = sa[i];
    f.bottomRightCorner(nb, nb) = sb[i];
    out.push_back(std::move(f));
  }
  return TotallyRealLoop::from_samples(std::move(out), a.options());
}

TotallyRealLoop conjugate_loop(const TotallyRealLoop& a) {
  std::vector<Frame> out;
  out.reserve(a.sample_count());
  for (const Frame& f : a.samples()) out.push_back(f.conjugate());
  return TotallyRealLoop::from_samples(std::move(out), a.options());
}

bool pairs_isomorphic(const BundlePairDescriptor& a, const BundlePairDescriptor& b,
                      std::string* why) {
  if (a.rank != b.rank) {
    if (why) *why = "rank mismatch";
    return false;
  }
  if (a.w1_bits.size() != b.w1_bits.size()) {
    if (why) *why = "boundary component count mismatch";
    return false;
  }
  if (a.maslov != b.maslov) {
    if (why) *why = "total Maslov index differs";
    return false;
  }
  if (a.w1_bits != b.w1_bits) {
    if (why) *why = "w1 classes differ";
    return false;
  }
  if (why) why->clear();
  return true;
}

}  // namespace ogw
