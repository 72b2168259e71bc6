#include "jbmeans/random.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

#include "jbmeans/errors.hpp"
#include "jbmeans/spectral.hpp"

namespace jbmeans {

namespace {

double gaussian(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

double log_uniform(double low, double high, Rng& rng) {
  if (low == high) return low;
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return std::exp(std::log(low) + u * (std::log(high) - std::log(low)));
}

template <typename Matrix>
Matrix random_unitary(int n, Rng& rng) {
  Matrix g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if constexpr (std::is_same_v<typename Matrix::Scalar, double>) {
        g(i, j) = gaussian(rng);
      } else {
        g(i, j) = {gaussian(rng), gaussian(rng)};
      }
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(n, n);
}

Element combine(const std::vector<Element>& frame, const std::vector<double>& values) {
  Element sum = Element::zero(frame.front().descriptor());
  for (std::size_t i = 0; i < frame.size(); ++i) sum += values[i] * frame[i];
  return sum;
}

}  // namespace

void PositiveGenSpec::validate() const {
  if (!(spectrum_low > 0.0) || !(spectrum_high >= spectrum_low) ||
      !std::isfinite(spectrum_high)) {
    throw DomainError("PositiveGenSpec: need 0 < spectrum_low <= spectrum_high");
  }
}

std::vector<Element> random_frame(const AlgebraDescriptor& desc, Rng& rng) {
  std::vector<Element> frame;
  switch (desc.kind()) {
    case AlgebraKind::RealSymmetric: {
      const int n = desc.order();
      const Eigen::MatrixXd q = random_unitary<Eigen::MatrixXd>(n, rng);
      for (int i = 0; i < n; ++i) {
        frame.push_back(from_real_matrix(q.col(i) * q.col(i).transpose()));
      }
      break;
    }
    case AlgebraKind::ComplexHermitian: {
      const int n = desc.order();
      const Eigen::MatrixXcd q = random_unitary<Eigen::MatrixXcd>(n, rng);
      for (int i = 0; i < n; ++i) {
        frame.push_back(from_complex_matrix(q.col(i) * q.col(i).adjoint()));
      }
      break;
    }
    case AlgebraKind::SpinFactor: {
      const int d = desc.order();
      Eigen::VectorXd v(d);
      do {
        for (int i = 0; i < d; ++i) v[i] = gaussian(rng);
      } while (v.norm() == 0.0);
      v.normalize();
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd c(d + 1);
        c[0] = 0.5;
        c.tail(d) = 0.5 * sign * v;
        frame.emplace_back(desc, std::move(c));
      }
      break;
    }
    case AlgebraKind::Albert: {
      // The frame of a Gaussian element, redrawn until its eigenvalues are
      // well separated so the idempotents are accurate to rounding.
      for (;;) {
        const SpectralDecomposition sd = spectral_decompose(random_element(desc, rng));
        if (sd.eigenvalues.size() != 3) continue;
        const double gap = std::min(sd.eigenvalues[0] - sd.eigenvalues[1],
                                    sd.eigenvalues[1] - sd.eigenvalues[2]);
        if (gap > 1e-2 * sd.norm()) return sd.idempotents;
      }
    }
  }
  return frame;
}

Element random_positive(const AlgebraDescriptor& desc, double low, double high,
                        Rng& rng) {
  PositiveGenSpec{low, high, 0}.validate();
  const std::vector<Element> frame = random_frame(desc, rng);
  std::vector<double> values(frame.size());
  for (double& v : values) v = log_uniform(low, high, rng);
  return combine(frame, values);
}

Element random_positive(const AlgebraDescriptor& desc, const PositiveGenSpec& spec) {
  Rng rng(spec.seed);
  return random_positive(desc, spec.spectrum_low, spec.spectrum_high, rng);
}

Element random_invertible(const AlgebraDescriptor& desc, double low, double high,
                          Rng& rng) {
  PositiveGenSpec{low, high, 0}.validate();
  const std::vector<Element> frame = random_frame(desc, rng);
  std::vector<double> values(frame.size());
  for (double& v : values) {
    const double sign = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
    v = sign * log_uniform(low, high, rng);
  }
  return combine(frame, values);
}

Element random_element(const AlgebraDescriptor& desc, Rng& rng) {
  Eigen::VectorXd c(desc.dimension());
  for (int i = 0; i < c.size(); ++i) c[i] = gaussian(rng);
  return Element(desc, std::move(c));
}

}  // namespace jbmeans
