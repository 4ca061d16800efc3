#include "linalg.hpp"

#include <cmath>

#include "errors.hpp"

namespace diskrad {

namespace {

void check_pivot(double p) {
  if (!std::isfinite(p) || p == 0.0)
    throw NumericalError("linear solve: singular or non-finite pivot");
}

}  // namespace

std::vector<double> solve_tridiagonal(const Tridiagonal& m,
                                      std::vector<double> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n)
    throw InvalidParameter("solve_tridiagonal: size mismatch");
  if (n == 0) return rhs;

  std::vector<double> c(n, 0.0);
  check_pivot(m.diag[0]);
  c[0] = m.upper[0] / m.diag[0];
  rhs[0] /= m.diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double denom = m.diag[i] - m.lower[i] * c[i - 1];
    check_pivot(denom);
    if (i + 1 < n) c[i] = m.upper[i] / denom;
    rhs[i] = (rhs[i] - m.lower[i] * rhs[i - 1]) / denom;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
  return rhs;
}

BandedMatrix::BandedMatrix(std::size_t n, std::size_t half_bandwidth)
    : n_(n), b_(half_bandwidth), a_(n * (2 * half_bandwidth + 1), 0.0) {}

std::size_t BandedMatrix::offset(std::size_t i, std::size_t j) const {
  // valid only for |i - j| <= b_
  return i * (2 * b_ + 1) + (j + b_ - i);
}

double& BandedMatrix::at(std::size_t i, std::size_t j) {
  return a_[offset(i, j)];
}

double BandedMatrix::at(std::size_t i, std::size_t j) const {
  return a_[offset(i, j)];
}

void BandedMatrix::factor() {
  for (std::size_t k = 0; k < n_; ++k) {
    const double pivot = at(k, k);
    check_pivot(pivot);
    const std::size_t last = std::min(k + b_, n_ - 1);
    for (std::size_t i = k + 1; i <= last; ++i) {
      const double mult = at(i, k) / pivot;
      at(i, k) = mult;
      for (std::size_t j = k + 1; j <= last; ++j)
        at(i, j) -= mult * at(k, j);
    }
  }
  factored_ = true;
}

void BandedMatrix::solve_factored(std::vector<double>& rhs) const {
  if (!factored_) throw NumericalError("banded solve before factor");
  if (rhs.size() != n_) throw InvalidParameter("banded solve: size mismatch");
  for (std::size_t k = 0; k < n_; ++k) {
    const std::size_t last = std::min(k + b_, n_ - 1);
    for (std::size_t i = k + 1; i <= last; ++i) rhs[i] -= at(i, k) * rhs[k];
  }
  for (std::size_t k = n_; k-- > 0;) {
    const std::size_t last = std::min(k + b_, n_ - 1);
    double x = rhs[k];
    for (std::size_t j = k + 1; j <= last; ++j) x -= at(k, j) * rhs[j];
    rhs[k] = x / at(k, k);
  }
}

}  // namespace diskrad
