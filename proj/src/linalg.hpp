#pragma once

#include <cstddef>
#include <vector>

namespace diskrad {

// Row i couples lower[i]*x[i-1] + diag[i]*x[i] + upper[i]*x[i+1].
// lower[0] and upper[n-1] are unused.
struct Tridiagonal {
  std::vector<double> lower, diag, upper;

  explicit Tridiagonal(std::size_t n) : lower(n), diag(n), upper(n) {}
  std::size_t size() const { return diag.size(); }
};

// Thomas elimination without pivoting. The callers assemble strictly
// diagonally dominant systems, for which this is stable; a vanishing or
// non-finite pivot throws NumericalError.
std::vector<double> solve_tridiagonal(const Tridiagonal& m,
                                      std::vector<double> rhs);

// Square banded matrix with equal lower/upper half-bandwidth and in-place
// non-pivoting LU. Intended for the diagonally dominant systems produced by
// the axisymmetric discretizations here.
class BandedMatrix {
 public:
  BandedMatrix(std::size_t n, std::size_t half_bandwidth);

  std::size_t size() const { return n_; }
  std::size_t half_bandwidth() const { return b_; }

  double& at(std::size_t i, std::size_t j);
  double at(std::size_t i, std::size_t j) const;

  void factor();                                // throws on breakdown
  void solve_factored(std::vector<double>& rhs) const;

 private:
  std::size_t offset(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::size_t b_ = 0;
  bool factored_ = false;
  std::vector<double> a_;  // row-major band storage, width 2b+1
};

}  // namespace diskrad
