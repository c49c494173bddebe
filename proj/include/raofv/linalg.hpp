#ifndef RAOFV_LINALG_HPP
#define RAOFV_LINALG_HPP

#include <span>
#include <vector>

namespace raofv {

/// Eigen-decomposition of a small dense symmetric matrix.
/// `vectors` is column-major: column j holds the eigenvector of `values[j]`.
struct SymmetricEigen {
  std::vector<double> values;
  std::vector<double> vectors;
};

/// Cyclic Jacobi rotations; suitable for the small matrices (n <= ~30)
/// this library works with. `a` is a row-major n*n symmetric matrix.
SymmetricEigen symmetric_eigen(std::span<const double> a, int n);

/// General band matrix with `kl` sub- and `ku` superdiagonals, stored in
/// banded layout with room for the fill-in produced by partial pivoting.
class BandMatrix {
public:
  BandMatrix(int n, int kl, int ku);

  int size() const { return n_; }
  int lower_bandwidth() const { return kl_; }
  int upper_bandwidth() const { return ku_; }

  /// Entry reference; (i, j) must lie within the declared band.
  double& at(int i, int j);
  /// Entry value; zero outside the band.
  double get(int i, int j) const;

  void set_zero();

  /// y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;

  /// In-place LU factorization with partial pivoting.
  /// Throws LinearSolveFailure on an exactly singular pivot.
  void factorize();

  /// Solves A x = b in place using the factors; requires factorize() first.
  void solve(std::span<double> b) const;

private:
  int n_;
  int kl_;
  int ku_;
  int rows_;  // 2*kl + ku + 1
  bool factorized_ = false;
  std::vector<double> data_;  // data_[row * n_ + j], row = kl + ku + i - j
  std::vector<int> pivots_;
};

/// Slope of the least-squares line through (x_i, y_i).
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace raofv

#endif
