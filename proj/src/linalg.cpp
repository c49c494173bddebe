#include "raofv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "raofv/errors.hpp"

namespace raofv {

SymmetricEigen symmetric_eigen(std::span<const double> a, int n) {
  if (n < 1 || static_cast<int>(a.size()) != n * n)
    throw DimensionMismatch("symmetric_eigen: matrix size does not match n");

  std::vector<double> m(a.begin(), a.end());
  std::vector<double> q(n * n, 0.0);
  for (int i = 0; i < n; ++i) q[i * n + i] = 1.0;

  auto off = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += m[i * n + j] * m[i * n + j];
    return s;
  };

  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps && off() > 0.0; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int qi = p + 1; qi < n; ++qi) {
        const double apq = m[p * n + qi];
        if (apq == 0.0) continue;
        const double app = m[p * n + p];
        const double aqq = m[qi * n + qi];
        const double theta = (aqq - app) / (2.0 * apq);
        // stable tangent of the rotation angle
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                             : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double mkp = m[k * n + p];
          const double mkq = m[k * n + qi];
          m[k * n + p] = c * mkp - s * mkq;
          m[k * n + qi] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = m[p * n + k];
          const double mqk = m[qi * n + k];
          m[p * n + k] = c * mpk - s * mqk;
          m[qi * n + k] = s * mpk + c * mqk;
        }
        m[p * n + qi] = 0.0;
        m[qi * n + p] = 0.0;
        for (int k = 0; k < n; ++k) {
          const double qkp = q[k * n + p];
          const double qkq = q[k * n + qi];
          q[k * n + p] = c * qkp - s * qkq;
          q[k * n + qi] = s * qkp + c * qkq;
        }
      }
    }
  }

  SymmetricEigen out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = m[i * n + i];
  out.vectors = std::move(q);

  // sort ascending, carrying eigenvectors along
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return out.values[i] < out.values[j]; });
  SymmetricEigen sorted;
  sorted.values.resize(n);
  sorted.vectors.resize(n * n);
  for (int j = 0; j < n; ++j) {
    sorted.values[j] = out.values[order[j]];
    for (int i = 0; i < n; ++i)
      sorted.vectors[i * n + j] = out.vectors[i * n + order[j]];
  }
  return sorted;
}

BandMatrix::BandMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), rows_(2 * kl + ku + 1),
      data_(static_cast<size_t>(rows_) * n, 0.0), pivots_(n, 0) {
  if (n < 1 || kl < 0 || ku < 0)
    throw InvalidArgument("BandMatrix: invalid dimensions");
}

double& BandMatrix::at(int i, int j) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_ || i - j > kl_ || j - i > ku_)
    throw InvalidArgument("BandMatrix::at: index outside band");
  return data_[static_cast<size_t>(kl_ + ku_ + i - j) * n_ + j];
}

double BandMatrix::get(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_ || i - j > kl_ || j - i > ku_)
    return 0.0;
  return data_[static_cast<size_t>(kl_ + ku_ + i - j) * n_ + j];
}

void BandMatrix::set_zero() {
  std::fill(data_.begin(), data_.end(), 0.0);
  factorized_ = false;
}

void BandMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw DimensionMismatch("BandMatrix::multiply: vector size mismatch");
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    const int j0 = std::max(0, i - kl_);
    const int j1 = std::min(n_ - 1, i + ku_);
    for (int j = j0; j <= j1; ++j)
      s += data_[static_cast<size_t>(kl_ + ku_ + i - j) * n_ + j] * x[j];
    y[i] = s;
  }
}

// Banded LU with partial pivoting; row i of column j sits at
// data_[(kl + ku + i - j) * n + j], with kl extra superdiagonals of
// fill-in above the original band.
void BandMatrix::factorize() {
  const int kv = kl_ + ku_;  // superdiagonals of U after pivoting
  auto entry = [&](int i, int j) -> double& {
    return data_[static_cast<size_t>(kv + i - j) * n_ + j];
  };

  for (int j = 0; j < n_; ++j) {
    const int km = std::min(kl_, n_ - 1 - j);
    int jp = j;
    double pmax = std::abs(entry(j, j));
    for (int i = 1; i <= km; ++i) {
      const double v = std::abs(entry(j + i, j));
      if (v > pmax) {
        pmax = v;
        jp = j + i;
      }
    }
    pivots_[j] = jp;
    if (pmax == 0.0)
      throw LinearSolveFailure("BandMatrix::factorize: singular matrix");

    const int jm = std::min(n_ - 1, j + kv);
    if (jp != j)
      for (int c = j; c <= jm; ++c) std::swap(entry(jp, c), entry(j, c));

    const double piv = entry(j, j);
    for (int i = 1; i <= km; ++i) entry(j + i, j) /= piv;
    for (int c = j + 1; c <= jm; ++c) {
      const double f = entry(j, c);
      if (f != 0.0)
        for (int i = 1; i <= km; ++i) entry(j + i, c) -= entry(j + i, j) * f;
    }
  }
  factorized_ = true;
}

void BandMatrix::solve(std::span<double> b) const {
  if (!factorized_)
    throw LinearSolveFailure("BandMatrix::solve: factorize() not called");
  if (static_cast<int>(b.size()) != n_)
    throw DimensionMismatch("BandMatrix::solve: vector size mismatch");

  const int kv = kl_ + ku_;
  auto entry = [&](int i, int j) {
    return data_[static_cast<size_t>(kv + i - j) * n_ + j];
  };

  for (int j = 0; j < n_ - 1; ++j) {
    if (pivots_[j] != j) std::swap(b[pivots_[j]], b[j]);
    const int km = std::min(kl_, n_ - 1 - j);
    for (int i = 1; i <= km; ++i) b[j + i] -= entry(j + i, j) * b[j];
  }
  for (int j = n_ - 1; j >= 0; --j) {
    b[j] /= entry(j, j);
    const int lm = std::min(kv, j);
    for (int i = 1; i <= lm; ++i) b[j - i] -= entry(j - i, j) * b[j];
  }
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidArgument("least_squares_slope: need >= 2 matching points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw InvalidArgument("least_squares_slope: degenerate abscissae");
  return sxy / sxx;
}

}  // namespace raofv
