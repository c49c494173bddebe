#include "raofv/interaction.hpp"

#include <cmath>
#include <cstdio>

#include "raofv/errors.hpp"
#include "raofv/linalg.hpp"

namespace raofv {

namespace {
constexpr double kSymmetryTol = 1e-12;
constexpr double kDefiniteTol = 1e-14;  // relative to lambda_max
}  // namespace

InteractionMatrix InteractionMatrix::build(
    const std::vector<std::vector<double>>& entries, bool allow_semidefinite) {
  const int n = static_cast<int>(entries.size());
  if (n < 1) throw InvalidArgument("interaction matrix: empty");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n)
      throw DimensionMismatch("interaction matrix: not square");

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(entries[i][j] - entries[j][i]) > kSymmetryTol) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "interaction matrix: entries (%d,%d) and (%d,%d) differ by %g",
                      i, j, j, i, entries[i][j] - entries[j][i]);
        throw NotSymmetric(buf);
      }

  InteractionMatrix m;
  m.n_ = n;
  m.entries_.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.entries_[i * n + j] = 0.5 * (entries[i][j] + entries[j][i]);

  const SymmetricEigen eig = symmetric_eigen(m.entries_, n);
  m.eigenvalues_ = eig.values;
  m.lambda_min_ = eig.values.front();
  m.lambda_max_ = eig.values.back();

  if (m.lambda_max_ <= 0.0)
    throw NotPositiveDefinite("interaction matrix: no positive eigenvalue");
  const bool definite_ok =
      allow_semidefinite ? m.lambda_min_ >= -kDefiniteTol * m.lambda_max_
                         : m.lambda_min_ > kDefiniteTol * m.lambda_max_;
  if (!definite_ok) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "interaction matrix: smallest eigenvalue %g is not positive",
                  m.lambda_min_);
    throw NotPositiveDefinite(buf);
  }

  // A^{1/2} = Q diag(sqrt(lambda)) Q'
  m.sqrt_entries_.assign(n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += eig.vectors[i * n + k] * std::sqrt(std::max(0.0, eig.values[k])) *
             eig.vectors[j * n + k];
      m.sqrt_entries_[i * n + j] = s;
    }
  return m;
}

void InteractionMatrix::check_dim(std::span<const double> u, const char* where) const {
  if (static_cast<int>(u.size()) != n_) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s: vector has %zu entries, expected %d", where,
                  u.size(), n_);
    throw DimensionMismatch(buf);
  }
}

void InteractionMatrix::apply(std::span<const double> u, std::span<double> out) const {
  check_dim(u, "InteractionMatrix::apply");
  check_dim(out, "InteractionMatrix::apply");
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += entries_[i * n_ + j] * u[j];
    out[i] = s;
  }
}

void InteractionMatrix::apply_sqrt(std::span<const double> u,
                                   std::span<double> out) const {
  check_dim(u, "InteractionMatrix::apply_sqrt");
  check_dim(out, "InteractionMatrix::apply_sqrt");
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += sqrt_entries_[i * n_ + j] * u[j];
    out[i] = s;
  }
}

double InteractionMatrix::pressure(std::span<const double> u, int i) const {
  check_dim(u, "InteractionMatrix::pressure");
  double s = 0.0;
  for (int j = 0; j < n_; ++j) s += entries_[i * n_ + j] * u[j];
  return s;
}

double InteractionMatrix::weighted_norm_sq(std::span<const double> u) const {
  check_dim(u, "weighted_norm_sq");
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += entries_[i * n_ + j] * u[j];
    s += u[i] * row;
  }
  return s;
}

double InteractionMatrix::weighted_inner(std::span<const double> u,
                                         std::span<const double> v) const {
  check_dim(u, "weighted_inner");
  check_dim(v, "weighted_inner");
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += entries_[i * n_ + j] * v[j];
    s += u[i] * row;
  }
  return s;
}

double InteractionMatrix::entropy_density(std::span<const double> u,
                                          std::span<const double> v) const {
  return 0.25 * (5.0 * weighted_norm_sq(u) - 4.0 * weighted_inner(u, v) +
                 weighted_norm_sq(v));
}

InteractionMatrix::Bdf2Parts InteractionMatrix::bdf2_identity_parts(
    std::span<const double> u, std::span<const double> v,
    std::span<const double> w) const {
  check_dim(u, "bdf2_identity_parts");
  check_dim(v, "bdf2_identity_parts");
  check_dim(w, "bdf2_identity_parts");

  Bdf2Parts parts{};
  parts.lhs = 1.5 * weighted_norm_sq(u) - 2.0 * weighted_inner(v, u) +
              0.5 * weighted_inner(w, u);
  parts.entropy_diff = entropy_density(u, v) - entropy_density(v, w);
  std::vector<double> combo(n_);
  for (int i = 0; i < n_; ++i) combo[i] = u[i] - 2.0 * v[i] + w[i];
  parts.remainder = 0.25 * weighted_norm_sq(combo);
  return parts;
}

std::pair<double, double> InteractionMatrix::entropy_sandwich_bounds(
    std::span<const double> u, std::span<const double> v) const {
  const double sum = weighted_norm_sq(u) + weighted_norm_sq(v);
  const double r = std::sqrt(8.0);
  return {0.25 * (3.0 - r) * sum, 0.25 * (3.0 + r) * sum};
}

}  // namespace raofv
