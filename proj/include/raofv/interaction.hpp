#ifndef RAOFV_INTERACTION_HPP
#define RAOFV_INTERACTION_HPP

#include <span>
#include <utility>
#include <vector>

namespace raofv {

/// Symmetric positive definite species-coupling matrix with cached
/// spectral data and matrix square root.
///
/// Carries the quadratic entropy density
///   h(u, v) = (5 u'Au - 4 u'Av + v'Av) / 4
/// and the two-step identity
///   (3/2 u - 2v + w/2)'Au = h(u,v) - h(v,w) + |u - 2v + w|_A^2 / 4
/// that make the BDF2 scheme entropy stable.
class InteractionMatrix {
public:
  /// Builds from raw coefficients. Entries must be symmetric to within
  /// 1e-12 absolute (then symmetrized as (M + M')/2). Rejects matrices
  /// that are not positive definite; `allow_semidefinite` relaxes the
  /// check to lambda_min >= -1e-14 * lambda_max so that singular limits
  /// can still be run.
  static InteractionMatrix build(const std::vector<std::vector<double>>& entries,
                                 bool allow_semidefinite = false);

  int species() const { return n_; }
  double entry(int i, int j) const { return entries_[i * n_ + j]; }
  double sqrt_entry(int i, int j) const { return sqrt_entries_[i * n_ + j]; }
  double lambda_min() const { return lambda_min_; }
  double lambda_max() const { return lambda_max_; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }

  /// out = A u
  void apply(std::span<const double> u, std::span<double> out) const;
  /// out = A^{1/2} u
  void apply_sqrt(std::span<const double> u, std::span<double> out) const;
  /// (A u)_i, the partial pressure of species i at state u.
  double pressure(std::span<const double> u, int i) const;

  /// u'Au
  double weighted_norm_sq(std::span<const double> u) const;
  /// u'Av
  double weighted_inner(std::span<const double> u, std::span<const double> v) const;

  /// h(u, v); nonnegative for any pair.
  double entropy_density(std::span<const double> u, std::span<const double> v) const;

  struct Bdf2Parts {
    double lhs;           // (3/2 u - 2v + w/2)'Au
    double entropy_diff;  // h(u,v) - h(v,w)
    double remainder;     // |u - 2v + w|_A^2 / 4, always >= 0
  };
  /// The three members satisfy lhs = entropy_diff + remainder exactly
  /// (an algebraic identity, up to rounding).
  Bdf2Parts bdf2_identity_parts(std::span<const double> u, std::span<const double> v,
                                std::span<const double> w) const;

  /// {lower, upper} with lower <= h(u,v) <= upper, where
  /// lower = (3 - sqrt(8))(|u|_A^2 + |v|_A^2)/4 and upper uses (3 + sqrt(8)).
  std::pair<double, double> entropy_sandwich_bounds(std::span<const double> u,
                                                    std::span<const double> v) const;

private:
  InteractionMatrix() = default;

  void check_dim(std::span<const double> u, const char* where) const;

  int n_ = 0;
  std::vector<double> entries_;       // row-major n x n
  std::vector<double> sqrt_entries_;  // row-major n x n
  std::vector<double> eigenvalues_;   // ascending
  double lambda_min_ = 0.0;
  double lambda_max_ = 0.0;
};

}  // namespace raofv

#endif
