#ifndef RAOFV_FIELD_HPP
#define RAOFV_FIELD_HPP

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "raofv/interaction.hpp"
#include "raofv/mesh.hpp"

namespace raofv {

/// Pointwise initial datum for one species.
using PointFunction = std::function<double(const std::array<double, 2>&)>;

/// Piecewise-constant multi-species state: one n-vector per mesh cell,
/// stored cell-major.
class SpeciesField {
public:
  SpeciesField() = default;
  SpeciesField(int n_species, int n_cells)
      : n_(n_species), values_(static_cast<size_t>(n_species) * n_cells, 0.0) {}

  /// Cellwise L2 projection of pointwise initial data, approximated by
  /// tensor-product 3-point Gauss-Legendre quadrature (exact for
  /// polynomials of degree <= 5 per axis).
  static SpeciesField project(const Mesh& mesh, const std::vector<PointFunction>& u0);

  int species() const { return n_; }
  int cell_count() const { return n_ == 0 ? 0 : static_cast<int>(values_.size()) / n_; }

  double operator()(int cell, int i) const { return values_[cell * n_ + i]; }
  double& operator()(int cell, int i) { return values_[cell * n_ + i]; }
  std::span<const double> cell(int k) const { return {values_.data() + k * n_, size_t(n_)}; }
  std::span<double> cell(int k) { return {values_.data() + k * n_, size_t(n_)}; }

  std::span<const double> data() const { return values_; }
  std::span<double> data() { return values_; }

  /// One value per cell for species i.
  std::vector<double> component(int i) const;

  bool all_finite() const;

  bool operator==(const SpeciesField& o) const = default;

private:
  int n_ = 0;
  std::vector<double> values_;
};

/// Discrete Lebesgue norm ||v||_{0,q} over per-cell values; q = infinity
/// gives the max norm.
double norm_0q(const Mesh& mesh, std::span<const double> v, double q);
/// Discrete Sobolev seminorm |v|_{1,q}: interior-edge differences scaled
/// by transmissibility weights; boundary edges contribute zero.
double seminorm_1q(const Mesh& mesh, std::span<const double> v, double q);
/// (||v||^q + |v|^q)^{1/q}; max of the two pieces when q = infinity.
double norm_1q(const Mesh& mesh, std::span<const double> v, double q);

struct WeightedNorms {
  double l2;       // || A^{1/2} u ||_{0,2}
  double h1_semi;  // |  A^{1/2} u |_{1,2}
};
/// Norms of the field transformed cellwise by A^{1/2}, with the species
/// components combined as Euclidean vectors.
WeightedNorms weighted_field_norms(const Mesh& mesh, const InteractionMatrix& a,
                                   const SpeciesField& u);

/// Per-species sum of m(K) * u_{i,K}.
std::vector<double> total_mass(const Mesh& mesh, const SpeciesField& u);

/// Two-state Rao entropy H(u, v) = sum_K m(K) h(u_K, v_K); nonnegative.
double rao_entropy_pair(const Mesh& mesh, const InteractionMatrix& a,
                        const SpeciesField& u, const SpeciesField& v);
/// Single-state Rao entropy H(u) = H(u, u) = (1/2) sum_K m(K) |u_K|_A^2.
double rao_entropy(const Mesh& mesh, const InteractionMatrix& a,
                   const SpeciesField& u);

/// ||v - mean(v)||_{0,2} / |v|_{1,2}; the mesh's Poincare-Wirtinger
/// quotient of a scalar field (infinite for constant nonzero deviation).
double poincare_wirtinger_ratio(const Mesh& mesh, std::span<const double> v);

}  // namespace raofv

#endif
