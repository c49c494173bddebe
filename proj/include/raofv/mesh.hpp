#ifndef RAOFV_MESH_HPP
#define RAOFV_MESH_HPP

#include <array>
#include <span>
#include <vector>

namespace raofv {

struct Cell {
  int id = 0;
  std::array<double, 2> center{0.0, 0.0};
  std::array<double, 2> lo{0.0, 0.0};  // box corners (tensor-product cells)
  std::array<double, 2> hi{0.0, 0.0};
  double measure = 0.0;
};

/// A face between two cells (interior) or a cell and the boundary.
/// Interior edges carry the TPFA transmissibility tau = m(sigma)/d_sigma
/// and the measure of the dual "diamond" cell spanned by the edge and
/// the two adjacent centers; boundary edges carry the dual triangle.
struct Edge {
  int id = 0;
  int cell_k = -1;
  int cell_l = -1;  // -1 for boundary edges
  double measure = 0.0;        // m(sigma); equals 1 in 1D
  double d_sigma = 0.0;        // center-to-center (interior) or center-to-face
  double tau = 0.0;            // measure / d_sigma
  std::array<double, 2> normal{0.0, 0.0};  // unit normal pointing out of cell_k
  double dist_k = 0.0;         // d(x_K, sigma)
  double dist_l = 0.0;         // d(x_L, sigma); 0 for boundary edges
  double dual_measure = 0.0;   // m(T_{K,sigma})

  bool interior() const { return cell_l >= 0; }
};

/// Admissible tensor-product mesh (1D interval, possibly graded, or 2D
/// rectangle). Cell centers are box midpoints, so the segment between
/// neighboring centers is orthogonal to the shared face by construction.
class Mesh {
public:
  /// Uniform subdivision of (a, b) into n_cells cells. Requires
  /// n_cells >= 2 and a < b.
  static Mesh interval(int n_cells, double a, double b);

  /// 1D mesh from explicit, strictly increasing cell boundaries
  /// (size >= 3). Exercises regularity constants zeta < 1/2.
  static Mesh interval_graded(const std::vector<double>& boundaries);

  /// Uniform nx-by-ny grid on the axis-aligned rectangle
  /// (x0, x1) x (y0, y1). Requires nx, ny >= 2.
  static Mesh rectangle(int nx, int ny, double x0, double x1, double y0, double y1);

  int dimension() const { return dim_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edge ids incident to cell k.
  const std::vector<int>& cell_edges(int k) const { return adjacency_[k]; }

  double zeta() const { return zeta_; }          // min d(x_K, sigma)/d_sigma
  double xi() const { return xi_; }              // min interior d_sigma / dx
  double dx() const { return dx_; }              // max cell diameter
  double domain_measure() const { return domain_measure_; }

private:
  Mesh() = default;
  void finalize();

  int dim_ = 1;
  std::vector<Cell> cells_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  double zeta_ = 0.0;
  double xi_ = 0.0;
  double dx_ = 0.0;
  double domain_measure_ = 0.0;
};

/// Piecewise-constant gradient on the dual mesh: one vector per edge,
/// (m(sigma)/m(T)) * (v_L - v_K) * normal on interior diamonds and the
/// zero vector on boundary triangles (no-flux).
std::vector<std::array<double, 2>> discrete_gradient(const Mesh& mesh,
                                                     std::span<const double> field);

}  // namespace raofv

#endif
