#include "raofv/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "raofv/errors.hpp"

namespace raofv {

Mesh Mesh::interval(int n_cells, double a, double b) {
  if (n_cells < 2) throw InvalidArgument("interval mesh: need at least 2 cells");
  if (!(a < b)) throw InvalidArgument("interval mesh: need a < b");
  std::vector<double> boundaries(n_cells + 1);
  const double h = (b - a) / n_cells;
  for (int j = 0; j <= n_cells; ++j) boundaries[j] = a + j * h;
  boundaries.back() = b;
  return interval_graded(boundaries);
}

Mesh Mesh::interval_graded(const std::vector<double>& boundaries) {
  const int n = static_cast<int>(boundaries.size()) - 1;
  if (n < 2) throw InvalidArgument("interval mesh: need at least 2 cells");
  for (int j = 0; j < n; ++j)
    if (!(boundaries[j] < boundaries[j + 1]))
      throw InvalidArgument("interval mesh: boundaries must be strictly increasing");

  Mesh m;
  m.dim_ = 1;
  m.cells_.resize(n);
  for (int j = 0; j < n; ++j) {
    Cell& c = m.cells_[j];
    c.id = j;
    c.lo = {boundaries[j], 0.0};
    c.hi = {boundaries[j + 1], 0.0};
    c.center = {0.5 * (boundaries[j] + boundaries[j + 1]), 0.0};
    c.measure = boundaries[j + 1] - boundaries[j];
  }

  // interior points, then the two ends
  for (int j = 1; j < n; ++j) {
    Edge e;
    e.id = static_cast<int>(m.edges_.size());
    e.cell_k = j - 1;
    e.cell_l = j;
    e.measure = 1.0;
    e.dist_k = 0.5 * m.cells_[j - 1].measure;
    e.dist_l = 0.5 * m.cells_[j].measure;
    e.d_sigma = m.cells_[j].center[0] - m.cells_[j - 1].center[0];
    e.tau = e.measure / e.d_sigma;
    e.normal = {1.0, 0.0};
    e.dual_measure = e.measure * e.d_sigma;  // d = 1
    m.edges_.push_back(e);
  }
  for (int side = 0; side < 2; ++side) {
    Edge e;
    e.id = static_cast<int>(m.edges_.size());
    e.cell_k = side == 0 ? 0 : n - 1;
    e.cell_l = -1;
    e.measure = 1.0;
    e.dist_k = 0.5 * m.cells_[e.cell_k].measure;
    e.d_sigma = e.dist_k;
    e.tau = e.measure / e.d_sigma;
    e.normal = {side == 0 ? -1.0 : 1.0, 0.0};
    e.dual_measure = e.measure * e.dist_k;
    m.edges_.push_back(e);
  }

  m.finalize();
  return m;
}

Mesh Mesh::rectangle(int nx, int ny, double x0, double x1, double y0, double y1) {
  if (nx < 2 || ny < 2) throw InvalidArgument("rectangle mesh: need nx, ny >= 2");
  if (!(x0 < x1) || !(y0 < y1))
    throw InvalidArgument("rectangle mesh: degenerate domain");

  Mesh m;
  m.dim_ = 2;
  const double hx = (x1 - x0) / nx;
  const double hy = (y1 - y0) / ny;
  m.cells_.resize(static_cast<size_t>(nx) * ny);
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      Cell& c = m.cells_[static_cast<size_t>(iy) * nx + ix];
      c.id = iy * nx + ix;
      c.lo = {x0 + ix * hx, y0 + iy * hy};
      c.hi = {x0 + (ix + 1) * hx, y0 + (iy + 1) * hy};
      c.center = {0.5 * (c.lo[0] + c.hi[0]), 0.5 * (c.lo[1] + c.hi[1])};
      c.measure = hx * hy;
    }

  auto cell_id = [nx](int ix, int iy) { return iy * nx + ix; };

  // vertical interior faces (normal +x)
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix + 1 < nx; ++ix) {
      Edge e;
      e.id = static_cast<int>(m.edges_.size());
      e.cell_k = cell_id(ix, iy);
      e.cell_l = cell_id(ix + 1, iy);
      e.measure = hy;
      e.d_sigma = hx;
      e.tau = e.measure / e.d_sigma;
      e.normal = {1.0, 0.0};
      e.dist_k = 0.5 * hx;
      e.dist_l = 0.5 * hx;
      e.dual_measure = e.measure * e.d_sigma / 2.0;
      m.edges_.push_back(e);
    }
  // horizontal interior faces (normal +y)
  for (int iy = 0; iy + 1 < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      Edge e;
      e.id = static_cast<int>(m.edges_.size());
      e.cell_k = cell_id(ix, iy);
      e.cell_l = cell_id(ix, iy + 1);
      e.measure = hx;
      e.d_sigma = hy;
      e.tau = e.measure / e.d_sigma;
      e.normal = {0.0, 1.0};
      e.dist_k = 0.5 * hy;
      e.dist_l = 0.5 * hy;
      e.dual_measure = e.measure * e.d_sigma / 2.0;
      m.edges_.push_back(e);
    }
  // boundary faces: left, right, bottom, top
  auto add_boundary = [&](int k, double face_measure, double dist,
                          std::array<double, 2> normal) {
    Edge e;
    e.id = static_cast<int>(m.edges_.size());
    e.cell_k = k;
    e.cell_l = -1;
    e.measure = face_measure;
    e.d_sigma = dist;
    e.tau = e.measure / e.d_sigma;
    e.normal = normal;
    e.dist_k = dist;
    e.dual_measure = e.measure * dist / 2.0;
    m.edges_.push_back(e);
  };
  for (int iy = 0; iy < ny; ++iy) {
    add_boundary(cell_id(0, iy), hy, 0.5 * hx, {-1.0, 0.0});
    add_boundary(cell_id(nx - 1, iy), hy, 0.5 * hx, {1.0, 0.0});
  }
  for (int ix = 0; ix < nx; ++ix) {
    add_boundary(cell_id(ix, 0), hx, 0.5 * hy, {0.0, -1.0});
    add_boundary(cell_id(ix, ny - 1), hx, 0.5 * hy, {0.0, 1.0});
  }

  m.finalize();
  return m;
}

void Mesh::finalize() {
  adjacency_.assign(cells_.size(), {});
  for (const Edge& e : edges_) {
    adjacency_[e.cell_k].push_back(e.id);
    if (e.interior()) adjacency_[e.cell_l].push_back(e.id);
  }

  domain_measure_ = 0.0;
  dx_ = 0.0;
  for (const Cell& c : cells_) {
    domain_measure_ += c.measure;
    const double dx0 = c.hi[0] - c.lo[0];
    const double dx1 = c.hi[1] - c.lo[1];
    dx_ = std::max(dx_, dim_ == 1 ? dx0 : std::hypot(dx0, dx1));
  }

  zeta_ = 1.0;
  xi_ = std::numeric_limits<double>::infinity();
  for (const Edge& e : edges_) {
    zeta_ = std::min(zeta_, e.dist_k / e.d_sigma);
    if (e.interior()) {
      zeta_ = std::min(zeta_, e.dist_l / e.d_sigma);
      xi_ = std::min(xi_, e.d_sigma / dx_);
    }
  }
}

std::vector<std::array<double, 2>> discrete_gradient(const Mesh& mesh,
                                                     std::span<const double> field) {
  if (field.size() != mesh.cells().size())
    throw DimensionMismatch("discrete_gradient: one value per cell required");
  std::vector<std::array<double, 2>> grad(mesh.edges().size(), {0.0, 0.0});
  for (const Edge& e : mesh.edges()) {
    if (!e.interior()) continue;
    const double coef =
        e.measure / e.dual_measure * (field[e.cell_l] - field[e.cell_k]);
    grad[e.id] = {coef * e.normal[0], coef * e.normal[1]};
  }
  return grad;
}

}  // namespace raofv
