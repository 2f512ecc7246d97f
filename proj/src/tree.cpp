#include "shadeopt/tree.hpp"

#include <algorithm>
#include <cmath>

#include "shadeopt/errors.hpp"

namespace shadeopt {

void TreeGeometry::validate() const {
  if (!(height > 0.0)) throw InputError("tree height must be positive");
  if (!(crown_diameter > 0.0)) throw InputError("crown diameter must be positive");
  if (!(trunk_height_fraction > 0.0 && trunk_height_fraction < 1.0)) {
    throw InputError("trunk height fraction must lie in (0, 1)");
  }
}

bool TreePlacement::same_position_set(const TreePlacement& other) const {
  if (positions.size() != other.positions.size()) return false;
  std::vector<CellPos> a = positions, b = other.positions;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

int TreePatch::footprint_cells() const {
  int n = 0;
  for (double v : top)
    if (v > 0.0) ++n;
  return n;
}

TreePatch rasterize_tree(const TreeGeometry& geometry, CellPos position, int grid_rows,
                         int grid_cols) {
  geometry.validate();
  const double a = geometry.crown_radius();
  const double b = geometry.crown_semi_height();
  const double zc = geometry.crown_center_height();
  const int reach = static_cast<int>(std::floor(a));

  TreePatch p;
  p.r0 = std::max(0, position.row - reach);
  p.c0 = std::max(0, position.col - reach);
  const int r1 = std::min(grid_rows - 1, position.row + reach);
  const int c1 = std::min(grid_cols - 1, position.col + reach);
  if (r1 < p.r0 || c1 < p.c0) return p;  // fully outside
  p.rows = r1 - p.r0 + 1;
  p.cols = c1 - p.c0 + 1;
  p.top.assign(static_cast<std::size_t>(p.rows) * p.cols, 0.0);
  for (int r = p.r0; r <= r1; ++r) {
    for (int c = p.c0; c <= c1; ++c) {
      const double dr = r - position.row;
      const double dc = c - position.col;
      const double rho2 = dr * dr + dc * dc;
      if (rho2 <= a * a) {
        const double z = zc + b * std::sqrt(std::max(0.0, 1.0 - rho2 / (a * a)));
        p.top[static_cast<std::size_t>(r - p.r0) * p.cols + (c - p.c0)] = z;
      }
    }
  }
  return p;
}

int crown_disc_cells(double crown_diameter) {
  const double a = crown_diameter * 0.5;
  const int reach = static_cast<int>(std::floor(a));
  int n = 0;
  for (int dr = -reach; dr <= reach; ++dr)
    for (int dc = -reach; dc <= reach; ++dc)
      if (dr * dr + dc * dc <= a * a) ++n;
  return n;
}

}  // namespace shadeopt
