#pragma once

#include <vector>

#include "shadeopt/grid.hpp"

namespace shadeopt {

/// Cell coordinate (row, col).
struct CellPos {
  int row = 0;
  int col = 0;
  bool operator==(const CellPos& o) const { return row == o.row && col == o.col; }
  bool operator<(const CellPos& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

enum class CrownShape { spherical };

/// Uniform tree specimen. The crown is an ellipsoid of revolution spanning
/// trunk top to tree top with horizontal diameter crown_diameter; the default
/// specimen (12 m tall, 9 m crown, 25 % trunk) is an exact sphere.
struct TreeGeometry {
  double height = 12.0;              // m above ground
  double crown_diameter = 9.0;       // m
  double trunk_height_fraction = 0.25;
  CrownShape crown_shape = CrownShape::spherical;

  double trunk_height() const { return trunk_height_fraction * height; }
  double crown_center_height() const { return trunk_height() + (height - trunk_height()) * 0.5; }
  double crown_radius() const { return crown_diameter * 0.5; }             // horizontal semi-axis
  double crown_semi_height() const { return (height - trunk_height()) * 0.5; }  // vertical semi-axis

  /// Throws InputError when the geometry invariants are violated.
  void validate() const;
};

/// k tree center positions sharing one geometry; the optimization variable.
struct TreePlacement {
  std::vector<CellPos> positions;
  TreeGeometry geometry;

  int count() const { return static_cast<int>(positions.size()); }
  bool same_position_set(const TreePlacement& other) const;
};

/// Canopy-top height patch of one rasterized tree, clipped to grid bounds.
/// Values are canopy-top heights above ground (m); 0 = outside footprint.
struct TreePatch {
  int r0 = 0, c0 = 0;      // top-left cell of the patch in grid coordinates
  int rows = 0, cols = 0;
  std::vector<double> top;  // row-major, rows x cols

  double top_at(int r, int c) const {  // grid coordinates; 0 outside the patch
    if (r < r0 || r >= r0 + rows || c < c0 || c >= c0 + cols) return 0.0;
    return top[static_cast<std::size_t>(r - r0) * cols + (c - c0)];
  }
  int footprint_cells() const;
};

/// Rasterizes the crown over the cells whose centers lie inside the crown
/// disc. The patch maximum equals geometry.height at the center cell.
TreePatch rasterize_tree(const TreeGeometry& geometry, CellPos position, int grid_rows, int grid_cols);

/// Number of cells in the rasterized disc of a given crown diameter (no clipping).
int crown_disc_cells(double crown_diameter);

}  // namespace shadeopt
