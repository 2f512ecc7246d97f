#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace shadeopt {

/// Single-band 2-D raster at a fixed 1 m cell size, row-major storage.
/// Row 0 is the northernmost line (ESRI ASCII order).
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, double fill = 0.0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return values_.size(); }
  double cell_size() const { return 1.0; }

  bool in_bounds(int r, int c) const {
    return r >= 0 && r < rows_ && c >= 0 && c < cols_;
  }
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  double& at(int r, int c) { return values_[index(r, c)]; }
  double at(int r, int c) const { return values_[index(r, c)]; }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  double nodata() const { return nodata_; }
  void set_nodata(double v) { nodata_ = v; }
  double xllcorner() const { return xll_; }
  double yllcorner() const { return yll_; }
  void set_origin(double xll, double yll) { xll_ = xll; yll_ = yll; }

  void fill(double v);
  double min_value() const;
  double max_value() const;

  bool same_shape(const Grid& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  double nodata_ = -9999.0;
  double xll_ = 0.0;
  double yll_ = 0.0;
  std::vector<double> values_;
};

/// Land cover classes; raster codes match the file format (paved=0 .. water=4).
enum class LandCoverClass : int {
  paved = 0,
  building = 1,
  grass = 2,
  bare_soil = 3,
  water = 4,
};

/// Throws InputError for codes outside 0..4.
LandCoverClass land_cover_from_code(double code);
const char* land_cover_name(LandCoverClass c);

/// ESRI ASCII grid I/O. Reader accepts the standard six header lines
/// (NODATA_value optional); writer emits %.6g values, which round-trips
/// the data produced by this toolkit bit-exactly.
Grid read_asc(const std::string& path);
void write_asc(const Grid& grid, const std::string& path);

/// Integer cell rectangle [r0, r1] x [c0, c1], inclusive and clipped by makers.
struct CellRect {
  int r0 = 0, c0 = 0, r1 = -1, c1 = -1;
  bool empty() const { return r1 < r0 || c1 < c0; }
  long long cell_count() const {
    return empty() ? 0 : static_cast<long long>(r1 - r0 + 1) * (c1 - c0 + 1);
  }
  bool contains(int r, int c) const { return r >= r0 && r <= r1 && c >= c0 && c <= c1; }
};

CellRect clip_rect(const CellRect& rect, int rows, int cols);

}  // namespace shadeopt
