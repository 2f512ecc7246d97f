#include "shadeopt/grid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "shadeopt/errors.hpp"

namespace shadeopt {

Grid::Grid(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), values_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows <= 0 || cols <= 0) {
    throw InputError("grid dimensions must be positive, got " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
}

void Grid::fill(double v) { std::fill(values_.begin(), values_.end(), v); }

double Grid::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double Grid::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

LandCoverClass land_cover_from_code(double code) {
  const int k = static_cast<int>(std::lround(code));
  if (k < 0 || k > 4 || std::abs(code - k) > 1e-9) {
    throw InputError("unknown land-cover code " + std::to_string(code));
  }
  return static_cast<LandCoverClass>(k);
}

const char* land_cover_name(LandCoverClass c) {
  switch (c) {
    case LandCoverClass::paved: return "paved";
    case LandCoverClass::building: return "building";
    case LandCoverClass::grass: return "grass";
    case LandCoverClass::bare_soil: return "bare_soil";
    case LandCoverClass::water: return "water";
  }
  return "?";
}

namespace {

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

Grid read_asc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open raster file: " + path);

  int ncols = -1, nrows = -1;
  double xll = 0.0, yll = 0.0, cellsize = 1.0, nodata = -9999.0;
  bool have_nodata = false;

  // Header: key/value lines until the first purely numeric line.
  std::string token;
  int header_fields = 0;
  while (header_fields < 6 && in >> token) {
    const std::string key = lower(token);
    if (key == "ncols" || key == "nrows" || key == "xllcorner" || key == "yllcorner" ||
        key == "xllcenter" || key == "yllcenter" || key == "cellsize" || key == "nodata_value") {
      double value;
      if (!(in >> value)) throw InputError(path + ": malformed header near '" + token + "'");
      if (key == "ncols") ncols = static_cast<int>(value);
      else if (key == "nrows") nrows = static_cast<int>(value);
      else if (key == "xllcorner" || key == "xllcenter") xll = value;
      else if (key == "yllcorner" || key == "yllcenter") yll = value;
      else if (key == "cellsize") cellsize = value;
      else { nodata = value; have_nodata = true; }
      ++header_fields;
    } else {
      // Start of data; push the token back by parsing it as the first value below.
      break;
    }
  }
  if (ncols <= 0 || nrows <= 0) {
    throw InputError(path + ": malformed header (missing or non-positive ncols/nrows)");
  }
  if (std::abs(cellsize - 1.0) > 1e-9) {
    throw InputError(path + ": cellsize must be 1.0 m, got " + std::to_string(cellsize));
  }

  Grid g(nrows, ncols);
  g.set_origin(xll, yll);
  if (have_nodata) g.set_nodata(nodata);

  std::size_t i = 0;
  const std::size_t total = g.size();
  // `token` may already hold the first data value.
  if (!token.empty() && header_fields < 6) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') {
      throw InputError(path + ": malformed header near '" + token + "'");
    }
    g[i++] = v;
  }
  double v;
  while (i < total && in >> v) g[i++] = v;
  if (i != total) {
    throw InputError(path + ": expected " + std::to_string(total) + " values, got " +
                     std::to_string(i));
  }
  return g;
}

void write_asc(const Grid& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write raster file: " + path);
  char buf[64];
  out << "ncols " << grid.cols() << "\n";
  out << "nrows " << grid.rows() << "\n";
  std::snprintf(buf, sizeof(buf), "%.6f", grid.xllcorner());
  out << "xllcorner " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.6f", grid.yllcorner());
  out << "yllcorner " << buf << "\n";
  out << "cellsize 1.0\n";
  std::snprintf(buf, sizeof(buf), "%g", grid.nodata());
  out << "NODATA_value " << buf << "\n";
  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.10g", grid.at(r, c));
      out << buf << (c + 1 == grid.cols() ? "" : " ");
    }
    out << "\n";
  }
  if (!out) throw InputError("write failed: " + path);
}

CellRect clip_rect(const CellRect& rect, int rows, int cols) {
  CellRect r = rect;
  r.r0 = std::max(r.r0, 0);
  r.c0 = std::max(r.c0, 0);
  r.r1 = std::min(r.r1, rows - 1);
  r.c1 = std::min(r.c1, cols - 1);
  return r;
}

}  // namespace shadeopt
