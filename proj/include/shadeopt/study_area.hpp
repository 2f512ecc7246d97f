#pragma once

#include <optional>
#include <string>

#include "shadeopt/grid.hpp"
#include "shadeopt/tree.hpp"

namespace shadeopt {

/// Hemispheric sky view factor maps, cosine-weighted fraction of visible sky.
struct SvfMaps {
  Grid svf_total;       // buildings/terrain and vegetation combined
  Grid svf_buildings;   // buildings/terrain only
  Grid svf_vegetation;  // vegetation only
};

/// Spatial input bundle. All grids share identical dimensions.
/// dem and dsm_ground_buildings are absolute heights (m a.s.l.);
/// dsm_vegetation is canopy-top height above ground (0 = no vegetation).
struct StudyArea {
  Grid dem;
  Grid dsm_ground_buildings;
  Grid dsm_vegetation;
  Grid land_cover;   // codes per LandCoverClass
  Grid wall_height;  // m
  Grid wall_aspect;  // degrees, north-facing wall = 0
  std::optional<SvfMaps> svf;  // dropped whenever vegetation changes
  double latitude = 48.0;
  double longitude = 7.8;
  // Trunk zone of canopy columns: vegetation blocks rays between
  // trunk_zone_fraction * canopy_top and canopy_top.
  double trunk_zone_fraction = 0.25;

  int rows() const { return dem.rows(); }
  int cols() const { return dem.cols(); }

  LandCoverClass cover_at(int r, int c) const { return land_cover_from_code(land_cover.at(r, c)); }
  bool is_building(int r, int c) const { return cover_at(r, c) == LandCoverClass::building; }
  bool is_water(int r, int c) const { return cover_at(r, c) == LandCoverClass::water; }
  /// Cells included in objective/metric averages (not building, not water).
  bool is_valid_cell(int r, int c) const {
    const LandCoverClass k = cover_at(r, c);
    return k != LandCoverClass::building && k != LandCoverClass::water;
  }

  /// Throws InputError when cross-grid invariants are violated.
  void validate() const;
};

/// Reads dem.asc, dsm_build.asc, dsm_veg.asc, landcover.asc, wall_height.asc,
/// wall_aspect.asc (and svf_*.asc plus location.txt when present) from a
/// directory. Missing SVF files leave the svf field empty.
StudyArea load_study_area(const std::string& directory);

/// Writes the same file set (including SVF maps when present).
void save_study_area(const StudyArea& area, const std::string& directory);

/// Feasibility verdict for a placement; `ok` plus a description of the first
/// violation when not.
struct PlacementVerdict {
  bool ok = true;
  std::string violation;
};

/// A placement is feasible iff every center is in bounds on a non-building,
/// non-water cell and pairwise center distances are >= crown_diameter.
PlacementVerdict validate_placement(const StudyArea& area, const TreePlacement& placement);

/// Returns a copy of the area with each tree patch max-merged into the
/// vegetation DSM. SVF maps are dropped (stale). Throws InfeasibleError.
StudyArea apply_placement(const StudyArea& area, const TreePlacement& placement);

/// Parameters of the synthetic study-area generator.
struct SynthAreaSpec {
  int rows = 128;
  int cols = 128;
  double building_density = 0.3;    // fraction of blocks that become buildings
  double vegetation_density = 0.1;  // controls the number of scattered trees
  int street_period = 0;            // 0 = derived from dims
  bool water_strip = false;
};

/// Deterministic synthetic city: street grid, building blocks with walls,
/// grass patches, scattered existing trees, optional water strip.
StudyArea synth_study_area(std::uint64_t seed, const SynthAreaSpec& spec);

}  // namespace shadeopt
