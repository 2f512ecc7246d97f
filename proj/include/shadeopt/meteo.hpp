#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shadeopt {

/// UTC timestamp with civil-calendar helpers (proleptic Gregorian).
struct Timestamp {
  std::int64_t epoch_seconds = 0;

  static Timestamp from_civil(int year, int month, int day, int hour = 0, int minute = 0,
                              int second = 0);
  /// Accepts "YYYY-MM-DD HH:MM:SS" (T separator also allowed).
  static Timestamp parse(const std::string& text);
  std::string format() const;

  void to_civil(int& year, int& month, int& day, int& hour, int& minute, int& second) const;
  std::int64_t day_index() const;  // days since epoch (floor)
  int hour_of_day() const;
  int month() const;
  int day_of_year() const;

  bool operator<(const Timestamp& o) const { return epoch_seconds < o.epoch_seconds; }
  bool operator==(const Timestamp& o) const { return epoch_seconds == o.epoch_seconds; }
};

/// One hourly meteorological sample.
struct MeteoRecord {
  Timestamp timestamp;
  double air_temperature_c = 0.0;
  double wind_speed_ms = 0.0;
  double wind_direction_deg = 0.0;
  double shortwave_global_wm2 = 0.0;  // I_g
  double precipitation_mm = 0.0;
  double relative_humidity_pct = 0.0;
  double pressure_kpa = 0.0;
  double sun_elevation_deg = 0.0;
  double sun_azimuth_deg = 0.0;

  bool is_daytime() const { return sun_elevation_deg > 0.0; }
};

enum class PeriodKind { hottest_day, hottest_week, year, decade, all };

struct TimePeriod {
  std::string label;
  std::vector<MeteoRecord> records;
  std::size_t size() const { return records.size(); }
};

struct MeteoLoadResult {
  std::vector<MeteoRecord> records;
  int night_shortwave_clamped = 0;  // rows where I_g > 0 at sun elevation <= 0
};

/// CSV header: datetime,ta_c,ws_ms,wd_deg,swin_wm2,precip_mm,rh_pct,press_kpa,sun_elev_deg,sun_azim_deg
MeteoLoadResult load_meteo_csv(const std::string& path);
void write_meteo_csv(const std::vector<MeteoRecord>& records, const std::string& path);

struct SolarPosition {
  double elevation_deg = 0.0;
  double azimuth_deg = 0.0;  // clockwise from north
};

/// NOAA-style solar position (geometric, no refraction); accurate to well
/// within 0.5 degrees for the years of interest.
SolarPosition solar_position(Timestamp ts, double latitude_deg, double longitude_deg);

/// Deterministic synthetic hourly meteorology: seasonal + diurnal air
/// temperature, clear-sky shortwave I_g = max(0, 1000 sin(elev)) * atm with
/// mild seeded noise, zero shortwave at night.
std::vector<MeteoRecord> synth_meteo(std::uint64_t seed, Timestamp start, int n_hours,
                                     double latitude_deg, double longitude_deg = 0.0);

/// hottest_day: complete calendar day with maximal daily-maximum air
/// temperature. hottest_week: 7 consecutive complete days maximizing the mean
/// of daily maxima. year/decade/all: the entire series. Ties break earliest.
TimePeriod select_period(const std::vector<MeteoRecord>& records, PeriodKind kind);

}  // namespace shadeopt
