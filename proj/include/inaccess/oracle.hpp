#pragma once

#include <cstddef>

#include "inaccess/domains.hpp"

namespace inaccess {

// Brute-force references built on chord_through alone.

struct OracleConfig {
  std::size_t angle_samples = 100000;
  std::size_t grid_resolution = 400;
  std::size_t refinement_levels = 3;
};

/// Minimum chord length over the directions pi*k/angle_samples.
double oracle_r(const ConvexPolygon& domain, Point2 p, const OracleConfig& config = {});
double oracle_r(const SimplePolygon& domain, Point2 p, const OracleConfig& config = {});
double oracle_r(const SampledConvexDomain& domain, Point2 p, const OracleConfig& config = {});
double oracle_r(const Domain& domain, Point2 p, const OracleConfig& config = {});

struct OracleMax {
  double R = 0.0;
  Point2 point;
};

/// Grid search for max oracle_r over the bounding box, zoomed in around the
/// best node `refinement_levels` times by a factor of 4.
OracleMax oracle_max(const ConvexPolygon& domain, const OracleConfig& config = {});
OracleMax oracle_max(const SampledConvexDomain& domain, const OracleConfig& config = {});

}  // namespace inaccess
