#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "netfunc/rng.hpp"

namespace netfunc {

/// Point in a continuum space. Tori use 2 or 3 coordinates in [0, side);
/// the round sphere stores a unit vector.
using Point3 = std::array<double, 3>;

/// Flat 2-torus, flat 3-torus (side length `side`), or the round sphere of area 1.
class ContinuumSpace {
 public:
  enum class Kind { Torus2, Torus3, SphereArea1 };

  static ContinuumSpace torus2(double side = 1.0) { return {Kind::Torus2, side}; }
  static ContinuumSpace torus3(double side = 1.0) { return {Kind::Torus3, side}; }
  static ContinuumSpace sphere_area1() { return {Kind::SphereArea1, 1.0}; }

  Kind kind() const { return kind_; }
  double side() const { return side_; }
  /// Sphere radius 1/(2 sqrt(pi)); unused for tori.
  double sphere_radius() const;
  /// Largest radius accepted for metric-sphere sampling.
  double max_cluster_radius() const;

  double distance(const Point3& a, const Point3& b) const;
  Point3 sample_point(Rng& rng) const;
  /// Uniform point on the metric sphere of the given radius about `center`.
  Point3 sample_on_sphere(const Point3& center, double radius, Rng& rng) const;

 private:
  ContinuumSpace(Kind kind, double side) : kind_(kind), side_(side) {}
  Kind kind_;
  double side_;
};

std::string to_string(ContinuumSpace::Kind kind);
/// "torus2", "torus3", "sphere" (or "sphere_area1").
ContinuumSpace parse_continuum_space(const std::string& name, double side = 1.0);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Samples are drawn in fixed chunks with one substream each; chunks are
/// merged in order, so results do not depend on `workers`.
inline constexpr std::uint64_t kSamplesPerChunk = 1 << 16;

/// Mean of d(x, y) over i.i.d. uniform pairs. Requires samples >= 2.
MonteCarloEstimate mc_characteristic_length(const ContinuumSpace& space, std::uint64_t samples,
                                            std::uint64_t seed, unsigned workers = 1);

/// Mean of d(a, b) / radius for a, b uniform on the metric sphere of the
/// given radius around a uniform center. Throws RadiusTooLarge.
MonteCarloEstimate mc_sphere_length(const ContinuumSpace& space, double radius,
                                    std::uint64_t samples, std::uint64_t seed,
                                    unsigned workers = 1);

/// 2 - mc_sphere_length (same standard error).
MonteCarloEstimate mc_mean_cluster(const ContinuumSpace& space, double radius,
                                   std::uint64_t samples, std::uint64_t seed,
                                   unsigned workers = 1);

struct ContinuumLambda {
  MonteCarloEstimate length;
  MonteCarloEstimate cluster;
  double lambda = 0.0;
};

/// lambda = (mu / side) / log(1 / nu).
ContinuumLambda continuum_lambda(const ContinuumSpace& space, double radius,
                                 std::uint64_t samples, std::uint64_t seed,
                                 unsigned workers = 1);

}  // namespace netfunc
