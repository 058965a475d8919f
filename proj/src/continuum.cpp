#include "netfunc/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "netfunc/error.hpp"
#include "netfunc/parallel.hpp"

namespace netfunc {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_delta(double delta, double side) {
  delta = std::fmod(std::abs(delta), side);
  return std::min(delta, side - delta);
}

double wrap_coord(double x, double side) {
  x = std::fmod(x, side);
  return x < 0 ? x + side : x;
}

Point3 uniform_unit_vector(Rng& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * kPi * rng.uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

// Running count/mean/M2 with Chan's pairwise merge.
struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& other) {
    if (other.count == 0) return;
    const double total = static_cast<double>(count + other.count);
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.count) / total;
    m2 += other.m2 + delta * delta * static_cast<double>(count) *
                         static_cast<double>(other.count) / total;
    count += other.count;
  }

  MonteCarloEstimate estimate() const {
    const double var = count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
    return {mean, std::sqrt(var / static_cast<double>(count)), count};
  }
};

template <typename Draw>
MonteCarloEstimate chunked_mean(std::uint64_t samples, std::uint64_t seed, unsigned workers,
                                Draw draw) {
  const std::uint64_t chunks = (samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
  std::vector<Moments> partial(chunks);
  const Rng root(seed);
  parallel_for(chunks, workers, [&](std::size_t c) {
    Rng rng = root.split(c);
    const std::uint64_t begin = c * kSamplesPerChunk;
    const std::uint64_t end = std::min(samples, begin + kSamplesPerChunk);
    Moments m;
    for (std::uint64_t i = begin; i < end; ++i) m.add(draw(rng));
    partial[c] = m;
  });
  Moments total;
  for (const auto& m : partial) total.merge(m);
  return total.estimate();
}

}  // namespace

double ContinuumSpace::sphere_radius() const { return 1.0 / (2.0 * std::sqrt(kPi)); }

double ContinuumSpace::max_cluster_radius() const {
  if (kind_ == Kind::SphereArea1) return kPi * sphere_radius() / 4.0;
  return side_ / 4.0;
}

double ContinuumSpace::distance(const Point3& a, const Point3& b) const {
  switch (kind_) {
    case Kind::Torus2:
      return std::hypot(wrap_delta(a[0] - b[0], side_), wrap_delta(a[1] - b[1], side_));
    case Kind::Torus3:
      return std::hypot(wrap_delta(a[0] - b[0], side_), wrap_delta(a[1] - b[1], side_),
                        wrap_delta(a[2] - b[2], side_));
    case Kind::SphereArea1: {
      const double dot = std::clamp(a[0] * b[0] + a[1] * b[1] + a[2] * b[2], -1.0, 1.0);
      return sphere_radius() * std::acos(dot);
    }
  }
  return 0.0;
}

Point3 ContinuumSpace::sample_point(Rng& rng) const {
  switch (kind_) {
    case Kind::Torus2: return {side_ * rng.uniform(), side_ * rng.uniform(), 0.0};
    case Kind::Torus3:
      return {side_ * rng.uniform(), side_ * rng.uniform(), side_ * rng.uniform()};
    case Kind::SphereArea1: return uniform_unit_vector(rng);
  }
  return {};
}

Point3 ContinuumSpace::sample_on_sphere(const Point3& center, double radius, Rng& rng) const {
  switch (kind_) {
    case Kind::Torus2: {
      const double phi = 2.0 * kPi * rng.uniform();
      return {wrap_coord(center[0] + radius * std::cos(phi), side_),
              wrap_coord(center[1] + radius * std::sin(phi), side_), 0.0};
    }
    case Kind::Torus3: {
      const auto u = uniform_unit_vector(rng);
      return {wrap_coord(center[0] + radius * u[0], side_),
              wrap_coord(center[1] + radius * u[1], side_),
              wrap_coord(center[2] + radius * u[2], side_)};
    }
    case Kind::SphereArea1: {
      // Rotate by the geodesic angle towards a uniform tangent direction.
      const double angle = radius / sphere_radius();
      Point3 helper = std::abs(center[0]) < 0.9 ? Point3{1, 0, 0} : Point3{0, 1, 0};
      Point3 e1{center[1] * helper[2] - center[2] * helper[1],
                center[2] * helper[0] - center[0] * helper[2],
                center[0] * helper[1] - center[1] * helper[0]};
      const double norm = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
      for (auto& c : e1) c /= norm;
      const Point3 e2{center[1] * e1[2] - center[2] * e1[1],
                      center[2] * e1[0] - center[0] * e1[2],
                      center[0] * e1[1] - center[1] * e1[0]};
      const double phi = 2.0 * kPi * rng.uniform();
      const double c = std::cos(angle);
      const double s = std::sin(angle);
      Point3 out;
      for (int i = 0; i < 3; ++i) {
        out[i] = c * center[i] + s * (std::cos(phi) * e1[i] + std::sin(phi) * e2[i]);
      }
      return out;
    }
  }
  return {};
}

std::string to_string(ContinuumSpace::Kind kind) {
  switch (kind) {
    case ContinuumSpace::Kind::Torus2: return "torus2";
    case ContinuumSpace::Kind::Torus3: return "torus3";
    case ContinuumSpace::Kind::SphereArea1: return "sphere";
  }
  return "unknown";
}

ContinuumSpace parse_continuum_space(const std::string& name, double side) {
  if (!(side > 0.0)) throw Error(ErrorCode::InvalidParam, "side length must be positive");
  if (name == "torus2") return ContinuumSpace::torus2(side);
  if (name == "torus3") return ContinuumSpace::torus3(side);
  if (name == "sphere" || name == "sphere_area1") return ContinuumSpace::sphere_area1();
  throw Error(ErrorCode::InvalidParam, "unknown space '" + name + "'");
}

MonteCarloEstimate mc_characteristic_length(const ContinuumSpace& space, std::uint64_t samples,
                                            std::uint64_t seed, unsigned workers) {
  if (samples < 2) throw Error(ErrorCode::TooSmall, "need at least 2 samples");
  return chunked_mean(samples, seed, workers, [&](Rng& rng) {
    const auto x = space.sample_point(rng);
    const auto y = space.sample_point(rng);
    return space.distance(x, y);
  });
}

MonteCarloEstimate mc_sphere_length(const ContinuumSpace& space, double radius,
                                    std::uint64_t samples, std::uint64_t seed,
                                    unsigned workers) {
  if (samples < 2) throw Error(ErrorCode::TooSmall, "need at least 2 samples");
  if (!(radius > 0.0) || radius >= space.max_cluster_radius()) {
    throw Error(ErrorCode::RadiusTooLarge, "radius must lie in (0, " +
                                               std::to_string(space.max_cluster_radius()) + ")");
  }
  return chunked_mean(samples, seed, workers, [&](Rng& rng) {
    const auto center = space.sample_point(rng);
    const auto a = space.sample_on_sphere(center, radius, rng);
    const auto b = space.sample_on_sphere(center, radius, rng);
    return space.distance(a, b) / radius;
  });
}

MonteCarloEstimate mc_mean_cluster(const ContinuumSpace& space, double radius,
                                   std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  auto est = mc_sphere_length(space, radius, samples, seed, workers);
  est.estimate = 2.0 - est.estimate;
  return est;
}

ContinuumLambda continuum_lambda(const ContinuumSpace& space, double radius,
                                 std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  ContinuumLambda out;
  out.length = mc_characteristic_length(space, samples, seed, workers);
  // Independent stream for the cluster estimate.
  out.cluster = mc_mean_cluster(space, radius, samples, Rng(seed, 1).next(), workers);
  out.lambda = (out.length.estimate / space.side()) / std::log(1.0 / out.cluster.estimate);
  return out;
}

}  // namespace netfunc
