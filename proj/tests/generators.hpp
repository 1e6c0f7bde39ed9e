#pragma once

// Deterministic random-instance generation for property and acceptance
// tests. All draws go through draw() so every platform sees the same
// sequence (mt19937_64 output is standardized, distributions are not).

#include <minksum/minksum.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace test_util {

using Rng = std::mt19937_64;

inline long long draw(Rng& rng, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(rng() % span);
}

inline minksum::Rational random_rational(Rng& rng, long long max_abs_num, long long max_den) {
  return minksum::Rational(minksum::Integer(draw(rng, -max_abs_num, max_abs_num)),
                           minksum::Integer(draw(rng, 1, max_den)));
}

inline minksum::Point random_point(Rng& rng, minksum::Index dim, long long max_abs_num,
                                   long long max_den) {
  minksum::Point p(dim);
  for (minksum::Index t = 0; t < dim; ++t) p(t) = random_rational(rng, max_abs_num, max_den);
  return p;
}

/// Hull of a random rational cloud, reduced to its extreme points, redrawn
/// until the vertex count lands in [min_vertices, max_vertices].
inline minksum::VPolytope random_polytope(Rng& rng, minksum::Index dim, int min_vertices,
                                          int max_vertices, long long max_abs_num = 16,
                                          long long max_den = 8) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const long long cloud_size = draw(rng, min_vertices, max_vertices + 4);
    std::vector<minksum::Point> cloud;
    for (long long i = 0; i < cloud_size; ++i) {
      minksum::Point p = random_point(rng, dim, max_abs_num, max_den);
      bool fresh = true;
      for (const auto& q : cloud) {
        if (minksum::points_equal(p, q)) {
          fresh = false;
          break;
        }
      }
      if (fresh) cloud.push_back(std::move(p));
    }
    if (cloud.empty()) continue;
    std::vector<minksum::Point> kept = minksum::extreme_points(cloud).kept;
    const int count = static_cast<int>(kept.size());
    if (count >= min_vertices && count <= max_vertices) {
      return minksum::VPolytope(dim, std::move(kept));
    }
  }
  throw std::runtime_error("random_polytope: rejection loop exhausted");
}

}  // namespace test_util
