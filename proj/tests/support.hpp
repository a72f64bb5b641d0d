#pragma once

#include "robinlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace testgen {

/// Deterministic source for the property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  /// Convex polygon: sorted random angles on an ellipse, counterclockwise.
  robin::PolygonDomain convex_polygon(int n, double beta = 1.0) {
    // Jittered angles keep consecutive vertices apart.
    const double a = uniform(0.6, 1.4), b = uniform(0.6, 1.4), phase = uniform(0.0, 1.0);
    std::vector<robin::Vec2> v;
    for (int i = 0; i < n; ++i) {
      const double t = 2.0 * robin::kPi * (i + phase + uniform(-0.3, 0.3)) / n;
      v.emplace_back(a * std::cos(t), b * std::sin(t));
    }
    return robin::make_polygon(v, robin::EdgeTag::robin, beta);
  }
};

} // namespace testgen
