#pragma once

#include "robinlab/common.hpp"

namespace robin::predicates {

/// Sign of the orientation determinant of (a, b, c): +1 counterclockwise,
/// -1 clockwise, 0 collinear. Exact (floating-point filter with an exact
/// rational fallback).
int orient2d(const Vec2& a, const Vec2& b, const Vec2& c);

/// +1 if d lies strictly inside the circumcircle of the counterclockwise
/// triangle (a, b, c), -1 if strictly outside, 0 if cocircular. Exact.
int incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

} // namespace robin::predicates
