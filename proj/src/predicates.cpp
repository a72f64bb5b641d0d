#include "robinlab/predicates.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>

namespace robin::predicates {

namespace {

using Exact = boost::multiprecision::cpp_rational;

constexpr double kEps = std::numeric_limits<double>::epsilon() * 0.5;
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kInCircleBound = (10.0 + 96.0 * kEps) * kEps;

template <typename T>
int sign(const T& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

int orient_exact(const Vec2& a, const Vec2& b, const Vec2& c) {
  const Exact ax(a.x()), ay(a.y()), bx(b.x()), by(b.y()), cx(c.x()), cy(c.y());
  return sign(Exact((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)));
}

int incircle_exact(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const Exact dx(d.x()), dy(d.y());
  const Exact adx = Exact(a.x()) - dx, ady = Exact(a.y()) - dy;
  const Exact bdx = Exact(b.x()) - dx, bdy = Exact(b.y()) - dy;
  const Exact cdx = Exact(c.x()) - dx, cdy = Exact(c.y()) - dy;
  const Exact alift = adx * adx + ady * ady;
  const Exact blift = bdx * bdx + bdy * bdy;
  const Exact clift = cdx * cdx + cdy * cdy;
  const Exact det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                    clift * (adx * bdy - bdx * ady);
  return sign(det);
}

} // namespace

int orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double detleft = (a.x() - c.x()) * (b.y() - c.y());
  const double detright = (a.y() - c.y()) * (b.x() - c.x());
  const double det = detleft - detright;
  const double detsum = std::abs(detleft) + std::abs(detright);
  if (std::abs(det) > kOrientBound * detsum) return sign(det);
  return orient_exact(a, b, c);
}

int incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const double adx = a.x() - d.x(), ady = a.y() - d.y();
  const double bdx = b.x() - d.x(), bdy = b.y() - d.y();
  const double cdx = c.x() - d.x(), cdy = c.y() - d.y();
  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  if (std::abs(det) > kInCircleBound * permanent) return sign(det);
  return incircle_exact(a, b, c, d);
}

} // namespace robin::predicates
