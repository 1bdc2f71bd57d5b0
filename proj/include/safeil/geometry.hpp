#pragma once

#include <cmath>

namespace safeil {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  double norm() const { return std::hypot(x, y); }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  // z-component of the 3-D cross product; positive when o is to the left.
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

// Pose in the global frame, x forward / y left convention.
struct Pose2 {
  Vec2 pos;
  double heading = 0.0;  // rad

  // Express a global point in this pose's local frame.
  Vec2 to_local(const Vec2& global) const {
    const double c = std::cos(heading), s = std::sin(heading);
    const Vec2 d = global - pos;
    return {c * d.x + s * d.y, -s * d.x + c * d.y};
  }
  // Express a local point in the global frame.
  Vec2 to_global(const Vec2& local) const {
    const double c = std::cos(heading), s = std::sin(heading);
    return {pos.x + c * local.x - s * local.y, pos.y + s * local.x + c * local.y};
  }
};

inline double wrap_angle(double a) {
  while (a > M_PI) a -= 2.0 * M_PI;
  while (a < -M_PI) a += 2.0 * M_PI;
  return a;
}

}  // namespace safeil
