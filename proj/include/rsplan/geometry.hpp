// 2D geometry primitives: convex polygons, segment tests, clearance queries.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace rsplan {

using Vec2 = Eigen::Vector2d;

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

inline double wrap_angle(double a) {
  a = std::fmod(a + M_PI, 2.0 * M_PI);
  if (a < 0.0) a += 2.0 * M_PI;
  return a - M_PI;
}

struct Rect {
  Vec2 min{0.0, 0.0};
  Vec2 max{0.0, 0.0};

  bool contains(const Vec2& p) const {
    return p.x() >= min.x() && p.x() <= max.x() && p.y() >= min.y() && p.y() <= max.y();
  }
  Vec2 clamp(const Vec2& p) const {
    return Vec2(std::clamp(p.x(), min.x(), max.x()), std::clamp(p.y(), min.y(), max.y()));
  }
  double width() const { return max.x() - min.x(); }
  double height() const { return max.y() - min.y(); }
};

inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 <= 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

inline Vec2 closest_point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 <= 0.0) return a;
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return a + t * ab;
}

// Proper + touching segment intersection test.
inline bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  const auto orient = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    const double v = cross2(b - a, c - a);
    if (v > 1e-15) return 1;
    if (v < -1e-15) return -1;
    return 0;
  };
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  const auto on_segment = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    return std::min(a.x(), b.x()) - 1e-15 <= c.x() && c.x() <= std::max(a.x(), b.x()) + 1e-15 &&
           std::min(a.y(), b.y()) - 1e-15 <= c.y() && c.y() <= std::max(a.y(), b.y()) + 1e-15;
  };
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

inline double segment_segment_distance(const Vec2& p1, const Vec2& p2, const Vec2& q1,
                                        const Vec2& q2) {
  if (segments_intersect(p1, p2, q1, q2)) return 0.0;
  return std::min(std::min(point_segment_distance(p1, q1, q2), point_segment_distance(p2, q1, q2)),
                  std::min(point_segment_distance(q1, p1, p2), point_segment_distance(q2, p1, p2)));
}

// Convex polygon, counterclockwise vertex order.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
    recompute_bounds();
  }

  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Rect& aabb() const { return aabb_; }

  double area() const {
    double s = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const Vec2& a = vertices_[i];
      const Vec2& b = vertices_[(i + 1) % vertices_.size()];
      s += cross2(a, b);
    }
    return 0.5 * s;
  }

  // True for counterclockwise convex polygons with strictly positive area.
  bool valid() const {
    if (vertices_.size() < 3) return false;
    if (area() <= 0.0) return false;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const Vec2& a = vertices_[i];
      const Vec2& b = vertices_[(i + 1) % vertices_.size()];
      const Vec2& c = vertices_[(i + 2) % vertices_.size()];
      if (cross2(b - a, c - b) < -1e-12) return false;
    }
    return true;
  }

  bool contains(const Vec2& p) const {
    if (!aabb_.contains(p)) return false;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const Vec2& a = vertices_[i];
      const Vec2& b = vertices_[(i + 1) % vertices_.size()];
      if (cross2(b - a, p - a) < 0.0) return false;
    }
    return true;
  }

  bool contains_strict(const Vec2& p, double margin = 1e-12) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const Vec2& a = vertices_[i];
      const Vec2& b = vertices_[(i + 1) % vertices_.size()];
      if (cross2(b - a, p - a) <= margin * (b - a).norm()) return false;
    }
    return true;
  }

  double boundary_distance(const Vec2& p) const {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      d = std::min(d, point_segment_distance(p, vertices_[i], vertices_[(i + 1) % vertices_.size()]));
    }
    return d;
  }

  // Negative inside, positive outside.
  double signed_distance(const Vec2& p) const {
    const double d = boundary_distance(p);
    return contains(p) ? -d : d;
  }

  Vec2 closest_boundary_point(const Vec2& p) const {
    double best = std::numeric_limits<double>::infinity();
    Vec2 best_point = vertices_.front();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const Vec2 q = closest_point_on_segment(p, vertices_[i], vertices_[(i + 1) % vertices_.size()]);
      const double d = (p - q).squaredNorm();
      if (d < best) {
        best = d;
        best_point = q;
      }
    }
    return best_point;
  }

  bool intersects_segment(const Vec2& a, const Vec2& b) const {
    const Rect seg_box{Vec2(std::min(a.x(), b.x()), std::min(a.y(), b.y())),
                       Vec2(std::max(a.x(), b.x()), std::max(a.y(), b.y()))};
    if (seg_box.max.x() < aabb_.min.x() || seg_box.min.x() > aabb_.max.x() ||
        seg_box.max.y() < aabb_.min.y() || seg_box.min.y() > aabb_.max.y()) {
      return false;
    }
    if (contains(a) || contains(b)) return true;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (segments_intersect(a, b, vertices_[i], vertices_[(i + 1) % vertices_.size()])) return true;
    }
    return false;
  }

  double segment_distance(const Vec2& a, const Vec2& b) const {
    if (intersects_segment(a, b)) return 0.0;
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      d = std::min(d, segment_segment_distance(a, b, vertices_[i], vertices_[(i + 1) % vertices_.size()]));
    }
    return d;
  }

 private:
  void recompute_bounds() {
    if (vertices_.empty()) return;
    aabb_.min = aabb_.max = vertices_.front();
    for (const Vec2& v : vertices_) {
      aabb_.min = aabb_.min.cwiseMin(v);
      aabb_.max = aabb_.max.cwiseMax(v);
    }
  }

  std::vector<Vec2> vertices_;
  Rect aabb_;
};

}  // namespace rsplan
