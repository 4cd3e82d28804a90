// Planar scene description: convex obstacles inside an axis-aligned workspace.
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsplan/geometry.hpp"

namespace rsplan {

class Environment {
 public:
  Environment() = default;
  Environment(std::string id, Rect bounds, std::vector<ConvexPolygon> obstacles)
      : id_(std::move(id)), bounds_(bounds), obstacles_(std::move(obstacles)) {
    validate();
  }

  const std::string& id() const { return id_; }
  const Rect& bounds() const { return bounds_; }
  const std::vector<ConvexPolygon>& obstacles() const { return obstacles_; }

  bool point_in_obstacle(const Vec2& p) const {
    for (const auto& obs : obstacles_) {
      if (obs.contains(p)) return true;
    }
    return false;
  }

  bool point_strictly_in_obstacle(const Vec2& p, double margin = 1e-12) const {
    for (const auto& obs : obstacles_) {
      if (obs.contains_strict(p, margin)) return true;
    }
    return false;
  }

  // Distance to the nearest obstacle boundary; negative when inside one.
  double obstacle_signed_distance(const Vec2& p) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& obs : obstacles_) {
      d = std::min(d, obs.signed_distance(p));
    }
    return d;
  }

  bool segment_hits_obstacle(const Vec2& a, const Vec2& b) const {
    for (const auto& obs : obstacles_) {
      if (obs.intersects_segment(a, b)) return true;
    }
    return false;
  }

  double segment_obstacle_distance(const Vec2& a, const Vec2& b) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& obs : obstacles_) {
      d = std::min(d, obs.segment_distance(a, b));
    }
    return d;
  }

  bool point_free(const Vec2& p, double clearance = 0.0) const {
    if (!bounds_.contains(p)) return false;
    return obstacle_signed_distance(p) > clearance;
  }

  void validate() const {
    if (bounds_.width() <= 0.0 || bounds_.height() <= 0.0) {
      throw std::runtime_error("environment '" + id_ + "': degenerate workspace bounds");
    }
    for (std::size_t i = 0; i < obstacles_.size(); ++i) {
      if (!obstacles_[i].valid()) {
        throw std::runtime_error("environment '" + id_ + "': obstacle " + std::to_string(i) +
                                 " is not a counterclockwise convex polygon with positive area");
      }
      for (const Vec2& v : obstacles_[i].vertices()) {
        if (!bounds_.contains(v)) {
          throw std::runtime_error("environment '" + id_ + "': obstacle " + std::to_string(i) +
                                   " has a vertex outside the workspace bounds");
        }
      }
    }
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["id"] = id_;
    j["bounds"] = {bounds_.min.x(), bounds_.min.y(), bounds_.max.x(), bounds_.max.y()};
    nlohmann::json obs = nlohmann::json::array();
    for (const auto& o : obstacles_) {
      nlohmann::json poly = nlohmann::json::array();
      for (const Vec2& v : o.vertices()) poly.push_back({v.x(), v.y()});
      obs.push_back(poly);
    }
    j["obstacles"] = obs;
    return j;
  }

  static Environment from_json(const nlohmann::json& j) {
    Environment env;
    env.id_ = j.at("id").get<std::string>();
    const auto& b = j.at("bounds");
    if (b.size() != 4) throw std::runtime_error("environment bounds must be [xmin,ymin,xmax,ymax]");
    env.bounds_.min = Vec2(b[0].get<double>(), b[1].get<double>());
    env.bounds_.max = Vec2(b[2].get<double>(), b[3].get<double>());
    for (const auto& poly : j.at("obstacles")) {
      std::vector<Vec2> verts;
      verts.reserve(poly.size());
      for (const auto& v : poly) verts.emplace_back(v[0].get<double>(), v[1].get<double>());
      env.obstacles_.emplace_back(std::move(verts));
    }
    env.validate();
    return env;
  }

  static Environment load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open environment file: " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write environment file: " + path);
    out << to_json().dump(2) << "\n";
  }

 private:
  std::string id_;
  Rect bounds_;
  std::vector<ConvexPolygon> obstacles_;
};

}  // namespace rsplan
