#pragma once

// World values and sensor fuzzification for the soccer robot.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dnflogic/error.hpp"
#include "dnflogic/fuzzification.hpp"
#include "dnflogic/table_spec.hpp"

namespace dnflogic::soccer {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double length(Vec2 v) { return std::sqrt(v.x * v.x + v.y * v.y); }
inline double distance(Vec2 a, Vec2 b) {
    const double vx = b.x - a.x;
    const double vy = b.y - a.y;
    return std::sqrt(vx * vx + vy * vy);
}

/// Unit vector from a to b, or zero when the points coincide.
inline Vec2 direction(Vec2 a, Vec2 b) {
    const Vec2 v{b.x - a.x, b.y - a.y};
    const double l = length(v);
    if (l <= 0.0) return {0.0, 0.0};
    return {v.x / l, v.y / l};
}

inline bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Robot forward vector for a heading in degrees: <0,-1> rotated by the
/// heading. Arithmetic (including the truncated pi and the round trip
/// through the robot position) is kept as is so traces stay bit-stable.
inline Vec2 forward_vector(double angle_deg, Vec2 pos) {
    constexpr double pi_truncated = 3.14159265358;
    const double ux = 0.0;
    const double uy = -1.0;
    const double xp = (pos.x + ux) - pos.x;
    const double yp = (pos.y + uy) - pos.y;
    const double r = angle_deg * 2 * pi_truncated / 360;
    const double rx = xp * std::cos(r) - yp * std::sin(r) + pos.x;
    const double ry = xp * std::sin(r) + yp * std::cos(r) + pos.y;
    return {rx - pos.x, ry - pos.y};
}

/// w0..w10.
struct WorldState {
    Vec2 robot_pos;      // w0 P
    Vec2 forward;        // w1 F
    Vec2 right;          // w2 R = (-F.y, F.x)
    Vec2 target_pos;     // w3 Q
    double target_dist;  // w4 D
    Vec2 ball_pos;       // w5 B
    Vec2 goal_pos;       // w6 G
    bool held;           // w7 H
    Vec2 target_dir;     // w8 V
    double fwd_dot;      // w9 F.V
    double right_dot;    // w10 R.V
};

inline WorldState compute_world(Vec2 robot_pos, double angle_deg, Vec2 target, Vec2 ball, Vec2 goal, bool held) {
    if (!finite(robot_pos) || !finite(target) || !finite(ball) || !finite(goal) || !std::isfinite(angle_deg)) {
        throw error(errc::non_finite_state, "simulation state has a non-finite coordinate");
    }
    WorldState w{};
    w.robot_pos = robot_pos;
    w.forward = forward_vector(angle_deg, robot_pos);
    w.right = {-w.forward.y, w.forward.x};
    w.target_pos = target;
    w.target_dist = distance(robot_pos, target);
    w.ball_pos = ball;
    w.goal_pos = goal;
    w.held = held;
    w.target_dir = direction(robot_pos, target);
    w.fwd_dot = dot(w.forward, w.target_dir);
    w.right_dot = dot(w.right, w.target_dir);
    return w;
}

/// Scalar world value by name: "w4", "w7", "w9", "w10" or a vector component
/// such as "w6.x".
inline double world_value(const WorldState& w, std::string_view name) {
    auto component = [&](Vec2 v, std::string_view suffix) -> double {
        if (suffix == ".x") return v.x;
        if (suffix == ".y") return v.y;
        throw error(errc::unbound_name, "world value '" + std::string(name) + "' needs .x or .y");
    };
    const auto dotpos = name.find('.');
    const auto base = name.substr(0, dotpos);
    const auto suffix = dotpos == std::string_view::npos ? std::string_view{} : name.substr(dotpos);
    if (base == "w0") return component(w.robot_pos, suffix);
    if (base == "w1") return component(w.forward, suffix);
    if (base == "w2") return component(w.right, suffix);
    if (base == "w3") return component(w.target_pos, suffix);
    if (base == "w5") return component(w.ball_pos, suffix);
    if (base == "w6") return component(w.goal_pos, suffix);
    if (base == "w8") return component(w.target_dir, suffix);
    if (suffix.empty()) {
        if (base == "w4") return w.target_dist;
        if (base == "w7") return w.held ? 1.0 : 0.0;
        if (base == "w9") return w.fwd_dot;
        if (base == "w10") return w.right_dot;
    }
    throw error(errc::unbound_name, "unknown world value '" + std::string(name) + "'");
}

inline constexpr std::array<std::string_view, 18> world_value_names = {
    "w0.x", "w0.y", "w1.x", "w1.y", "w2.x", "w2.y", "w3.x", "w3.y", "w4",
    "w5.x", "w5.y", "w6.x", "w6.y", "w7",   "w8.x", "w8.y", "w9",   "w10"};

inline constexpr std::array<std::string_view, 6> sensor_names = {"s0", "s1", "s2", "s3", "s4", "s5"};

/// s0 target in front, s1 behind, s2 near, s3 right, s4 left, s5 have ball.
struct SensorVector {
    std::array<double, 6> values{};

    double target_in_front() const { return values[0]; }
    double target_behind() const { return values[1]; }
    double target_near() const { return values[2]; }
    double target_right() const { return values[3]; }
    double target_left() const { return values[4]; }
    double have_ball() const { return values[5]; }
};

/// Sensors from fuzzifier definitions named s0..s5 (any order).
inline SensorVector compute_sensors(const WorldState& w, const std::vector<SensorDef>& defs) {
    SensorVector s;
    std::array<bool, 6> seen{};
    for (const auto& def : defs) {
        std::size_t i = 0;
        while (i < sensor_names.size() && sensor_names[i] != def.name) ++i;
        if (i == sensor_names.size()) throw error(errc::unbound_name, "unexpected sensor '" + def.name + "'");
        s.values[i] = def.fuzzifier.apply(world_value(w, def.fuzzifier.source));
        seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) throw error(errc::unbound_name, "sensor '" + std::string(sensor_names[i]) + "' is not defined");
    }
    return s;
}

}  // namespace dnflogic::soccer
