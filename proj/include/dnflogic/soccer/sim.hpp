#pragma once

// Deterministic headless soccer game: one robot, one ball, one goal.
//
// Each tick: world values -> sensors -> decision tables -> actuation, then
// ball physics. All constants live in SimConfig.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "dnflogic/fuzzification.hpp"
#include "dnflogic/number_format.hpp"
#include "dnflogic/soccer/brain.hpp"
#include "dnflogic/soccer/world.hpp"

namespace dnflogic::soccer {

struct SimConfig {
    double field_width = 512.0;
    double field_height = 512.0;
    Vec2 robot_start{128.0, 128.0};
    Vec2 ball_start{500.0, 256.0};
    Vec2 goal{256.0, 512.0};
    double goal_radius = 20.0;
    double pickup_radius = 24.0;
    int throw_cooldown = 100;
    double throw_speed = 30.0;
    double throw_threshold = 0.90;
    double friction = 0.95;
    double drive_gain = 1.75;
    double turn_gain = 2.75;
    double turn_scale = 0.5;
    bool keep_records = true;
};

struct Robot {
    Vec2 pos;
    double angle_deg = 0.0;
    Vec2 target;
};

struct BallState {
    enum class Mode { idle, held };
    Mode mode = Mode::idle;
    Vec2 pos;
    Vec2 vel;
    double friction = 0.95;
    int cooldown = 0;
};

struct SimState {
    std::uint64_t tick = 0;
    Robot robot;
    BallState ball;

    static SimState initial(const SimConfig& config) {
        SimState s;
        s.robot.pos = config.robot_start;
        s.robot.target = config.ball_start;
        s.ball.pos = config.ball_start;
        s.ball.friction = config.friction;
        return s;
    }
};

namespace event {
inline constexpr unsigned pickup = 1u << 0;
inline constexpr unsigned throw_ball = 1u << 1;
inline constexpr unsigned goal = 1u << 2;
inline constexpr unsigned reset = 1u << 3;
}  // namespace event

struct TickRecord {
    std::uint64_t tick = 0;
    WorldState world{};  // as perceived at the start of the tick
    SensorVector sensors;
    DecisionVector decisions;
    unsigned events = 0;
    SimState after;  // state at the end of the tick
};

inline WorldState compute_world(const SimState& s, const SimConfig& config) {
    return compute_world(s.robot.pos, s.robot.angle_deg, s.robot.target, s.ball.pos, config.goal,
                         s.ball.mode == BallState::Mode::held);
}

struct StepResult {
    SimState next;
    TickRecord record;
};

inline StepResult step(const SimState& state, const SoccerBrain& brain, const SimConfig& config) {
    SimState s = state;
    ++s.tick;
    TickRecord rec;
    rec.tick = s.tick;
    rec.world = compute_world(state, config);
    rec.sensors = brain.sense(rec.world);
    rec.decisions = brain.decide(rec.sensors, rec.world);
    const auto& d = rec.decisions;
    auto& robot = s.robot;
    auto& ball = s.ball;

    if (defuzz_threshold(d.throw_ball, config.throw_threshold) && ball.mode == BallState::Mode::held) {
        const Vec2 f = forward_vector(robot.angle_deg, robot.pos);
        const double amount = 1.0;
        ball.cooldown = config.throw_cooldown;
        ball.vel = {config.throw_speed * amount * f.x, config.throw_speed * amount * f.y};
        ball.mode = BallState::Mode::idle;
        rec.events |= event::throw_ball;
    }

    double turn_motion = 0.0;
    if (d.turn_right > d.turn_left) turn_motion += defuzz_scale(d.turn_right, config.turn_scale);
    if (d.turn_left > d.turn_right) turn_motion -= defuzz_scale(d.turn_left, config.turn_scale);
    robot.target = {d.target_x, d.target_y};

    // Drive along the heading held at the start of the tick, then turn.
    const double amount = config.drive_gain * clamp(d.drive_forward, -0.5, 1.0);
    const Vec2 f = forward_vector(robot.angle_deg, robot.pos);
    robot.pos.x = clamp(robot.pos.x + amount * f.x, 0.0, config.field_width);
    robot.pos.y = clamp(robot.pos.y + amount * f.y, 0.0, config.field_height);
    robot.angle_deg += config.turn_gain * clamp(turn_motion, -1.0, 1.0);

    ball.pos.x += ball.vel.x;
    ball.pos.y += ball.vel.y;
    ball.vel.x *= ball.friction;
    ball.vel.y *= ball.friction;
    if (ball.mode == BallState::Mode::idle) {
        if (ball.pos.x < 0) {
            ball.pos.x = 0;
            ball.vel.x = -ball.vel.x;
        }
        if (ball.pos.x > config.field_width) {
            ball.pos.x = config.field_width;
            ball.vel.x = -ball.vel.x;
        }
        if (ball.pos.y < 0) {
            ball.pos.y = 0;
            ball.vel.y = -ball.vel.y;
        }
        if (ball.pos.y > config.field_height) {
            ball.pos.y = config.field_height;
            ball.vel.y = -ball.vel.y;
        }
        const double dist = distance(robot.pos, ball.pos);
        if (ball.cooldown > 0) ball.cooldown -= 1;
        if (distance(ball.pos, config.goal) <= config.goal_radius) {
            rec.events |= event::goal | event::reset;
            ball.pos = config.ball_start;
            ball.vel = {0.0, 0.0};
            ball.cooldown = 0;
        } else if (dist <= config.pickup_radius && ball.cooldown <= 0) {
            ball.mode = BallState::Mode::held;
            rec.events |= event::pickup;
        }
    }
    if (ball.mode == BallState::Mode::held) ball.pos = robot.pos;

    rec.after = s;
    return {s, rec};
}

struct SimSummary {
    std::uint64_t ticks = 0;
    std::uint64_t pickups = 0;
    std::uint64_t throws = 0;
    std::uint64_t goals = 0;
    std::uint64_t resets = 0;
};

/// 64-bit FNV-1a.
class Fnv1a64 {
public:
    void update(std::string_view bytes) {
        for (unsigned char c : bytes) {
            hash_ ^= c;
            hash_ *= 0x100000001b3ull;
        }
    }
    std::uint64_t value() const { return hash_; }

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

namespace detail {
inline void put_vec(std::string& out, const char* key, Vec2 v) {
    out += '"';
    out += key;
    out += "\":[";
    out += format_g12(v.x);
    out += ',';
    out += format_g12(v.y);
    out += ']';
}
inline void put_num(std::string& out, const char* key, double v) {
    out += '"';
    out += key;
    out += "\":";
    out += format_g12(v);
}
}  // namespace detail

/// One trace line (JSON object, fixed field order, no trailing newline).
inline std::string trace_line(const TickRecord& r) {
    using detail::put_num;
    using detail::put_vec;
    const auto& w = r.world;
    std::string out = "{\"tick\":" + std::to_string(r.tick) + ",\"world\":{";
    put_vec(out, "robot", w.robot_pos);
    out += ',';
    put_vec(out, "forward", w.forward);
    out += ',';
    put_vec(out, "right", w.right);
    out += ',';
    put_vec(out, "target", w.target_pos);
    out += ',';
    put_num(out, "dist", w.target_dist);
    out += ',';
    put_vec(out, "ball", w.ball_pos);
    out += ',';
    put_vec(out, "goal", w.goal_pos);
    out += ",\"held\":";
    out += w.held ? "1" : "0";
    out += ',';
    put_vec(out, "dir", w.target_dir);
    out += ',';
    put_num(out, "fwd_dot", w.fwd_dot);
    out += ',';
    put_num(out, "right_dot", w.right_dot);
    out += "},\"sensors\":[";
    for (std::size_t i = 0; i < r.sensors.values.size(); ++i) {
        if (i) out += ',';
        out += format_g12(r.sensors.values[i]);
    }
    out += "],\"decisions\":{";
    put_num(out, "drive_forward", r.decisions.drive_forward);
    out += ',';
    put_num(out, "throw_ball", r.decisions.throw_ball);
    out += ',';
    put_num(out, "turn_right", r.decisions.turn_right);
    out += ',';
    put_num(out, "turn_left", r.decisions.turn_left);
    out += ',';
    put_vec(out, "target", {r.decisions.target_x, r.decisions.target_y});
    out += "},\"events\":[";
    bool first = true;
    auto ev = [&](unsigned bit, const char* name) {
        if (!(r.events & bit)) return;
        if (!first) out += ',';
        first = false;
        out += '"';
        out += name;
        out += '"';
    };
    ev(event::pickup, "pickup");
    ev(event::throw_ball, "throw");
    ev(event::goal, "goal");
    ev(event::reset, "reset");
    out += "],\"after\":{";
    put_vec(out, "robot", r.after.robot.pos);
    out += ',';
    put_num(out, "angle", r.after.robot.angle_deg);
    out += ',';
    put_vec(out, "ball", r.after.ball.pos);
    out += ',';
    put_vec(out, "ball_vel", r.after.ball.vel);
    out += ",\"ball_state\":";
    out += r.after.ball.mode == BallState::Mode::held ? "\"held\"" : "\"idle\"";
    out += ",\"cooldown\":" + std::to_string(r.after.ball.cooldown) + "}}";
    return out;
}

struct SimTrace {
    std::vector<TickRecord> records;  // empty unless SimConfig::keep_records
    SimSummary summary;
    std::uint64_t hash = 0;  // FNV-1a over every trace line plus '\n'
    SimState final_state;

    std::string summary_csv() const {
        return "ticks,pickups,throws,goals,resets,trace_hash\n" + std::to_string(summary.ticks) + "," +
               std::to_string(summary.pickups) + "," + std::to_string(summary.throws) + "," +
               std::to_string(summary.goals) + "," + std::to_string(summary.resets) + "," + hex64(hash) +
               "\n";
    }
};

/// Runs `ticks` steps from the initial state. `line_sink`, when given,
/// receives each canonical trace line (without newline).
template <typename Sink>
SimTrace run(std::uint64_t ticks, const SimConfig& config, const SoccerBrain& brain, Sink&& line_sink) {
    SimTrace trace;
    SimState state = SimState::initial(config);
    Fnv1a64 hash;
    if (config.keep_records) trace.records.reserve(ticks);
    for (std::uint64_t t = 0; t < ticks; ++t) {
        auto [next, rec] = step(state, brain, config);
        state = next;
        const auto line = trace_line(rec);
        hash.update(line);
        hash.update("\n");
        line_sink(line);
        auto& sum = trace.summary;
        ++sum.ticks;
        if (rec.events & event::pickup) ++sum.pickups;
        if (rec.events & event::throw_ball) ++sum.throws;
        if (rec.events & event::goal) ++sum.goals;
        if (rec.events & event::reset) ++sum.resets;
        if (config.keep_records) trace.records.push_back(rec);
    }
    trace.hash = hash.value();
    trace.final_state = state;
    return trace;
}

inline SimTrace run(std::uint64_t ticks, const SimConfig& config = {},
                    const SoccerBrain& brain = SoccerBrain::shipped()) {
    return run(ticks, config, brain, [](const std::string&) {});
}

}  // namespace dnflogic::soccer
