#pragma once

#include <array>
#include <string>
#include <string_view>

#include "dnflogic/dnf_compiler.hpp"
#include "dnflogic/expr.hpp"
#include "dnflogic/soccer/soccer_tables.hpp"
#include "dnflogic/soccer/world.hpp"
#include "dnflogic/table_spec.hpp"

namespace dnflogic::soccer {

struct DecisionVector {
    double drive_forward = 0.0;
    double throw_ball = 0.0;
    double turn_right = 0.0;
    double turn_left = 0.0;
    double target_x = 0.0;
    double target_y = 0.0;
};

inline constexpr std::array<std::string_view, 6> decision_table_names = {
    "drive_forward", "throw_ball", "turn_right", "turn_left", "target_x", "target_y"};

/// The robot's decision tables, compiled once.
class SoccerBrain {
public:
    explicit SoccerBrain(TableDocument doc, OrSemantics semantics = OrSemantics::capped_add)
        : doc_(std::move(doc)) {
        for (std::size_t i = 0; i < decision_table_names.size(); ++i) {
            const auto* table = doc_.find(decision_table_names[i]);
            if (!table) {
                throw error(errc::unbound_name,
                            "behaviour set lacks table '" + std::string(decision_table_names[i]) + "'");
            }
            exprs_[i] = compile_with_unknowns(*table, semantics);
        }
    }

    static const SoccerBrain& shipped() {
        static const SoccerBrain brain(parse_spec_document(shipped_tables));
        return brain;
    }

    const TableDocument& document() const { return doc_; }
    const Expr& expr(std::size_t i) const { return exprs_.at(i); }

    SensorVector sense(const WorldState& w) const { return compute_sensors(w, doc_.sensors); }

    DecisionVector decide(const SensorVector& s, const WorldState& w) const {
        Bindings b;
        for (std::size_t i = 0; i < sensor_names.size(); ++i) {
            b.set(std::string(sensor_names[i]), s.values[i]);
        }
        for (auto name : world_value_names) b.set_external(std::string(name), world_value(w, name));
        DecisionVector d;
        d.drive_forward = eval(exprs_[0], b);
        d.throw_ball = eval(exprs_[1], b);
        d.turn_right = eval(exprs_[2], b);
        d.turn_left = eval(exprs_[3], b);
        d.target_x = eval(exprs_[4], b);
        d.target_y = eval(exprs_[5], b);
        return d;
    }

private:
    TableDocument doc_;
    std::array<Expr, 6> exprs_;
};

/// Sensors per the shipped sensor definitions.
inline SensorVector compute_sensors(const WorldState& w) { return SoccerBrain::shipped().sense(w); }

inline DecisionVector decide(const SensorVector& s, const WorldState& w) {
    return SoccerBrain::shipped().decide(s, w);
}

}  // namespace dnflogic::soccer
