#pragma once

// Logic values and the continuous operator semantics over [0,1], plus the
// complete two-valued operator catalog for arity one and two.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <variant>

#include "dnflogic/error.hpp"

namespace dnflogic {

struct Unknown {
    friend bool operator==(Unknown, Unknown) { return true; }
};

/// Tagged logic value: continuous in [0,1], whole-number state, or Unknown.
/// Construction never clamps; out-of-range continuous values throw.
class LogicValue {
public:
    enum class Kind { continuous, state, unknown };

    LogicValue() : value_(Unknown{}) {}

    static LogicValue continuous(double v) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw error(errc::out_of_range, "continuous logic value " + std::to_string(v) +
                                                " outside [0,1]");
        }
        return LogicValue(v);
    }
    static LogicValue state(std::uint64_t n) { return LogicValue(n); }
    static LogicValue unknown() { return LogicValue(); }

    Kind kind() const noexcept { return static_cast<Kind>(value_.index()); }
    bool is_continuous() const noexcept { return kind() == Kind::continuous; }
    bool is_state() const noexcept { return kind() == Kind::state; }
    bool is_unknown() const noexcept { return kind() == Kind::unknown; }

    /// True for continuous 0 or 1.
    bool is_boolean() const noexcept {
        return is_continuous() && (std::get<double>(value_) == 0.0 || std::get<double>(value_) == 1.0);
    }

    double value() const {
        if (!is_continuous()) throw error(errc::mixed_kind, "logic value is not continuous");
        return std::get<double>(value_);
    }
    std::uint64_t state_value() const {
        if (!is_state()) throw error(errc::mixed_kind, "logic value is not a state value");
        return std::get<std::uint64_t>(value_);
    }

    friend bool operator==(const LogicValue&, const LogicValue&) = default;

private:
    explicit LogicValue(double v) : value_(v) {}
    explicit LogicValue(std::uint64_t n) : value_(n) {}

    std::variant<double, std::uint64_t, Unknown> value_;
};

enum class OrSemantics { capped_add, probabilistic_sum };

inline double not_c(double x) { return 1.0 - x; }

inline double and_c(double x, double y) { return x * y; }

inline double or_c(double x, double y, OrSemantics semantics = OrSemantics::capped_add) {
    switch (semantics) {
    case OrSemantics::probabilistic_sum: return x + y - x * y;
    case OrSemantics::capped_add: break;
    }
    return std::min(x + y, 1.0);
}

/// Continuous XNOR, 1 - |x - y|.
inline double eq(double x, double y) { return 1.0 - std::fabs(x - y); }

/// EQ dispatching on kind: state values compare exactly, continuous values
/// use the continuous form.
inline double eq_extended(const LogicValue& x, const LogicValue& y) {
    if (x.is_unknown() || y.is_unknown()) {
        throw error(errc::unknown_operand, "EQ operand is Unknown");
    }
    if (x.is_state() && y.is_state()) {
        return x.state_value() == y.state_value() ? 1.0 : 0.0;
    }
    if (x.is_continuous() && y.is_continuous()) {
        return eq(x.value(), y.value());
    }
    throw error(errc::mixed_kind, "EQ between a state value and a continuous value");
}

/// Binary operator g_n, n in 1..16. The output column of g_n is the 4-bit
/// big-endian encoding of n-1 read down the rows (0,0),(0,1),(1,0),(1,1).
inline int boolean_g(int n, int x, int y) {
    if (n < 1 || n > 16) throw error(errc::index_out_of_range, "g index " + std::to_string(n));
    if ((x != 0 && x != 1) || (y != 0 && y != 1)) {
        throw error(errc::index_out_of_range, "operator inputs must be bits");
    }
    const int row = 2 * x + y;
    return ((n - 1) >> (3 - row)) & 1;
}

/// Unary operator f_n, n in 1..4, expressed through the binary catalog.
inline int boolean_f(int n, int x, int ignored = 0) {
    static constexpr int via_g[] = {1, 4, 13, 16};
    if (n < 1 || n > 4) throw error(errc::index_out_of_range, "f index " + std::to_string(n));
    return boolean_g(via_g[n - 1], x, ignored);
}

}  // namespace dnflogic
