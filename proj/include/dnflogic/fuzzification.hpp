#pragma once

// World value <-> logic value conversion.

#include <cmath>
#include <string>
#include <variant>

#include "dnflogic/error.hpp"
#include "dnflogic/logic_core.hpp"

namespace dnflogic {

inline double clamp(double x, double min, double max) {
    if (min > max) throw error(errc::inverted_bounds, "clamp min exceeds max");
    if (x < min) return min;
    if (x > max) return max;
    return x;
}

/// Affine remap of [min1,max1] onto [min2,max2]. Not clamped.
inline double map_range(double x, double min1, double max1, double min2, double max2) {
    if (max1 == min1) throw error(errc::degenerate_source_range, "map_range source range is empty");
    return min2 + ((x - min1) / (max1 - min1)) * (max2 - min2);
}

inline bool defuzz_threshold(double z, double threshold) { return z > threshold; }

inline double defuzz_scale(double z, double gain) { return gain * z; }

struct ClampFn {
    double min = 0.0;
    double max = 1.0;
    friend bool operator==(const ClampFn&, const ClampFn&) = default;
};

struct MapRangeFn {
    double min1 = 0.0;
    double max1 = 1.0;
    double min2 = 0.0;
    double max2 = 1.0;
    friend bool operator==(const MapRangeFn&, const MapRangeFn&) = default;
};

struct PassthroughFn {
    friend bool operator==(const PassthroughFn&, const PassthroughFn&) = default;
};

/// Sensor definition: fn(scale * world[source]). MapRange results are
/// clamped to [0,1] so the output is always a valid logic value.
struct FuzzifierSpec {
    std::variant<ClampFn, MapRangeFn, PassthroughFn> fn;
    std::string source;
    double scale = 1.0;

    friend bool operator==(const FuzzifierSpec&, const FuzzifierSpec&) = default;

    /// Throws on parameters that could produce values outside [0,1].
    void check() const {
        if (source.empty()) throw error(errc::validation_error, "fuzzifier has no source");
        if (!std::isfinite(scale)) throw error(errc::validation_error, "fuzzifier scale is not finite");
        if (const auto* c = std::get_if<ClampFn>(&fn)) {
            if (c->min > c->max) throw error(errc::inverted_bounds, "clamp min exceeds max");
            if (c->min < 0.0 || c->max > 1.0) {
                throw error(errc::validation_error, "clamp bounds must lie within [0,1]");
            }
        } else if (const auto* m = std::get_if<MapRangeFn>(&fn)) {
            if (m->max1 == m->min1) {
                throw error(errc::degenerate_source_range, "map_range source range is empty");
            }
            auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
            if (!unit(m->min2) || !unit(m->max2)) {
                throw error(errc::validation_error, "map_range targets must lie within [0,1]");
            }
        }
    }

    double apply(double world) const {
        if (!std::isfinite(world)) {
            throw error(errc::non_finite_state, "world value '" + source + "' is not finite");
        }
        const double x = scale * world;
        if (const auto* c = std::get_if<ClampFn>(&fn)) return clamp(x, c->min, c->max);
        if (const auto* m = std::get_if<MapRangeFn>(&fn)) {
            return clamp(map_range(x, m->min1, m->max1, m->min2, m->max2), 0.0, 1.0);
        }
        return LogicValue::continuous(x).value();
    }
};

}  // namespace dnflogic
