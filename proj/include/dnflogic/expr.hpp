#pragma once

// Expression IR for compiled logic tables, and its evaluator.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dnflogic/error.hpp"
#include "dnflogic/logic_core.hpp"
#include "dnflogic/logic_table.hpp"

namespace dnflogic {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace node {

struct Const {
    LogicValue value;
    friend bool operator==(const Const&, const Const&) = default;
};

struct InputRef {
    std::string name;
    friend bool operator==(const InputRef&, const InputRef&) = default;
};

struct Not {
    ExprPtr child;
    friend bool operator==(const Not& a, const Not& b);
};

struct And {
    std::vector<Expr> children;
    friend bool operator==(const And& a, const And& b);
};

/// Disjunction folded left in child order. `uncapped` turns the fold into a
/// plain sum, used by tables whose outputs are world quantities.
struct Or {
    std::vector<Expr> children;
    OrSemantics semantics = OrSemantics::capped_add;
    bool uncapped = false;
    friend bool operator==(const Or& a, const Or& b);
};

/// EQ(input, constant).
struct Eq {
    std::string input;
    LogicValue constant;
    friend bool operator==(const Eq&, const Eq&) = default;
};

/// multiplier * child, the output-weighted term of the continuous form.
struct Scaled {
    OutputSpec multiplier;
    ExprPtr child;
    friend bool operator==(const Scaled& a, const Scaled& b);
};

}  // namespace node

struct Expr {
    using Node = std::variant<node::Const, node::InputRef, node::Not, node::And, node::Or, node::Eq,
                              node::Scaled>;
    Node node;

    template <typename T>
    bool is() const noexcept {
        return std::holds_alternative<T>(node);
    }
    template <typename T>
    const T& as() const {
        return std::get<T>(node);
    }

    friend bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }
};

namespace node {
inline bool deep_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}
inline bool operator==(const Not& a, const Not& b) { return deep_equal(a.child, b.child); }
inline bool operator==(const And& a, const And& b) { return a.children == b.children; }
inline bool operator==(const Or& a, const Or& b) {
    return a.semantics == b.semantics && a.uncapped == b.uncapped && a.children == b.children;
}
inline bool operator==(const Scaled& a, const Scaled& b) {
    return a.multiplier == b.multiplier && deep_equal(a.child, b.child);
}
}  // namespace node

inline Expr make_const(LogicValue v) { return Expr{node::Const{v}}; }
inline Expr make_const(double v) { return make_const(LogicValue::continuous(v)); }
inline Expr make_input(std::string name) { return Expr{node::InputRef{std::move(name)}}; }
inline Expr make_not(Expr child) {
    return Expr{node::Not{std::make_shared<const Expr>(std::move(child))}};
}
inline Expr make_and(std::vector<Expr> children) { return Expr{node::And{std::move(children)}}; }
inline Expr make_or(std::vector<Expr> children, OrSemantics semantics = OrSemantics::capped_add,
                    bool uncapped = false) {
    return Expr{node::Or{std::move(children), semantics, uncapped}};
}
inline Expr make_eq(std::string input, LogicValue constant) {
    return Expr{node::Eq{std::move(input), constant}};
}
inline Expr make_scaled(OutputSpec multiplier, Expr child) {
    return Expr{node::Scaled{std::move(multiplier), std::make_shared<const Expr>(std::move(child))}};
}

/// Values for the free names of an expression.
struct Bindings {
    std::map<std::string, LogicValue, std::less<>> inputs;
    std::map<std::string, double, std::less<>> externals;

    Bindings& set(const std::string& name, double v) {
        inputs.insert_or_assign(name, LogicValue::continuous(v));
        return *this;
    }
    Bindings& set(const std::string& name, LogicValue v) {
        inputs.insert_or_assign(name, v);
        return *this;
    }
    Bindings& set_external(const std::string& name, double v) {
        externals.insert_or_assign(name, v);
        return *this;
    }
};

namespace detail {

inline const LogicValue& lookup_input(const Bindings& b, const std::string& name) {
    auto it = b.inputs.find(name);
    if (it == b.inputs.end()) throw error(errc::unbound_name, "input '" + name + "' is not bound");
    return it->second;
}

inline double numeric(const LogicValue& v) {
    if (v.is_continuous()) return v.value();
    if (v.is_state()) return static_cast<double>(v.state_value());
    throw error(errc::unknown_operand, "Unknown has no numeric value");
}

inline double multiplier_value(const OutputSpec& m, const Bindings& b) {
    if (const auto* ext = std::get_if<ExternalBinding>(&m)) {
        auto it = b.externals.find(ext->name);
        if (it == b.externals.end()) {
            throw error(errc::unbound_name, "external '" + ext->name + "' is not bound");
        }
        return it->second;
    }
    return numeric(std::get<LogicValue>(m));
}

}  // namespace detail

inline double eval(const Expr& expr, const Bindings& bindings) {
    struct Visitor {
        const Bindings& b;

        double operator()(const node::Const& n) const { return detail::numeric(n.value); }
        double operator()(const node::InputRef& n) const {
            const auto& v = detail::lookup_input(b, n.name);
            if (!v.is_continuous()) {
                throw error(errc::mixed_kind, "input '" + n.name + "' used as a continuous operand");
            }
            return v.value();
        }
        double operator()(const node::Not& n) const { return not_c(eval(*n.child, b)); }
        double operator()(const node::And& n) const {
            double acc = 1.0;
            for (const auto& c : n.children) acc = and_c(acc, eval(c, b));
            return acc;
        }
        double operator()(const node::Or& n) const {
            double acc = 0.0;
            for (const auto& c : n.children) {
                const double t = eval(c, b);
                acc = n.uncapped ? acc + t : or_c(acc, t, n.semantics);
            }
            return acc;
        }
        double operator()(const node::Eq& n) const {
            return eq_extended(detail::lookup_input(b, n.input), n.constant);
        }
        double operator()(const node::Scaled& n) const {
            return detail::multiplier_value(n.multiplier, b) * eval(*n.child, b);
        }
    };
    return std::visit(Visitor{bindings}, expr.node);
}

}  // namespace dnflogic
