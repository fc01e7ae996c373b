#pragma once

// Logic table -> DNF expression compilers, canonical rendering and
// truth-table enumeration.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dnflogic/error.hpp"
#include "dnflogic/expr.hpp"
#include "dnflogic/logic_table.hpp"
#include "dnflogic/number_format.hpp"

namespace dnflogic {

namespace detail {

inline void require_boolean(const LogicTable& table) {
    require_valid(table);
    if (!table.is_boolean()) {
        throw error(errc::non_boolean_table, "table '" + table.name + "' is not a 0/1 table");
    }
}

inline bool output_is_one(const TableRow& row) {
    return std::get<LogicValue>(row.output).value() != 0.0;
}

inline Expr disjunction(std::vector<Expr> terms, OrSemantics semantics, bool uncapped = false) {
    if (terms.empty()) return make_const(0.0);
    return make_or(std::move(terms), semantics, uncapped);
}

}  // namespace detail

/// Classical DNF: one AND term per row with a nonzero output, each input
/// appearing plain (matrix 1) or negated (matrix 0).
inline Expr compile_dnf_not(const LogicTable& table, OrSemantics semantics = OrSemantics::capped_add) {
    detail::require_boolean(table);
    std::vector<Expr> terms;
    for (const auto& row : table.rows) {
        if (!detail::output_is_one(row)) continue;
        std::vector<Expr> factors;
        for (std::size_t i = 0; i < table.inputs.size(); ++i) {
            auto ref = make_input(table.inputs[i].name);
            factors.push_back(row.cells[i].value() == 0.0 ? make_not(std::move(ref)) : std::move(ref));
        }
        terms.push_back(make_and(std::move(factors)));
    }
    return detail::disjunction(std::move(terms), semantics);
}

/// DNF where every literal is XNOR(input, matrix value).
inline Expr compile_dnf_xnor(const LogicTable& table, OrSemantics semantics = OrSemantics::capped_add) {
    detail::require_boolean(table);
    std::vector<Expr> terms;
    for (const auto& row : table.rows) {
        if (!detail::output_is_one(row)) continue;
        std::vector<Expr> factors;
        for (std::size_t i = 0; i < table.inputs.size(); ++i) {
            factors.push_back(make_eq(table.inputs[i].name, row.cells[i]));
        }
        terms.push_back(make_and(std::move(factors)));
    }
    return detail::disjunction(std::move(terms), semantics);
}

/// Continuous form with Unknown elision: each row becomes
/// O_j * EQ(i_0, m_0j) * ... with Unknown cells contributing no factor.
/// Rows whose constant output is zero are dropped; binding rows never are.
inline Expr compile_with_unknowns(const LogicTable& table,
                                  OrSemantics semantics = OrSemantics::capped_add) {
    require_valid(table);
    std::vector<Expr> terms;
    for (const auto& row : table.rows) {
        if (!is_binding(row.output)) {
            const auto& out = std::get<LogicValue>(row.output);
            if (detail::numeric(out) == 0.0) continue;
        }
        std::vector<Expr> factors;
        for (std::size_t i = 0; i < table.inputs.size(); ++i) {
            if (row.cells[i].is_unknown()) continue;
            factors.push_back(make_eq(table.inputs[i].name, row.cells[i]));
        }
        auto product = factors.empty() ? make_const(1.0) : make_and(std::move(factors));
        terms.push_back(make_scaled(row.output, std::move(product)));
    }
    return detail::disjunction(std::move(terms), semantics, table.is_interpolation());
}

inline Expr compile_continuous(const LogicTable& table, OrSemantics semantics = OrSemantics::capped_add) {
    require_valid(table);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (const auto& cell : table.rows[r].cells) {
            if (cell.is_unknown()) {
                throw error(errc::unknown_cell, "table '" + table.name + "' row " + std::to_string(r) +
                                                    " has an Unknown cell; use compile_with_unknowns");
            }
        }
    }
    return compile_with_unknowns(table, semantics);
}

enum class RenderStyle { not_style, xnor_style, continuous };

namespace detail {

inline std::string literal(const LogicValue& v, bool integral) {
    if (v.is_state()) return std::to_string(v.state_value());
    if (v.is_unknown()) return "UNK";
    return format_literal(v.value(), integral);
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

[[noreturn]] inline void bad_shape(const std::string& what) { throw error(errc::non_dnf_shape, what); }

class Renderer {
public:
    Renderer(RenderStyle style, Notation notation) : style_(style), boolean_(notation == Notation::boolean) {}

    std::string root(const Expr& e) const {
        if (const auto* c = std::get_if<node::Const>(&e.node)) return literal(c->value, integral());
        if (const auto* o = std::get_if<node::Or>(&e.node)) {
            std::vector<std::string> terms;
            for (const auto& t : o->children) terms.push_back(term(t));
            return join(terms, separator(*o));
        }
        return term(e);
    }

private:
    bool integral() const { return style_ != RenderStyle::continuous || boolean_; }

    std::string separator(const node::Or& o) const {
        if (style_ != RenderStyle::continuous) return " OR ";
        return o.uncapped ? " + " : " \xE2\x8A\x95 ";  // U+2295 circled plus
    }

    std::string term(const Expr& e) const {
        if (style_ != RenderStyle::continuous) {
            const auto* a = std::get_if<node::And>(&e.node);
            if (!a) bad_shape("expected an AND term");
            std::vector<std::string> factors;
            for (const auto& f : a->children) factors.push_back(boolean_factor(f));
            return "(" + join(factors, " AND ") + ")";
        }
        const auto* s = std::get_if<node::Scaled>(&e.node);
        if (!s) bad_shape("expected a scaled term in continuous form");
        std::vector<std::string> factors;
        if (const auto* a = std::get_if<node::And>(&s->child->node)) {
            for (const auto& f : a->children) factors.push_back(eq_factor(f));
        } else if (const auto* c = std::get_if<node::Const>(&s->child->node);
                   !c || !(c->value == LogicValue::continuous(1.0))) {
            bad_shape("scaled term must wrap a product of EQ factors");
        }
        const std::string mult = multiplier(s->multiplier);
        if (factors.empty()) return mult;
        if (boolean_) {
            const std::string product = "(" + join(factors, " * ") + ")";
            return is_unit(s->multiplier) ? product : mult + " * " + product;
        }
        return mult + " * " + join(factors, " * ");
    }

    std::string boolean_factor(const Expr& f) const {
        if (style_ == RenderStyle::xnor_style) {
            const auto* q = std::get_if<node::Eq>(&f.node);
            if (!q) bad_shape("XNOR style expects EQ factors");
            return "XNOR(" + q->input + "," + literal(q->constant, true) + ")";
        }
        if (const auto* r = std::get_if<node::InputRef>(&f.node)) return r->name;
        if (const auto* n = std::get_if<node::Not>(&f.node)) {
            if (const auto* r = std::get_if<node::InputRef>(&n->child->node)) return "NOT(" + r->name + ")";
        }
        bad_shape("NOT style expects inputs or negated inputs");
    }

    std::string eq_factor(const Expr& f) const {
        const auto* q = std::get_if<node::Eq>(&f.node);
        if (!q) bad_shape("continuous form expects EQ factors");
        return "EQ(" + q->input + (boolean_ ? "," : ", ") + literal(q->constant, integral()) + ")";
    }

    std::string multiplier(const OutputSpec& m) const {
        if (const auto* b = std::get_if<ExternalBinding>(&m)) return b->name;
        return literal(std::get<LogicValue>(m), integral());
    }

    static bool is_unit(const OutputSpec& m) {
        const auto* v = std::get_if<LogicValue>(&m);
        return v && *v == LogicValue::continuous(1.0);
    }

    RenderStyle style_;
    bool boolean_;
};

}  // namespace detail

/// Canonical text for a DNF-shaped expression. Terms appear in row order,
/// factors in input order.
inline std::string render(const Expr& expr, RenderStyle style, Notation notation = Notation::decimal) {
    return detail::Renderer(style, notation).root(expr);
}

inline Expr compile(const LogicTable& table, RenderStyle style,
                    OrSemantics semantics = OrSemantics::capped_add) {
    switch (style) {
    case RenderStyle::not_style: return compile_dnf_not(table, semantics);
    case RenderStyle::xnor_style: return compile_dnf_xnor(table, semantics);
    case RenderStyle::continuous: break;
    }
    return compile_with_unknowns(table, semantics);
}

/// Compile with the algorithm matching `style` and render in the table's notation.
inline std::string render_table(const LogicTable& table, RenderStyle style,
                                OrSemantics semantics = OrSemantics::capped_add) {
    return render(compile(table, style, semantics), style, table.notation);
}

struct TruthTable {
    struct Row {
        std::vector<int> bits;
        double out;
    };
    std::vector<std::string> inputs;
    std::vector<Row> rows;

    std::string to_csv() const {
        std::string out = detail::join(inputs, ",");
        out += inputs.empty() ? "out\n" : ",out\n";
        for (const auto& r : rows) {
            for (int b : r.bits) {
                out += std::to_string(b);
                out += ',';
            }
            out += format_g12(r.out);
            out += '\n';
        }
        return out;
    }
};

constexpr std::size_t max_truth_table_inputs = 20;

/// Evaluates `expr` on all 2^n Boolean assignments in binary counting order,
/// first input most significant.
inline TruthTable truth_table(const Expr& expr, const std::vector<std::string>& input_names) {
    const std::size_t n = input_names.size();
    if (n > max_truth_table_inputs) {
        throw error(errc::too_many_inputs, std::to_string(n) + " inputs exceeds the limit of " +
                                               std::to_string(max_truth_table_inputs));
    }
    TruthTable table{input_names, {}};
    const std::uint64_t count = std::uint64_t{1} << n;
    table.rows.reserve(count);
    Bindings b;
    for (std::uint64_t k = 0; k < count; ++k) {
        TruthTable::Row row{std::vector<int>(n), 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            row.bits[i] = static_cast<int>((k >> (n - 1 - i)) & 1u);
            b.set(input_names[i], static_cast<double>(row.bits[i]));
        }
        row.out = eval(expr, b);
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace dnflogic
