#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dnflogic/error.hpp"
#include "dnflogic/logic_core.hpp"

namespace dnflogic {

enum class ValueKind { continuous, state };

struct InputColumn {
    std::string name;
    ValueKind kind = ValueKind::continuous;

    friend bool operator==(const InputColumn&, const InputColumn&) = default;
};

/// Named world quantity supplied at evaluation time, e.g. a goal coordinate.
struct ExternalBinding {
    std::string name;

    friend bool operator==(const ExternalBinding&, const ExternalBinding&) = default;
};

/// A row output: constant logic value or an external binding.
using OutputSpec = std::variant<LogicValue, ExternalBinding>;

inline bool is_binding(const OutputSpec& o) { return std::holds_alternative<ExternalBinding>(o); }

/// How a table's literals were written. Boolean notation prints 0/1 and
/// omits unit multipliers when rendered in continuous form.
enum class Notation { decimal, boolean };

struct TableRow {
    std::vector<LogicValue> cells;
    OutputSpec output;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct LogicTable {
    std::string name;
    std::vector<InputColumn> inputs;
    std::vector<TableRow> rows;
    Notation notation = Notation::decimal;

    std::vector<std::string> input_names() const {
        std::vector<std::string> out;
        out.reserve(inputs.size());
        for (const auto& in : inputs) out.push_back(in.name);
        return out;
    }

    /// Any row emitting an external binding or a state value. Such tables
    /// sum their terms without capping.
    bool is_interpolation() const {
        for (const auto& row : rows) {
            if (is_binding(row.output)) return true;
            if (std::get<LogicValue>(row.output).is_state()) return true;
        }
        return false;
    }

    /// All cells and outputs are continuous 0 or 1, no Unknowns.
    bool is_boolean() const {
        for (const auto& in : inputs) {
            if (in.kind != ValueKind::continuous) return false;
        }
        for (const auto& row : rows) {
            for (const auto& c : row.cells) {
                if (!c.is_boolean()) return false;
            }
            if (is_binding(row.output) || !std::get<LogicValue>(row.output).is_boolean()) return false;
        }
        return true;
    }

    friend bool operator==(const LogicTable&, const LogicTable&) = default;
};

struct Violation {
    enum class Severity { error, warning };
    Severity severity;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const {
        for (const auto& v : violations) {
            if (v.severity == Violation::Severity::error) return false;
        }
        return true;
    }
    bool empty() const { return violations.empty(); }

    void error(std::string msg) { violations.push_back({Violation::Severity::error, std::move(msg)}); }
    void warn(std::string msg) { violations.push_back({Violation::Severity::warning, std::move(msg)}); }

    std::string to_string() const {
        std::string out;
        for (const auto& v : violations) {
            if (!out.empty()) out += "; ";
            out += v.severity == Violation::Severity::error ? "error: " : "warning: ";
            out += v.message;
        }
        return out;
    }
};

class validation_error : public error {
public:
    explicit validation_error(ValidationReport report)
        : error(errc::validation_error, report.to_string()), report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

inline ValidationReport validate(const LogicTable& table) {
    ValidationReport report;
    const std::string where = "table '" + table.name + "'";
    if (table.inputs.empty()) report.error(where + " has no inputs");
    if (table.rows.empty()) report.error(where + " has no rows");

    std::set<std::string> seen;
    for (const auto& in : table.inputs) {
        if (in.name.empty()) report.error(where + " has an unnamed input");
        if (!seen.insert(in.name).second) report.error(where + " repeats input '" + in.name + "'");
    }

    bool any_binding = false;
    bool any_constant = false;
    bool any_state_output = false;
    bool any_continuous_output = false;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::string at = where + " row " + std::to_string(r);
        if (row.cells.size() != table.inputs.size()) {
            report.error(at + " has " + std::to_string(row.cells.size()) + " cells for " +
                         std::to_string(table.inputs.size()) + " inputs");
        } else {
            for (std::size_t c = 0; c < row.cells.size(); ++c) {
                const auto& cell = row.cells[c];
                const auto kind = table.inputs[c].kind;
                if (cell.is_unknown()) continue;
                if (kind == ValueKind::continuous && !cell.is_continuous()) {
                    report.error(at + " column '" + table.inputs[c].name +
                                 "' holds a state value in a continuous column");
                } else if (kind == ValueKind::state && !cell.is_state()) {
                    report.error(at + " column '" + table.inputs[c].name +
                                 "' holds a continuous value in a state column");
                }
            }
        }
        if (is_binding(row.output)) {
            any_binding = true;
            if (std::get<ExternalBinding>(row.output).name.empty()) {
                report.error(at + " has an empty output binding");
            }
        } else {
            any_constant = true;
            const auto& out = std::get<LogicValue>(row.output);
            if (out.is_unknown()) report.error(at + " output is Unknown");
            any_state_output = any_state_output || out.is_state();
            any_continuous_output = any_continuous_output || out.is_continuous();
        }
    }
    if (any_binding && any_constant) {
        report.error(where + " mixes constant and external-binding outputs");
    }
    if (any_state_output && any_continuous_output) {
        report.error(where + " mixes state and continuous outputs");
    }

    // Distinct Boolean rows are what make row lookup exact.
    for (std::size_t a = 0; a < table.rows.size(); ++a) {
        const auto& ra = table.rows[a];
        bool boolean_row = true;
        for (const auto& c : ra.cells) boolean_row = boolean_row && c.is_boolean();
        if (!boolean_row) continue;
        for (std::size_t b = a + 1; b < table.rows.size(); ++b) {
            if (ra.cells == table.rows[b].cells) {
                report.warn(where + " rows " + std::to_string(a) + " and " + std::to_string(b) +
                            " have identical Boolean matrices");
            }
        }
    }
    return report;
}

inline void require_valid(const LogicTable& table) {
    auto report = validate(table);
    if (!report.ok()) throw validation_error(std::move(report));
}

}  // namespace dnflogic
