#pragma once

// Reader and writer for table spec documents.
//
// A document is either a JSON array of tables, or an object
//   { "tables": [ ... ], "sensors": [ ... ] }
// where "sensors" is optional. A table is
//   { "name": "xor",
//     "inputs": [ { "name": "X", "kind": "continuous" }, ... ],   // kind: continuous | state
//     "output_kind": "continuous",                                // optional: continuous | state
//     "notation": "boolean",                                      // optional: boolean | decimal
//     "rows": [ { "m": [0, 1], "o": 1 }, ... ] }
// Matrix cells are numbers or "UNK". Outputs are numbers or "$name" external
// bindings. Without an explicit "notation", a table whose literals are all
// written as integers (no UNK, no bindings) uses Boolean notation.
//
// A sensor is
//   { "name": "s2", "source": "w4", "scale": 1, "fn": "map_range", "from": [0, 400], "to": [1, 0] }
// with fn one of clamp (fields "min", "max"), map_range, passthrough.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnflogic/detail/json_reader.hpp"
#include "dnflogic/error.hpp"
#include "dnflogic/fuzzification.hpp"
#include "dnflogic/logic_table.hpp"
#include "dnflogic/number_format.hpp"

namespace dnflogic {

struct SensorDef {
    std::string name;
    FuzzifierSpec fuzzifier;

    friend bool operator==(const SensorDef&, const SensorDef&) = default;
};

struct TableDocument {
    std::vector<LogicTable> tables;
    std::vector<SensorDef> sensors;

    const LogicTable* find(std::string_view name) const {
        for (const auto& t : tables) {
            if (t.name == name) return &t;
        }
        return nullptr;
    }
};

namespace detail {

using JT = JsonValue::Type;

class SpecBuilder {
public:
    TableDocument build(const JsonValue& root) {
        TableDocument doc;
        const JsonValue* tables = &root;
        if (root.type == JT::object) {
            allow_only(root, {"tables", "sensors"});
            tables = &member(root, "tables");
            if (const auto* sensors = root.find("sensors")) doc.sensors = build_sensors(*sensors);
        }
        expect_type(*tables, JT::array, "table list");
        for (const auto& t : tables->items) {
            doc.tables.push_back(build_table(t));
            for (std::size_t i = 0; i + 1 < doc.tables.size(); ++i) {
                if (doc.tables[i].name == doc.tables.back().name) {
                    fail(t, "duplicate table name '" + doc.tables.back().name + "'");
                }
            }
        }
        return doc;
    }

private:
    [[noreturn]] static void fail(const JsonValue& at, const std::string& what) {
        throw syntax_error(what, at.line, at.column);
    }

    static void expect_type(const JsonValue& v, JT type, const char* what) {
        if (v.type != type) fail(v, std::string(what) + " has the wrong type (" + v.type_name() + ")");
    }

    static const JsonValue& member(const JsonValue& obj, std::string_view key) {
        const auto* v = obj.find(key);
        if (!v) fail(obj, "missing member '" + std::string(key) + "'");
        return *v;
    }

    static void allow_only(const JsonValue& obj, std::initializer_list<std::string_view> keys) {
        for (const auto& [k, v] : obj.members) {
            bool known = false;
            for (auto key : keys) known = known || k == key;
            if (!known) fail(v, "unknown member '" + k + "'");
        }
    }

    static std::string string_member(const JsonValue& obj, std::string_view key) {
        const auto& v = member(obj, key);
        expect_type(v, JT::string, "member");
        return v.text;
    }

    static double number_member(const JsonValue& obj, std::string_view key, double fallback) {
        const auto* v = obj.find(key);
        if (!v) return fallback;
        expect_type(*v, JT::number, "member");
        return v->number;
    }

    static ValueKind parse_kind(const JsonValue& v) {
        expect_type(v, JT::string, "kind");
        if (v.text == "continuous") return ValueKind::continuous;
        if (v.text == "state") return ValueKind::state;
        fail(v, "kind must be \"continuous\" or \"state\"");
    }

    static std::string where(const JsonValue& v) {
        return "line " + std::to_string(v.line) + ", column " + std::to_string(v.column);
    }

    // Numbers become logic values of the given kind; bad values are recorded
    // in the report and replaced by Unknown so the table stays well formed.
    static LogicValue number_value(const JsonValue& v, ValueKind kind, ValidationReport& report) {
        if (kind == ValueKind::state) {
            if (!v.integral_literal() || v.number < 0.0 || v.number > 9007199254740992.0) {
                report.error("state value " + v.text + " at " + where(v) + " is not a whole number");
                return LogicValue::unknown();
            }
            return LogicValue::state(static_cast<std::uint64_t>(v.number));
        }
        if (!(v.number >= 0.0 && v.number <= 1.0)) {
            report.error("continuous value " + v.text + " at " + where(v) + " outside [0,1]");
            return LogicValue::unknown();
        }
        return LogicValue::continuous(v.number);
    }

    LogicTable build_table(const JsonValue& t) {
        expect_type(t, JT::object, "table");
        allow_only(t, {"name", "inputs", "rows", "output_kind", "notation"});
        LogicTable table;
        table.name = string_member(t, "name");

        const auto& inputs = member(t, "inputs");
        expect_type(inputs, JT::array, "inputs");
        for (const auto& in : inputs.items) {
            expect_type(in, JT::object, "input");
            allow_only(in, {"name", "kind"});
            InputColumn col{string_member(in, "name"), ValueKind::continuous};
            if (const auto* k = in.find("kind")) col.kind = parse_kind(*k);
            table.inputs.push_back(std::move(col));
        }

        ValueKind output_kind = ValueKind::continuous;
        if (const auto* k = t.find("output_kind")) output_kind = parse_kind(*k);

        ValidationReport value_errors;
        bool all_integral = true;
        const auto& rows = member(t, "rows");
        expect_type(rows, JT::array, "rows");
        for (const auto& r : rows.items) {
            expect_type(r, JT::object, "row");
            allow_only(r, {"m", "o"});
            const auto& m = member(r, "m");
            expect_type(m, JT::array, "row matrix");
            TableRow row;
            for (std::size_t c = 0; c < m.items.size(); ++c) {
                const auto& cell = m.items[c];
                if (cell.type == JT::string && cell.text == "UNK") {
                    row.cells.push_back(LogicValue::unknown());
                    all_integral = false;
                } else if (cell.type == JT::number) {
                    const auto kind = c < table.inputs.size() ? table.inputs[c].kind : ValueKind::continuous;
                    row.cells.push_back(number_value(cell, kind, value_errors));
                    all_integral = all_integral && cell.integral_literal();
                } else {
                    fail(cell, "matrix cell must be a number or \"UNK\"");
                }
            }
            const auto& o = member(r, "o");
            if (o.type == JT::number) {
                row.output = number_value(o, output_kind, value_errors);
                all_integral = all_integral && o.integral_literal();
            } else if (o.type == JT::string && o.text.size() > 1 && o.text[0] == '$') {
                row.output = ExternalBinding{o.text.substr(1)};
                all_integral = false;
            } else if (o.type == JT::string && o.text == "UNK") {
                row.output = LogicValue::unknown();
                all_integral = false;
            } else {
                fail(o, "row output must be a number or a \"$name\" binding");
            }
            table.rows.push_back(std::move(row));
        }

        table.notation = all_integral ? Notation::boolean : Notation::decimal;
        if (const auto* n = t.find("notation")) {
            expect_type(*n, JT::string, "notation");
            if (n->text == "boolean") table.notation = Notation::boolean;
            else if (n->text == "decimal") table.notation = Notation::decimal;
            else fail(*n, "notation must be \"boolean\" or \"decimal\"");
        }

        auto report = validate(table);
        if (!value_errors.ok() || !report.ok()) {
            for (auto& v : report.violations) value_errors.violations.push_back(std::move(v));
            throw validation_error(std::move(value_errors));
        }
        return table;
    }

    std::vector<SensorDef> build_sensors(const JsonValue& list) {
        expect_type(list, JT::array, "sensors");
        std::vector<SensorDef> out;
        for (const auto& s : list.items) {
            expect_type(s, JT::object, "sensor");
            SensorDef def;
            def.name = string_member(s, "name");
            def.fuzzifier.source = string_member(s, "source");
            def.fuzzifier.scale = number_member(s, "scale", 1.0);
            const auto fn = string_member(s, "fn");
            if (fn == "clamp") {
                allow_only(s, {"name", "source", "scale", "fn", "min", "max"});
                def.fuzzifier.fn = ClampFn{number_member(s, "min", 0.0), number_member(s, "max", 1.0)};
            } else if (fn == "map_range") {
                allow_only(s, {"name", "source", "scale", "fn", "from", "to"});
                auto pair = [&](std::string_view key) {
                    const auto& v = member(s, key);
                    expect_type(v, JT::array, "range");
                    if (v.items.size() != 2) fail(v, "range must have two numbers");
                    for (const auto& x : v.items) expect_type(x, JT::number, "range bound");
                    return std::pair{v.items[0].number, v.items[1].number};
                };
                const auto [min1, max1] = pair("from");
                const auto [min2, max2] = pair("to");
                def.fuzzifier.fn = MapRangeFn{min1, max1, min2, max2};
            } else if (fn == "passthrough") {
                allow_only(s, {"name", "source", "scale", "fn"});
                def.fuzzifier.fn = PassthroughFn{};
            } else {
                fail(member(s, "fn"), "unknown fuzzifier '" + fn + "'");
            }
            try {
                def.fuzzifier.check();
            } catch (const error& e) {
                ValidationReport report;
                report.error("sensor '" + def.name + "' at " + where(s) + ": " + e.what());
                throw validation_error(std::move(report));
            }
            for (const auto& prev : out) {
                if (prev.name == def.name) fail(s, "duplicate sensor '" + def.name + "'");
            }
            out.push_back(std::move(def));
        }
        return out;
    }
};

inline std::string value_literal(const LogicValue& v, bool integral) {
    if (v.is_unknown()) return "\"UNK\"";
    if (v.is_state()) return std::to_string(v.state_value());
    return format_literal(v.value(), integral);
}

}  // namespace detail

/// Parses a whole document. Throws syntax_error or validation_error; never
/// returns a partial document.
inline TableDocument parse_spec_document(std::string_view text) {
    return detail::SpecBuilder{}.build(detail::parse_json(text));
}

inline std::vector<LogicTable> parse_table_spec(std::string_view text) {
    return parse_spec_document(text).tables;
}

inline TableDocument load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::syntax_error, "cannot read spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_document(buf.str());
}

inline std::string serialize_table(const LogicTable& table) {
    using detail::quote_json;
    const bool integral = table.notation == Notation::boolean;
    bool inferred_boolean = true;
    bool state_outputs = false;

    std::string rows;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        rows += r ? ",\n      {\"m\": [" : "\n      {\"m\": [";
        for (std::size_t c = 0; c < row.cells.size(); ++c) {
            const auto lit = detail::value_literal(row.cells[c], integral);
            inferred_boolean = inferred_boolean && detail::looks_integral(lit) && lit.front() != '"';
            rows += (c ? ", " : "") + lit;
        }
        rows += "], \"o\": ";
        if (const auto* b = std::get_if<ExternalBinding>(&row.output)) {
            rows += quote_json("$" + b->name);
            inferred_boolean = false;
        } else {
            const auto& out = std::get<LogicValue>(row.output);
            state_outputs = state_outputs || out.is_state();
            const auto lit = detail::value_literal(out, integral);
            inferred_boolean = inferred_boolean && detail::looks_integral(lit) && lit.front() != '"';
            rows += lit;
        }
        rows += "}";
    }

    std::string out = "  {\n    \"name\": " + quote_json(table.name) + ",\n    \"inputs\": [";
    for (std::size_t i = 0; i < table.inputs.size(); ++i) {
        out += i ? ", " : "";
        out += "{\"name\": " + quote_json(table.inputs[i].name) + ", \"kind\": " +
               (table.inputs[i].kind == ValueKind::state ? "\"state\"" : "\"continuous\"") + "}";
    }
    out += "],\n";
    if (state_outputs) out += "    \"output_kind\": \"state\",\n";
    if (inferred_boolean != integral) {
        out += std::string("    \"notation\": ") + (integral ? "\"boolean\"" : "\"decimal\"") + ",\n";
    }
    out += "    \"rows\": [" + rows + "\n    ]\n  }";
    return out;
}

inline std::string serialize_sensor(const SensorDef& s) {
    using detail::quote_json;
    const auto& f = s.fuzzifier;
    std::string out = "    {\"name\": " + quote_json(s.name) + ", \"source\": " + quote_json(f.source);
    if (f.scale != 1.0) out += ", \"scale\": " + format_literal(f.scale, true);
    if (const auto* c = std::get_if<ClampFn>(&f.fn)) {
        out += ", \"fn\": \"clamp\", \"min\": " + format_literal(c->min, true) +
               ", \"max\": " + format_literal(c->max, true);
    } else if (const auto* m = std::get_if<MapRangeFn>(&f.fn)) {
        out += ", \"fn\": \"map_range\", \"from\": [" + format_literal(m->min1, true) + ", " +
               format_literal(m->max1, true) + "], \"to\": [" + format_literal(m->min2, true) + ", " +
               format_literal(m->max2, true) + "]";
    } else {
        out += ", \"fn\": \"passthrough\"";
    }
    return out + "}";
}

inline std::string serialize_tables(const std::vector<LogicTable>& tables) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < tables.size(); ++i) {
        out += serialize_table(tables[i]);
        out += i + 1 < tables.size() ? ",\n" : "\n";
    }
    return out + "]\n";
}

inline std::string serialize_document(const TableDocument& doc) {
    if (doc.sensors.empty()) return serialize_tables(doc.tables);
    std::string out = "{\n  \"sensors\": [\n";
    for (std::size_t i = 0; i < doc.sensors.size(); ++i) {
        out += serialize_sensor(doc.sensors[i]);
        out += i + 1 < doc.sensors.size() ? ",\n" : "\n";
    }
    out += "  ],\n  \"tables\": ";
    auto tables = serialize_tables(doc.tables);
    tables.pop_back();  // trailing newline
    return out + tables + "\n}\n";
}

}  // namespace dnflogic
