#pragma once

// dnflogic command-line front end. Kept in a header so the test suite can
// drive it in-process.
//
// Exit codes: 0 ok, 1 spec parse error, 2 unknown table, 3 non-Boolean table,
// 4 bad or missing binding, 5 wrong arity for surface, 6 unwritable output.
// Command-line usage errors use CLI11's exit codes.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dnflogic/dnflogic.hpp"

namespace dnflogic::cli {

enum exit_code : int {
    exit_ok = 0,
    exit_parse = 1,
    exit_unknown_table = 2,
    exit_non_boolean = 3,
    exit_binding = 4,
    exit_arity = 5,
    exit_unwritable = 6,
};

struct Failure {
    int code;
    std::string message;
};

namespace detail {

inline TableDocument load(const std::string& path) {
    if (path.empty()) throw Failure{exit_parse, "no --spec given"};
    try {
        return load_spec_file(path);
    } catch (const error& e) {
        throw Failure{exit_parse, e.what()};
    }
}

inline const LogicTable& find_table(const TableDocument& doc, const std::string& name) {
    const auto* t = doc.find(name);
    if (!t) throw Failure{exit_unknown_table, "no table named '" + name + "'"};
    return *t;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Failure{exit_unwritable, "cannot open '" + path + "' for writing"};
    f << text;
    f.flush();
    if (!f) throw Failure{exit_unwritable, "failed writing '" + path + "'"};
}

inline void emit(const std::string& out_path, const std::string& text, std::ostream& out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
    } else {
        write_file(out_path, text);
    }
}

inline std::optional<double> parse_real(const std::string& s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(v)) return std::nullopt;
    return v;
}

/// --bind name=value pairs resolved against a table's inputs and bindings.
inline Bindings resolve_bindings(const LogicTable& table, const std::vector<std::string>& binds) {
    std::map<std::string, std::string> raw;
    for (const auto& b : binds) {
        const auto eqpos = b.find('=');
        if (eqpos == std::string::npos || eqpos == 0) {
            throw Failure{exit_binding, "binding '" + b + "' is not name=value"};
        }
        raw[b.substr(0, eqpos)] = b.substr(eqpos + 1);
    }
    Bindings out;
    std::set<std::string> used;
    for (const auto& in : table.inputs) {
        auto it = raw.find(in.name);
        if (it == raw.end()) throw Failure{exit_binding, "missing binding for input '" + in.name + "'"};
        used.insert(in.name);
        if (in.kind == ValueKind::state) {
            std::uint64_t n = 0;
            const auto& s = it->second;
            auto res = std::from_chars(s.data(), s.data() + s.size(), n);
            if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
                throw Failure{exit_binding, "state input '" + in.name + "' needs a whole number"};
            }
            out.set(in.name, LogicValue::state(n));
        } else {
            auto v = parse_real(it->second);
            if (!v || *v < 0.0 || *v > 1.0) {
                throw Failure{exit_binding, "input '" + in.name + "' needs a number in [0,1]"};
            }
            out.set(in.name, *v);
        }
    }
    for (const auto& row : table.rows) {
        const auto* ext = std::get_if<ExternalBinding>(&row.output);
        if (!ext || used.count(ext->name)) continue;
        auto it = raw.find(ext->name);
        if (it == raw.end()) throw Failure{exit_binding, "missing binding for '" + ext->name + "'"};
        auto v = parse_real(it->second);
        if (!v) throw Failure{exit_binding, "binding '" + ext->name + "' needs a number"};
        out.set_external(ext->name, *v);
        used.insert(ext->name);
    }
    for (const auto& [name, value] : raw) {
        if (!used.count(name)) throw Failure{exit_binding, "table has no input or binding '" + name + "'"};
    }
    return out;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compile logic tables into continuous DNF expressions and run the soccer demo",
                 "dnflogic"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string spec_path;
    std::string out_path = "-";
    app.add_option("--spec", spec_path, "Table spec document");
    app.add_option("--out", out_path, "Output path, or - for standard output");

    std::string table_name;
    std::string style_name = "continuous";
    std::string or_name = "capped";
    std::vector<std::string> binds;
    std::size_t res = 32;
    std::uint64_t ticks = 20000;
    std::string trace_path;

    const std::map<std::string, RenderStyle> styles{
        {"not", RenderStyle::not_style}, {"xnor", RenderStyle::xnor_style}, {"continuous", RenderStyle::continuous}};
    const std::map<std::string, OrSemantics> ors{{"capped", OrSemantics::capped_add},
                                                 {"probsum", OrSemantics::probabilistic_sum}};

    auto add_or = [&](CLI::App* sub) {
        sub->add_option("--or", or_name, "OR semantics")->check(CLI::IsMember({"capped", "probsum"}));
    };

    auto* compile_cmd = app.add_subcommand("compile", "Render a table's DNF equation");
    compile_cmd->add_option("--table", table_name, "Table name")->required();
    compile_cmd->add_option("--style", style_name, "not | xnor | continuous")
        ->check(CLI::IsMember({"not", "xnor", "continuous"}));
    add_or(compile_cmd);

    auto* truth_cmd = app.add_subcommand("truth-table", "Print all 2^n Boolean evaluations as CSV");
    truth_cmd->add_option("--table", table_name, "Table name")->required();
    add_or(truth_cmd);

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a table's continuous form");
    eval_cmd->add_option("--table", table_name, "Table name")->required();
    eval_cmd->add_option("--bind", binds, "name=value (repeatable)");
    add_or(eval_cmd);

    auto* surface_cmd = app.add_subcommand("surface", "Sample a two-input table over the unit square");
    surface_cmd->add_option("--table", table_name, "Table name")->required();
    surface_cmd->add_option("--res", res, "Grid cells per axis")->check(CLI::PositiveNumber);
    surface_cmd->add_option("--bind", binds, "External bindings, name=value (repeatable)");
    add_or(surface_cmd);

    auto* sim_cmd = app.add_subcommand("simulate", "Run the soccer robot simulation");
    sim_cmd->add_option("--ticks", ticks, "Number of ticks")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--trace", trace_path, "Write the per-tick trace here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const auto semantics = ors.at(or_name);
        if (*compile_cmd) {
            const auto doc = detail::load(spec_path);
            const auto& table = detail::find_table(doc, table_name);
            const auto style = styles.at(style_name);
            if (style != RenderStyle::continuous && !table.is_boolean()) {
                throw Failure{exit_non_boolean, "table '" + table.name + "' is not a 0/1 table"};
            }
            detail::emit(out_path, render_table(table, style, semantics) + "\n", out);
        } else if (*truth_cmd) {
            const auto doc = detail::load(spec_path);
            const auto& table = detail::find_table(doc, table_name);
            if (!table.is_boolean()) {
                throw Failure{exit_non_boolean, "table '" + table.name + "' is not a 0/1 table"};
            }
            const auto tt = truth_table(compile_dnf_not(table, semantics), table.input_names());
            detail::emit(out_path, tt.to_csv(), out);
        } else if (*eval_cmd) {
            const auto doc = detail::load(spec_path);
            const auto& table = detail::find_table(doc, table_name);
            const auto bindings = detail::resolve_bindings(table, binds);
            const double v = eval(compile_with_unknowns(table, semantics), bindings);
            detail::emit(out_path, format_decimal(v) + "\n", out);
        } else if (*surface_cmd) {
            const auto doc = detail::load(spec_path);
            const auto& table = detail::find_table(doc, table_name);
            if (table.inputs.size() != 2 || table.inputs[0].kind != ValueKind::continuous ||
                table.inputs[1].kind != ValueKind::continuous) {
                throw Failure{exit_arity, "surface needs a table with exactly two continuous inputs"};
            }
            const auto expr = compile_with_unknowns(table, semantics);
            auto ext_args = binds;
            const auto& a = table.inputs[0].name;
            const auto& b = table.inputs[1].name;
            ext_args.push_back(a + "=0");
            ext_args.push_back(b + "=0");
            Bindings bindings = detail::resolve_bindings(table, ext_args);
            std::string csv = "x,y,value\n";
            for (std::size_t i = 0; i <= res; ++i) {
                const double x = static_cast<double>(i) / static_cast<double>(res);
                for (std::size_t j = 0; j <= res; ++j) {
                    const double y = static_cast<double>(j) / static_cast<double>(res);
                    bindings.set(a, x).set(b, y);
                    csv += format_g12(x) + "," + format_g12(y) + "," + format_g12(eval(expr, bindings)) + "\n";
                }
            }
            detail::emit(out_path, csv, out);
        } else if (*sim_cmd) {
            std::optional<soccer::SoccerBrain> custom;
            if (!spec_path.empty()) {
                try {
                    custom.emplace(detail::load(spec_path));
                } catch (const error& e) {
                    throw Failure{exit_parse, e.what()};
                }
            }
            const auto& brain = custom ? *custom : soccer::SoccerBrain::shipped();
            soccer::SimConfig config;
            config.keep_records = false;
            std::ofstream trace_file;
            if (!trace_path.empty()) {
                trace_file.open(trace_path, std::ios::binary | std::ios::trunc);
                if (!trace_file) throw Failure{exit_unwritable, "cannot open '" + trace_path + "' for writing"};
            }
            const auto trace = soccer::run(ticks, config, brain, [&](const std::string& line) {
                if (trace_file.is_open()) trace_file << line << '\n';
            });
            if (trace_file.is_open()) {
                trace_file.flush();
                if (!trace_file) throw Failure{exit_unwritable, "failed writing '" + trace_path + "'"};
            }
            detail::emit(out_path, trace.summary_csv(), out);
        }
    } catch (const Failure& f) {
        err << "dnflogic: " << f.message << "\n";
        return f.code;
    } catch (const validation_error& e) {
        err << "dnflogic: " << e.what() << "\n";
        return exit_parse;
    } catch (const error& e) {
        err << "dnflogic: " << e.what() << "\n";
        return e.code() == errc::unbound_name ? exit_binding : exit_parse;
    }
    return exit_ok;
}

}  // namespace dnflogic::cli
