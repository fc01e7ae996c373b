#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dnflogic/dnflogic.hpp"

namespace dnflogic::testing {

inline LogicTable boolean_table(std::string name, std::vector<std::string> inputs,
                                const std::vector<std::pair<std::vector<int>, int>>& rows) {
    LogicTable t;
    t.name = std::move(name);
    t.notation = Notation::boolean;
    for (auto& in : inputs) t.inputs.push_back({std::move(in), ValueKind::continuous});
    for (const auto& [m, o] : rows) {
        TableRow row;
        for (int v : m) row.cells.push_back(LogicValue::continuous(v));
        row.output = LogicValue::continuous(o);
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline LogicTable xor_table() {
    return boolean_table("xor", {"X", "Y"}, {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 0}});
}

inline LogicTable recognizer_table() { return boolean_table("recognize_101", {"X", "Y", "Z"}, {{{1, 0, 1}, 1}}); }

// Three-bit addition table as printed: the all-zero input row is absent.
inline LogicTable adder_table(bool carry) {
    std::vector<std::pair<std::vector<int>, int>> rows;
    for (int k = 1; k < 8; ++k) {
        const int x = (k >> 2) & 1, y = (k >> 1) & 1, z = k & 1;
        const int s = x + y + z;
        rows.push_back({{x, y, z}, carry ? (s >= 2) : (s % 2)});
    }
    return boolean_table(carry ? "carry" : "sum", {"X", "Y", "Z"}, rows);
}

/// Random 0/1 table: n inputs, a random subset of distinct rows, random outputs.
inline LogicTable random_boolean_table(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint32_t> all(std::size_t{1} << n);
    for (std::uint32_t k = 0; k < all.size(); ++k) all[k] = k;
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, all.size())(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("i" + std::to_string(i));
    std::vector<std::pair<std::vector<int>, int>> rows;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t r = 0; r < count; ++r) {
        std::vector<int> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = (all[r] >> (n - 1 - i)) & 1u;
        rows.push_back({m, coin(rng) ? 1 : 0});
    }
    return boolean_table("random", names, rows);
}

/// Brute-force oracle: the configured output of the row whose matrix equals
/// the input bits, or 0 when no row matches.
inline int row_lookup(const LogicTable& t, const std::vector<int>& bits) {
    for (const auto& row : t.rows) {
        bool match = true;
        for (std::size_t i = 0; i < bits.size() && match; ++i) match = row.cells[i].value() == bits[i];
        if (match) return std::get<LogicValue>(row.output).value() != 0.0 ? 1 : 0;
    }
    return 0;
}

/// Per-term matrix constants of a DNF expression in XNOR form, read back off
/// the tree: one inner vector per term, one entry per EQ factor.
inline std::vector<std::vector<int>> xnor_term_constants(const Expr& e) {
    std::vector<std::vector<int>> out;
    if (e.is<node::Const>()) return out;
    for (const auto& term : e.as<node::Or>().children) {
        std::vector<int> consts;
        for (const auto& f : term.as<node::And>().children) {
            consts.push_back(static_cast<int>(f.as<node::Eq>().constant.value()));
        }
        out.push_back(std::move(consts));
    }
    return out;
}

/// Same for the NOT form: 1 for a plain input, 0 for a negated one.
inline std::vector<std::vector<int>> not_term_constants(const Expr& e) {
    std::vector<std::vector<int>> out;
    if (e.is<node::Const>()) return out;
    for (const auto& term : e.as<node::Or>().children) {
        std::vector<int> consts;
        for (const auto& f : term.as<node::And>().children) consts.push_back(f.is<node::Not>() ? 0 : 1);
        out.push_back(std::move(consts));
    }
    return out;
}

inline std::vector<int> bits_of(std::uint64_t k, std::size_t n) {
    std::vector<int> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<int>((k >> (n - 1 - i)) & 1u);
    return bits;
}

inline Bindings bind_all(const std::vector<std::string>& names, const std::vector<double>& values) {
    Bindings b;
    for (std::size_t i = 0; i < names.size(); ++i) b.set(names[i], values[i]);
    return b;
}

inline Bindings bind_bits(const std::vector<std::string>& names, const std::vector<int>& bits) {
    return bind_all(names, std::vector<double>(bits.begin(), bits.end()));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string tables_path(const std::string& file) { return std::string(DNFLOGIC_TABLES_DIR) + "/" + file; }

}  // namespace dnflogic::testing
