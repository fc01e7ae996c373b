#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dnflogic {

enum class errc {
    out_of_range,        // continuous logic value outside [0,1]
    mixed_kind,          // state compared with continuous
    unknown_operand,     // Unknown reached the evaluator
    index_out_of_range,  // operator catalog index
    non_boolean_table,
    unknown_cell,
    unbound_name,
    non_dnf_shape,
    too_many_inputs,
    inverted_bounds,
    degenerate_source_range,
    non_finite_state,
    syntax_error,
    validation_error,
};

inline const char* errc_name(errc code) {
    switch (code) {
    case errc::out_of_range: return "OutOfRange";
    case errc::mixed_kind: return "MixedKind";
    case errc::unknown_operand: return "UnknownOperand";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::non_boolean_table: return "NonBooleanTable";
    case errc::unknown_cell: return "UnknownCell";
    case errc::unbound_name: return "UnboundName";
    case errc::non_dnf_shape: return "NonDnfShape";
    case errc::too_many_inputs: return "TooManyInputs";
    case errc::inverted_bounds: return "InvertedBounds";
    case errc::degenerate_source_range: return "DegenerateSourceRange";
    case errc::non_finite_state: return "NonFiniteState";
    case errc::syntax_error: return "SyntaxError";
    case errc::validation_error: return "ValidationError";
    }
    return "Error";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Malformed table spec document. Line and column are 1-based; 0 means unknown.
class syntax_error : public error {
public:
    syntax_error(const std::string& what, std::size_t line, std::size_t column)
        : error(errc::syntax_error, what + " (line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace dnflogic
