#pragma once

// Minimal JSON reader that keeps source positions and literal spellings on
// every value, so schema errors can point at the offending token.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "dnflogic/error.hpp"

namespace dnflogic::detail {

struct JsonValue {
    enum class Type { null, boolean, number, string, array, object };

    Type type = Type::null;
    std::size_t line = 0;
    std::size_t column = 0;

    bool boolean = false;
    double number = 0.0;
    std::string text;  // string contents, or the number literal as written
    std::vector<JsonValue> items;
    std::vector<std::pair<std::string, JsonValue>> members;

    const JsonValue* find(std::string_view key) const {
        for (const auto& [k, v] : members) {
            if (k == key) return &v;
        }
        return nullptr;
    }

    /// Number written without fraction or exponent.
    bool integral_literal() const {
        return type == Type::number && text.find_first_of(".eE") == std::string::npos;
    }

    const char* type_name() const {
        switch (type) {
        case Type::null: return "null";
        case Type::boolean: return "boolean";
        case Type::number: return "number";
        case Type::string: return "string";
        case Type::array: return "array";
        case Type::object: return "object";
        }
        return "value";
    }
};

class JsonReader {
public:
    explicit JsonReader(std::string_view text) : text_(text) {}

    JsonValue parse_document() {
        skip_ws();
        JsonValue v = parse_value(0);
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing content");
        return v;
    }

private:
    static constexpr int max_depth = 256;

    [[noreturn]] void fail(const std::string& what) const { throw syntax_error(what, line_, column_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_ws() {
        while (!at_end()) {
            const char c = peek();
            if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
            advance();
        }
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    void expect_word(std::string_view word) {
        for (char c : word) {
            if (peek() != c) fail("invalid literal");
            advance();
        }
    }

    JsonValue parse_value(int depth) {
        if (depth > max_depth) fail("nesting too deep");
        JsonValue v;
        v.line = line_;
        v.column = column_;
        switch (peek()) {
        case '{': parse_object(v, depth); break;
        case '[': parse_array(v, depth); break;
        case '"':
            v.type = JsonValue::Type::string;
            v.text = parse_string();
            break;
        case 't':
            expect_word("true");
            v.type = JsonValue::Type::boolean;
            v.boolean = true;
            break;
        case 'f':
            expect_word("false");
            v.type = JsonValue::Type::boolean;
            break;
        case 'n': expect_word("null"); break;
        default:
            if (peek() == '-' || (peek() >= '0' && peek() <= '9')) {
                parse_number(v);
            } else if (at_end()) {
                fail("unexpected end of document");
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
        }
        return v;
    }

    void parse_object(JsonValue& v, int depth) {
        v.type = JsonValue::Type::object;
        expect('{');
        skip_ws();
        if (peek() == '}') {
            advance();
            return;
        }
        for (;;) {
            skip_ws();
            if (peek() != '"') fail("expected member name");
            const std::size_t key_line = line_, key_col = column_;
            std::string key = parse_string();
            if (v.find(key)) throw syntax_error("duplicate member '" + key + "'", key_line, key_col);
            skip_ws();
            expect(':');
            skip_ws();
            v.members.emplace_back(std::move(key), parse_value(depth + 1));
            skip_ws();
            if (peek() == ',') {
                advance();
                continue;
            }
            expect('}');
            return;
        }
    }

    void parse_array(JsonValue& v, int depth) {
        v.type = JsonValue::Type::array;
        expect('[');
        skip_ws();
        if (peek() == ']') {
            advance();
            return;
        }
        for (;;) {
            skip_ws();
            v.items.push_back(parse_value(depth + 1));
            skip_ws();
            if (peek() == ',') {
                advance();
                continue;
            }
            expect(']');
            return;
        }
    }

    unsigned parse_hex4() {
        unsigned cp = 0;
        for (int i = 0; i < 4; ++i) {
            const char c = peek();
            cp <<= 4;
            if (c >= '0' && c <= '9') cp |= unsigned(c - '0');
            else if (c >= 'a' && c <= 'f') cp |= unsigned(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') cp |= unsigned(c - 'A' + 10);
            else fail("invalid \\u escape");
            advance();
        }
        return cp;
    }

    static void append_utf8(std::string& out, unsigned cp) {
        if (cp < 0x80) {
            out += char(cp);
        } else if (cp < 0x800) {
            out += char(0xC0 | (cp >> 6));
            out += char(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += char(0xE0 | (cp >> 12));
            out += char(0x80 | ((cp >> 6) & 0x3F));
            out += char(0x80 | (cp & 0x3F));
        } else {
            out += char(0xF0 | (cp >> 18));
            out += char(0x80 | ((cp >> 12) & 0x3F));
            out += char(0x80 | ((cp >> 6) & 0x3F));
            out += char(0x80 | (cp & 0x3F));
        }
    }

    std::string parse_string() {
        expect('"');
        std::string out;
        for (;;) {
            if (at_end()) fail("unterminated string");
            const char c = advance();
            if (c == '"') return out;
            if (static_cast<unsigned char>(c) < 0x20) fail("control character in string");
            if (c != '\\') {
                out += c;
                continue;
            }
            if (at_end()) fail("unterminated escape");
            switch (advance()) {
            case '"': out += '"'; break;
            case '\\': out += '\\'; break;
            case '/': out += '/'; break;
            case 'b': out += '\b'; break;
            case 'f': out += '\f'; break;
            case 'n': out += '\n'; break;
            case 'r': out += '\r'; break;
            case 't': out += '\t'; break;
            case 'u': {
                unsigned cp = parse_hex4();
                if (cp >= 0xD800 && cp <= 0xDBFF) {
                    expect('\\');
                    expect('u');
                    const unsigned lo = parse_hex4();
                    if (lo < 0xDC00 || lo > 0xDFFF) fail("invalid surrogate pair");
                    cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
                } else if (cp >= 0xDC00 && cp <= 0xDFFF) {
                    fail("unpaired surrogate");
                }
                append_utf8(out, cp);
                break;
            }
            default: fail("invalid escape");
            }
        }
    }

    void parse_number(JsonValue& v) {
        v.type = JsonValue::Type::number;
        const std::size_t start = pos_;
        auto digits = [&] {
            if (!(peek() >= '0' && peek() <= '9')) fail("expected digit");
            while (peek() >= '0' && peek() <= '9') advance();
        };
        if (peek() == '-') advance();
        if (peek() == '0') {
            advance();
        } else {
            digits();
        }
        if (peek() == '.') {
            advance();
            digits();
        }
        if (peek() == 'e' || peek() == 'E') {
            advance();
            if (peek() == '+' || peek() == '-') advance();
            digits();
        }
        v.text = std::string(text_.substr(start, pos_ - start));
        const auto res = std::from_chars(v.text.data(), v.text.data() + v.text.size(), v.number);
        if (res.ec != std::errc{}) fail("number out of range");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

inline JsonValue parse_json(std::string_view text) { return JsonReader(text).parse_document(); }

inline std::string quote_json(std::string_view s) {
    static constexpr char hex[] = "0123456789abcdef";
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                out += "\\u00";
                out += hex[(c >> 4) & 0xF];
                out += hex[c & 0xF];
            } else {
                out += c;
            }
        }
    }
    out += '"';
    return out;
}

}  // namespace dnflogic::detail
