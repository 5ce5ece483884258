#pragma once

// Typed literal syntax for property values given on the command line:
//   text      "quoted" or bare        real/integer  12.5 / 3
//   boolean   true | false            point         (x,y)
//   point_list [(0,0),(100,0)]        axis_list     [(0,0)@90,(4,0)@0]
//   record    {width=20,header="Поз."} record_list  [{x=0,y=0,h=10},{...}]
// Top-level values are read with the kind the schema expects; values inside
// records infer their kind from the literal.

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modcad/errors.hpp"
#include "modcad/property.hpp"

namespace modcad {

class LiteralParser {
public:
    explicit LiteralParser(std::string_view src) : src_(src) {}

    PropertyValue parse(std::optional<ValueKind> expected) {
        skip_ws();
        PropertyValue v = expected ? parse_kind(*expected) : parse_inferred();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("literal: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(src_) + "'");
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string_view number_token() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                      std::string_view("+-.eE").find(src_[pos_]) != std::string_view::npos))
            ++pos_;
        if (start == pos_) fail("expected a number");
        return src_.substr(start, pos_ - start);
    }

    double parse_real() {
        const auto tok = number_token();
        double v = 0.0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) fail("malformed number '" + std::string(tok) + "'");
        return v;
    }

    std::int64_t parse_integer() {
        const auto tok = number_token();
        std::int64_t v = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) fail("malformed integer '" + std::string(tok) + "'");
        return v;
    }

    Point parse_point() {
        expect('(');
        const double x = parse_real();
        expect(',');
        const double y = parse_real();
        expect(')');
        return {x, y};
    }

    Axis parse_axis() {
        const Point p = parse_point();
        expect('@');
        return {p, parse_real()};
    }

    std::string parse_quoted() {
        expect('"');
        std::string out;
        while (pos_ < src_.size() && src_[pos_] != '"') {
            if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
            out += src_[pos_++];
        }
        if (pos_ >= src_.size()) fail("unterminated string");
        ++pos_;
        return out;
    }

    // Bare word inside a record: up to the next ',' or '}' at this level.
    std::string parse_bare() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != ',' && src_[pos_] != '}' && src_[pos_] != ']') ++pos_;
        std::string out(src_.substr(start, pos_ - start));
        while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
        return out;
    }

    bool parse_bool() {
        skip_ws();
        if (src_.substr(pos_, 4) == "true") {
            pos_ += 4;
            return true;
        }
        if (src_.substr(pos_, 5) == "false") {
            pos_ += 5;
            return false;
        }
        fail("expected true or false");
    }

    template <class F>
    void parse_list(F&& item) {
        expect('[');
        if (accept(']')) return;
        do {
            item();
        } while (accept(','));
        expect(']');
    }

    std::string parse_key() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected a field name");
        return std::string(src_.substr(start, pos_ - start));
    }

    Record parse_record() {
        expect('{');
        Record r;
        if (accept('}')) return r;
        do {
            std::string key = parse_key();
            expect('=');
            r[key] = parse_inferred();
        } while (accept(','));
        expect('}');
        return r;
    }

    PropertyValue parse_kind(ValueKind kind) {
        switch (kind) {
            case ValueKind::text: {
                if (peek() == '"') return parse_quoted();
                std::string rest(src_.substr(pos_));
                pos_ = src_.size();
                return rest;
            }
            case ValueKind::real: return parse_real();
            case ValueKind::integer: return parse_integer();
            case ValueKind::boolean: return parse_bool();
            case ValueKind::point: return parse_point();
            case ValueKind::point_list: {
                std::vector<Point> pts;
                parse_list([&] { pts.push_back(parse_point()); });
                return pts;
            }
            case ValueKind::axis_list: {
                std::vector<Axis> axes;
                parse_list([&] { axes.push_back(parse_axis()); });
                return axes;
            }
            case ValueKind::record: return parse_record();
            case ValueKind::record_list: {
                std::vector<Record> recs;
                parse_list([&] { recs.push_back(parse_record()); });
                return recs;
            }
        }
        fail("unknown kind");
    }

    PropertyValue parse_inferred() {
        const char c = peek();
        if (c == '"') return parse_quoted();
        if (c == '{') return parse_record();
        if (c == '(') {
            const std::size_t save = pos_;
            const Point p = parse_point();
            if (peek() != '@') return p;
            pos_ = save;
            return std::vector<Axis>{parse_axis()};
        }
        if (c == '[') {
            const std::size_t save = pos_;
            ++pos_;
            const char first = peek();
            pos_ = save;
            if (first == '{') return parse_kind(ValueKind::record_list);
            if (first == '(') {
                // Point or axis list, decided by the first item.
                ++pos_;
                parse_point();
                const bool axis = peek() == '@';
                pos_ = save;
                return parse_kind(axis ? ValueKind::axis_list : ValueKind::point_list);
            }
            return parse_kind(ValueKind::point_list);  // empty list
        }
        if (src_.substr(pos_, 4) == "true" || src_.substr(pos_, 5) == "false") {
            const std::size_t save = pos_;
            const bool b = parse_bool();
            if (peek() == ',' || peek() == '}' || peek() == '\0') return b;
            pos_ = save;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            const std::size_t save = pos_;
            const auto tok = number_token();
            const char after = peek();
            if (after == ',' || after == '}' || after == ']' || after == '\0') {
                if (tok.find_first_of(".eE") == std::string_view::npos) {
                    std::int64_t v = 0;
                    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                    if (res.ec == std::errc{} && res.ptr == tok.data() + tok.size()) return v;
                }
                double d = 0.0;
                const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), d);
                if (res.ec == std::errc{} && res.ptr == tok.data() + tok.size()) return d;
            }
            pos_ = save;
        }
        return parse_bare();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

inline PropertyValue parse_literal(std::string_view text, std::optional<ValueKind> expected = std::nullopt) {
    return LiteralParser(text).parse(expected);
}

// Parses "key=value" arguments against the schema of `type`.
inline Properties parse_assignments(ModuleType type, const std::vector<std::string>& args) {
    const PropertySchema& schema = schema_for(type);
    Properties out;
    for (const auto& arg : args) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + arg + "'");
        const std::string key = arg.substr(0, eq);
        const PropertySpec* spec = schema.find(key);
        if (!spec) throw SchemaViolation(key, "unknown property for " + std::string(to_string(type)));
        out[key] = parse_literal(std::string_view(arg).substr(eq + 1), spec->kind);
    }
    return out;
}

} // namespace modcad
