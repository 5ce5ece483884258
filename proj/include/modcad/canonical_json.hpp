#pragma once

// Canonical JSON writer: object keys sorted by byte value, no insignificant
// whitespace, reals as the shortest decimal that round-trips.

#include <charconv>
#include <cmath>
#include <string>

#include <json.hpp>

#include "modcad/errors.hpp"

namespace modcad {

using Json = nlohmann::json;

namespace detail {

inline void write_string(std::string& out, const std::string& s) {
    static constexpr char kHex[] = "0123456789abcdef";
    out += '"';
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    out += "\\u00";
                    out += kHex[c >> 4];
                    out += kHex[c & 0xF];
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += '"';
}

inline void write_real(std::string& out, double v) {
    if (!std::isfinite(v)) throw Error("cannot serialize a non-finite number");
    if (v == 0.0) v = 0.0;  // -0 and 0 serialize alike
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

inline void write_canonical(std::string& out, const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: out += "null"; break;
        case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case Json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
        case Json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
        case Json::value_t::number_float: write_real(out, j.get<double>()); break;
        case Json::value_t::string: write_string(out, j.get_ref<const std::string&>()); break;
        case Json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ',';
                first = false;
                write_canonical(out, item);
            }
            out += ']';
            break;
        }
        case Json::value_t::object: {
            // nlohmann objects are std::map-backed, already sorted by key bytes.
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                write_string(out, it.key());
                out += ':';
                write_canonical(out, it.value());
            }
            out += '}';
            break;
        }
        case Json::value_t::binary:
        case Json::value_t::discarded: throw Error("cannot serialize binary or discarded JSON values");
    }
}

} // namespace detail

inline std::string canonical_dump(const Json& j) {
    std::string out;
    detail::write_canonical(out, j);
    return out;
}

// Parses JSON text, reporting the failure position as line/column.
inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(std::string("malformed JSON: ") + e.what(), line, col);
    }
}

} // namespace modcad
