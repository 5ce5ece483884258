#pragma once

// Parametric representation: self-describing property values, the closed
// set of module types, and the per-type allowed property sets.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "modcad/errors.hpp"
#include "modcad/geometry.hpp"

namespace modcad {

struct Axis {
    Point origin;
    double angle_deg = 0.0;
    friend bool operator==(const Axis&, const Axis&) = default;
};

struct PropertyValue;
using Record = std::map<std::string, PropertyValue, std::less<>>;

enum class ValueKind { text, real, integer, boolean, point, point_list, axis_list, record, record_list };

inline std::string_view to_string(ValueKind k) {
    static constexpr std::array<std::string_view, 9> kNames{
        "text", "real", "integer", "boolean", "point", "point_list", "axis_list", "record", "record_list"};
    return kNames[static_cast<std::size_t>(k)];
}

inline std::optional<ValueKind> value_kind_from_string(std::string_view s) {
    for (int i = 0; i < 9; ++i) {
        if (to_string(static_cast<ValueKind>(i)) == s) return static_cast<ValueKind>(i);
    }
    return std::nullopt;
}

struct PropertyValue {
    // Alternative order matches ValueKind.
    using Storage = std::variant<std::string, double, std::int64_t, bool, Point, std::vector<Point>, std::vector<Axis>,
                                 Record, std::vector<Record>>;
    Storage value;

    PropertyValue() : value(std::string{}) {}
    PropertyValue(std::string s) : value(std::move(s)) {}
    PropertyValue(const char* s) : value(std::string(s)) {}
    PropertyValue(double v) : value(v) {}
    PropertyValue(std::int64_t v) : value(v) {}
    PropertyValue(int v) : value(static_cast<std::int64_t>(v)) {}
    PropertyValue(bool v) : value(v) {}
    PropertyValue(Point v) : value(v) {}
    PropertyValue(std::vector<Point> v) : value(std::move(v)) {}
    PropertyValue(std::vector<Axis> v) : value(std::move(v)) {}
    PropertyValue(Record v) : value(std::move(v)) {}
    PropertyValue(std::vector<Record> v) : value(std::move(v)) {}

    ValueKind kind() const { return static_cast<ValueKind>(value.index()); }

    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&value);
    }

    friend bool operator==(const PropertyValue&, const PropertyValue&) = default;
};

using Properties = std::map<std::string, PropertyValue, std::less<>>;

enum class ModuleType { user, pipeline, valve, instrument, table, frame, posdes, lightning, signature };

inline constexpr std::array<ModuleType, 9> kAllModuleTypes{
    ModuleType::user,  ModuleType::pipeline, ModuleType::valve,     ModuleType::instrument, ModuleType::table,
    ModuleType::frame, ModuleType::posdes,   ModuleType::lightning, ModuleType::signature};

inline std::string_view to_string(ModuleType t) {
    static constexpr std::array<std::string_view, 9> kNames{
        "user", "pipeline", "valve", "instrument", "table", "frame", "posdes", "lightning", "signature"};
    return kNames[static_cast<std::size_t>(t)];
}

inline std::optional<ModuleType> module_type_from_string(std::string_view s) {
    for (auto t : kAllModuleTypes) {
        if (to_string(t) == s) return t;
    }
    return std::nullopt;
}

struct PropertySpec {
    ValueKind kind;
    bool required = false;
    std::optional<PropertyValue> default_value;
};

// Ordered key → spec list; order is the declaration order of the schema.
class PropertySchema {
public:
    void add(std::string key, ValueKind kind, std::optional<PropertyValue> def) {
        entries_.emplace_back(std::move(key), PropertySpec{kind, false, std::move(def)});
    }
    void add_required(std::string key, ValueKind kind) {
        entries_.emplace_back(std::move(key), PropertySpec{kind, true, std::nullopt});
    }

    const PropertySpec* find(std::string_view key) const {
        for (const auto& [k, spec] : entries_) {
            if (k == key) return &spec;
        }
        return nullptr;
    }
    bool contains(std::string_view key) const { return find(key) != nullptr; }

    const std::vector<std::pair<std::string, PropertySpec>>& entries() const { return entries_; }

    std::vector<std::string> keys() const {
        std::vector<std::string> out;
        for (const auto& [k, spec] : entries_) out.push_back(k);
        return out;
    }

private:
    std::vector<std::pair<std::string, PropertySpec>> entries_;
};

// Placement keys present in every schema.
inline constexpr std::array<std::string_view, 4> kPlacementKeys{"layer", "origin", "angle_deg", "mirrored"};

enum class Symmetry { none, mirror_x, mirror_y, both };

inline std::optional<Symmetry> symmetry_from_string(std::string_view s) {
    if (s == "none") return Symmetry::none;
    if (s == "mirror_x") return Symmetry::mirror_x;
    if (s == "mirror_y") return Symmetry::mirror_y;
    if (s == "both") return Symmetry::both;
    return std::nullopt;
}

// Canonical key ↔ name used in the original drafting system.
struct KeyName {
    std::string_view key;
    std::string_view russian;
};

inline constexpr std::array<KeyName, 30> kKeyNames{{
    {"attach", "Привязка"},
    {"symmetry", "Симметрия"},
    {"comment", "Комментарий"},
    {"face_to_face", "Строительная длина"},
    {"designation", "Обозначение"},
    {"name", "Наименование"},
    {"mass", "Масса"},
    {"note", "Примечание"},
    {"dy", "Dy"},
    {"py", "Py"},
    {"carrier_geometry", "Несущая геометрия"},
    {"pos_designation", "Позиционное обозначение"},
    {"type_mark", "Тип, марка оборудования"},
    {"unit", "Единица измерения"},
    {"unit_code", "Код единиц измерения"},
    {"manufacturer_code", "Код завода-изготовителя"},
    {"item_code", "Код оборудования, материала"},
    {"price", "Цена"},
    {"name_tech", "Наименование и технич. х-ка"},
    {"on_board", "На щите"},
    {"function_code", "Функциональный признак прибора"},
    {"upper_index", "Верхний индекс"},
    {"lower_index", "Нижний индекс"},
    {"kip_line_type", "Тип линии приборов КИП"},
    {"person", "Сотрудник"},
    {"position", "Должность"},
    {"password", "Пароль"},
    {"date", "Дата"},
    {"time", "Время"},
    {"scale_mm_per_m", "Масштаб при создании"},
}};

inline std::optional<std::string_view> russian_name(std::string_view key) {
    for (const auto& kn : kKeyNames) {
        if (kn.key == key) return kn.russian;
    }
    return std::nullopt;
}

namespace detail {

inline void add_placement(PropertySchema& s) {
    s.add("layer", ValueKind::integer, PropertyValue(0));
    s.add("origin", ValueKind::point, PropertyValue(Point{}));
    s.add("angle_deg", ValueKind::real, PropertyValue(0.0));
    s.add("mirrored", ValueKind::boolean, PropertyValue(false));
}

inline void add_text(PropertySchema& s, std::initializer_list<const char*> keys) {
    for (const char* k : keys) s.add(k, ValueKind::text, PropertyValue(""));
}

inline PropertySchema build_schema(ModuleType type) {
    PropertySchema s;
    switch (type) {
        case ModuleType::user:
            s.add("attach", ValueKind::axis_list, PropertyValue(std::vector<Axis>{}));
            s.add("symmetry", ValueKind::text, PropertyValue("none"));
            s.add("comment", ValueKind::text, PropertyValue(""));
            s.add_required("elements", ValueKind::record_list);
            s.add("scale", ValueKind::real, PropertyValue(1.0));
            break;
        case ModuleType::pipeline:
            s.add("comment", ValueKind::text, PropertyValue(""));
            s.add_required("path", ValueKind::point_list);
            s.add_required("diameter_mm", ValueKind::real);
            s.add("corner", ValueKind::text, PropertyValue("welded"));
            s.add("fillet_radius", ValueKind::real, PropertyValue(0.0));
            s.add("show_centerline", ValueKind::boolean, PropertyValue(true));
            break;
        case ModuleType::valve:
            s.add("attach", ValueKind::axis_list,
                  PropertyValue(std::vector<Axis>{{{-4.0, 0.0}, 0.0}, {{4.0, 0.0}, 0.0}}));
            s.add("symmetry", ValueKind::text, PropertyValue("none"));
            s.add("comment", ValueKind::text, PropertyValue(""));
            s.add("face_to_face", ValueKind::real, PropertyValue(0.0));
            add_text(s, {"designation", "name"});
            s.add("mass", ValueKind::real, PropertyValue(0.0));
            s.add("note", ValueKind::text, PropertyValue(""));
            s.add("dy", ValueKind::real, PropertyValue(0.0));
            s.add("py", ValueKind::real, PropertyValue(0.0));
            break;
        case ModuleType::instrument:
            s.add("attach", ValueKind::axis_list, PropertyValue(std::vector<Axis>{{{0.0, 5.0}, 90.0}}));
            s.add("carrier_geometry", ValueKind::point_list, PropertyValue(std::vector<Point>{}));
            add_text(s, {"pos_designation", "designation", "name"});
            s.add("mass", ValueKind::real, PropertyValue(0.0));
            add_text(s, {"note", "type_mark", "unit", "unit_code", "manufacturer_code", "item_code"});
            s.add("price", ValueKind::real, PropertyValue(0.0));
            s.add("name_tech", ValueKind::text, PropertyValue(""));
            s.add("on_board", ValueKind::boolean, PropertyValue(false));
            s.add_required("function_code", ValueKind::text);
            add_text(s, {"upper_index", "lower_index", "comment", "kip_line_type"});
            s.add("center", ValueKind::point, PropertyValue(Point{}));
            s.add("loop_number", ValueKind::text, PropertyValue(""));
            break;
        case ModuleType::table:
            s.add("comment", ValueKind::text, PropertyValue(""));
            s.add("preset", ValueKind::text, PropertyValue(""));
            s.add("position", ValueKind::point, PropertyValue(Point{}));
            s.add("columns", ValueKind::record_list, PropertyValue(std::vector<Record>{}));
            s.add("row_height_mm", ValueKind::real, PropertyValue(8.0));
            s.add("header_height_mm", ValueKind::real, PropertyValue(15.0));
            s.add("rows", ValueKind::record_list, PropertyValue(std::vector<Record>{}));
            break;
        case ModuleType::frame:
            s.add("format", ValueKind::text, PropertyValue("A4"));
            s.add("landscape", ValueKind::boolean, PropertyValue(false));
            s.add("multiplicity", ValueKind::integer, PropertyValue(1));
            break;
        case ModuleType::posdes:
            s.add("posdes_type", ValueKind::text, PropertyValue("leader"));
            s.add("object_kind", ValueKind::text, PropertyValue(""));
            s.add("spec_props", ValueKind::record, PropertyValue(Record{}));
            s.add_required("leader_from", ValueKind::point);
            s.add_required("shelf_at", ValueKind::point);
            s.add_required("position_text", ValueKind::text);
            break;
        case ModuleType::lightning:
            s.add("comment", ValueKind::text, PropertyValue(""));
            s.add_required("rods", ValueKind::record_list);
            s.add("section_heights", ValueKind::record_list, PropertyValue(std::vector<Record>{}));
            s.add_required("zone_class", ValueKind::text);
            s.add("scale_mm_per_m", ValueKind::real, PropertyValue(1.0));
            s.add("plan_origin", ValueKind::point, PropertyValue(Point{}));
            break;
        case ModuleType::signature:
            add_text(s, {"person", "position", "password", "date", "time", "digest_hex", "auth_hex"});
            break;
    }
    add_placement(s);
    return s;
}

} // namespace detail

inline const PropertySchema& schema_for(ModuleType type) {
    static const std::array<PropertySchema, 9> kSchemas = [] {
        std::array<PropertySchema, 9> out;
        for (auto t : kAllModuleTypes) out[static_cast<std::size_t>(t)] = detail::build_schema(t);
        return out;
    }();
    return kSchemas[static_cast<std::size_t>(type)];
}

// ---------------------------------------------------------------------------
// Typed accessors over validated property maps.

namespace props {

inline const PropertyValue& at(const Properties& p, std::string_view key) {
    auto it = p.find(key);
    if (it == p.end()) throw SchemaViolation(std::string(key), "missing");
    return it->second;
}

inline const PropertyValue* find(const Record& r, std::string_view key) {
    auto it = r.find(key);
    return it == r.end() ? nullptr : &it->second;
}

template <class T>
const T& as(const PropertyValue& v, std::string_view key) {
    if (const T* x = v.get_if<T>()) return *x;
    throw SchemaViolation(std::string(key), "unexpected kind " + std::string(to_string(v.kind())));
}

template <class T>
const T& get(const Properties& p, std::string_view key) {
    return as<T>(at(p, key), key);
}

// Reads a number from a record field; integers are accepted where reals are expected.
inline double record_real(const Record& r, std::string_view key, std::optional<double> fallback = std::nullopt) {
    const PropertyValue* v = find(r, key);
    if (!v) {
        if (fallback) return *fallback;
        throw SchemaViolation(std::string(key), "missing record field");
    }
    if (auto d = v->get_if<double>()) return *d;
    if (auto i = v->get_if<std::int64_t>()) return static_cast<double>(*i);
    throw SchemaViolation(std::string(key), "record field must be numeric");
}

inline std::string record_text(const Record& r, std::string_view key, std::string fallback = {}) {
    const PropertyValue* v = find(r, key);
    if (!v) return fallback;
    if (auto s = v->get_if<std::string>()) return *s;
    throw SchemaViolation(std::string(key), "record field must be text");
}

} // namespace props

} // namespace modcad
