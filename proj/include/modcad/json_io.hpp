#pragma once

// JSON encoding of elements, property values and modules.

#include <string>
#include <vector>

#include "modcad/canonical_json.hpp"
#include "modcad/errors.hpp"
#include "modcad/geometry.hpp"
#include "modcad/module.hpp"
#include "modcad/property.hpp"

namespace modcad::io {

inline Json to_json(Point p) { return Json::array({p.x, p.y}); }

inline Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected a point [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Json to_json(const Rect& r) { return Json::array({r.min.x, r.min.y, r.max.x, r.max.y}); }

inline Rect rect_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("expected a rectangle [x0, y0, x1, y1]");
    for (const auto& v : j) {
        if (!v.is_number()) throw ParseError("rectangle coordinates must be numbers");
    }
    Rect r{{j[0].get<double>(), j[1].get<double>()}, {j[2].get<double>(), j[3].get<double>()}};
    if (!r.valid()) throw ParseError("rectangle min exceeds max");
    return r;
}

inline double number(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number()) throw ParseError(std::string("expected number field '") + key + "'");
    return it->get<double>();
}

inline std::int64_t integer(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer())
        throw ParseError(std::string("expected integer field '") + key + "'");
    return it->get<std::int64_t>();
}

inline const std::string& text(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) throw ParseError(std::string("expected text field '") + key + "'");
    return it->get_ref<const std::string&>();
}

inline const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

// ---------------------------------------------------------------------------

inline Json to_json(const Element& e) {
    Json j = Json::object();
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Segment>) {
                j["type"] = "segment";
                j["p1"] = to_json(s.p1);
                j["p2"] = to_json(s.p2);
            } else if constexpr (std::is_same_v<T, Polyline>) {
                j["type"] = "polyline";
                Json pts = Json::array();
                for (auto p : s.points) pts.push_back(to_json(p));
                j["points"] = std::move(pts);
                j["closed"] = s.closed;
            } else if constexpr (std::is_same_v<T, Arc>) {
                j["type"] = "arc";
                j["center"] = to_json(s.center);
                j["radius"] = s.radius;
                j["start_angle"] = s.start_angle;
                j["end_angle"] = s.end_angle;
            } else if constexpr (std::is_same_v<T, Circle>) {
                j["type"] = "circle";
                j["center"] = to_json(s.center);
                j["radius"] = s.radius;
            } else {
                j["type"] = "text";
                j["anchor"] = to_json(s.anchor);
                j["height"] = s.height;
                j["angle_deg"] = s.angle_deg;
                j["content"] = s.content;
            }
        },
        e.shape);
    j["line_type"] = std::string(to_string(e.style.line_type));
    j["color"] = e.style.color;
    j["layer"] = e.layer;
    return j;
}

inline Element element_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("element must be an object");
    const std::string& type = text(j, "type");
    Element e;
    if (type == "segment") {
        e.shape = Segment{point_from_json(field(j, "p1")), point_from_json(field(j, "p2"))};
    } else if (type == "polyline") {
        Polyline pl;
        const Json& pts = field(j, "points");
        if (!pts.is_array()) throw ParseError("polyline points must be an array");
        for (const auto& p : pts) pl.points.push_back(point_from_json(p));
        const Json& closed = field(j, "closed");
        if (!closed.is_boolean()) throw ParseError("polyline 'closed' must be boolean");
        pl.closed = closed.get<bool>();
        e.shape = std::move(pl);
    } else if (type == "arc") {
        e.shape = Arc{point_from_json(field(j, "center")), number(j, "radius"), number(j, "start_angle"),
                      number(j, "end_angle")};
    } else if (type == "circle") {
        e.shape = Circle{point_from_json(field(j, "center")), number(j, "radius")};
    } else if (type == "text") {
        e.shape = Text{point_from_json(field(j, "anchor")), number(j, "height"), number(j, "angle_deg"),
                       text(j, "content")};
    } else {
        throw ParseError("unknown element type '" + type + "'");
    }
    try {
        e.style.line_type = line_type_from_string(text(j, "line_type"));
    } catch (const GeometryError& err) {
        throw ParseError(err.what());
    }
    e.style.color = static_cast<int>(integer(j, "color"));
    e.layer = static_cast<int>(integer(j, "layer"));
    try {
        validate(e);
    } catch (const GeometryError& err) {
        throw ParseError(std::string("invalid element: ") + err.what());
    }
    return e;
}

inline Json to_json(const std::vector<Element>& elements) {
    Json arr = Json::array();
    for (const auto& e : elements) arr.push_back(to_json(e));
    return arr;
}

// Canonical bytes of an element list; the equality used by regeneration checks.
inline std::string canonical_geometry(const std::vector<Element>& elements) { return canonical_dump(to_json(elements)); }

// ---------------------------------------------------------------------------

inline Json to_json(const PropertyValue& v);
inline PropertyValue value_from_json(const Json& j);

inline Json record_to_json(const Record& r) {
    Json j = Json::object();
    for (const auto& [k, v] : r) j[k] = to_json(v);
    return j;
}

inline Record record_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("record must be an object");
    Record r;
    for (auto it = j.begin(); it != j.end(); ++it) r.emplace(it.key(), value_from_json(it.value()));
    return r;
}

inline Json to_json(const PropertyValue& v) {
    Json out = Json::object();
    out["kind"] = std::string(to_string(v.kind()));
    Json& val = out["value"];
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::string> || std::is_same_v<T, double> ||
                          std::is_same_v<T, std::int64_t> || std::is_same_v<T, bool>) {
                val = x;
            } else if constexpr (std::is_same_v<T, Point>) {
                val = to_json(x);
            } else if constexpr (std::is_same_v<T, std::vector<Point>>) {
                val = Json::array();
                for (auto p : x) val.push_back(to_json(p));
            } else if constexpr (std::is_same_v<T, std::vector<Axis>>) {
                val = Json::array();
                for (const auto& a : x) val.push_back(Json{{"origin", to_json(a.origin)}, {"angle_deg", a.angle_deg}});
            } else if constexpr (std::is_same_v<T, Record>) {
                val = record_to_json(x);
            } else {
                val = Json::array();
                for (const auto& r : x) val.push_back(record_to_json(r));
            }
        },
        v.value);
    return out;
}

inline PropertyValue value_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("property value must be an object {kind, value}");
    const auto kind = value_kind_from_string(text(j, "kind"));
    if (!kind) throw ParseError("unknown property kind '" + text(j, "kind") + "'");
    const Json& val = field(j, "value");
    switch (*kind) {
        case ValueKind::text:
            if (!val.is_string()) throw ParseError("text value must be a string");
            return PropertyValue(val.get<std::string>());
        case ValueKind::real:
            if (!val.is_number()) throw ParseError("real value must be a number");
            return PropertyValue(val.get<double>());
        case ValueKind::integer:
            if (!val.is_number_integer()) throw ParseError("integer value must be an integer");
            return PropertyValue(val.get<std::int64_t>());
        case ValueKind::boolean:
            if (!val.is_boolean()) throw ParseError("boolean value must be true or false");
            return PropertyValue(val.get<bool>());
        case ValueKind::point: return PropertyValue(point_from_json(val));
        case ValueKind::point_list: {
            if (!val.is_array()) throw ParseError("point_list value must be an array");
            std::vector<Point> pts;
            for (const auto& p : val) pts.push_back(point_from_json(p));
            return PropertyValue(std::move(pts));
        }
        case ValueKind::axis_list: {
            if (!val.is_array()) throw ParseError("axis_list value must be an array");
            std::vector<Axis> axes;
            for (const auto& a : val) axes.push_back({point_from_json(field(a, "origin")), number(a, "angle_deg")});
            return PropertyValue(std::move(axes));
        }
        case ValueKind::record: return PropertyValue(record_from_json(val));
        case ValueKind::record_list: {
            if (!val.is_array()) throw ParseError("record_list value must be an array");
            std::vector<Record> recs;
            for (const auto& r : val) recs.push_back(record_from_json(r));
            return PropertyValue(std::move(recs));
        }
    }
    throw ParseError("unreachable property kind");
}

inline Json to_json(const Properties& p) {
    Json j = Json::object();
    for (const auto& [k, v] : p) j[k] = to_json(v);
    return j;
}

inline Properties properties_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("props must be an object");
    Properties p;
    for (auto it = j.begin(); it != j.end(); ++it) p.emplace(it.key(), value_from_json(it.value()));
    return p;
}

inline Json to_json(const Module& m) {
    return Json{{"id", m.id},
                {"type", std::string(to_string(m.type))},
                {"layer", m.layer},
                {"props", to_json(m.props)},
                {"geometry", to_json(m.geometry)},
                {"bbox", to_json(m.bbox)},
                {"zone_mask", m.zone_mask.to_hex()}};
}

inline std::string canonical_bytes(const Module& m) { return canonical_dump(to_json(m)); }

// Rebuilds a module from its stored props and checks the stored derived
// data (geometry, layer, bounds, zone mask) against the regeneration.
inline Module module_from_json(const Json& j, const ZoneGrid& grid) {
    if (!j.is_object()) throw ParseError("module must be an object");
    const auto type = module_type_from_string(text(j, "type"));
    if (!type) throw SchemaViolation("type", "unknown module type '" + text(j, "type") + "'");
    const auto id = integer(j, "id");
    if (id <= 0) throw ParseError("module id must be positive");
    const Properties stored_props = properties_from_json(field(j, "props"));
    Module m = create_module(*type, stored_props, grid, static_cast<int>(id));

    const Json& geo = field(j, "geometry");
    if (!geo.is_array()) throw ParseError("module geometry must be an array");
    std::vector<Element> stored;
    for (const auto& e : geo) stored.push_back(element_from_json(e));
    const std::string where = "module " + std::to_string(id) + " (" + std::string(to_string(*type)) + ")";
    if (canonical_geometry(stored) != canonical_geometry(m.geometry))
        throw IntegrityMismatch(where + ": stored geometry differs from the geometry its parameters generate");
    if (integer(j, "layer") != m.layer) throw IntegrityMismatch(where + ": stored layer differs from props");
    if (canonical_dump(field(j, "bbox")) != canonical_dump(to_json(m.bbox)))
        throw IntegrityMismatch(where + ": stored bbox differs from geometry bounds");
    if (text(j, "zone_mask") != m.zone_mask.to_hex())
        throw IntegrityMismatch(where + ": stored zone mask differs from geometry bounds");
    return m;
}

} // namespace modcad::io
