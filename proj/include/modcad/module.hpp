#pragma once

// Modules: typed parametric representation plus the geometry it generates.
// Geometry is never edited directly; every change rewrites properties and
// regenerates.

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "modcad/errors.hpp"
#include "modcad/generators.hpp"
#include "modcad/geometry.hpp"
#include "modcad/lightning.hpp"
#include "modcad/placement.hpp"
#include "modcad/property.hpp"

namespace modcad {

inline constexpr double kSignatureTextHeight = 3.5;

inline std::string signature_stamp_text(const Properties& p) {
    return props::get<std::string>(p, "person") + " / " + props::get<std::string>(p, "position") + " / " +
           props::get<std::string>(p, "date") + " " + props::get<std::string>(p, "time");
}

inline Generated gen_signature(const Properties& p) {
    if (!props::get<std::string>(p, "password").empty())
        throw SchemaViolation("password", "the password is never stored in a drawing");
    Generated g;
    g.elements.push_back(make_element(Text{{0.0, 0.0}, kSignatureTextHeight, 0.0, signature_stamp_text(p)}));
    return place(std::move(g), ModuleType::signature, p);
}

struct Module {
    int id = 0;
    ModuleType type = ModuleType::user;
    Properties props;
    std::vector<Element> geometry;
    int layer = 0;
    Rect bbox;
    ZoneGrid grid;
    ZoneMask zone_mask;
};

// Checks supplied properties against the type schema and fills defaults.
inline Properties validate_properties(ModuleType type, const Properties& supplied) {
    const PropertySchema& schema = schema_for(type);
    for (const auto& [key, value] : supplied) {
        if (!schema.contains(key)) throw SchemaViolation(key, "unknown property for " + std::string(to_string(type)));
    }
    Properties out;
    for (const auto& [key, spec] : schema.entries()) {
        auto it = supplied.find(key);
        if (it == supplied.end()) {
            if (!spec.default_value) throw SchemaViolation(key, "required property missing");
            out.emplace(key, *spec.default_value);
            continue;
        }
        PropertyValue v = it->second;
        // Integer literals widen to reals.
        if (spec.kind == ValueKind::real && v.kind() == ValueKind::integer)
            v = PropertyValue(static_cast<double>(*v.get_if<std::int64_t>()));
        if (v.kind() != spec.kind)
            throw SchemaViolation(key, "expected " + std::string(to_string(spec.kind)) + ", got " +
                                           std::string(to_string(v.kind())));
        if (auto d = v.get_if<double>(); d && !std::isfinite(*d)) throw SchemaViolation(key, "non-finite value");
        if (auto pt = v.get_if<Point>(); pt && !is_finite(*pt)) throw SchemaViolation(key, "non-finite point");
        out.emplace(key, std::move(v));
    }
    return out;
}

inline Generated generate(ModuleType type, const Properties& p) {
    switch (type) {
        case ModuleType::user: return gen_user(p);
        case ModuleType::pipeline: return gen_pipeline(p);
        case ModuleType::valve: return gen_valve(p);
        case ModuleType::instrument: return gen_instrument(p);
        case ModuleType::table: return gen_table(p);
        case ModuleType::frame: return gen_frame(p);
        case ModuleType::posdes: return gen_posdes(p);
        case ModuleType::lightning: return lightning::gen_lightning(p);
        case ModuleType::signature: return gen_signature(p);
    }
    throw GenerationError("unknown module type");
}

inline Module create_module(ModuleType type, const Properties& supplied, const ZoneGrid& grid = {}, int id = 0) {
    Module m;
    m.id = id;
    m.type = type;
    m.props = validate_properties(type, supplied);
    try {
        m.geometry = generate(type, m.props).elements;
    } catch (const GeometryError& e) {
        throw GenerationError(std::string(to_string(type)) + ": " + e.what());
    }
    m.layer = placement_layer(m.props);
    m.bbox = elements_bbox(m.geometry);
    m.grid = grid;
    m.zone_mask = compute_zone_mask(m.bbox, grid);
    return m;
}

inline Module set_properties(const Module& m, const Properties& updates) {
    Properties merged = m.props;
    for (const auto& [key, value] : updates) merged[key] = value;
    return create_module(m.type, merged, m.grid, m.id);
}

// Same module regenerated against another zone grid.
inline Module with_grid(Module m, const ZoneGrid& grid) {
    m.grid = grid;
    m.zone_mask = compute_zone_mask(m.bbox, grid);
    return m;
}

// ---------------------------------------------------------------------------
// Rigid edits. They rewrite the placement properties and regenerate.

struct MoveEdit {
    Point delta;
};
struct RotateEdit {
    double angle_deg = 0.0;
    Point about;
};
// Reflection across the line through `through` with direction `axis_deg`.
struct MirrorEdit {
    Point through;
    double axis_deg = 0.0;
};
// Uniform stretch; user modules only.
struct ScaleEdit {
    double factor = 1.0;
    Point about;
};

using Edit = std::variant<MoveEdit, RotateEdit, MirrorEdit, ScaleEdit>;

inline Transform edit_transform(const Edit& edit) {
    return std::visit(
        [](const auto& e) -> Transform {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, MoveEdit>) return Transform::translation(e.delta);
            else if constexpr (std::is_same_v<T, RotateEdit>) return Transform::rotation(e.angle_deg, e.about);
            else if constexpr (std::is_same_v<T, MirrorEdit>) return Transform::mirror(e.through, e.axis_deg);
            else return Transform::scaling(e.factor, e.about);
        },
        edit);
}

inline Module edit_module(const Module& m, const Edit& edit) {
    const Point origin = props::get<Point>(m.props, "origin");
    const double angle = props::get<double>(m.props, "angle_deg");
    const bool mirrored = props::get<bool>(m.props, "mirrored");
    const Transform t = edit_transform(edit);

    Properties updates;
    updates["origin"] = t.apply(origin);
    if (const auto* r = std::get_if<RotateEdit>(&edit)) {
        updates["angle_deg"] = normalize_angle(angle + r->angle_deg);
    } else if (const auto* mi = std::get_if<MirrorEdit>(&edit)) {
        updates["angle_deg"] = normalize_angle(2.0 * mi->axis_deg - angle);
        updates["mirrored"] = !mirrored;
    } else if (const auto* s = std::get_if<ScaleEdit>(&edit)) {
        if (m.type != ModuleType::user)
            throw GenerationError("stretch is only supported for user modules; " + std::string(to_string(m.type)) +
                                  " symbols keep their standard size");
        if (!(s->factor > 0.0) || !std::isfinite(s->factor)) throw GenerationError("stretch factor must be > 0");
        updates["scale"] = props::get<double>(m.props, "scale") * s->factor;
    }
    return set_properties(m, updates);
}

// Attach axis number `axis_index` in drawing coordinates.
inline Axis attach_axis(const Module& m, std::size_t axis_index) {
    auto it = m.props.find("attach");
    if (it == m.props.end()) throw NotFound(std::string(to_string(m.type)) + " modules have no attach axes");
    const auto& axes = props::as<std::vector<Axis>>(it->second, "attach");
    if (axis_index >= axes.size())
        throw NotFound("attach axis " + std::to_string(axis_index) + " does not exist (module has " +
                       std::to_string(axes.size()) + ")");
    const Transform t = placement_transform(m.type, m.props);
    return {t.apply(axes[axis_index].origin), map_angle(t, axes[axis_index].angle_deg)};
}

// Rigidly moves the module so its attach axis coincides with `target`.
inline Module align_by_attach(const Module& m, std::size_t axis_index, const Axis& target) {
    const Axis current = attach_axis(m, axis_index);
    const double turn = normalize_angle(target.angle_deg - current.angle_deg);
    Module out = m;
    if (turn != 0.0) out = edit_module(out, RotateEdit{turn, current.origin});
    const Point delta = target.origin - current.origin;
    if (delta != Point{}) out = edit_module(out, MoveEdit{delta});
    return out;
}

// ---------------------------------------------------------------------------
// Working modules: temporary handles on one entry of an internal list.

struct WorkingModule {
    int host_id = 0;
    std::string list_name;
    std::size_t index = 0;
    std::vector<Element> geometry;
};

inline std::vector<WorkingModule> spawn_working_modules(const Module& m, std::string_view list_name) {
    const Generated g = generate(m.type, m.props);
    auto it = g.lists.find(list_name);
    if (it == g.lists.end())
        throw NotFound(std::string(to_string(m.type)) + " modules have no internal list '" + std::string(list_name) +
                       "'");
    std::vector<WorkingModule> out;
    for (std::size_t i = 0; i < it->second.size(); ++i) {
        WorkingModule w{m.id, std::string(list_name), i, {}};
        for (std::size_t idx : it->second[i]) w.geometry.push_back(g.elements[idx]);
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace modcad
