#pragma once

#include <map>
#include <string>
#include <vector>

#include "modcad/geometry.hpp"
#include "modcad/property.hpp"

namespace modcad {

// Output of a generator: the module geometry plus the named internal lists
// of the parametric representation, each entry mapped to the indices of the
// elements it produced.
struct Generated {
    std::vector<Element> elements;
    std::map<std::string, std::vector<std::vector<std::size_t>>, std::less<>> lists;
};

// Mirrors the symbol already absorbs; a code in this set does not change
// the drawn geometry.
inline bool symmetry_is_invariant(ModuleType type, Symmetry s) {
    return type == ModuleType::valve && s != Symmetry::none;
}

inline Transform symmetry_transform(Symmetry s) {
    switch (s) {
        case Symmetry::none: return Transform::identity();
        case Symmetry::mirror_x: return Transform::mirror({}, 0.0);
        case Symmetry::mirror_y: return Transform::mirror({}, 90.0);
        case Symmetry::both: return Transform::rotation(180.0);
    }
    return Transform::identity();
}

// origin · rotation · [mirror across x] · symmetry · uniform scale
inline Transform placement_transform(ModuleType type, const Properties& p) {
    const Point origin = props::get<Point>(p, "origin");
    const double angle = props::get<double>(p, "angle_deg");
    const bool mirrored = props::get<bool>(p, "mirrored");

    Transform t = Transform::translation(origin) * Transform::rotation(angle);
    if (mirrored) t = t * Transform::mirror({}, 0.0);
    if (auto it = p.find("symmetry"); it != p.end()) {
        const auto code = symmetry_from_string(props::as<std::string>(it->second, "symmetry"));
        if (!code) throw SchemaViolation("symmetry", "expected one of none, mirror_x, mirror_y, both");
        if (!symmetry_is_invariant(type, *code)) t = t * symmetry_transform(*code);
    }
    if (auto it = p.find("scale"); it != p.end()) {
        const double s = props::as<double>(it->second, "scale");
        if (!(s > 0.0) || !std::isfinite(s)) throw SchemaViolation("scale", "must be a positive number");
        if (s != 1.0) t = t * Transform::scaling(s);
    }
    return t;
}

inline int placement_layer(const Properties& p) {
    return static_cast<int>(props::get<std::int64_t>(p, "layer"));
}

// Applies placement and forces every element onto the module layer.
inline Generated place(Generated g, ModuleType type, const Properties& p) {
    const Transform t = placement_transform(type, p);
    const int layer = placement_layer(p);
    for (auto& e : g.elements) {
        e = apply_transform(e, t);
        e.layer = layer;
    }
    return g;
}

} // namespace modcad
