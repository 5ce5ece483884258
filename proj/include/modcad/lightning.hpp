#pragma once

// Single-rod lightning protection zones (cone model, reliability zones A
// and B, rods up to 150 m) and the plan-view generator of the lightning
// protection module. Multi-rod zones are the union of single-rod zones.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "modcad/errors.hpp"
#include "modcad/geometry.hpp"
#include "modcad/placement.hpp"
#include "modcad/property.hpp"

namespace modcad::lightning {

class NoProtectionAtHeight : public GenerationError {
public:
    using GenerationError::GenerationError;
};

class OutOfMethodRange : public GenerationError {
public:
    using GenerationError::GenerationError;
};

enum class ZoneClass { A, B };

inline constexpr double kMaxRodHeight = 150.0;

struct Rod {
    double x = 0.0;  // m
    double y = 0.0;  // m
    double h = 0.0;  // m
};

struct LightningParams {
    std::vector<Rod> rods;
    std::vector<double> section_heights;
    ZoneClass zone_class = ZoneClass::B;
    double scale_mm_per_m = 1.0;
    Point plan_origin;
};

struct ZoneCone {
    double h0;  // apex height
    double r0;  // ground radius
};

inline ZoneCone zone_cone(double h, ZoneClass cls) {
    if (!(h > 0.0) || !std::isfinite(h)) throw GenerationError("rod height must be > 0");
    if (h > kMaxRodHeight) throw OutOfMethodRange("rod height exceeds 150 m");
    if (cls == ZoneClass::B) return {0.92 * h, 1.5 * h};
    return {0.85 * h, (1.1 - 0.002 * h) * h};
}

// Heights within this relative distance of the apex count as the apex.
inline constexpr double kApexTolerance = 1e-12;

inline bool reaches(double h, double hx, ZoneClass cls) {
    return hx < zone_cone(h, cls).h0 * (1.0 - kApexTolerance);
}

// Radius (m) of the horizontal zone section at height hx.
inline double single_rod_radius(double h, double hx, ZoneClass cls) {
    zone_cone(h, cls);
    if (!(hx >= 0.0) || !std::isfinite(hx)) throw GenerationError("section height must be >= 0");
    if (!reaches(h, hx, cls)) throw NoProtectionAtHeight("no protection at the requested height");
    if (cls == ZoneClass::B) return 1.5 * (h - hx / 0.92);
    return (1.1 - 0.002 * h) * (h - hx / 0.85);
}

// Circles in world metres, one per rod whose zone reaches hx.
inline std::vector<Circle> zone_sections(const LightningParams& params, double hx) {
    std::vector<Circle> out;
    for (const auto& rod : params.rods) {
        if (!reaches(rod.h, hx, params.zone_class)) continue;
        out.push_back(Circle{{rod.x, rod.y}, single_rod_radius(rod.h, hx, params.zone_class)});
    }
    return out;
}

inline bool is_protected(double x, double y, double z, const LightningParams& params) {
    for (const auto& rod : params.rods) {
        if (!reaches(rod.h, z, params.zone_class)) continue;
        if (std::hypot(x - rod.x, y - rod.y) <= single_rod_radius(rod.h, z, params.zone_class)) return true;
    }
    return false;
}

inline void validate(const LightningParams& p) {
    if (p.rods.empty()) throw SchemaViolation("rods", "at least one rod required");
    for (const auto& r : p.rods) {
        if (!std::isfinite(r.x) || !std::isfinite(r.y)) throw SchemaViolation("rods", "non-finite rod position");
        zone_cone(r.h, p.zone_class);
    }
    for (std::size_t i = 0; i < p.section_heights.size(); ++i) {
        const double hx = p.section_heights[i];
        if (!(hx >= 0.0) || !std::isfinite(hx)) throw SchemaViolation("section_heights", "heights must be >= 0");
        if (i > 0 && !(p.section_heights[i - 1] < hx))
            throw SchemaViolation("section_heights", "heights must be distinct and ascending");
    }
    if (!(p.scale_mm_per_m > 0.0) || !std::isfinite(p.scale_mm_per_m))
        throw SchemaViolation("scale_mm_per_m", "must be > 0");
}

inline LightningParams params_from_props(const Properties& p) {
    LightningParams out;
    for (const auto& r : props::get<std::vector<Record>>(p, "rods"))
        out.rods.push_back({props::record_real(r, "x"), props::record_real(r, "y"), props::record_real(r, "h")});
    for (const auto& r : props::get<std::vector<Record>>(p, "section_heights"))
        out.section_heights.push_back(props::record_real(r, "hx"));
    const std::string& cls = props::get<std::string>(p, "zone_class");
    if (cls == "A") out.zone_class = ZoneClass::A;
    else if (cls == "B") out.zone_class = ZoneClass::B;
    else throw SchemaViolation("zone_class", "expected A or B");
    out.scale_mm_per_m = props::get<double>(p, "scale_mm_per_m");
    out.plan_origin = props::get<Point>(p, "plan_origin");
    validate(out);
    return out;
}

inline constexpr double kRodMarkerHalf = 1.5;
inline constexpr double kLabelHeight = 2.5;

inline std::string radius_label(double radius_m) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "R=%.2f", radius_m);
    return buf;
}

// Plan view: rod crosses, then section circles ordered by section height
// then rod index, then one radius label per circle in the same order.
inline Generated gen_lightning(const Properties& p) {
    const LightningParams params = params_from_props(p);
    const double k = params.scale_mm_per_m;
    auto to_paper = [&](double x, double y) { return params.plan_origin + Point{k * x, k * y}; };

    Generated g;
    auto& rod_list = g.lists["rods"];
    for (const auto& rod : params.rods) {
        const Point c = to_paper(rod.x, rod.y);
        const double m = kRodMarkerHalf;
        rod_list.push_back({g.elements.size(), g.elements.size() + 1});
        g.elements.push_back(make_element(Segment{{c.x - m, c.y - m}, {c.x + m, c.y + m}}));
        g.elements.push_back(make_element(Segment{{c.x - m, c.y + m}, {c.x + m, c.y - m}}));
    }

    struct Section {
        Point center;
        double radius_m;
    };
    std::vector<Section> sections;
    for (double hx : params.section_heights) {
        for (const auto& c : zone_sections(params, hx)) sections.push_back({to_paper(c.center.x, c.center.y), c.radius});
    }
    auto& circle_list = g.lists["sections"];
    for (const auto& s : sections) {
        circle_list.push_back({g.elements.size()});
        g.elements.push_back(make_element(Circle{s.center, s.radius_m * k}, {LineType::dashed, 7}));
    }
    auto& label_list = g.lists["radius_dimensions"];
    const Point diag = unit_at(45.0);
    for (const auto& s : sections) {
        label_list.push_back({g.elements.size()});
        const Point at = s.center + (s.radius_m * k) * diag;
        g.elements.push_back(make_element(Text{at, kLabelHeight, 0.0, radius_label(s.radius_m)}));
    }
    return place(std::move(g), ModuleType::lightning, p);
}

} // namespace modcad::lightning
