#pragma once

// Geometry generators for user, pipeline, valve, instrument, table, frame
// and position-designation modules. Every generator is a pure function of
// validated properties and returns placed geometry.

#include <array>
#include <charconv>
#include <string>
#include <vector>

#include "modcad/geometry.hpp"
#include "modcad/placement.hpp"
#include "modcad/property.hpp"

namespace modcad {

// ---------------------------------------------------------------------------
// Element <-> record encoding used by the "elements" list of user modules.

inline Record element_to_record(const Element& e) {
    Record r;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Segment>) {
                r["type"] = "segment";
                r["p1"] = s.p1;
                r["p2"] = s.p2;
            } else if constexpr (std::is_same_v<T, Polyline>) {
                r["type"] = "polyline";
                r["points"] = s.points;
                r["closed"] = s.closed;
            } else if constexpr (std::is_same_v<T, Arc>) {
                r["type"] = "arc";
                r["center"] = s.center;
                r["radius"] = s.radius;
                r["start_angle"] = s.start_angle;
                r["end_angle"] = s.end_angle;
            } else if constexpr (std::is_same_v<T, Circle>) {
                r["type"] = "circle";
                r["center"] = s.center;
                r["radius"] = s.radius;
            } else {
                r["type"] = "text";
                r["anchor"] = s.anchor;
                r["height"] = s.height;
                r["angle_deg"] = s.angle_deg;
                r["content"] = s.content;
            }
        },
        e.shape);
    r["line_type"] = std::string(to_string(e.style.line_type));
    r["color"] = e.style.color;
    return r;
}

inline Element element_from_record(const Record& r) {
    auto point = [&](std::string_view key) {
        const PropertyValue* v = props::find(r, key);
        if (!v) throw SchemaViolation(std::string(key), "missing element field");
        return props::as<Point>(*v, key);
    };
    const std::string type = props::record_text(r, "type");
    Element e;
    if (type == "segment") {
        e.shape = Segment{point("p1"), point("p2")};
    } else if (type == "polyline") {
        const PropertyValue* pts = props::find(r, "points");
        if (!pts) throw SchemaViolation("points", "missing element field");
        bool closed = false;
        if (const PropertyValue* c = props::find(r, "closed")) closed = props::as<bool>(*c, "closed");
        e.shape = Polyline{props::as<std::vector<Point>>(*pts, "points"), closed};
    } else if (type == "arc") {
        e.shape = Arc{point("center"), props::record_real(r, "radius"),
                      normalize_angle(props::record_real(r, "start_angle")),
                      normalize_angle(props::record_real(r, "end_angle"))};
    } else if (type == "circle") {
        e.shape = Circle{point("center"), props::record_real(r, "radius")};
    } else if (type == "text") {
        e.shape = Text{point("anchor"), props::record_real(r, "height", 2.5),
                       normalize_angle(props::record_real(r, "angle_deg", 0.0)), props::record_text(r, "content")};
    } else {
        throw SchemaViolation("type", "unknown element type '" + type + "'");
    }
    try {
        e.style.line_type = line_type_from_string(props::record_text(r, "line_type", "solid"));
    } catch (const GeometryError& err) {
        throw SchemaViolation("line_type", err.what());
    }
    if (const PropertyValue* c = props::find(r, "color")) e.style.color = static_cast<int>(props::as<std::int64_t>(*c, "color"));
    try {
        validate(e);
    } catch (const GeometryError& err) {
        throw SchemaViolation("elements", err.what());
    }
    return e;
}

// ---------------------------------------------------------------------------

inline Generated gen_user(const Properties& p) {
    const auto& records = props::get<std::vector<Record>>(p, "elements");
    if (records.empty()) throw GenerationError("user module needs at least one element");
    Generated g;
    auto& list = g.lists["elements"];
    for (const auto& r : records) {
        list.push_back({g.elements.size()});
        g.elements.push_back(element_from_record(r));
    }
    return place(std::move(g), ModuleType::user, p);
}

inline Generated gen_pipeline(const Properties& p) {
    const auto& path = props::get<std::vector<Point>>(p, "path");
    const double diameter = props::get<double>(p, "diameter_mm");
    const std::string& corner_name = props::get<std::string>(p, "corner");
    const double fillet = props::get<double>(p, "fillet_radius");
    const bool centerline = props::get<bool>(p, "show_centerline");
    if (!(diameter > 0.0) || !std::isfinite(diameter)) throw SchemaViolation("diameter_mm", "must be > 0");
    CornerKind corner;
    if (corner_name == "welded") corner = CornerKind::welded;
    else if (corner_name == "bent") corner = CornerKind::bent;
    else throw SchemaViolation("corner", "expected welded or bent");

    Generated g;
    try {
        auto left = offset_path(path, diameter / 2.0, corner, fillet);
        auto right = offset_path(path, -diameter / 2.0, corner, fillet);
        g.elements = std::move(left);
        g.elements.insert(g.elements.end(), right.begin(), right.end());
        if (centerline) {
            const LineStyle axis_style{LineType::dash_dot, 7};
            if (corner == CornerKind::welded) {
                g.elements.push_back(make_element(Polyline{path, false}, axis_style));
            } else {
                auto axis = offset_path(path, 0.0, corner, fillet, axis_style);
                g.elements.insert(g.elements.end(), axis.begin(), axis.end());
            }
        }
    } catch (const GeometryError& e) {
        throw GenerationError(std::string("pipeline: ") + e.what());
    }
    return place(std::move(g), ModuleType::pipeline, p);
}

inline constexpr double kValveLength = 4.0;
inline constexpr double kValveHalfBase = 1.5;

inline Generated gen_valve(const Properties& p) {
    const double L = kValveLength, b = kValveHalfBase;
    Generated g;
    g.elements.push_back(make_element(Polyline{{{-L, -b}, {0.0, 0.0}, {-L, b}, {-L, -b}}, true}));
    g.elements.push_back(make_element(Polyline{{{L, -b}, {0.0, 0.0}, {L, b}, {L, -b}}, true}));
    return place(std::move(g), ModuleType::valve, p);
}

inline constexpr double kInstrumentRadius = 5.0;
inline constexpr double kInstrumentTextHeight = 2.5;

namespace detail {

// Anchor that centres a single-line text box on `center`.
inline Point centered_anchor(Point center, double height, const std::string& content) {
    const double w = kTextAspect * height * static_cast<double>(utf8_length(content));
    return {center.x - w / 2.0, center.y - height / 2.0};
}

inline std::string join_nonempty(std::initializer_list<const std::string*> parts, std::string_view sep) {
    std::string out;
    for (const std::string* s : parts) {
        if (s->empty()) continue;
        if (!out.empty()) out += sep;
        out += *s;
    }
    return out;
}

} // namespace detail

inline Generated gen_instrument(const Properties& p) {
    const std::string& code = props::get<std::string>(p, "function_code");
    if (code.empty()) throw SchemaViolation("function_code", "must be nonempty");
    const Point c = props::get<Point>(p, "center");
    const bool on_board = props::get<bool>(p, "on_board");
    const std::string& kip_line = props::get<std::string>(p, "kip_line_type");
    LineStyle style;
    if (!kip_line.empty()) {
        try {
            style.line_type = line_type_from_string(kip_line);
        } catch (const GeometryError& e) {
            throw SchemaViolation("kip_line_type", e.what());
        }
    }
    const std::string position = detail::join_nonempty(
        {&props::get<std::string>(p, "loop_number"), &props::get<std::string>(p, "upper_index"),
         &props::get<std::string>(p, "lower_index")},
        "-");

    const double r = kInstrumentRadius, h = kInstrumentTextHeight;
    Generated g;
    g.elements.push_back(make_element(Circle{c, r}, style));
    if (on_board) g.elements.push_back(make_element(Segment{{c.x - r, c.y}, {c.x + r, c.y}}, style));
    g.elements.push_back(
        make_element(Text{detail::centered_anchor({c.x, c.y + r / 2.0}, h, code), h, 0.0, code}, style));
    g.elements.push_back(
        make_element(Text{detail::centered_anchor({c.x, c.y - r / 2.0}, h, position), h, 0.0, position}, style));
    return place(std::move(g), ModuleType::instrument, p);
}

struct TableColumn {
    double width_mm;
    std::string header;
};

// Column preset of the instrumentation (КИПиА) location table.
inline std::vector<TableColumn> kipia_columns() {
    return {{20.0, "Поз."},
            {55.0, "Наименование параметра"},
            {35.0, "Место установки"},
            {40.0, "Тип прибора"},
            {15.0, "Кол."},
            {25.0, "Примечание"}};
}

inline std::string cell_key(std::size_t column) { return std::to_string(column); }

inline constexpr double kTableTextHeight = 2.5;
inline constexpr double kTableInset = 1.0;

inline Generated gen_table(const Properties& p) {
    const std::string& preset = props::get<std::string>(p, "preset");
    std::vector<TableColumn> columns;
    for (const auto& r : props::get<std::vector<Record>>(p, "columns"))
        columns.push_back({props::record_real(r, "width"), props::record_text(r, "header")});
    if (columns.empty()) {
        if (preset == "kipia") columns = kipia_columns();
        else if (!preset.empty()) throw SchemaViolation("preset", "unknown table preset '" + preset + "'");
    }
    if (columns.empty()) throw GenerationError("table needs at least one column");
    for (const auto& col : columns) {
        if (!(col.width_mm > 0.0) || !std::isfinite(col.width_mm)) throw SchemaViolation("columns", "width must be > 0");
    }
    const double row_h = props::get<double>(p, "row_height_mm");
    const double head_h = props::get<double>(p, "header_height_mm");
    if (!(row_h > 0.0)) throw SchemaViolation("row_height_mm", "must be > 0");
    if (!(head_h > 0.0)) throw SchemaViolation("header_height_mm", "must be > 0");

    const auto& rows = props::get<std::vector<Record>>(p, "rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != columns.size())
            throw GenerationError("table row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                  " cells, expected " + std::to_string(columns.size()));
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (!props::find(rows[i], cell_key(c)))
                throw GenerationError("table row " + std::to_string(i) + " lacks cell " + cell_key(c));
        }
    }

    const Point top_left = props::get<Point>(p, "position");
    double width = 0.0;
    for (const auto& col : columns) width += col.width_mm;
    const double height = head_h + static_cast<double>(rows.size()) * row_h;
    const double bottom = top_left.y - height;

    Generated g;
    double x = top_left.x;
    std::vector<double> col_x;
    for (std::size_t c = 0; c <= columns.size(); ++c) {
        g.elements.push_back(make_element(Segment{{x, top_left.y}, {x, bottom}}));
        col_x.push_back(x);
        if (c < columns.size()) x += columns[c].width_mm;
    }
    const double right = x;
    auto horizontal = [&](double y) { g.elements.push_back(make_element(Segment{{top_left.x, y}, {right, y}})); };
    horizontal(top_left.y);
    horizontal(top_left.y - head_h);
    for (std::size_t r = 1; r <= rows.size(); ++r) horizontal(top_left.y - head_h - static_cast<double>(r) * row_h);

    auto text_in = [&](std::size_t c, double y_center, std::string content) {
        const double h = kTableTextHeight;
        g.elements.push_back(
            make_element(Text{{col_x[c] + kTableInset, y_center - h / 2.0}, h, 0.0, std::move(content)}));
    };
    for (std::size_t c = 0; c < columns.size(); ++c) text_in(c, top_left.y - head_h / 2.0, columns[c].header);
    auto& row_list = g.lists["rows"];
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const double y_center = top_left.y - head_h - (static_cast<double>(r) + 0.5) * row_h;
        std::vector<std::size_t> slice;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            slice.push_back(g.elements.size());
            text_in(c, y_center, props::record_text(rows[r], cell_key(c)));
        }
        row_list.push_back(std::move(slice));
    }
    return place(std::move(g), ModuleType::table, p);
}

enum class SheetFormat { A4, A3, A2, A1, A0 };

struct FrameDescription {
    SheetFormat format = SheetFormat::A4;
    bool landscape = false;
    int multiplicity = 1;
};

// Short × long side in mm.
inline std::pair<double, double> sheet_size(SheetFormat f) {
    switch (f) {
        case SheetFormat::A4: return {210.0, 297.0};
        case SheetFormat::A3: return {297.0, 420.0};
        case SheetFormat::A2: return {420.0, 594.0};
        case SheetFormat::A1: return {594.0, 841.0};
        case SheetFormat::A0: return {841.0, 1189.0};
    }
    return {210.0, 297.0};
}

inline std::optional<SheetFormat> sheet_format_from_string(std::string_view s) {
    if (s == "A4") return SheetFormat::A4;
    if (s == "A3") return SheetFormat::A3;
    if (s == "A2") return SheetFormat::A2;
    if (s == "A1") return SheetFormat::A1;
    if (s == "A0") return SheetFormat::A0;
    return std::nullopt;
}

inline constexpr double kBindingMargin = 20.0;
inline constexpr double kMargin = 5.0;
inline constexpr double kTitleBlockWidth = 185.0;
inline constexpr double kTitleBlockHeight = 55.0;
// Row boundaries of the simplified title block, measured up from its bottom edge.
inline constexpr std::array<double, 2> kTitleRowLines{15.0, 35.0};

// Outer sheet size for a frame description, after orientation and multiplicity.
inline Point sheet_extent(const FrameDescription& d) {
    auto [s, l] = sheet_size(d.format);
    l *= d.multiplicity;
    return d.landscape ? Point{l, s} : Point{s, l};
}

inline Generated gen_frame(const FrameDescription& d, const Properties& p) {
    if (d.format == SheetFormat::A4 && d.landscape) throw GenerationError("A4 is portrait only");
    if (d.multiplicity < 1) throw SchemaViolation("multiplicity", "must be >= 1");
    const Point size = sheet_extent(d);
    auto rect = [](Point a, Point b) { return Polyline{{a, {b.x, a.y}, b, {a.x, b.y}}, true}; };

    Generated g;
    g.elements.push_back(make_element(rect({0.0, 0.0}, size), {LineType::thin_solid, 7}));
    const Point inner_min{kBindingMargin, kMargin};
    const Point inner_max{size.x - kMargin, size.y - kMargin};
    g.elements.push_back(make_element(rect(inner_min, inner_max)));
    const Point tb_min{inner_max.x - kTitleBlockWidth, inner_min.y};
    const Point tb_max{inner_max.x, inner_min.y + kTitleBlockHeight};
    g.elements.push_back(make_element(rect(tb_min, tb_max)));
    for (double dy : kTitleRowLines)
        g.elements.push_back(make_element(Segment{{tb_min.x, tb_min.y + dy}, {tb_max.x, tb_min.y + dy}}));
    return place(std::move(g), ModuleType::frame, p);
}

inline FrameDescription frame_description(const Properties& p) {
    FrameDescription d;
    const auto fmt = sheet_format_from_string(props::get<std::string>(p, "format"));
    if (!fmt) throw SchemaViolation("format", "expected one of A4, A3, A2, A1, A0");
    d.format = *fmt;
    d.landscape = props::get<bool>(p, "landscape");
    const auto k = props::get<std::int64_t>(p, "multiplicity");
    if (k < 1 || k > 64) throw SchemaViolation("multiplicity", "must be in 1..64");
    d.multiplicity = static_cast<int>(k);
    return d;
}

inline Generated gen_frame(const Properties& p) { return gen_frame(frame_description(p), p); }

inline constexpr double kShelfLength = 8.0;
inline constexpr double kPosTextHeight = 3.5;
inline constexpr double kPosTextGap = 0.5;

inline Generated gen_posdes(const Properties& p) {
    const std::string& text = props::get<std::string>(p, "position_text");
    if (text.empty()) throw SchemaViolation("position_text", "must be nonempty");
    const Point from = props::get<Point>(p, "leader_from");
    const Point shelf = props::get<Point>(p, "shelf_at");
    Generated g;
    g.elements.push_back(make_element(Segment{from, shelf}, {LineType::thin_solid, 7}));
    g.elements.push_back(make_element(Segment{shelf, {shelf.x + kShelfLength, shelf.y}}, {LineType::thin_solid, 7}));
    g.elements.push_back(
        make_element(Text{{shelf.x + kPosTextGap, shelf.y + kPosTextGap}, kPosTextHeight, 0.0, text}));
    return place(std::move(g), ModuleType::posdes, p);
}

} // namespace modcad
