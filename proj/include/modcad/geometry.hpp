#pragma once

// 2D drafting primitives in paper-space millimetres: points, conformal
// transforms, elements, bounds, zone masks and snap points.

#include <algorithm>
#include <bitset>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "modcad/errors.hpp"

namespace modcad {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Angle in [0, 360).
inline double normalize_angle(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r < 0.0) r += 360.0;
    if (r >= 360.0) r -= 360.0;
    return r == 0.0 ? 0.0 : r;  // folds -0
}

inline constexpr double kDegToRad = std::numbers::pi / 180.0;
inline constexpr double kRadToDeg = 180.0 / std::numbers::pi;

// Exact at multiples of 90 degrees so that axis-aligned drafting stays exact.
inline double cos_deg(double deg) {
    const double a = normalize_angle(deg);
    if (a == 0.0) return 1.0;
    if (a == 90.0 || a == 270.0) return 0.0;
    if (a == 180.0) return -1.0;
    return std::cos(a * kDegToRad);
}

inline double sin_deg(double deg) {
    const double a = normalize_angle(deg);
    if (a == 0.0 || a == 180.0) return 0.0;
    if (a == 90.0) return 1.0;
    if (a == 270.0) return -1.0;
    return std::sin(a * kDegToRad);
}

// Direction of a vector in degrees, exact for axis-aligned vectors.
inline double direction_deg(Point v) {
    if (v.y == 0.0 && v.x > 0.0) return 0.0;
    if (v.x == 0.0 && v.y > 0.0) return 90.0;
    if (v.y == 0.0 && v.x < 0.0) return 180.0;
    if (v.x == 0.0 && v.y < 0.0) return 270.0;
    return normalize_angle(std::atan2(v.y, v.x) * kRadToDeg);
}

inline Point unit_at(double deg) { return {cos_deg(deg), sin_deg(deg)}; }

struct Rect {
    Point min;
    Point max;

    friend bool operator==(const Rect&, const Rect&) = default;

    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    bool valid() const { return min.x <= max.x && min.y <= max.y; }

    // Closed-rectangle intersection: touching boundaries count.
    bool intersects(const Rect& o) const {
        return min.x <= o.max.x && o.min.x <= max.x && min.y <= o.max.y && o.min.y <= max.y;
    }
    bool contains(const Rect& o) const {
        return min.x <= o.min.x && o.max.x <= max.x && min.y <= o.min.y && o.max.y <= max.y;
    }
    bool contains(Point p) const {
        return min.x <= p.x && p.x <= max.x && min.y <= p.y && p.y <= max.y;
    }

    static Rect around(Point p) { return {p, p}; }
    void expand(Point p) {
        min.x = std::min(min.x, p.x);
        min.y = std::min(min.y, p.y);
        max.x = std::max(max.x, p.x);
        max.y = std::max(max.y, p.y);
    }
    void expand(const Rect& r) {
        expand(r.min);
        expand(r.max);
    }
    Rect translated(Point d) const { return {min + d, max + d}; }
};

enum class LineType { solid, dashed, dash_dot, thin_solid };

inline std::string_view to_string(LineType t) {
    switch (t) {
        case LineType::solid: return "solid";
        case LineType::dashed: return "dashed";
        case LineType::dash_dot: return "dash_dot";
        case LineType::thin_solid: return "thin_solid";
    }
    return "solid";
}

inline LineType line_type_from_string(std::string_view s) {
    if (s == "solid") return LineType::solid;
    if (s == "dashed") return LineType::dashed;
    if (s == "dash_dot") return LineType::dash_dot;
    if (s == "thin_solid") return LineType::thin_solid;
    throw GeometryError("unknown line type '" + std::string(s) + "'");
}

struct LineStyle {
    LineType line_type = LineType::solid;
    int color = 7;

    friend bool operator==(const LineStyle&, const LineStyle&) = default;
};

struct Segment {
    Point p1;
    Point p2;
    friend bool operator==(const Segment&, const Segment&) = default;
};

struct Polyline {
    std::vector<Point> points;
    bool closed = false;
    friend bool operator==(const Polyline&, const Polyline&) = default;
};

// Counter-clockwise from start_angle to end_angle, degrees in [0, 360).
struct Arc {
    Point center;
    double radius = 1.0;
    double start_angle = 0.0;
    double end_angle = 90.0;
    friend bool operator==(const Arc&, const Arc&) = default;

    double sweep() const { return normalize_angle(end_angle - start_angle); }
    Point start_point() const { return center + radius * unit_at(start_angle); }
    Point end_point() const { return center + radius * unit_at(end_angle); }
};

struct Circle {
    Point center;
    double radius = 1.0;
    friend bool operator==(const Circle&, const Circle&) = default;
};

struct Text {
    Point anchor;
    double height = 2.5;
    double angle_deg = 0.0;
    std::string content;
    friend bool operator==(const Text&, const Text&) = default;
};

using Shape = std::variant<Segment, Polyline, Arc, Circle, Text>;

struct Element {
    Shape shape;
    LineStyle style;
    int layer = 0;

    friend bool operator==(const Element&, const Element&) = default;
};

inline Element make_element(Shape s, LineStyle style = {}, int layer = 0) {
    return Element{std::move(s), style, layer};
}

// Number of code points; malformed bytes count as one each.
inline std::size_t utf8_length(std::string_view s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
}

inline constexpr double kTextAspect = 0.6;

inline void validate(const Element& e) {
    if (e.style.color < 0 || e.style.color > 255) throw GeometryError("color out of range 0..255");
    auto finite = [](Point p) {
        if (!is_finite(p)) throw GeometryError("non-finite coordinate");
    };
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Segment>) {
                finite(s.p1);
                finite(s.p2);
            } else if constexpr (std::is_same_v<T, Polyline>) {
                if (s.points.size() < 2) throw GeometryError("polyline needs at least 2 points");
                for (auto p : s.points) finite(p);
            } else if constexpr (std::is_same_v<T, Arc>) {
                finite(s.center);
                if (!(s.radius > 0.0) || !std::isfinite(s.radius)) throw GeometryError("arc radius must be > 0");
                if (!std::isfinite(s.start_angle) || !std::isfinite(s.end_angle))
                    throw GeometryError("non-finite arc angle");
                if (s.sweep() == 0.0) throw GeometryError("arc sweep must be in (0, 360)");
            } else if constexpr (std::is_same_v<T, Circle>) {
                finite(s.center);
                if (!(s.radius > 0.0) || !std::isfinite(s.radius)) throw GeometryError("circle radius must be > 0");
            } else {
                finite(s.anchor);
                if (!(s.height > 0.0) || !std::isfinite(s.height)) throw GeometryError("text height must be > 0");
                if (!std::isfinite(s.angle_deg)) throw GeometryError("non-finite text angle");
            }
        },
        e.shape);
}

inline Rect element_bbox(const Element& e) {
    return std::visit(
        [](const auto& s) -> Rect {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Segment>) {
                Rect r = Rect::around(s.p1);
                r.expand(s.p2);
                return r;
            } else if constexpr (std::is_same_v<T, Polyline>) {
                Rect r = Rect::around(s.points.front());
                for (auto p : s.points) r.expand(p);
                return r;
            } else if constexpr (std::is_same_v<T, Arc>) {
                Rect r = Rect::around(s.start_point());
                r.expand(s.end_point());
                const double sweep = s.sweep();
                for (int k = 0; k < 4; ++k) {
                    const double a = 90.0 * k;
                    if (normalize_angle(a - s.start_angle) <= sweep) r.expand(s.center + s.radius * unit_at(a));
                }
                return r;
            } else if constexpr (std::is_same_v<T, Circle>) {
                return {{s.center.x - s.radius, s.center.y - s.radius},
                        {s.center.x + s.radius, s.center.y + s.radius}};
            } else {
                const double w = kTextAspect * s.height * static_cast<double>(utf8_length(s.content));
                const Point u = unit_at(s.angle_deg);
                const Point v{-u.y, u.x};
                Rect r = Rect::around(s.anchor);
                r.expand(s.anchor + w * u);
                r.expand(s.anchor + w * u + s.height * v);
                r.expand(s.anchor + s.height * v);
                return r;
            }
        },
        e.shape);
}

// Bounds of a list of elements; a degenerate rect at the origin when empty.
inline Rect elements_bbox(const std::vector<Element>& elements) {
    if (elements.empty()) return {};
    Rect r = element_bbox(elements.front());
    for (const auto& e : elements) r.expand(element_bbox(e));
    return r;
}

// x' = a·x + b·y + tx, y' = c·x + d·y + ty.
struct Transform {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
    double tx = 0.0, ty = 0.0;

    friend bool operator==(const Transform&, const Transform&) = default;

    static Transform identity() { return {}; }
    static Transform translation(Point delta) { return {1.0, 0.0, 0.0, 1.0, delta.x, delta.y}; }
    static Transform rotation(double deg, Point about = {}) {
        const double cs = cos_deg(deg), sn = sin_deg(deg);
        Transform t{cs, -sn, sn, cs, 0.0, 0.0};
        return about_point(t, about);
    }
    static Transform scaling(double s, Point about = {}) { return about_point({s, 0.0, 0.0, s, 0.0, 0.0}, about); }
    // Reflection across the line through `through` with direction `axis_deg`.
    static Transform mirror(Point through, double axis_deg) {
        const double cs = cos_deg(2.0 * axis_deg), sn = sin_deg(2.0 * axis_deg);
        return about_point({cs, sn, sn, -cs, 0.0, 0.0}, through);
    }

    Point apply(Point p) const { return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty}; }
    Point apply_vector(Point v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    double det() const { return a * d - b * c; }
    bool mirrored() const { return det() < 0.0; }
    double scale() const { return std::hypot(a, c); }
    // Rotation of the linear part after factoring out the optional mirror
    // (applied first, across the x axis).
    double rotation_deg() const { return direction_deg({a, c}); }

    bool is_conformal(double tol = 1e-9) const {
        const double s = scale();
        if (!(s > 0.0) || !std::isfinite(s) || !std::isfinite(tx) || !std::isfinite(ty)) return false;
        const double eps = tol * s;
        if (mirrored()) return std::abs(a + d) <= eps && std::abs(b - c) <= eps;
        return std::abs(a - d) <= eps && std::abs(b + c) <= eps;
    }

    Transform inverse() const {
        const double k = det();
        Transform inv{d / k, -b / k, -c / k, a / k, 0.0, 0.0};
        const Point t = inv.apply_vector({tx, ty});
        inv.tx = -t.x;
        inv.ty = -t.y;
        return inv;
    }

private:
    static Transform about_point(Transform t, Point p) {
        const Point moved = t.apply_vector(p);
        t.tx = p.x - moved.x;
        t.ty = p.y - moved.y;
        return t;
    }
};

// lhs ∘ rhs: apply rhs first.
inline Transform operator*(const Transform& lhs, const Transform& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d,
            lhs.a * rhs.tx + lhs.b * rhs.ty + lhs.tx, lhs.c * rhs.tx + lhs.d * rhs.ty + lhs.ty};
}

// Maps a direction angle through the linear part of a conformal transform.
inline double map_angle(const Transform& t, double deg) {
    const double rot = t.rotation_deg();
    return t.mirrored() ? normalize_angle(rot - deg) : normalize_angle(deg + rot);
}

inline Element apply_transform(const Element& e, const Transform& t) {
    if (!t.is_conformal()) throw GeometryError("transform is not conformal");
    if (t == Transform::identity()) return e;
    const double s = t.scale();
    Element out = e;
    std::visit(
        [&](auto& sh) {
            using T = std::decay_t<decltype(sh)>;
            if constexpr (std::is_same_v<T, Segment>) {
                sh.p1 = t.apply(sh.p1);
                sh.p2 = t.apply(sh.p2);
            } else if constexpr (std::is_same_v<T, Polyline>) {
                for (auto& p : sh.points) p = t.apply(p);
            } else if constexpr (std::is_same_v<T, Arc>) {
                sh.center = t.apply(sh.center);
                sh.radius *= s;
                const double start = map_angle(t, sh.start_angle);
                const double end = map_angle(t, sh.end_angle);
                if (t.mirrored()) {
                    sh.start_angle = end;
                    sh.end_angle = start;
                } else {
                    sh.start_angle = start;
                    sh.end_angle = end;
                }
            } else if constexpr (std::is_same_v<T, Circle>) {
                sh.center = t.apply(sh.center);
                sh.radius *= s;
            } else {
                sh.anchor = t.apply(sh.anchor);
                sh.height *= s;
                sh.angle_deg = map_angle(t, sh.angle_deg);
            }
        },
        out.shape);
    return out;
}

inline std::vector<Element> apply_transform(const std::vector<Element>& elements, const Transform& t) {
    std::vector<Element> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(apply_transform(e, t));
    return out;
}

inline std::vector<Point> snap_points(const Element& e) {
    return std::visit(
        [](const auto& s) -> std::vector<Point> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Segment>) {
                return {s.p1, s.p2, Point{(s.p1.x + s.p2.x) / 2.0, (s.p1.y + s.p2.y) / 2.0}};
            } else if constexpr (std::is_same_v<T, Polyline>) {
                return s.points;
            } else if constexpr (std::is_same_v<T, Arc>) {
                return {s.start_point(), s.end_point(), s.center};
            } else if constexpr (std::is_same_v<T, Circle>) {
                const Point c = s.center;
                const double r = s.radius;
                return {c, {c.x + r, c.y}, {c.x, c.y + r}, {c.x - r, c.y}, {c.x, c.y - r}};
            } else {
                return {s.anchor};
            }
        },
        e.shape);
}

// ---------------------------------------------------------------------------
// Zone grid and masks

inline constexpr int kMaxZoneCells = 4096;

struct ZoneGrid {
    Point origin;
    double cell_w = 100.0;
    double cell_h = 100.0;
    int nx = 16;
    int ny = 16;

    friend bool operator==(const ZoneGrid&, const ZoneGrid&) = default;

    int cells() const { return nx * ny; }

    void validate() const {
        if (!is_finite(origin)) throw GeometryError("zone grid origin must be finite");
        if (!(cell_w > 0.0) || !(cell_h > 0.0) || !std::isfinite(cell_w) || !std::isfinite(cell_h))
            throw GeometryError("zone grid cells must have positive size");
        if (nx <= 0 || ny <= 0) throw GeometryError("zone grid dimensions must be positive");
        if (static_cast<long long>(nx) * ny > kMaxZoneCells) throw GeometryError("zone grid exceeds 4096 cells");
    }

    Rect cell(int i, int j) const {
        return {{origin.x + i * cell_w, origin.y + j * cell_h},
                {origin.x + (i + 1) * cell_w, origin.y + (j + 1) * cell_h}};
    }
    Rect bounds() const { return {origin, {origin.x + nx * cell_w, origin.y + ny * cell_h}}; }

    // Grid of nx × ny cells spanning `extent`.
    static ZoneGrid over(const Rect& extent, int nx = 16, int ny = 16) {
        ZoneGrid g{extent.min, extent.width() / nx, extent.height() / ny, nx, ny};
        g.validate();
        return g;
    }
};

// Row-major bit set over a zone grid: bit j·nx + i is cell (i, j).
class ZoneMask {
public:
    ZoneMask() = default;
    explicit ZoneMask(int size) : size_(size) {
        if (size < 0 || size > kMaxZoneCells) throw GeometryError("zone mask size out of range");
    }

    int size() const { return size_; }
    bool test(int index) const { return bits_.test(static_cast<std::size_t>(index)); }
    void set(int index) { bits_.set(static_cast<std::size_t>(index)); }
    bool any() const { return bits_.any(); }
    std::size_t count() const { return bits_.count(); }
    bool intersects(const ZoneMask& o) const { return (bits_ & o.bits_).any(); }

    friend bool operator==(const ZoneMask&, const ZoneMask&) = default;

    // Four bits per hex digit, cell 0 in the most significant bit of digit 0.
    std::string to_hex() const {
        static constexpr char kDigits[] = "0123456789abcdef";
        std::string out((size_ + 3) / 4, '0');
        for (int i = 0; i < size_; ++i) {
            if (test(i)) {
                const int v = (out[i / 4] >= 'a') ? out[i / 4] - 'a' + 10 : out[i / 4] - '0';
                out[i / 4] = kDigits[v | (8 >> (i % 4))];
            }
        }
        return out;
    }

    static ZoneMask from_hex(std::string_view hex, int size) {
        ZoneMask m(size);
        if (hex.size() != static_cast<std::size_t>((size + 3) / 4)) throw GeometryError("zone mask length mismatch");
        for (int i = 0; i < size; ++i) {
            const char ch = hex[i / 4];
            int v;
            if (ch >= '0' && ch <= '9') v = ch - '0';
            else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
            else throw GeometryError("zone mask is not lowercase hex");
            if (v & (8 >> (i % 4))) m.set(i);
        }
        return m;
    }

private:
    int size_ = 0;
    std::bitset<kMaxZoneCells> bits_;
};

inline ZoneMask compute_zone_mask(const Rect& bbox, const ZoneGrid& grid) {
    grid.validate();
    ZoneMask mask(grid.cells());
    auto index_range = [](double lo, double hi, double o, double w, int n) {
        const double first = std::floor((lo - o) / w) - 1.0;
        const double last = std::floor((hi - o) / w) + 1.0;
        const int i0 = static_cast<int>(std::clamp(first, 0.0, static_cast<double>(n - 1)));
        const int i1 = static_cast<int>(std::clamp(last, 0.0, static_cast<double>(n - 1)));
        return std::pair{i0, i1};
    };
    if (!grid.bounds().intersects(bbox)) return mask;
    const auto [i0, i1] = index_range(bbox.min.x, bbox.max.x, grid.origin.x, grid.cell_w, grid.nx);
    const auto [j0, j1] = index_range(bbox.min.y, bbox.max.y, grid.origin.y, grid.cell_h, grid.ny);
    for (int j = j0; j <= j1; ++j) {
        for (int i = i0; i <= i1; ++i) {
            if (grid.cell(i, j).intersects(bbox)) mask.set(j * grid.nx + i);
        }
    }
    return mask;
}

// ---------------------------------------------------------------------------
// Path offsetting

enum class CornerKind { welded, bent };

inline std::string_view to_string(CornerKind k) { return k == CornerKind::welded ? "welded" : "bent"; }

inline constexpr double kMinJoinTurnDeg = 0.5;

// Offsets a polyline path sideways (positive = left of travel). Welded
// corners are mitred; bent corners become tangent arcs whose centreline
// radius is `fillet_radius`.
inline std::vector<Element> offset_path(const std::vector<Point>& points, double side_offset, CornerKind corner,
                                        double fillet_radius, LineStyle style = {}) {
    if (points.size() < 2) throw GeometryError("path needs at least 2 points");
    if (!std::isfinite(side_offset) || !std::isfinite(fillet_radius) || fillet_radius < 0.0)
        throw GeometryError("invalid offset or fillet radius");
    for (auto p : points) {
        if (!is_finite(p)) throw GeometryError("non-finite path point");
    }

    const std::size_t nseg = points.size() - 1;
    std::vector<Point> dir(nseg), normal(nseg);
    std::vector<double> len(nseg);
    for (std::size_t i = 0; i < nseg; ++i) {
        const Point v = points[i + 1] - points[i];
        len[i] = norm(v);
        if (!(len[i] > 0.0)) throw GeometryError("degenerate path: repeated point");
        dir[i] = (1.0 / len[i]) * v;
        if (v.y == 0.0) dir[i] = {v.x > 0 ? 1.0 : -1.0, 0.0};
        if (v.x == 0.0) dir[i] = {0.0, v.y > 0 ? 1.0 : -1.0};
        normal[i] = {-dir[i].y, dir[i].x};
    }

    // Signed turn at each interior vertex k (between segments k-1 and k).
    std::vector<double> turn(points.size(), 0.0);
    for (std::size_t k = 1; k < nseg; ++k) {
        const double t = std::atan2(cross(dir[k - 1], dir[k]), dot(dir[k - 1], dir[k])) * kRadToDeg;
        if (std::abs(std::abs(t) - 180.0) < 1e-9) throw GeometryError("degenerate path: 180 degree reversal");
        turn[k] = t;
    }

    std::vector<Element> out;
    if (corner == CornerKind::welded) {
        std::vector<Point> starts(nseg), ends(nseg);
        for (std::size_t i = 0; i < nseg; ++i) {
            starts[i] = points[i] + side_offset * normal[i];
            ends[i] = points[i + 1] + side_offset * normal[i];
        }
        for (std::size_t k = 1; k < nseg; ++k) {
            if (std::abs(turn[k]) < kMinJoinTurnDeg) continue;
            const Point bis = normal[k - 1] + normal[k];
            const double denom = 1.0 + dot(dir[k - 1], dir[k]);
            const Point miter = points[k] + (side_offset / denom) * bis;
            ends[k - 1] = miter;
            starts[k] = miter;
        }
        for (std::size_t i = 0; i < nseg; ++i) out.push_back(make_element(Segment{starts[i], ends[i]}, style));
        return out;
    }

    // Bent: tangent length at each interior vertex.
    std::vector<double> tangent(points.size(), 0.0);
    bool any_corner = false;
    for (std::size_t k = 1; k < nseg; ++k) {
        if (std::abs(turn[k]) < kMinJoinTurnDeg) continue;
        any_corner = true;
        tangent[k] = fillet_radius * std::tan(std::abs(turn[k]) * kDegToRad / 2.0);
    }
    if (any_corner && !(fillet_radius > std::abs(side_offset)))
        throw GeometryError("fillet does not fit: radius must exceed the side offset");
    constexpr double kFitTol = 1e-9;
    for (std::size_t i = 0; i < nseg; ++i) {
        if (tangent[i] + tangent[i + 1] > len[i] * (1.0 + kFitTol))
            throw GeometryError("fillet does not fit: tangent lengths exceed segment " + std::to_string(i));
    }

    Point cursor = points[0] + side_offset * normal[0];
    for (std::size_t k = 1; k <= nseg; ++k) {
        const std::size_t seg = k - 1;
        if (k == nseg || tangent[k] == 0.0) {
            const Point end = points[k] + side_offset * normal[seg];
            if (distance(cursor, end) > 1e-12) out.push_back(make_element(Segment{cursor, end}, style));
            // Unjoined near-straight vertex: continue from the next segment's own offset start.
            if (k < nseg) cursor = points[k] + side_offset * normal[k];
            continue;
        }
        const double sign = turn[k] > 0.0 ? 1.0 : -1.0;
        const Point a_center = points[k] - tangent[k] * dir[seg];
        const Point b_center = points[k] + tangent[k] * dir[k];
        const Point arc_center = a_center + (sign * fillet_radius) * normal[seg];
        const Point a_side = a_center + side_offset * normal[seg];
        const Point b_side = b_center + side_offset * normal[k];
        const double radius = fillet_radius - sign * side_offset;
        if (distance(cursor, a_side) > 1e-12) out.push_back(make_element(Segment{cursor, a_side}, style));
        const double ang_a = direction_deg(a_side - arc_center);
        const double ang_b = direction_deg(b_side - arc_center);
        Arc arc{arc_center, radius, sign > 0 ? ang_a : ang_b, sign > 0 ? ang_b : ang_a};
        out.push_back(make_element(arc, style));
        cursor = b_side;
    }
    return out;
}

} // namespace modcad
