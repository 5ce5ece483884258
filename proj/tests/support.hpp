#pragma once

// Seeded random generators of valid module properties, shared by the unit
// tests and the acceptance runner.

#include <atomic>
#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "modcad/modcad.hpp"

namespace modcad::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }
    Point point(double lo, double hi) { return {real(lo, hi), real(lo, hi)}; }

    // Values on a 1/64 lattice: sums and differences of these stay exact.
    double dyadic(double lo, double hi) { return std::round(real(lo, hi) * 64.0) / 64.0; }
    Point dyadic_point(double lo, double hi) { return {dyadic(lo, hi), dyadic(lo, hi)}; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(integer(0, static_cast<int>(v.size()) - 1))];
    }

    std::string word() {
        static const std::vector<std::string> kWords{"",        "15кч18п", "ЗКЛ2-16", "Манометр", "TE",
                                                     "ДМ-2005", "a/b",     "x\"y",    "Поз. 1",   "note"};
        return pick(kWords);
    }

    std::string nonempty_word() {
        static const std::vector<std::string> kWords{"TI", "PIC", "FE", "LT", "TE", "PDI", "1", "2а"};
        return pick(kWords);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Element random_element(Gen& g) {
    LineStyle style{static_cast<LineType>(g.integer(0, 3)), g.integer(0, 255)};
    switch (g.integer(0, 4)) {
        case 0: return make_element(Segment{g.point(-50, 50), g.point(-50, 50)}, style);
        case 1: {
            Polyline pl;
            const int n = g.integer(2, 6);
            for (int i = 0; i < n; ++i) pl.points.push_back(g.point(-50, 50));
            pl.closed = g.coin();
            return make_element(pl, style);
        }
        case 2: {
            const double a = g.real(0, 360);
            return make_element(Arc{g.point(-50, 50), g.real(0.5, 30), a, normalize_angle(a + g.real(1, 359))}, style);
        }
        case 3: return make_element(Circle{g.point(-50, 50), g.real(0.5, 30)}, style);
        default: return make_element(Text{g.point(-50, 50), g.real(1, 7), g.real(0, 360), g.word()}, style);
    }
}

inline std::vector<Axis> random_axes(Gen& g) {
    std::vector<Axis> out;
    const int n = g.integer(0, 3);
    for (int i = 0; i < n; ++i) out.push_back({g.point(-10, 10), g.real(0, 360)});
    return out;
}

inline void random_placement(Gen& g, Properties& p) {
    p["layer"] = std::int64_t{g.integer(0, 20)};
    p["origin"] = g.point(-200, 200);
    p["angle_deg"] = g.real(0, 360);
    p["mirrored"] = g.coin();
}

inline std::string random_symmetry(Gen& g) { return g.pick(std::vector<std::string>{"none", "mirror_x", "mirror_y", "both"}); }

// Turns stay within ±90° and legs are at least 60 mm, so fillets up to
// 30 mm always fit.
inline std::vector<Point> random_path(Gen& g, int legs) {
    std::vector<Point> pts{g.point(-100, 100)};
    double heading = g.real(0, 360);
    for (int i = 0; i < legs; ++i) {
        if (i > 0) {
            double turn = g.real(5, 90);
            if (g.coin()) turn = -turn;
            heading += turn;
        }
        pts.push_back(pts.back() + g.real(60, 150) * unit_at(heading));
    }
    return pts;
}

inline Properties random_props(ModuleType type, Gen& g) {
    Properties p;
    random_placement(g, p);
    switch (type) {
        case ModuleType::user: {
            std::vector<Record> elems;
            const int n = g.integer(1, 6);
            for (int i = 0; i < n; ++i) elems.push_back(element_to_record(random_element(g)));
            p["elements"] = elems;
            p["attach"] = random_axes(g);
            p["symmetry"] = random_symmetry(g);
            p["comment"] = g.word();
            p["scale"] = g.real(0.25, 4.0);
            break;
        }
        case ModuleType::pipeline: {
            const double d = g.real(2, 20);
            p["path"] = random_path(g, g.integer(1, 4));
            p["diameter_mm"] = d;
            const bool bent = g.coin();
            p["corner"] = std::string(bent ? "bent" : "welded");
            p["fillet_radius"] = bent ? d / 2.0 + g.real(1, 15) : 0.0;
            p["show_centerline"] = g.coin();
            p["comment"] = g.word();
            break;
        }
        case ModuleType::valve:
            p["symmetry"] = random_symmetry(g);
            p["designation"] = g.word();
            p["name"] = g.word();
            p["mass"] = g.real(0, 100);
            p["dy"] = g.real(10, 500);
            p["py"] = g.real(0.1, 25);
            p["face_to_face"] = g.real(0, 300);
            p["note"] = g.word();
            break;
        case ModuleType::instrument:
            p["function_code"] = g.nonempty_word();
            p["on_board"] = g.coin();
            p["upper_index"] = g.word();
            p["lower_index"] = g.word();
            p["loop_number"] = g.word();
            p["pos_designation"] = g.word();
            p["center"] = g.point(-20, 20);
            p["price"] = g.real(0, 5000);
            p["kip_line_type"] = g.pick(std::vector<std::string>{"", "solid", "dashed", "thin_solid"});
            break;
        case ModuleType::table: {
            const int ncols = g.integer(1, 5);
            std::vector<Record> cols;
            for (int c = 0; c < ncols; ++c) cols.push_back({{"width", g.real(5, 60)}, {"header", g.word()}});
            std::vector<Record> rows;
            const int nrows = g.integer(0, 5);
            for (int r = 0; r < nrows; ++r) {
                Record row;
                for (int c = 0; c < ncols; ++c) row[cell_key(static_cast<std::size_t>(c))] = g.word();
                rows.push_back(row);
            }
            p["columns"] = cols;
            p["rows"] = rows;
            p["position"] = g.point(-100, 100);
            p["row_height_mm"] = g.real(5, 12);
            p["header_height_mm"] = g.real(8, 20);
            break;
        }
        case ModuleType::frame: {
            const std::string fmt = g.pick(std::vector<std::string>{"A4", "A3", "A2", "A1", "A0"});
            p["format"] = fmt;
            p["landscape"] = fmt != "A4" && g.coin();
            p["multiplicity"] = std::int64_t{g.integer(1, 3)};
            break;
        }
        case ModuleType::posdes:
            p["leader_from"] = g.point(-100, 100);
            p["shelf_at"] = g.point(-100, 100);
            p["position_text"] = g.nonempty_word();
            p["spec_props"] = Record{{"designation", g.word()}, {"mass", g.real(0, 10)}};
            break;
        case ModuleType::lightning: {
            std::vector<Record> rods;
            const int n = g.integer(1, 4);
            for (int i = 0; i < n; ++i) {
                const double h = g.real(2, 150);
                rods.push_back({{"x", g.real(-50, 50)}, {"y", g.real(-50, 50)}, {"h", h}});
            }
            std::vector<Record> sections;
            double hx = 0.0;
            const int ns = g.integer(0, 3);
            for (int i = 0; i < ns; ++i) {
                hx += g.real(0.1, 30);
                sections.push_back({{"hx", hx}});
            }
            p["rods"] = rods;
            p["section_heights"] = sections;
            p["zone_class"] = std::string(g.coin() ? "A" : "B");
            p["scale_mm_per_m"] = g.real(0.2, 5);
            p["plan_origin"] = g.point(-100, 100);
            break;
        }
        case ModuleType::signature:
            p["person"] = g.nonempty_word();
            p["position"] = g.word();
            p["date"] = std::string("2026-10-16");
            p["time"] = std::string("12:34:56");
            p["digest_hex"] = std::string(64, 'a');
            p["auth_hex"] = std::string(64, 'b');
            break;
    }
    return p;
}

// A property update that keeps the module valid.
inline Properties random_update(ModuleType type, Gen& g) {
    Properties fresh = random_props(type, g);
    Properties out;
    for (const auto& [key, value] : fresh) {
        if (g.integer(0, 2) == 0) out[key] = value;
    }
    // Keys that only make sense together travel together.
    if (type == ModuleType::table && (out.count("columns") || out.count("rows"))) {
        out["columns"] = fresh["columns"];
        out["rows"] = fresh["rows"];
    }
    if (type == ModuleType::pipeline && (out.count("path") || out.count("diameter_mm") || out.count("corner") ||
                                         out.count("fillet_radius"))) {
        for (const char* k : {"path", "diameter_mm", "corner", "fillet_radius"}) out[k] = fresh[k];
    }
    if (type == ModuleType::frame && (out.count("format") || out.count("landscape"))) {
        out["format"] = fresh["format"];
        out["landscape"] = fresh["landscape"];
    }
    return out;
}

inline std::string geometry_bytes(const Module& m) { return io::canonical_geometry(m.geometry); }

// Drawing with a few modules of random types and free elements.
inline Drawing random_drawing(Gen& g, bool with_signature = false) {
    Drawing d = Drawing::blank({{0.0, 0.0}, {g.real(200, 1200), g.real(200, 900)}}, g.integer(1, 32), g.integer(1, 32));
    const int n = g.integer(0, 8);
    for (int i = 0; i < n; ++i) {
        if (g.integer(0, 3) == 0) {
            Element e = random_element(g);
            e.layer = g.integer(0, 5);
            d.add_element(e);
        } else {
            const ModuleType t = kAllModuleTypes[static_cast<std::size_t>(g.integer(0, 7))];
            d.add_module(t, random_props(t, g));
        }
    }
    if (with_signature) d = sign_drawing(d, "Иванов", "ГИП", "secret", "2026-10-16", "09:30:00");
    return d;
}

// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("modcad_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

} // namespace modcad::testing
