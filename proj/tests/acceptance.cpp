// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace modcad;
using modcad::testing::Gen;
using modcad::testing::geometry_bytes;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void identity_placement(Properties& p) {
    p["origin"] = Point{};
    p["angle_deg"] = 0.0;
    p["mirrored"] = false;
}

bool json_has_key(const Json& j, const std::string& key) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() == key || json_has_key(it.value(), key)) return true;
    } else if (j.is_array()) {
        for (const auto& v : j)
            if (json_has_key(v, key)) return true;
    }
    return false;
}

void criterion1(Outcome& o) {
    const auto t0 = Clock::now();
    Gen g(1);
    std::size_t sets = 0;
    for (auto t : kAllModuleTypes) {
        for (int n = 0; n < 500; ++n) {
            const Properties p = modcad::testing::random_props(t, g);
            o.require(geometry_bytes(create_module(t, p)) == geometry_bytes(create_module(t, p)),
                      "create_module not deterministic for " + std::string(to_string(t)));
            ++sets;
        }
    }
    std::size_t triples = 0;
    for (int n = 0; n < 1000; ++n) {
        const ModuleType t = kAllModuleTypes[static_cast<std::size_t>(n) % kAllModuleTypes.size()];
        const Properties p = modcad::testing::random_props(t, g);
        const Properties u = modcad::testing::random_update(t, g);
        Properties merged = p;
        for (const auto& [k, v] : u) merged[k] = v;
        o.require(io::canonical_bytes(set_properties(create_module(t, p), u)) ==
                      io::canonical_bytes(create_module(t, merged)),
                  "set_properties differs from fresh create for " + std::string(to_string(t)));
        ++triples;
    }
    const double s = seconds_since(t0);
    o.require(s < 10.0, "runtime over 10 s");
    o.detail << sets << " property sets, " << triples << " update triples, " << s << " s";
}

void criterion2(Outcome& o) {
    using namespace lightning;
    auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9; };
    const ZoneCone b = zone_cone(10, ZoneClass::B);
    o.require(near(b.h0, 9.2) && near(b.r0, 15.0), "class B cone for h=10");
    o.require(near(single_rod_radius(10, 5, ZoneClass::B), 6.847826086956522), "class B rx(5)");
    o.require(near(single_rod_radius(20, 8.5, ZoneClass::A), 10.6), "class A rx(8.5)");

    Gen g(2);
    for (int n = 0; n < 1000; ++n) {
        const double h = g.real(0.5, 150);
        const ZoneClass cls = g.coin() ? ZoneClass::A : ZoneClass::B;
        const double h0 = cls == ZoneClass::B ? 0.92 * h : 0.85 * h;
        const double r0 = cls == ZoneClass::B ? 1.5 * h : (1.1 - 0.002 * h) * h;
        double x1 = g.real(0, h0 * 0.999), x2 = g.real(0, h0 * 0.999);
        if (x1 > x2) std::swap(x1, x2);
        if (x1 < x2) o.require(single_rod_radius(h, x1, cls) > single_rod_radius(h, x2, cls), "not decreasing");
        o.require(std::abs(single_rod_radius(h, x1, cls) - r0 * (1 - x1 / h0)) <= 1e-9, "not linear in hx");
    }

    int disagreements = 0;
    for (int n = 0; n < 10000; ++n) {
        LightningParams p;
        p.zone_class = g.coin() ? ZoneClass::A : ZoneClass::B;
        const int rods = g.integer(1, 4);
        for (int i = 0; i < rods; ++i) p.rods.push_back({g.real(-50, 50), g.real(-50, 50), g.real(2, 60)});
        const double x = g.real(-120, 120), y = g.real(-120, 120), z = g.real(0, 60);
        bool inside = false;
        for (const auto& c : zone_sections(p, z)) {
            const double dx = x - c.center.x, dy = y - c.center.y;
            inside = inside || dx * dx + dy * dy <= c.radius * c.radius;
        }
        if (is_protected(x, y, z, p) != inside) ++disagreements;
    }
    o.require(disagreements == 0, std::to_string(disagreements) + " is_protected disagreements");
    o.detail << "spot values within 1e-9, 1000 formula samples, 10000 points, " << disagreements << " disagreements";
}

void criterion3(Outcome& o) {
    Gen g(3);
    std::vector<Module> originals;
    std::vector<std::string> names;
    for (auto t : kAllModuleTypes) {
        for (int n = 0; n < 20; ++n) {
            Properties p = modcad::testing::random_props(t, g);
            identity_placement(p);
            originals.push_back(create_module(t, p));
            names.push_back(std::string(to_string(t)) + "-" + std::to_string(n));
        }
    }
    const std::string lib = save_prototypes(originals, names);
    o.require(!json_has_key(parse_json(lib), "geometry"), "library contains geometry records");
    const auto loaded = load_prototypes(lib);
    o.require(loaded.size() == originals.size(), "entry count changed");
    for (std::size_t i = 0; i < loaded.size() && i < originals.size(); ++i) {
        o.require(loaded[i].module.has_value(), "entry " + loaded[i].name + " failed: " + loaded[i].error);
        if (loaded[i].module)
            o.require(geometry_bytes(*loaded[i].module) == geometry_bytes(originals[i]), "geometry differs for " + names[i]);
    }
    o.detail << originals.size() << " prototypes over 9 types, 0 geometry records";
}

void criterion4(Outcome& o) {
    Gen g(4);
    Drawing d = Drawing::blank({{0, 0}, {1189, 841}});
    const int frame = d.add_module(ModuleType::frame, {{"format", std::string("A1")}, {"landscape", true}});
    for (int i = 0; i < 10; ++i) {
        const ModuleType t = kAllModuleTypes[static_cast<std::size_t>(g.integer(0, 7))];
        d.add_module(t, modcad::testing::random_props(t, g));
    }
    Drawing after = d;
    after.replace_module(set_properties(d.module(frame), {{"format", std::string("A0")}}));
    for (std::size_t i = 0; i < d.items.size(); ++i) {
        const auto& a = std::get<Module>(d.items[i]);
        const auto& b = std::get<Module>(after.items[i]);
        if (a.id == frame) {
            o.require(geometry_bytes(a) != geometry_bytes(b), "frame geometry unchanged");
        } else {
            o.require(io::canonical_bytes(a) == io::canonical_bytes(b), "module " + std::to_string(a.id) + " changed");
        }
    }
    const Module& f = after.module(frame);
    const Polyline expected{{{20, 5}, {1184, 5}, {1184, 836}, {20, 836}}, true};
    const auto* inner = std::get_if<Polyline>(&f.geometry[1].shape);
    o.require(inner && *inner == expected, "inner frame is not (20,5)-(1184,836)");
    o.detail << "inner frame (20,5)-(1184,836) exact, " << d.items.size() - 1 << " other modules unchanged";
}

Properties valve(const std::string& designation) {
    return {{"designation", designation}, {"name", std::string("Задвижка")}};
}

Properties posdes(const std::string& pos, const std::string& designation) {
    return {{"leader_from", Point{0, 0}},
            {"shelf_at", Point{10, 10}},
            {"position_text", pos},
            {"spec_props", Record{{"designation", designation}}}};
}

void criterion5(Outcome& o) {
    modcad::testing::TempDir dir;
    Drawing a = Drawing::blank({{0, 0}, {420, 297}});
    a.add_module(ModuleType::valve, valve("30с41нж"));
    a.add_module(ModuleType::posdes, posdes("7", "ДМ-2005"));
    a.add_module(ModuleType::valve, valve("15кч18п"));
    Drawing b = Drawing::blank({{0, 0}, {420, 297}});
    b.add_module(ModuleType::valve, valve("15кч18п"));
    b.add_module(ModuleType::posdes, posdes("7", "ТМ-510"));
    const std::string pa = dir.file("a.json"), pb = dir.file("b.json");
    write_file(pa, save_drawing(a));
    write_file(pb, save_drawing(b));

    auto tsv = [](const std::vector<SpecRow>& rows) {
        std::string out;
        for (const auto& r : rows) {
            for (int f = 0; f <= static_cast<int>(SpecField::note); ++f) out += field_text(r, static_cast<SpecField>(f)) + "\t";
            out += "\n";
        }
        return out;
    };
    const auto ab = load_drawings({pa, pb});
    const auto ba = load_drawings({pb, pa});
    const auto rows = collect_spec_rows(refs(ab), spec_module_types());
    int total = 0, repeated = 0;
    for (const auto& r : rows) {
        total += r.qty;
        if (r.fields.designation == "15кч18п") repeated = r.qty;
    }
    o.require(rows.size() == 4, "expected 4 rows, got " + std::to_string(rows.size()));
    o.require(repeated == 2, "repeated row qty is not 2");
    o.require(total == 5, "qty sum is not 5");
    o.require(tsv(rows) == tsv(collect_spec_rows(refs(ba), spec_module_types())), "file order changes output");
    const auto dups = find_duplicate_positions(refs(ab));
    o.require(dups.size() == 1 && dups[0].position == "7" && dups[0].occurrences.size() == 2 &&
                  dups[0].occurrences[0].drawing_path == pa && dups[0].occurrences[1].drawing_path == pb,
              "cross-file duplicate not reported with both paths");
    o.detail << rows.size() << " rows, qty sum " << total << ", duplicate '7' in both files";
}

void criterion6(Outcome& o) {
    o.require(to_hex(hmac_sha256(std::string(20, '\x0b'), "Hi There")) ==
                  "b0344c61d8db38535ca8afceaf0bf12b881dc200c9833da726e9376c2e32cff7",
              "RFC 4231 case 1");
    o.require(to_hex(hmac_sha256("Jefe", "what do ya want for nothing?")) ==
                  "5bdcc146bf60754e6a042426089575c75a003f089d2739839dec58b964ec3843",
              "RFC 4231 case 2");
    o.require(to_hex(hmac_sha256(std::string(131, '\xaa'), "Test Using Larger Than Block-Size Key - Hash Key First")) ==
                  "60e431591ee0b67f0d8a26aacbf5b77f8e0bc6213728c5140546040f0ee37f54",
              "RFC 4231 case 6");

    Drawing d = Drawing::blank({{0, 0}, {420, 297}});
    const int v = d.add_module(ModuleType::valve, {{"origin", Point{100, 100}}});
    d.add_element(make_element(Segment{{10, 10}, {60, 10}}));
    const Drawing s = sign_drawing(d, "Иванов", "ГИП", "pw", "2026-10-16", "09:30:00");
    const std::map<std::string, std::string> pw{{"Иванов", "pw"}};
    auto first = [&](const Drawing& x, const std::map<std::string, std::string>& p) { return verify_signatures(x, p).front(); };

    const auto fresh = first(s, pw);
    o.require(fresh.integrity == Status::valid && fresh.authenticity == Status::valid, "fresh signature not valid");

    Drawing moved = s;
    moved.replace_module(edit_module(s.module(v), MoveEdit{{0.001, 0}}));
    o.require(first(moved, pw).integrity == Status::broken, "move by 0.001 not detected");

    Drawing changed = s;
    changed.replace_module(set_properties(s.module(v), {{"mass", 1.0}}));
    o.require(first(changed, pw).integrity == Status::broken, "property change not detected");

    Drawing deleted = s;
    deleted.remove_item(1);
    o.require(first(deleted, pw).integrity == Status::broken, "element deletion not detected");

    const Drawing two = sign_drawing(s, "Петров", "Н.контр.", "pw2", "2026-10-17", "10:00:00");
    const auto both = verify_signatures(two, {{"Иванов", "pw"}, {"Петров", "pw2"}});
    o.require(both.size() == 2 && both[0].integrity == Status::valid && both[0].authenticity == Status::valid,
              "second signature invalidated the first");

    const auto wrong = first(s, {{"Иванов", "PW"}});
    o.require(wrong.integrity == Status::valid && wrong.authenticity == Status::broken, "wrong password not detected");
    o.detail << "RFC 4231 vectors, 3 tamper cases, 2 signatures, wrong password";
}

void criterion7(Outcome& o) {
    const auto t0 = Clock::now();
    Gen g(7);
    Drawing d = Drawing::blank({{0, 0}, {2000, 2000}}, 16, 16);
    std::size_t elements = 0;
    while (elements < 10000) {
        std::vector<Record> elems;
        const int n = std::min<int>(g.integer(5, 30), static_cast<int>(10000 - elements));
        for (int i = 0; i < n; ++i) elems.push_back(element_to_record(modcad::testing::random_element(g)));
        d.add_module(ModuleType::user, {{"elements", elems}, {"origin", g.point(0, 2000)}, {"angle_deg", g.real(0, 360)}});
        elements += static_cast<std::size_t>(n);
    }
    std::size_t seen = 0;
    int mismatches = 0;
    for (int v = 0; v < 100; ++v) {
        const Point a = g.point(-100, 2000);
        const Viewport vp{{a, a + Point{g.real(10, 600), g.real(10, 600)}}};
        const auto culled = visible_elements(d, vp, true);
        const auto brute = visible_elements(d, vp, false);
        if (culled != brute) ++mismatches;
        seen += brute.size();
    }
    const double s = seconds_since(t0);
    o.require(mismatches == 0, std::to_string(mismatches) + " viewports differ");
    o.require(s < 30.0, "runtime over 30 s");
    o.detail << elements << " elements in " << d.items.size() << " modules, 100 viewports, " << seen
             << " visible hits, " << s << " s";
}

void criterion8(Outcome& o) {
    Gen g(8);
    for (int n = 0; n < 500; ++n) {
        const Drawing d = modcad::testing::random_drawing(g, n % 4 == 0);
        const std::string bytes = save_drawing(d);
        o.require(canonical_bytes(load_drawing(bytes)) == canonical_bytes(d), "round trip " + std::to_string(n));
    }
    Drawing d = Drawing::blank({{0, 0}, {420, 297}});
    d.add_module(ModuleType::valve, {{"origin", Point{50, 50}}});
    Json j = parse_json(save_drawing(d));
    j["items"][0]["module"]["geometry"][0]["points"][1][0] = 51.0;
    bool rejected = false;
    try {
        load_drawing(canonical_dump(j));
    } catch (const IntegrityMismatch&) {
        rejected = true;
    }
    o.require(rejected, "corrupted geometry accepted");
    o.detail << "500 fuzzed drawings byte-equal, corrupted file rejected";
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"regeneration purity", criterion1},  {"lightning zones", criterion2},
        {"prototype round trip", criterion3}, {"frame reformat", criterion4},
        {"spec aggregation", criterion5},     {"integrity", criterion6},
        {"culling equivalence", criterion7},  {"file round trip", criterion8}};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
                  << o.detail.str() << "\n";
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
