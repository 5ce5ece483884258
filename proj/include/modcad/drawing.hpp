#pragma once

// Drawing container and its file formats: drawings (.draw.json),
// parameters-only prototype libraries (.proto.json) and product catalogs
// (.cat.json). All three are canonical UTF-8 JSON with "format_version": 1.

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "modcad/canonical_json.hpp"
#include "modcad/errors.hpp"
#include "modcad/json_io.hpp"
#include "modcad/module.hpp"

namespace modcad {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kKernelVersion = "1.0.0";

using Item = std::variant<Module, Element>;

struct Drawing {
    Rect extent{{0.0, 0.0}, {420.0, 297.0}};
    ZoneGrid zone_grid = ZoneGrid::over(extent);
    int next_id = 1;
    std::vector<Item> items;

    static Drawing blank(const Rect& extent, int nx = 16, int ny = 16) {
        if (!(extent.width() > 0.0) || !(extent.height() > 0.0)) throw GeometryError("drawing extent must have area");
        Drawing d;
        d.extent = extent;
        d.zone_grid = ZoneGrid::over(extent, nx, ny);
        return d;
    }

    // Creates a module against this drawing's zone grid and appends it.
    int add_module(ModuleType type, const Properties& props) {
        return add_module(create_module(type, props, zone_grid));
    }

    int add_module(Module m) {
        m.id = next_id++;
        items.emplace_back(with_grid(std::move(m), zone_grid));
        return std::get<Module>(items.back()).id;
    }

    void add_element(Element e) {
        validate(e);
        items.emplace_back(std::move(e));
    }

    Module* find_module(int id) {
        for (auto& item : items) {
            if (auto* m = std::get_if<Module>(&item); m && m->id == id) return m;
        }
        return nullptr;
    }
    const Module* find_module(int id) const { return const_cast<Drawing*>(this)->find_module(id); }

    const Module& module(int id) const {
        if (const Module* m = find_module(id)) return *m;
        throw NotFound("no module with id " + std::to_string(id));
    }

    // Replaces the module with the same id, keeping its position in the item list.
    void replace_module(Module m) {
        Module* slot = find_module(m.id);
        if (!slot) throw NotFound("no module with id " + std::to_string(m.id));
        *slot = with_grid(std::move(m), zone_grid);
    }

    void remove_item(std::size_t index) {
        if (index >= items.size()) throw NotFound("no item at index " + std::to_string(index));
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(index));
    }

    std::vector<const Module*> modules() const {
        std::vector<const Module*> out;
        for (const auto& item : items) {
            if (const auto* m = std::get_if<Module>(&item)) out.push_back(m);
        }
        return out;
    }
};

inline void validate(const Drawing& d) {
    if (!d.extent.valid()) throw GeometryError("drawing extent is inverted");
    d.zone_grid.validate();
    std::set<int> ids;
    for (const auto& item : d.items) {
        if (const auto* m = std::get_if<Module>(&item)) {
            if (m->id <= 0 || m->id >= d.next_id)
                throw Error("module id " + std::to_string(m->id) + " is not in 1.." + std::to_string(d.next_id - 1));
            if (!ids.insert(m->id).second) throw Error("duplicate module id " + std::to_string(m->id));
            if (m->zone_mask.size() != d.zone_grid.cells()) throw Error("zone mask does not match the drawing grid");
        }
    }
}

namespace io {

inline Json to_json(const ZoneGrid& g) {
    return Json{{"origin", to_json(g.origin)}, {"cell_w", g.cell_w}, {"cell_h", g.cell_h}, {"nx", g.nx}, {"ny", g.ny}};
}

inline ZoneGrid zone_grid_from_json(const Json& j) {
    ZoneGrid g{point_from_json(field(j, "origin")), number(j, "cell_w"), number(j, "cell_h"),
               static_cast<int>(integer(j, "nx")), static_cast<int>(integer(j, "ny"))};
    try {
        g.validate();
    } catch (const GeometryError& e) {
        throw ParseError(e.what());
    }
    return g;
}

inline void check_header(const Json& j, const char* kind) {
    if (!j.is_object()) throw ParseError("top level must be an object");
    if (integer(j, "format_version") != kFormatVersion)
        throw ParseError("unsupported format_version " + std::to_string(integer(j, "format_version")));
    if (text(j, "kind") != kind) throw ParseError("expected a " + std::string(kind) + " file, got " + text(j, "kind"));
}

inline Json to_json(const Drawing& d, bool exclude_signatures) {
    Json items = Json::array();
    for (const auto& item : d.items) {
        if (const auto* m = std::get_if<Module>(&item)) {
            if (exclude_signatures && m->type == ModuleType::signature) continue;
            items.push_back(Json{{"module", to_json(*m)}});
        } else {
            items.push_back(Json{{"element", to_json(std::get<Element>(item))}});
        }
    }
    Json j{{"format_version", kFormatVersion},
           {"kind", "drawing"},
           {"extent", to_json(d.extent)},
           {"zone_grid", to_json(d.zone_grid)},
           {"items", std::move(items)}};
    // The id counter moves whenever a signature is appended, so it is not
    // part of the signed content.
    if (!exclude_signatures) j["next_id"] = d.next_id;
    return j;
}

} // namespace io

inline std::string canonical_bytes(const Drawing& d, bool exclude_signatures = false) {
    return canonical_dump(io::to_json(d, exclude_signatures));
}

inline std::string save_drawing(const Drawing& d) {
    validate(d);
    return canonical_bytes(d, false);
}

inline Drawing load_drawing(std::string_view bytes) {
    const Json j = parse_json(bytes);
    io::check_header(j, "drawing");
    Drawing d;
    d.extent = io::rect_from_json(io::field(j, "extent"));
    d.zone_grid = io::zone_grid_from_json(io::field(j, "zone_grid"));
    d.next_id = static_cast<int>(io::integer(j, "next_id"));
    const Json& items = io::field(j, "items");
    if (!items.is_array()) throw ParseError("items must be an array");
    for (const auto& item : items) {
        if (auto m = item.find("module"); m != item.end()) {
            d.items.emplace_back(io::module_from_json(*m, d.zone_grid));
        } else if (auto e = item.find("element"); e != item.end()) {
            d.items.emplace_back(io::element_from_json(*e));
        } else {
            throw ParseError("item must hold a module or an element");
        }
    }
    try {
        validate(d);
    } catch (const GeometryError& e) {
        throw ParseError(e.what());
    }
    return d;
}

// ---------------------------------------------------------------------------
// File helpers

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for '" + path + "'");
}

// ---------------------------------------------------------------------------
// Prototype libraries: parameters only, geometry regenerated on load.

struct Prototype {
    std::string name;
    ModuleType type;
    Properties props;
};

// Placement is reset so a prototype can be inserted anywhere.
inline Properties prototype_props(const Properties& p) {
    Properties out = p;
    out["origin"] = Point{};
    out["angle_deg"] = 0.0;
    out["mirrored"] = false;
    return out;
}

inline std::string save_prototypes(const std::vector<Module>& modules, const std::vector<std::string>& names) {
    if (modules.size() != names.size()) throw Error("need exactly one name per prototype");
    std::set<std::string> seen;
    Json entries = Json::array();
    for (std::size_t i = 0; i < modules.size(); ++i) {
        if (!seen.insert(names[i]).second) throw Error("duplicate prototype name '" + names[i] + "'");
        entries.push_back(Json{{"name", names[i]},
                               {"type", std::string(to_string(modules[i].type))},
                               {"props", io::to_json(prototype_props(modules[i].props))}});
    }
    return canonical_dump(Json{{"format_version", kFormatVersion}, {"kind", "prototypes"}, {"entries", entries}});
}

struct PrototypeLoad {
    std::string name;
    std::optional<Module> module;
    std::string error;  // set when module is empty
};

inline std::vector<PrototypeLoad> load_prototypes(std::string_view bytes, const ZoneGrid& grid = {}) {
    const Json j = parse_json(bytes);
    io::check_header(j, "prototypes");
    const Json& entries = io::field(j, "entries");
    if (!entries.is_array()) throw ParseError("entries must be an array");
    std::vector<PrototypeLoad> out;
    std::set<std::string> seen;
    for (const auto& e : entries) {
        PrototypeLoad r;
        try {
            r.name = io::text(e, "name");
            if (!seen.insert(r.name).second) throw Error("duplicate prototype name '" + r.name + "'");
            if (e.contains("geometry")) throw ParseError("prototype entries must not store geometry");
            const auto type = module_type_from_string(io::text(e, "type"));
            if (!type) throw SchemaViolation("type", "unknown module type '" + io::text(e, "type") + "'");
            r.module = create_module(*type, io::properties_from_json(io::field(e, "props")), grid);
        } catch (const Error& err) {
            r.error = err.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Product catalogs

struct CatalogEntry {
    std::string name;
    std::string type_mark;
    std::string manufacturer_code;
    std::string item_code;
    std::string unit;
    std::string unit_code;
    double price = 0.0;

    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

struct Catalog {
    std::map<std::string, CatalogEntry> entries;

    const CatalogEntry& at(const std::string& id) const {
        auto it = entries.find(id);
        if (it == entries.end()) throw NotFound("catalog has no entry '" + id + "'");
        return it->second;
    }
};

inline Catalog load_catalog(std::string_view bytes) {
    // nlohmann keeps the last of repeated keys, so ids are collected while parsing.
    std::string top_key;
    std::set<std::string> ids;
    std::optional<std::string> duplicate;
    Json::parser_callback_t cb = [&](int depth, Json::parse_event_t event, Json& parsed) {
        if (event == Json::parse_event_t::key) {
            if (depth == 1) top_key = parsed.get<std::string>();
            else if (depth == 2 && top_key == "entries" && !ids.insert(parsed.get<std::string>()).second && !duplicate)
                duplicate = parsed.get<std::string>();
        }
        return true;
    };
    Json j;
    try {
        j = Json::parse(bytes.begin(), bytes.end(), cb);
    } catch (const Json::parse_error&) {
        j = parse_json(bytes);  // rethrows with position
    }
    if (duplicate) throw ParseError("duplicate catalog entry id '" + *duplicate + "'");
    if (!j.is_object()) throw ParseError("top level must be an object");
    if (io::integer(j, "format_version") != kFormatVersion) throw ParseError("unsupported format_version");
    const Json& entries = io::field(j, "entries");
    if (!entries.is_object()) throw ParseError("entries must be an object");

    static const std::set<std::string> kFields{"name",      "type_mark", "manufacturer_code", "item_code",
                                               "unit",      "unit_code", "price"};
    Catalog c;
    for (auto it = entries.begin(); it != entries.end(); ++it) {
        const Json& e = it.value();
        if (!e.is_object()) throw ParseError("catalog entry '" + it.key() + "' must be an object");
        for (auto f = e.begin(); f != e.end(); ++f) {
            if (!kFields.count(f.key())) throw ParseError("catalog entry '" + it.key() + "' has unknown field '" + f.key() + "'");
        }
        auto str = [&](const char* key) -> std::string {
            auto f = e.find(key);
            if (f == e.end()) return {};
            if (!f->is_string()) throw ParseError(std::string("catalog field '") + key + "' must be text");
            return f->get<std::string>();
        };
        CatalogEntry entry{str("name"), str("type_mark"), str("manufacturer_code"), str("item_code"),
                           str("unit"), str("unit_code"), 0.0};
        if (auto f = e.find("price"); f != e.end()) {
            if (!f->is_number()) throw ParseError("catalog field 'price' must be a number");
            entry.price = f->get<double>();
        }
        c.entries.emplace(it.key(), std::move(entry));
    }
    return c;
}

inline std::string save_catalog(const Catalog& c) {
    Json entries = Json::object();
    for (const auto& [id, e] : c.entries) {
        entries[id] = Json{{"name", e.name},           {"type_mark", e.type_mark}, {"manufacturer_code", e.manufacturer_code},
                           {"item_code", e.item_code}, {"unit", e.unit},           {"unit_code", e.unit_code},
                           {"price", e.price}};
    }
    return canonical_dump(Json{{"format_version", kFormatVersion}, {"kind", "catalog"}, {"entries", entries}});
}

} // namespace modcad
