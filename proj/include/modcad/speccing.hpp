#pragma once

// Specification rows aggregated from valve, instrument and position
// designation modules across drawings, duplicate position control, table
// filling and catalog-driven property assignment.

#include <algorithm>
#include <charconv>
#include <future>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "modcad/drawing.hpp"
#include "modcad/errors.hpp"
#include "modcad/module.hpp"

namespace modcad {

struct SourceRef {
    std::string drawing_path;
    int module_id = 0;

    friend auto operator<=>(const SourceRef&, const SourceRef&) = default;
};

struct SpecFields {
    std::string position;
    std::string designation;
    std::string name;
    std::string type_mark;
    std::string unit;
    double mass = 0.0;
    double price = 0.0;
    std::string note;

    friend auto operator<=>(const SpecFields&, const SpecFields&) = default;
};

struct SpecRow {
    SpecFields fields;
    int qty = 0;
    std::vector<SourceRef> sources;
};

// A drawing together with the path it was loaded from.
struct DrawingRef {
    std::string path;
    const Drawing* drawing = nullptr;
};

inline const std::set<ModuleType>& spec_module_types() {
    static const std::set<ModuleType> kTypes{ModuleType::valve, ModuleType::instrument, ModuleType::posdes};
    return kTypes;
}

namespace detail {

inline std::string text_or_empty(const Record& r, std::string_view key) {
    const PropertyValue* v = props::find(r, key);
    if (!v) return {};
    if (const auto* s = v->get_if<std::string>()) return *s;
    throw SchemaViolation(std::string(key), "specifying property must be text");
}

inline double real_or_zero(const Record& r, std::string_view key) { return props::record_real(r, key, 0.0); }

} // namespace detail

// Specifying fields of a module; absent properties read as empty text or 0.
inline std::optional<SpecFields> spec_fields(const Module& m) {
    const Properties& p = m.props;
    auto text = [&](std::string_view key) -> std::string {
        auto it = p.find(key);
        return it == p.end() ? std::string{} : props::as<std::string>(it->second, key);
    };
    auto real = [&](std::string_view key) -> double {
        auto it = p.find(key);
        return it == p.end() ? 0.0 : props::as<double>(it->second, key);
    };
    switch (m.type) {
        case ModuleType::valve:
            return SpecFields{"", text("designation"), text("name"), "", "", real("mass"), 0.0, text("note")};
        case ModuleType::instrument:
            return SpecFields{text("pos_designation"), text("designation"), text("name"), text("type_mark"),
                              text("unit"), real("mass"), real("price"), text("note")};
        case ModuleType::posdes: {
            const Record& r = props::get<Record>(p, "spec_props");
            return SpecFields{text("position_text"),
                              detail::text_or_empty(r, "designation"),
                              detail::text_or_empty(r, "name"),
                              detail::text_or_empty(r, "type_mark"),
                              detail::text_or_empty(r, "unit"),
                              detail::real_or_zero(r, "mass"),
                              detail::real_or_zero(r, "price"),
                              detail::text_or_empty(r, "note")};
        }
        default: return std::nullopt;
    }
}

// Rows with identical specifying fields merge; output sorted by
// (position, designation) and then the remaining fields.
inline std::vector<SpecRow> collect_spec_rows(const std::vector<DrawingRef>& drawings,
                                              const std::set<ModuleType>& type_filter) {
    std::map<SpecFields, std::vector<SourceRef>> groups;
    for (const auto& ref : drawings) {
        for (const Module* m : ref.drawing->modules()) {
            if (!type_filter.count(m->type) || !spec_module_types().count(m->type)) continue;
            if (auto f = spec_fields(*m)) groups[*f].push_back({ref.path, m->id});
        }
    }
    std::vector<SpecRow> rows;
    for (auto& [fields, sources] : groups) {
        std::sort(sources.begin(), sources.end());
        rows.push_back({fields, static_cast<int>(sources.size()), std::move(sources)});
    }
    // std::map order already is (position, designation, ...) by code unit.
    return rows;
}

struct LoadedDrawing {
    std::string path;
    std::optional<Drawing> drawing;
    std::string error;
};

// Loads drawing files concurrently; a file that fails keeps its error and
// the others still load. Result order follows the input order.
inline std::vector<LoadedDrawing> load_drawings(const std::vector<std::string>& paths) {
    std::vector<std::future<LoadedDrawing>> jobs;
    for (const auto& path : paths) {
        jobs.push_back(std::async(std::launch::async, [path] {
            LoadedDrawing r{path, std::nullopt, {}};
            try {
                r.drawing = load_drawing(read_file(path));
            } catch (const std::exception& e) {
                r.error = e.what();
            }
            return r;
        }));
    }
    std::vector<LoadedDrawing> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

inline std::vector<DrawingRef> refs(const std::vector<LoadedDrawing>& loaded) {
    std::vector<DrawingRef> out;
    for (const auto& l : loaded) {
        if (l.drawing) out.push_back({l.path, &*l.drawing});
    }
    return out;
}

// ---------------------------------------------------------------------------

struct DuplicatePosition {
    std::string position;
    std::vector<SourceRef> occurrences;
};

using DuplicateReport = std::vector<DuplicatePosition>;

inline DuplicateReport find_duplicate_positions(const std::vector<DrawingRef>& drawings) {
    std::map<std::string, std::vector<SourceRef>> by_position;
    for (const auto& ref : drawings) {
        for (const Module* m : ref.drawing->modules()) {
            std::string pos;
            if (m->type == ModuleType::posdes) pos = props::get<std::string>(m->props, "position_text");
            else if (m->type == ModuleType::instrument) pos = props::get<std::string>(m->props, "pos_designation");
            if (pos.empty()) continue;
            by_position[pos].push_back({ref.path, m->id});
        }
    }
    DuplicateReport report;
    for (auto& [pos, occ] : by_position) {
        if (occ.size() < 2) continue;
        std::sort(occ.begin(), occ.end());
        report.push_back({pos, std::move(occ)});
    }
    return report;
}

// ---------------------------------------------------------------------------

enum class SpecField { position, designation, name, type_mark, unit, qty, mass, price, note };

inline std::optional<SpecField> spec_field_from_string(std::string_view s) {
    static const std::map<std::string_view, SpecField> kNames{
        {"position", SpecField::position}, {"designation", SpecField::designation}, {"name", SpecField::name},
        {"type_mark", SpecField::type_mark}, {"unit", SpecField::unit},             {"qty", SpecField::qty},
        {"mass", SpecField::mass},         {"price", SpecField::price},             {"note", SpecField::note}};
    auto it = kNames.find(s);
    if (it == kNames.end()) return std::nullopt;
    return it->second;
}

// Shortest round-trip decimal.
inline std::string format_number(double v) {
    if (v == 0.0) v = 0.0;
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::string field_text(const SpecRow& row, SpecField f) {
    switch (f) {
        case SpecField::position: return row.fields.position;
        case SpecField::designation: return row.fields.designation;
        case SpecField::name: return row.fields.name;
        case SpecField::type_mark: return row.fields.type_mark;
        case SpecField::unit: return row.fields.unit;
        case SpecField::qty: return std::to_string(row.qty);
        case SpecField::mass: return format_number(row.fields.mass);
        case SpecField::price: return format_number(row.fields.price);
        case SpecField::note: return row.fields.note;
    }
    return {};
}

using ColumnMap = std::map<SpecField, std::size_t>;

inline std::size_t table_column_count(const Module& table) {
    const auto& cols = props::get<std::vector<Record>>(table.props, "columns");
    if (!cols.empty()) return cols.size();
    if (props::get<std::string>(table.props, "preset") == "kipia") return kipia_columns().size();
    return 0;
}

inline Drawing fill_table_module(const Drawing& d, int table_id, const std::vector<SpecRow>& rows,
                                 const ColumnMap& column_map) {
    const Module* table = d.find_module(table_id);
    if (!table) throw NotFound("no module with id " + std::to_string(table_id));
    if (table->type != ModuleType::table) throw NotFound("module " + std::to_string(table_id) + " is not a table");
    const std::size_t ncols = table_column_count(*table);
    for (const auto& [field, col] : column_map) {
        if (col >= ncols)
            throw Error("column index " + std::to_string(col) + " out of range (table has " + std::to_string(ncols) +
                        " columns)");
    }
    std::vector<Record> records;
    for (const auto& row : rows) {
        Record r;
        for (std::size_t c = 0; c < ncols; ++c) r[cell_key(c)] = std::string{};
        for (const auto& [field, col] : column_map) r[cell_key(col)] = field_text(row, field);
        records.push_back(std::move(r));
    }
    Drawing out = d;
    out.replace_module(set_properties(*table, {{"rows", std::move(records)}}));
    return out;
}

// ---------------------------------------------------------------------------

inline Module apply_catalog_entry(const Module& m, const Catalog& catalog, const std::string& entry_id) {
    const CatalogEntry& e = catalog.at(entry_id);
    const std::vector<std::pair<std::string, PropertyValue>> fields{
        {"name", e.name},   {"type_mark", e.type_mark}, {"manufacturer_code", e.manufacturer_code},
        {"item_code", e.item_code}, {"unit", e.unit},   {"unit_code", e.unit_code},
        {"price", e.price}};
    switch (m.type) {
        case ModuleType::valve:
        case ModuleType::instrument: {
            const PropertySchema& schema = schema_for(m.type);
            Properties updates;
            for (const auto& [key, value] : fields) {
                if (schema.contains(key)) updates[key] = value;
            }
            return set_properties(m, updates);
        }
        case ModuleType::posdes: {
            // Position designations carry their specifying data in one record.
            Record spec = props::get<Record>(m.props, "spec_props");
            for (const auto& [key, value] : fields) spec[key] = value;
            return set_properties(m, {{"spec_props", std::move(spec)}});
        }
        default:
            throw Error(std::string(to_string(m.type)) + " modules have no catalog properties");
    }
}

} // namespace modcad
