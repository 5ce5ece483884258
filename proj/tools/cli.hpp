#pragma once

// Command-line front end. `run` is kept separate from main() so the exit
// code contract can be exercised in-process.

#include <charconv>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modcad/literal.hpp"
#include "modcad/modcad.hpp"

namespace modcad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::vector<double> parse_numbers(const std::string& text, std::size_t count, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        double v = 0.0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
        if (res.ec != std::errc{} || res.ptr != part.data() + part.size())
            throw UsageError(std::string("malformed number in ") + what + ": '" + part + "'");
        out.push_back(v);
    }
    if (out.size() != count)
        throw UsageError(std::string(what) + " needs " + std::to_string(count) + " comma-separated numbers");
    return out;
}

inline Rect parse_rect(const std::string& text, const char* what) {
    const auto v = parse_numbers(text, 4, what);
    Rect r{{v[0], v[1]}, {v[2], v[3]}};
    if (!r.valid()) throw UsageError(std::string(what) + ": min exceeds max");
    return r;
}

inline Point parse_point_arg(const std::string& text, const char* what) {
    const auto v = parse_numbers(text, 2, what);
    return {v[0], v[1]};
}

inline std::vector<std::string> split(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, sep)) {
        if (!part.empty()) out.push_back(part);
    }
    return out;
}

inline std::set<ModuleType> parse_types(const std::string& text) {
    std::set<ModuleType> out;
    for (const auto& name : split(text)) {
        const auto t = module_type_from_string(name);
        if (!t) throw UsageError("unknown module type '" + name + "'");
        out.insert(*t);
    }
    return out;
}

inline ModuleType parse_type(const std::string& name) {
    const auto t = module_type_from_string(name);
    if (!t) throw UsageError("unknown module type '" + name + "'");
    return *t;
}

inline Drawing load(const std::string& path) { return load_drawing(read_file(path)); }
inline void store(const std::string& path, const Drawing& d) { write_file(path, save_drawing(d)); }

inline std::string format_rect(const Rect& r) {
    return format_number(r.min.x) + "," + format_number(r.min.y) + "," + format_number(r.max.x) + "," +
           format_number(r.max.y);
}

// Loads spec sources; reports unreadable files and returns whether all loaded.
inline bool load_sources(const std::vector<std::string>& paths, std::vector<LoadedDrawing>& loaded, std::ostream& err) {
    loaded = load_drawings(paths);
    bool ok = true;
    for (const auto& l : loaded) {
        if (!l.drawing) {
            err << "error: " << l.path << ": " << l.error << "\n";
            ok = false;
        }
    }
    return ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parametric drawing-module kernel"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("modcad ") + kKernelVersion + " (format_version " +
                                          std::to_string(kFormatVersion) + ")");

    std::string file, type_name, out_path, catalog_path, entry_id, types_text, columns_text, ids_text, names_text;
    std::string extent_text, format_name, viewport_text, move_text, about_text, mirror_text, target_text, into_path;
    std::string person, position, password, date, time_text;
    std::vector<std::string> prop_args, files, sources, password_args;
    int module_id = 0, axis_index = -1;
    double hx = 0.0, rotate_deg = 0.0, scale_factor = 1.0;
    bool landscape = false, cull = false;

    auto* cmd_new = app.add_subcommand("new", "Create an empty drawing");
    cmd_new->add_option("file", file)->required();
    cmd_new->add_option("--extent", extent_text, "x0,y0,x1,y1 in mm");
    cmd_new->add_option("--format", format_name, "Sheet format A4..A0 (sets the extent)");
    cmd_new->add_flag("--landscape", landscape);

    auto* cmd_add = app.add_subcommand("add", "Add a module");
    cmd_add->add_option("file", file)->required();
    cmd_add->add_option("type", type_name)->required();
    cmd_add->add_option("--props", prop_args, "key=value ...");

    auto* cmd_set = app.add_subcommand("set", "Change module properties and regenerate");
    cmd_set->add_option("file", file)->required();
    cmd_set->add_option("id", module_id)->required();
    cmd_set->add_option("--props", prop_args, "key=value ...")->required();

    auto* cmd_edit = app.add_subcommand("edit", "Move, rotate, mirror, stretch or attach a module");
    cmd_edit->add_option("file", file)->required();
    cmd_edit->add_option("id", module_id)->required();
    auto* opt_move = cmd_edit->add_option("--move", move_text, "dx,dy");
    auto* opt_rotate = cmd_edit->add_option("--rotate", rotate_deg, "degrees CCW");
    auto* opt_mirror = cmd_edit->add_option("--mirror", mirror_text, "x,y,axis_deg");
    auto* opt_scale = cmd_edit->add_option("--scale", scale_factor, "uniform factor (user modules)");
    auto* opt_attach = cmd_edit->add_option("--attach", axis_index, "attach axis index");
    cmd_edit->add_option("--about", about_text, "x,y pivot for --rotate/--scale");
    cmd_edit->add_option("--target", target_text, "x,y,angle for --attach");
    opt_move->excludes(opt_rotate, opt_mirror, opt_scale, opt_attach);
    opt_rotate->excludes(opt_mirror, opt_scale, opt_attach);
    opt_mirror->excludes(opt_scale, opt_attach);
    opt_scale->excludes(opt_attach);

    auto* cmd_list = app.add_subcommand("list", "List drawing items");
    cmd_list->add_option("file", file)->required();

    auto* cmd_render = app.add_subcommand("render", "Render to SVG");
    cmd_render->add_option("file", file)->required();
    cmd_render->add_option("--viewport", viewport_text, "x0,y0,x1,y1 in mm (default: drawing extent)");
    cmd_render->add_flag("--cull", cull, "Skip modules outside the viewport by zone mask");
    cmd_render->add_option("--out", out_path, "Output file (default: stdout)");

    auto* cmd_spec = app.add_subcommand("spec", "Collect specification rows from drawings");
    cmd_spec->add_option("files", files)->required();
    cmd_spec->add_option("--types", types_text, "valve,instrument,posdes");

    auto* cmd_fill = app.add_subcommand("fill-table", "Fill a table module from collected rows");
    cmd_fill->add_option("file", file)->required();
    cmd_fill->add_option("id", module_id)->required();
    cmd_fill->add_option("--from", sources, "Drawings to collect from (default: the file itself)");
    cmd_fill->add_option("--columns", columns_text, "field=column,... e.g. position=0,name=1,qty=2")->required();
    cmd_fill->add_option("--types", types_text, "valve,instrument,posdes");

    auto* cmd_dup = app.add_subcommand("check-dup", "Report duplicated position designations");
    cmd_dup->add_option("files", files)->required();

    auto* cmd_psave = app.add_subcommand("proto-save", "Save modules as a parameters-only prototype library");
    cmd_psave->add_option("file", file)->required();
    cmd_psave->add_option("library", out_path)->required();
    cmd_psave->add_option("--ids", ids_text, "module ids")->required();
    cmd_psave->add_option("--names", names_text, "prototype names")->required();

    auto* cmd_pload = app.add_subcommand("proto-load", "Load a prototype library");
    cmd_pload->add_option("library", file)->required();
    cmd_pload->add_option("--into", into_path, "Drawing to insert the regenerated modules into");

    auto* cmd_cat = app.add_subcommand("catalog-apply", "Copy catalog data onto a module");
    cmd_cat->add_option("file", file)->required();
    cmd_cat->add_option("id", module_id)->required();
    cmd_cat->add_option("catalog", catalog_path)->required();
    cmd_cat->add_option("entry", entry_id)->required();

    auto* cmd_light = app.add_subcommand("lightning-section", "Zone section radii at a height, one rod per line");
    cmd_light->add_option("file", file)->required();
    cmd_light->add_option("id", module_id)->required();
    cmd_light->add_option("--hx", hx, "section height in m")->required();

    auto* cmd_sign = app.add_subcommand("sign", "Sign a drawing");
    cmd_sign->add_option("file", file)->required();
    cmd_sign->add_option("--person", person)->required();
    cmd_sign->add_option("--position", position)->required();
    cmd_sign->add_option("--password", password)->required();
    cmd_sign->add_option("--date", date, "YYYY-MM-DD")->required();
    cmd_sign->add_option("--time", time_text, "HH:MM:SS")->required();

    auto* cmd_verify = app.add_subcommand("verify", "Verify drawing signatures");
    cmd_verify->add_option("file", file)->required();
    cmd_verify->add_option("--password", password_args, "person=password (checks authenticity)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_new->parsed()) {
            Rect extent{{0.0, 0.0}, {420.0, 297.0}};
            if (!format_name.empty()) {
                const auto fmt = sheet_format_from_string(format_name);
                if (!fmt) throw UsageError("unknown format '" + format_name + "'");
                extent.max = sheet_extent({*fmt, landscape, 1});
            }
            if (!extent_text.empty()) extent = parse_rect(extent_text, "--extent");
            store(file, Drawing::blank(extent));
            return kExitOk;
        }
        if (cmd_add->parsed()) {
            const ModuleType type = parse_type(type_name);
            Drawing d = load(file);
            const int id = d.add_module(type, parse_assignments(type, prop_args));
            store(file, d);
            out << id << "\n";
            return kExitOk;
        }
        if (cmd_set->parsed()) {
            Drawing d = load(file);
            const Module& m = d.module(module_id);
            d.replace_module(set_properties(m, parse_assignments(m.type, prop_args)));
            store(file, d);
            return kExitOk;
        }
        if (cmd_edit->parsed()) {
            Drawing d = load(file);
            const Module& m = d.module(module_id);
            const Point about = about_text.empty() ? Point{} : parse_point_arg(about_text, "--about");
            Module edited;
            if (!move_text.empty()) {
                edited = edit_module(m, MoveEdit{parse_point_arg(move_text, "--move")});
            } else if (opt_rotate->count()) {
                edited = edit_module(m, RotateEdit{rotate_deg, about});
            } else if (!mirror_text.empty()) {
                const auto v = parse_numbers(mirror_text, 3, "--mirror");
                edited = edit_module(m, MirrorEdit{{v[0], v[1]}, v[2]});
            } else if (opt_scale->count()) {
                edited = edit_module(m, ScaleEdit{scale_factor, about});
            } else if (opt_attach->count()) {
                if (target_text.empty()) throw UsageError("--attach needs --target x,y,angle");
                if (axis_index < 0) throw UsageError("--attach index must be >= 0");
                const auto v = parse_numbers(target_text, 3, "--target");
                edited = align_by_attach(m, static_cast<std::size_t>(axis_index), Axis{{v[0], v[1]}, v[2]});
            } else {
                throw UsageError("edit needs one of --move, --rotate, --mirror, --scale, --attach");
            }
            d.replace_module(std::move(edited));
            store(file, d);
            return kExitOk;
        }
        if (cmd_list->parsed()) {
            const Drawing d = load(file);
            out << "extent " << format_rect(d.extent) << "\n";
            for (std::size_t i = 0; i < d.items.size(); ++i) {
                if (const auto* m = std::get_if<Module>(&d.items[i])) {
                    out << "module " << m->id << " " << to_string(m->type) << " layer " << m->layer << " elements "
                        << m->geometry.size() << " bbox " << format_rect(m->bbox) << "\n";
                } else {
                    out << "element " << i << " bbox " << format_rect(element_bbox(std::get<Element>(d.items[i])))
                        << "\n";
                }
            }
            return kExitOk;
        }
        if (cmd_render->parsed()) {
            const Drawing d = load(file);
            const Viewport v{viewport_text.empty() ? d.extent : parse_rect(viewport_text, "--viewport")};
            const std::string svg = render_svg(d, v, cull);
            if (out_path.empty()) out << svg;
            else write_file(out_path, svg);
            return kExitOk;
        }
        if (cmd_spec->parsed()) {
            const auto types = types_text.empty() ? spec_module_types() : parse_types(types_text);
            std::vector<LoadedDrawing> loaded;
            const bool ok = load_sources(files, loaded, err);
            out << "position\tdesignation\tname\ttype_mark\tunit\tqty\tmass\tprice\tnote\n";
            for (const auto& row : collect_spec_rows(refs(loaded), types)) {
                const auto& f = row.fields;
                out << f.position << "\t" << f.designation << "\t" << f.name << "\t" << f.type_mark << "\t" << f.unit
                    << "\t" << row.qty << "\t" << format_number(f.mass) << "\t" << format_number(f.price) << "\t"
                    << f.note << "\n";
            }
            return ok ? kExitOk : kExitDomain;
        }
        if (cmd_fill->parsed()) {
            const auto types = types_text.empty() ? spec_module_types() : parse_types(types_text);
            ColumnMap columns;
            for (const auto& pair : split(columns_text)) {
                const auto eq = pair.find('=');
                if (eq == std::string::npos) throw UsageError("--columns expects field=index pairs");
                const auto field = spec_field_from_string(pair.substr(0, eq));
                if (!field) throw UsageError("unknown spec field '" + pair.substr(0, eq) + "'");
                columns[*field] = static_cast<std::size_t>(parse_numbers(pair.substr(eq + 1), 1, "--columns")[0]);
            }
            Drawing d = load(file);
            std::vector<LoadedDrawing> loaded;
            bool ok = true;
            std::vector<DrawingRef> from;
            if (sources.empty()) {
                from.push_back({file, &d});
            } else {
                ok = load_sources(sources, loaded, err);
                from = refs(loaded);
            }
            const auto rows = collect_spec_rows(from, types);
            d = fill_table_module(d, module_id, rows, columns);
            store(file, d);
            out << rows.size() << " rows\n";
            return ok ? kExitOk : kExitDomain;
        }
        if (cmd_dup->parsed()) {
            std::vector<LoadedDrawing> loaded;
            const bool ok = load_sources(files, loaded, err);
            const auto report = find_duplicate_positions(refs(loaded));
            if (report.empty()) out << "no duplicate positions\n";
            for (const auto& dup : report) {
                out << "duplicate position '" << dup.position << "':";
                for (const auto& o : dup.occurrences) out << " " << o.drawing_path << "#" << o.module_id;
                out << "\n";
            }
            return ok ? kExitOk : kExitDomain;
        }
        if (cmd_psave->parsed()) {
            const Drawing d = load(file);
            std::vector<Module> modules;
            for (const auto& id : split(ids_text)) {
                modules.push_back(d.module(static_cast<int>(parse_numbers(id, 1, "--ids")[0])));
            }
            write_file(out_path, save_prototypes(modules, split(names_text)));
            return kExitOk;
        }
        if (cmd_pload->parsed()) {
            std::optional<Drawing> target;
            if (!into_path.empty()) target = load(into_path);
            const auto entries = load_prototypes(read_file(file), target ? target->zone_grid : ZoneGrid{});
            bool ok = true;
            for (const auto& e : entries) {
                if (!e.module) {
                    err << "error: prototype '" << e.name << "': " << e.error << "\n";
                    ok = false;
                    continue;
                }
                out << e.name << " " << to_string(e.module->type) << " elements " << e.module->geometry.size();
                if (target) out << " id " << target->add_module(*e.module);
                out << "\n";
            }
            if (target) store(into_path, *target);
            return ok ? kExitOk : kExitDomain;
        }
        if (cmd_cat->parsed()) {
            Drawing d = load(file);
            const Catalog c = load_catalog(read_file(catalog_path));
            d.replace_module(apply_catalog_entry(d.module(module_id), c, entry_id));
            store(file, d);
            return kExitOk;
        }
        if (cmd_light->parsed()) {
            const Drawing d = load(file);
            const Module& m = d.module(module_id);
            if (m.type != ModuleType::lightning) throw Error("module " + std::to_string(module_id) + " is not lightning");
            const auto params = lightning::params_from_props(m.props);
            for (const auto& rod : params.rods) {
                if (lightning::reaches(rod.h, hx, params.zone_class))
                    out << format_number(lightning::single_rod_radius(rod.h, hx, params.zone_class)) << "\n";
                else
                    out << "none\n";
            }
            return kExitOk;
        }
        if (cmd_sign->parsed()) {
            const Drawing d = load(file);
            store(file, sign_drawing(d, person, position, password, date, time_text));
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            std::map<std::string, std::string> passwords;
            for (const auto& arg : password_args) {
                const auto eq = arg.find('=');
                if (eq == std::string::npos) throw UsageError("--password expects person=password");
                passwords[arg.substr(0, eq)] = arg.substr(eq + 1);
            }
            const auto checks = verify_signatures(load(file), passwords);
            if (checks.empty()) {
                err << "no signatures in " << file << "\n";
                return kExitDomain;
            }
            bool ok = true;
            for (const auto& c : checks) {
                out << "signature " << c.module_id << " (" << c.person << "): integrity: " << to_string(c.integrity)
                    << ", authenticity: " << to_string(c.authenticity) << "\n";
                if (c.integrity != Status::valid || c.authenticity == Status::broken) ok = false;
            }
            return ok ? kExitOk : kExitDomain;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

} // namespace modcad::cli
