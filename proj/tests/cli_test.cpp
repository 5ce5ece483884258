#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace modcad;
using modcad::testing::TempDir;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "modcad");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, VersionAndUsage) {
    const Result v = run({"--version"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("format_version 1"), std::string::npos);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"new"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, NewAddListRender) {
    TempDir dir;
    const std::string f = dir.file("d.json");
    ASSERT_EQ(run({"new", f, "--format", "A3", "--landscape"}).code, 0);
    const Result add = run({"add", f, "valve", "--props", "origin=(100,100)", "designation=15кч18п"});
    ASSERT_EQ(add.code, 0) << add.err;
    EXPECT_EQ(add.out, "1\n");
    const Result list = run({"list", f});
    EXPECT_EQ(list.code, 0);
    EXPECT_NE(list.out.find("extent 0,0,420,297"), std::string::npos) << list.out;
    EXPECT_NE(list.out.find("module 1 valve"), std::string::npos);
    const Result svg = run({"render", f, "--cull"});
    EXPECT_EQ(svg.code, 0);
    EXPECT_EQ(svg.out, render_svg(load_drawing(read_file(f)), {{{0, 0}, {420, 297}}}, false));
}

TEST(Cli, DomainErrorsExitOne) {
    TempDir dir;
    const std::string f = dir.file("d.json");
    ASSERT_EQ(run({"new", f}).code, 0);
    EXPECT_EQ(run({"add", f, "valve", "--props", "colour=red"}).code, 1);
    EXPECT_EQ(run({"add", f, "pump"}).code, 2);
    EXPECT_EQ(run({"set", f, "7", "--props", "mass=1"}).code, 1);
    EXPECT_EQ(run({"list", dir.file("missing.json")}).code, 1);
    write_file(dir.file("bad.json"), "{");
    const Result bad = run({"list", dir.file("bad.json")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, EditCommands) {
    TempDir dir;
    const std::string f = dir.file("d.json");
    ASSERT_EQ(run({"new", f}).code, 0);
    ASSERT_EQ(run({"add", f, "valve", "--props", "origin=(10,10)"}).code, 0);
    EXPECT_EQ(run({"edit", f, "1", "--move", "5,0"}).code, 0);
    EXPECT_EQ(props::get<Point>(load_drawing(read_file(f)).module(1).props, "origin"), (Point{15, 10}));
    EXPECT_EQ(run({"edit", f, "1", "--rotate", "90", "--about", "15,10"}).code, 0);
    EXPECT_EQ(run({"edit", f, "1", "--mirror", "0,0,0"}).code, 0);
    EXPECT_EQ(run({"edit", f, "1", "--scale", "2"}).code, 1);
    EXPECT_EQ(run({"edit", f, "1"}).code, 2);
    EXPECT_EQ(run({"edit", f, "1", "--attach", "0"}).code, 2);
    EXPECT_EQ(run({"edit", f, "1", "--attach", "0", "--target", "50,50,0"}).code, 0);
}

TEST(Cli, SignAndVerify) {
    TempDir dir;
    const std::string f = dir.file("d.json");
    ASSERT_EQ(run({"new", f}).code, 0);
    ASSERT_EQ(run({"add", f, "valve"}).code, 0);
    EXPECT_EQ(run({"verify", f}).code, 1);  // nothing to verify
    ASSERT_EQ(run({"sign", f, "--person", "Иванов", "--position", "ГИП", "--password", "pw", "--date", "2026-10-16",
                   "--time", "09:30:00"})
                  .code,
              0);
    const Result ok = run({"verify", f, "--password", "Иванов=pw"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out, "signature 2 (Иванов): integrity: valid, authenticity: valid\n");
    EXPECT_EQ(run({"verify", f, "--password", "Иванов=nope"}).code, 1);
    EXPECT_EQ(run({"verify", f, "--password", "nope"}).code, 2);
    ASSERT_EQ(run({"edit", f, "1", "--move", "0.001,0"}).code, 0);
    const Result broken = run({"verify", f});
    EXPECT_EQ(broken.code, 1);
    EXPECT_NE(broken.out.find("integrity: broken"), std::string::npos);
    EXPECT_EQ(run({"sign", f, "--person", "A", "--position", "B", "--password", "pw", "--date", "today", "--time",
                   "09:30:00"})
                  .code,
              1);
}

TEST(Cli, SpecFillAndDuplicates) {
    TempDir dir;
    const std::string a = dir.file("a.json"), b = dir.file("b.json");
    for (const auto& f : {a, b}) {
        ASSERT_EQ(run({"new", f}).code, 0);
        ASSERT_EQ(run({"add", f, "posdes", "--props", "leader_from=(0,0)", "shelf_at=(10,10)", "position_text=1",
                       "spec_props={designation=\"X\"}"}).code, 0);
    }
    const Result spec = run({"spec", a, b});
    EXPECT_EQ(spec.code, 0);
    EXPECT_EQ(spec.out, "position\tdesignation\tname\ttype_mark\tunit\tqty\tmass\tprice\tnote\n1\tX\t\t\t\t2\t0\t0\t\n");
    const Result dup = run({"check-dup", a, b});
    EXPECT_EQ(dup.code, 0);
    EXPECT_EQ(dup.out, "duplicate position '1': " + a + "#1 " + b + "#1\n");

    ASSERT_EQ(run({"add", a, "table", "--props", "columns=[{width=20},{width=20}]"}).code, 0);
    const Result fill = run({"fill-table", a, "2", "--columns", "position=0,qty=1", "--from", a, b});
    EXPECT_EQ(fill.code, 0) << fill.err;
    EXPECT_EQ(fill.out, "1 rows\n");
    EXPECT_EQ(run({"fill-table", a, "2", "--columns", "colour=0"}).code, 2);

    write_file(dir.file("bad.json"), "{");
    const Result partial = run({"spec", a, dir.file("bad.json")});
    EXPECT_EQ(partial.code, 1);
    EXPECT_NE(partial.out.find("\n1\tX"), std::string::npos);
}

TEST(Cli, LightningSection) {
    TempDir dir;
    const std::string f = dir.file("d.json");
    ASSERT_EQ(run({"new", f}).code, 0);
    ASSERT_EQ(run({"add", f, "lightning", "--props", "rods=[{x=0,y=0,h=10},{x=20,y=0,h=4}]", "zone_class=B"}).code, 0);
    const Result r = run({"lightning-section", f, "1", "--hx", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, format_number(lightning::single_rod_radius(10, 5, lightning::ZoneClass::B)) + "\nnone\n");
}

TEST(Cli, PrototypesAndCatalog) {
    TempDir dir;
    const std::string f = dir.file("d.json"), lib = dir.file("lib.json"), cat = dir.file("cat.json");
    ASSERT_EQ(run({"new", f}).code, 0);
    ASSERT_EQ(run({"add", f, "valve", "--props", "origin=(50,50)"}).code, 0);
    EXPECT_EQ(run({"proto-save", f, lib, "--ids", "1", "--names", "кран"}).code, 0);
    const Result load = run({"proto-load", lib, "--into", f});
    EXPECT_EQ(load.code, 0);
    EXPECT_EQ(load.out, "кран valve elements 2 id 2\n");

    write_file(cat, R"({"format_version":1,"kind":"catalog","entries":{"k":{"name":"Кран","price":10}}})");
    EXPECT_EQ(run({"catalog-apply", f, "1", cat, "k"}).code, 0);
    EXPECT_EQ(props::get<std::string>(load_drawing(read_file(f)).module(1).props, "name"), "Кран");
    EXPECT_EQ(run({"catalog-apply", f, "1", cat, "missing"}).code, 1);
}
