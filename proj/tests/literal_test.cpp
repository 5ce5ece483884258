#include <gtest/gtest.h>

#include "support.hpp"

using namespace modcad;

namespace {

template <class T>
const T& as(const PropertyValue& v) {
    return std::get<T>(v.value);
}

} // namespace

TEST(Literal, Scalars) {
    EXPECT_EQ(as<double>(parse_literal("12.5", ValueKind::real)), 12.5);
    EXPECT_EQ(as<std::int64_t>(parse_literal("3", ValueKind::integer)), 3);
    EXPECT_EQ(as<bool>(parse_literal("true", ValueKind::boolean)), true);
    EXPECT_EQ(as<std::string>(parse_literal("Кран шаровой", ValueKind::text)), "Кран шаровой");
    EXPECT_EQ(as<std::string>(parse_literal("\"a \\\"b\\\"\"", ValueKind::text)), "a \"b\"");
    EXPECT_EQ(as<std::string>(parse_literal("\"\"", ValueKind::text)), "");
}

TEST(Literal, PointsAndAxes) {
    EXPECT_EQ(as<Point>(parse_literal("(1.5, -2)", ValueKind::point)), (Point{1.5, -2}));
    EXPECT_EQ(as<std::vector<Point>>(parse_literal("[(0,0),(100,0)]", ValueKind::point_list)),
              (std::vector<Point>{{0, 0}, {100, 0}}));
    const auto axes = as<std::vector<Axis>>(parse_literal("[(0,0)@90,(4,0)@0]", ValueKind::axis_list));
    ASSERT_EQ(axes.size(), 2u);
    EXPECT_EQ(axes[0].angle_deg, 90.0);
    EXPECT_EQ(axes[1].origin, (Point{4, 0}));
}

TEST(Literal, Records) {
    const auto r = as<Record>(parse_literal("{width=20,header=\"Поз.\",on=true}", ValueKind::record));
    EXPECT_EQ(props::get<std::string>(r, "header"), "Поз.");
    EXPECT_EQ(props::record_real(r, "width", 0), 20.0);
    const auto rods = as<std::vector<Record>>(parse_literal("[{x=0,y=0,h=10},{x=5,y=1,h=12.5}]", ValueKind::record_list));
    ASSERT_EQ(rods.size(), 2u);
    EXPECT_EQ(props::record_real(rods[1], "h", 0), 12.5);
    EXPECT_TRUE(as<std::vector<Record>>(parse_literal("[]", ValueKind::record_list)).empty());
}

TEST(Literal, Errors) {
    EXPECT_THROW(parse_literal("(1,2", ValueKind::point), ParseError);
    EXPECT_THROW(parse_literal("abc", ValueKind::real), ParseError);
    EXPECT_THROW(parse_literal("1.5", ValueKind::integer), ParseError);
    EXPECT_THROW(parse_literal("yes", ValueKind::boolean), ParseError);
    EXPECT_THROW(parse_literal("(1,2) x", ValueKind::point), ParseError);
}

TEST(Assignments, AgainstSchema) {
    const Properties p = parse_assignments(ModuleType::valve, {"designation=15кч18п", "mass=2.5", "origin=(10,20)"});
    EXPECT_EQ(props::get<std::string>(p, "designation"), "15кч18п");
    EXPECT_EQ(props::get<Point>(p, "origin"), (Point{10, 20}));
    EXPECT_THROW(parse_assignments(ModuleType::valve, {"colour=red"}), SchemaViolation);
    EXPECT_THROW(parse_assignments(ModuleType::valve, {"mass"}), ParseError);
    EXPECT_THROW(parse_assignments(ModuleType::valve, {"=1"}), ParseError);
}

TEST(Assignments, CreatesWorkingModules) {
    const Properties p = parse_assignments(
        ModuleType::lightning, {"rods=[{x=0,y=0,h=10}]", "section_heights=[{hx=5}]", "zone_class=B"});
    const Module m = create_module(ModuleType::lightning, p);
    EXPECT_NEAR(std::get<Circle>(m.geometry[2].shape).radius, 1.5 * 10 * (1 - 5 / 9.2), 1e-9);
}
