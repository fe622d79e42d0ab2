#include <billiards/svg.hpp>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace billiards;
namespace pt = boost::property_tree;

namespace {

pt::ptree parse(const std::string& svg)
{
    std::istringstream in(svg);
    pt::ptree tree;
    pt::read_xml(in, tree);
    return tree;
}

std::size_t count_children(const pt::ptree& tree, const std::string& tag)
{
    std::size_t n = 0;
    for (const auto& [name, child] : tree.get_child("svg")) {
        n += name == tag ? 1 : 0;
    }
    return n;
}

std::vector<std::string> polyline_points(const pt::ptree& tree)
{
    std::vector<std::string> out;
    for (const auto& [name, child] : tree.get_child("svg")) {
        if (name == "polyline") {
            out.push_back(child.get<std::string>("<xmlattr>.points"));
        }
    }
    return out;
}

} // namespace

TEST(RenderGrid, SixByFourAllPaths)
{
    const GridSpec g{6, 4};
    const std::string svg = render_grid(g, enumerate_paths(g));
    const auto tree = parse(svg);
    EXPECT_EQ(count_children(tree, "rect"), 1U);
    EXPECT_EQ(count_children(tree, "line"), 5U + 3U);
    EXPECT_EQ(count_children(tree, "polyline"), 3U);
    EXPECT_EQ(svg, render_grid(g, enumerate_paths(g)));

    std::vector<std::string> strokes;
    for (const auto& [name, child] : tree.get_child("svg")) {
        if (name == "polyline") {
            strokes.push_back(child.get<std::string>("<xmlattr>.stroke"));
        }
    }
    EXPECT_EQ(strokes, (std::vector<std::string>{"green", "blue", "red"}));
}

TEST(RenderGrid, EmptySingleCell)
{
    const auto tree = parse(render_grid(GridSpec{1, 1}, std::vector<Trajectory>{}));
    EXPECT_EQ(count_children(tree, "rect"), 1U);
    EXPECT_EQ(count_children(tree, "line"), 0U);
    EXPECT_EQ(count_children(tree, "polyline"), 0U);
}

TEST(RenderGrid, OctagonWithFlippedAxis)
{
    const GridSpec g{4, 3};
    RenderOptions opts;
    opts.cell_size = 10;
    opts.margin = 5;
    const auto traj = simulate(g, Point{{2, 2}}, DirectionMask::forward(2), 8);
    const auto points = polyline_points(parse(render_grid(g, {traj}, opts)));
    ASSERT_EQ(points.size(), 1U);
    // (2,2) (3,3) (4,2) (3,1) (2,0) (1,1) (0,2) (1,3) (2,2), y flipped: Y = 5 + (3 - y) * 10.
    EXPECT_EQ(points[0], "25,15 35,5 45,15 35,25 25,35 15,25 5,15 15,5 25,15");
}

TEST(RenderGrid, SegmentCountMatchesTrajectory)
{
    const GridSpec g{6, 4};
    const auto paths = enumerate_paths(g);
    const auto points = polyline_points(parse(render_grid(g, paths)));
    ASSERT_EQ(points.size(), paths.size());
    for (std::size_t k = 0; k < paths.size(); ++k) {
        const auto vertices = static_cast<Int>(std::count(points[k].begin(), points[k].end(), ' ')) + 1;
        EXPECT_EQ(vertices - 1, paths[k].distinct_segments);
    }
}

TEST(RenderGrid, Errors)
{
    EXPECT_THROW(render_grid(GridSpec{1, 1, 1}, std::vector<Trajectory>{}), std::invalid_argument);
    RenderOptions opts;
    opts.palette.clear();
    EXPECT_THROW(render_grid(GridSpec{1, 1}, std::vector<Trajectory>{}, opts), std::invalid_argument);
    opts = {};
    opts.cell_size = 0;
    EXPECT_THROW(render_grid(GridSpec{1, 1}, std::vector<Trajectory>{}, opts), std::invalid_argument);
}

TEST(RenderGrid, EscapesPaletteEntries)
{
    RenderOptions opts;
    opts.palette = {"a\"b"};
    const GridSpec g{2, 2};
    const auto svg = render_grid(g, enumerate_paths(g), opts);
    EXPECT_NO_THROW(parse(svg));
    EXPECT_NE(svg.find("a&quot;b"), std::string::npos);
}
