#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "hypmid/constructions.hpp"
#include "hypmid/render.hpp"

using namespace hypmid;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

bool has_label(const std::string& svg, const std::string& label) {
  return svg.find(">" + label + "</text>") != std::string::npos;
}

// Set HYPMID_UPDATE_GOLDEN=1 to rewrite the snapshots after an intended change.
void check_golden(const std::string& svg, const std::string& name) {
  const fs::path path = fs::path(HYPMID_GOLDEN_DIR) / name;
  if (std::getenv("HYPMID_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << svg;
  }
  ASSERT_TRUE(fs::exists(path)) << path;
  EXPECT_EQ(svg, slurp(path)) << "snapshot " << name << " differs";
}

}  // namespace

TEST(Render, DiskMethodIGolden) {
  const MidpointResult r = midpoint(Model::Disk, {0.5, 0}, {0, 0.25}, MethodId::I);
  const std::string svg = render_svg(figure_from_trace(r.trace));
  check_golden(svg, "disk_method_I.svg");

  // Unit circle, S_a, S_w, the carrier, the result.
  EXPECT_NE(svg.find("class=\"boundary\""), std::string::npos);
  EXPECT_EQ(count(svg, "<circle cx=\"400\" cy=\"400\" r=\"363.636364\" class=\"boundary\""), 1);
  EXPECT_TRUE(has_label(svg, "S_a"));
  EXPECT_TRUE(has_label(svg, "S_w"));
  EXPECT_TRUE(has_label(svg, "z"));
  EXPECT_EQ(count(svg, "class=\"result\""), 1);
  EXPECT_EQ(count(svg, "class=\"label result\""), 1);
  EXPECT_GE(count(svg, "class=\"geodesic\""), 2);
}

TEST(Render, HalfPlaneCase1Golden) {
  const MidpointResult r = midpoint(Model::HalfPlane, {0, 1}, {0, 4}, MethodId::Case1);
  const std::string svg = render_svg(figure_from_trace(r.trace));
  check_golden(svg, "halfplane_case1.svg");
  EXPECT_EQ(count(svg, "class=\"circle\""), 3);
  EXPECT_EQ(count(svg, "<line x1=") - count(svg, "class=\"line\"") - count(svg, "class=\"geodesic\""), 1);
  EXPECT_TRUE(has_label(svg, "z"));
}

TEST(Render, HeaderDocumentsTheFlip) {
  const MidpointResult r = midpoint(Model::Disk, {0.5, 0}, {0, 0.25});
  const std::string svg = render_svg(figure_from_trace(r.trace));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("y axis is flipped"), std::string::npos);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
}

TEST(Render, DeterministicAndLabelToggle) {
  const MidpointResult r = midpoint(Model::Disk, {0.5, 0}, {0, 0.25}, MethodId::III);
  const Figure f = figure_from_trace(r.trace);
  EXPECT_EQ(render_svg(f), render_svg(f));
  RenderSpec bare;
  bare.labels = false;
  EXPECT_EQ(render_svg(f, bare).find("<text"), std::string::npos);
}

TEST(Render, NumbersUseNineSignificantDigits) {
  const MidpointResult r = midpoint(Model::Disk, {0.5, 0}, {0, 0.25}, MethodId::V);
  const std::string svg = render_svg(figure_from_trace(r.trace));
  const std::regex attr("(?:cx|cy|r|x1|y1|x2|y2)=\"(-?[0-9.e+-]+)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), attr); it != std::sregex_iterator(); ++it) {
    std::string digits = (*it)[1].str();
    digits = digits.substr(0, digits.find('e'));
    int n = 0;
    bool leading = true;
    for (char c : digits) {
      if (c < '0' || c > '9') continue;
      if (leading && c == '0') continue;
      leading = false;
      ++n;
    }
    EXPECT_LE(n, 9) << (*it)[0];
  }
}

TEST(Render, InvalidSpecsThrow) {
  const Figure f = figure_from_trace(midpoint(Model::Disk, {0.5, 0}, {0, 0.25}).trace);
  RenderSpec zero;
  zero.width = 0;
  EXPECT_THROW(render_svg(f, zero), std::invalid_argument);
  RenderSpec flat;
  flat.viewport = Viewport{0, 0, -1, 1};
  EXPECT_THROW(render_svg(f, flat), std::invalid_argument);
}

TEST(Render, HalfPlaneViewportShowsTheBoundaryAndPoints) {
  const Figure f = figure_from_trace(midpoint(Model::HalfPlane, {-2, 0.5}, {3, 2}).trace);
  const Viewport v = default_viewport(f);
  EXPECT_LT(v.ymin, 0.0);
  EXPECT_LT(v.xmin, -2.0);
  EXPECT_GT(v.xmax, 3.0);
  EXPECT_GT(v.ymax, 2.0);
}
