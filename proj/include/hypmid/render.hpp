#pragma once

// SVG 1.1 figures of constructions. Output is byte-deterministic: every
// coordinate is printed with 9 significant digits and objects keep their
// construction order.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypmid/trace.hpp"

namespace hypmid {

struct Viewport {
  double xmin = -1.1;
  double xmax = 1.1;
  double ymin = -1.1;
  double ymax = 1.1;

  bool valid() const { return xmax > xmin && ymax > ymin; }
};

struct RenderSpec {
  int width = 800;
  int height = 800;
  std::optional<Viewport> viewport;  // chosen from the model and the objects when empty
  bool labels = true;
  // Stroke colors per object class.
  std::string boundary_stroke = "#000000";
  std::string geodesic_stroke = "#1f5fbf";
  std::string line_stroke = "#8c8c8c";
  std::string circle_stroke = "#2f9f5f";
  std::string point_fill = "#333333";
  std::string result_fill = "#d62728";

  bool valid() const { return width > 0 && height > 0 && (!viewport || viewport->valid()); }
};

/// Everything a figure shows. `x`/`y` are the endpoints of the drawn
/// geodesic segment when both are present.
struct Figure {
  Model model = Model::Disk;
  std::vector<std::pair<std::string, GeomObject>> objects;
  std::optional<std::pair<Point2d, Point2d>> segment;
  std::optional<std::pair<std::string, Point2d>> result;
};

/// Initial points and every step; the first two initial points span the geodesic.
Figure figure_from_trace(const ConstructionTrace& trace);

/// Disk: [-1.1, 1.1]². Half-plane: a window around the points and bounded
/// circle parts, with the boundary line in view.
Viewport default_viewport(const Figure& figure);

/// Throws std::invalid_argument on an invalid spec.
std::string render_svg(const Figure& figure, const RenderSpec& spec = {});

}  // namespace hypmid
