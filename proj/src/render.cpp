#include "hypmid/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hypmid {

Figure figure_from_trace(const ConstructionTrace& trace) {
  Figure f;
  f.model = trace.model;
  for (const auto& [label, p] : trace.initial) f.objects.emplace_back(label, p);
  for (const auto& s : trace.steps) f.objects.emplace_back(s.label, s.object);
  if (trace.initial.size() >= 2) f.segment = std::pair{trace.initial[0].second, trace.initial[1].second};
  f.result = std::pair{trace.result_label, trace.result};
  return f;
}

Viewport default_viewport(const Figure& figure) {
  if (figure.model == Model::Disk) return {};
  std::vector<Point2d> pts;
  for (const auto& [label, obj] : figure.objects) {
    if (const auto* p = std::get_if<Point2d>(&obj)) pts.push_back(*p);
  }
  if (figure.segment) {
    pts.push_back(figure.segment->first);
    pts.push_back(figure.segment->second);
  }
  if (figure.result) pts.push_back(figure.result->second);
  if (pts.empty()) return {-2.0, 2.0, -0.5, 3.5};
  double xmin = pts[0].x(), xmax = xmin, ymin = 0.0, ymax = pts[0].y();
  for (const auto& p : pts) {
    xmin = std::min(xmin, p.x());
    xmax = std::max(xmax, p.x());
    ymin = std::min(ymin, p.y());
    ymax = std::max(ymax, p.y());
  }
  // Circles comparable in size to the point cloud are shown whole.
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-6});
  for (const auto& [label, obj] : figure.objects) {
    if (const auto* c = std::get_if<Circle2d>(&obj); c && c->radius() <= 2.0 * span) {
      xmin = std::min(xmin, c->center().x() - c->radius());
      xmax = std::max(xmax, c->center().x() + c->radius());
      ymax = std::max(ymax, c->center().y() + c->radius());
    }
  }
  const double pad = 0.1 * std::max(xmax - xmin, ymax - ymin);
  return {xmin - pad, xmax + pad, ymin - pad, ymax + pad};
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  Canvas(const Viewport& v, int width, int height) : v_(v), w_(width), h_(height) {
    scale_ = std::min(width / (v.xmax - v.xmin), height / (v.ymax - v.ymin));
    cx_ = (v.xmin + v.xmax) / 2.0;
    cy_ = (v.ymin + v.ymax) / 2.0;
  }

  double px(double x) const { return w_ / 2.0 + scale_ * (x - cx_); }
  double py(double y) const { return h_ / 2.0 - scale_ * (y - cy_); }
  double len(double d) const { return scale_ * d; }
  Point2d center() const { return {cx_, cy_}; }
  double diagonal() const { return std::hypot(v_.xmax - v_.xmin, v_.ymax - v_.ymin); }

  std::string circle(const Circle2d& c, const std::string& attrs) const {
    return "  <circle cx=\"" + num(px(c.center().x())) + "\" cy=\"" + num(py(c.center().y())) + "\" r=\"" +
           num(len(c.radius())) + "\" " + attrs + "/>\n";
  }

  std::string dot(const Point2d& p, double radius, const std::string& attrs) const {
    return "  <circle cx=\"" + num(px(p.x())) + "\" cy=\"" + num(py(p.y())) + "\" r=\"" + num(radius) + "\" " +
           attrs + "/>\n";
  }

  std::string line(const Line2d& l, const std::string& attrs) const {
    const Point2d foot = center() - l.signed_distance(center()) * l.normal();
    const Point2d a = foot - 2.0 * diagonal() * l.direction();
    const Point2d b = foot + 2.0 * diagonal() * l.direction();
    return "  <line x1=\"" + num(px(a.x())) + "\" y1=\"" + num(py(a.y())) + "\" x2=\"" + num(px(b.x())) +
           "\" y2=\"" + num(py(b.y())) + "\" " + attrs + "/>\n";
  }

  /// Minor arc of `c` from p to q.
  std::string arc(const Circle2d& c, const Point2d& p, const Point2d& q, const std::string& attrs) const {
    const double ux = px(p.x()) - px(c.center().x()), uy = py(p.y()) - py(c.center().y());
    const double vx = px(q.x()) - px(c.center().x()), vy = py(q.y()) - py(c.center().y());
    const int sweep = ux * vy - uy * vx > 0.0 ? 1 : 0;
    const std::string r = num(len(c.radius()));
    return "  <path d=\"M " + num(px(p.x())) + " " + num(py(p.y())) + " A " + r + " " + r + " 0 0 " +
           std::to_string(sweep) + " " + num(px(q.x())) + " " + num(py(q.y())) + "\" " + attrs + "/>\n";
  }

  std::string segment(const Point2d& p, const Point2d& q, const std::string& attrs) const {
    return "  <line x1=\"" + num(px(p.x())) + "\" y1=\"" + num(py(p.y())) + "\" x2=\"" + num(px(q.x())) +
           "\" y2=\"" + num(py(q.y())) + "\" " + attrs + "/>\n";
  }

  std::string label(const Point2d& at, const std::string& text, const std::string& cls) const {
    return "  <text class=\"" + cls + "\" x=\"" + num(px(at.x()) + 5.0) + "\" y=\"" + num(py(at.y()) - 5.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(text) + "</text>\n";
  }

  /// Where a line or circle label goes: the point of the object nearest the view center.
  Point2d anchor(const GeomObject& obj) const {
    if (const auto* l = std::get_if<Line2d>(&obj)) return center() - l->signed_distance(center()) * l->normal();
    if (const auto* c = std::get_if<Circle2d>(&obj)) {
      Point2d d = center() - c->center();
      if (d.norm() < 1e-12) d = Point2d(0.0, 1.0);
      return c->center() + c->radius() * d.normalized();
    }
    return std::get<Point2d>(obj);
  }

 private:
  Viewport v_;
  int w_;
  int h_;
  double scale_;
  double cx_;
  double cy_;
};

}  // namespace

std::string render_svg(const Figure& figure, const RenderSpec& spec) {
  if (!spec.valid()) throw std::invalid_argument("canvas size must be positive and the viewport nonempty");
  const Viewport v = spec.viewport.value_or(default_viewport(figure));
  const Canvas cv(v, spec.width, spec.height);
  const std::string W = std::to_string(spec.width);
  const std::string H = std::to_string(spec.height);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<!-- hypmid construction figure, model " + std::string(to_string(figure.model)) + ".\n";
  out += "     The y axis is flipped to mathematical orientation: the model point (x1, x2)\n";
  out += "     is drawn at pixel (" + num(spec.width / 2.0) + " + s*(x1 - " + num((v.xmin + v.xmax) / 2) + "), " +
         num(spec.height / 2.0) + " - s*(x2 - " + num((v.ymin + v.ymax) / 2) + ")) with s = " +
         num(cv.len(1.0)) + ",\n";
  out += "     so x2 grows upward. Viewport [" + num(v.xmin) + ", " + num(v.xmax) + "] x [" + num(v.ymin) + ", " +
         num(v.ymax) + "]. -->\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + W + "\" height=\"" + H +
         "\" viewBox=\"0 0 " + W + " " + H + "\">\n";
  out += "<defs>\n  <clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" + W + "\" height=\"" + H +
         "\"/></clipPath>\n</defs>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + W + "\" height=\"" + H + "\" fill=\"#ffffff\"/>\n";
  out += "<g clip-path=\"url(#view)\" fill=\"none\">\n";

  const std::string boundary = "class=\"boundary\" stroke=\"" + spec.boundary_stroke + "\" stroke-width=\"2\"";
  if (figure.model == Model::Disk) {
    out += cv.circle(Circle2d::unit(), boundary);
  } else {
    out += cv.line(real_axis<double>(), boundary);
  }

  const std::string line_attrs = "class=\"line\" stroke=\"" + spec.line_stroke + "\" stroke-width=\"1\"";
  const std::string circle_attrs = "class=\"circle\" stroke=\"" + spec.circle_stroke + "\" stroke-width=\"1\"";
  for (const auto& [label, obj] : figure.objects) {
    if (const auto* l = std::get_if<Line2d>(&obj)) out += cv.line(*l, line_attrs);
    if (const auto* c = std::get_if<Circle2d>(&obj)) out += cv.circle(*c, circle_attrs);
  }

  if (figure.segment) {
    const auto& [x, y] = *figure.segment;
    try {
      const Geodesic g = geodesic_of(figure.model, x, y);
      const std::string carrier = "class=\"geodesic\" stroke=\"" + spec.geodesic_stroke +
                                  "\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"";
      const std::string seg = "class=\"geodesic\" stroke=\"" + spec.geodesic_stroke + "\" stroke-width=\"3\"";
      if (const auto* l = std::get_if<Line2d>(&g.carrier)) {
        out += cv.line(*l, carrier);
        out += cv.segment(x, y, seg);
      } else {
        const auto& c = std::get<Circle2d>(g.carrier);
        out += cv.circle(c, carrier);
        out += cv.arc(c, x, y, seg);
      }
    } catch (const GeometryError&) {
      // Coincident or out-of-domain endpoints: nothing to draw.
    }
  }

  const std::string point_attrs = "class=\"point\" fill=\"" + spec.point_fill + "\" stroke=\"none\"";
  for (const auto& [label, obj] : figure.objects) {
    if (const auto* p = std::get_if<Point2d>(&obj)) out += cv.dot(*p, 3.0, point_attrs);
  }
  if (figure.result) {
    out += cv.dot(figure.result->second, 6.0,
                  "class=\"result\" fill=\"" + spec.result_fill + "\" stroke=\"#000000\" stroke-width=\"1\"");
  }
  out += "</g>\n";

  if (spec.labels) {
    out += "<g clip-path=\"url(#view)\" fill=\"#000000\">\n";
    for (const auto& [label, obj] : figure.objects) {
      if (figure.result && label == figure.result->first) continue;
      out += cv.label(cv.anchor(obj), label, "label");
    }
    if (figure.result) out += cv.label(figure.result->second, figure.result->first, "label result");
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hypmid
