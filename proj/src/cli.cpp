#include "hypmid/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypmid/constructions.hpp"
#include "hypmid/render.hpp"
#include "hypmid/script.hpp"
#include "hypmid/verify.hpp"

namespace hypmid::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(std::string_view s, const std::string& what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(what + ": '" + std::string(s) + "' is not a number");
  }
  return v;
}

Point2d parse_point(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(what + " expects A,B");
  return {parse_double(std::string_view(text).substr(0, comma), what),
          parse_double(std::string_view(text).substr(comma + 1), what)};
}

Toleranced tolerance_from_env() {
  Toleranced tol;
  if (const char* env = std::getenv("HYPMID_TOL"); env && *env) {
    const double v = parse_double(env, "HYPMID_TOL");
    if (!(v > 0.0)) throw UsageError("HYPMID_TOL must be positive");
    tol.eps_incidence = v;
    tol.eps_degenerate = std::min(tol.eps_degenerate, v);
  }
  return tol;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

json point_json(const Point2d& p) { return json::array({p.x(), p.y()}); }

json object_json(const GeomObject& obj) {
  if (const auto* p = std::get_if<Point2d>(&obj)) return {{"point", point_json(*p)}};
  if (const auto* l = std::get_if<Line2d>(&obj)) {
    return {{"line", {{"normal", point_json(l->normal())}, {"offset", l->offset()}}}};
  }
  const auto& c = std::get<Circle2d>(obj);
  return {{"circle", {{"center", point_json(c.center())}, {"radius", c.radius()}}}};
}

json trace_json(const ConstructionTrace& t) {
  json steps = json::array();
  for (const auto& [label, p] : t.initial) {
    steps.push_back({{"kind", "Given"}, {"label", label}, {"inputs", json::array()}, {"object", object_json(p)}});
  }
  for (const auto& s : t.steps) {
    json j = {{"kind", std::string(to_string(s.kind))}, {"label", s.label}, {"inputs", s.inputs},
              {"object", object_json(s.object)}};
    if (s.selector) {
      json refs = json::array();
      if (!s.selector->p_label.empty()) refs.push_back(s.selector->p_label);
      if (!s.selector->q_label.empty()) refs.push_back(s.selector->q_label);
      j["selector"] = {{"keyword", std::string(selector_keyword(s.selector->selector.kind))}, {"refs", refs}};
    }
    steps.push_back(std::move(j));
  }
  return steps;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// CLI11 takes "-0.3,2" for an option name; glue such values to their flag.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> point_flags = {"--x", "--y", "--bind"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_point = std::find(point_flags.begin(), point_flags.end(), args[i]) != point_flags.end();
    if (takes_point && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) || args[i + 1][1] == '.')) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

struct PairFlags {
  std::string model;
  std::string x;
  std::string y;
  std::string method = "auto";
};

MidpointResult compute(const PairFlags& f, const Toleranced& tol) {
  Model model;
  MethodId method;
  try {
    model = parse_model(f.model);
    method = parse_method(f.method);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Point2d x = parse_point(f.x, "--x");
  const Point2d y = parse_point(f.y, "--y");
  return midpoint(model, x, y, method, tol);
}

std::optional<Model> model_of(const script::Program& p) {
  std::optional<Model> found;
  std::function<void(const script::Expr&)> walk = [&](const script::Expr& e) {
    if (found) return;
    if (e.kind == script::Expr::Kind::Name && (e.name == "h2" || e.name == "b2")) found = parse_model(e.name);
    for (const auto& a : e.args) walk(a);
  };
  for (const auto& s : p.statements) {
    if (s.expr) walk(*s.expr);
    for (const auto& a : s.args) walk(a);
  }
  return found;
}

script::Bindings parse_bindings(const std::vector<std::string>& binds) {
  script::Bindings out;
  for (const auto& b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--bind expects NAME=A,B");
    out[b.substr(0, eq)] = parse_point(b.substr(eq + 1), "--bind " + b.substr(0, eq));
  }
  return out;
}

std::string where(const std::string& file, script::SourceLoc loc) {
  return file + ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

int cmd_midpoint(const PairFlags& f, bool plain, std::ostream& out) {
  const Toleranced tol = tolerance_from_env();
  const MidpointResult r = compute(f, tol);
  if (plain) {
    out << "z " << fmt(r.z.x()) << "," << fmt(r.z.y()) << "\n";
    out << "method " << to_string(r.trace.method) << "\n";
    out << "residual_rho " << fmt(r.residual_equal_distance) << "\n";
    out << "residual_carrier " << fmt(r.residual_on_geodesic) << "\n";
    return kExitOk;
  }
  const json j = {{"model", std::string(to_string(r.trace.model))},
                  {"x", point_json(parse_point(f.x, "--x"))},
                  {"y", point_json(parse_point(f.y, "--y"))},
                  {"method", std::string(to_string(r.trace.method))},
                  {"z", point_json(r.z)},
                  {"residual_rho", r.residual_equal_distance},
                  {"residual_carrier", r.residual_on_geodesic},
                  {"trace", trace_json(r.trace)}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const SweepConfig& cfg, std::ostream& out) {
  const SweepReport report = run_sweep(cfg);
  out << report.to_text();
  return report.all_pass() ? kExitOk : kExitFailure;
}

int cmd_script_run(const std::string& file, const std::vector<std::string>& binds, std::ostream& out,
                   std::ostream& err) {
  const Toleranced tol = tolerance_from_env();
  const script::Bindings inputs = parse_bindings(binds);
  const script::Program program = script::parse(read_file(file));
  script::EvaluationResult r;
  try {
    r = script::evaluate(program, tol, inputs);
  } catch (const script::RuntimeGeometryError& e) {
    err << file << ":" << e.what() << "\n";
    return kExitFailure;
  }
  for (const auto& [name, v] : r.outputs) {
    out << name << " = ";
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, Point2d>) {
            out << "(" << fmt(o.x()) << ", " << fmt(o.y()) << ")";
          } else if constexpr (std::is_same_v<T, Line2d>) {
            out << "line normal (" << fmt(o.normal().x()) << ", " << fmt(o.normal().y()) << ") offset "
                << fmt(o.offset());
          } else {
            out << "circle center (" << fmt(o.center().x()) << ", " << fmt(o.center().y()) << ") radius "
                << fmt(o.radius());
          }
        },
        v);
    out << "\n";
  }
  int failed = 0;
  for (const auto& a : r.assertions) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "residual %.3e tol %.3g", a.residual, a.tolerance);
    out << (a.passed ? "PASS " : "FAIL ") << where(file, a.loc) << "  " << a.text << "  " << buf << "\n";
    if (!a.passed) ++failed;
  }
  out << r.assertions.size() - failed << "/" << r.assertions.size() << " assertions pass\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_script_fmt(const std::string& file, bool check, bool write, std::ostream& out, std::ostream& err) {
  const std::string source = read_file(file);
  const std::string formatted = script::format(script::parse(source));
  if (check) {
    if (formatted != source) {
      err << file << " is not formatted\n";
      return kExitFailure;
    }
    return kExitOk;
  }
  if (write) {
    if (formatted != source) write_file(file, formatted);
    return kExitOk;
  }
  out << formatted;
  return kExitOk;
}

int cmd_script_emit(const PairFlags& f, const std::string& out_file, std::ostream& out) {
  const MidpointResult r = compute(f, tolerance_from_env());
  const std::string text = script::format(script::emit(r.trace));
  if (out_file.empty()) {
    out << text;
  } else {
    write_file(out_file, text);
  }
  return kExitOk;
}

struct RenderFlags {
  PairFlags pair;
  std::string script;
  std::vector<std::string> binds;
  std::string out;
  int width = 800;
  int height = 800;
  bool no_labels = false;
};

int cmd_render(const RenderFlags& f, std::ostream& err) {
  RenderSpec spec;
  spec.width = f.width;
  spec.height = f.height;
  spec.labels = !f.no_labels;
  if (!spec.valid()) throw UsageError("canvas width and height must be positive");
  const Toleranced tol = tolerance_from_env();
  Figure fig;
  if (!f.script.empty()) {
    if (!f.pair.model.empty() || !f.pair.x.empty() || !f.pair.y.empty()) {
      throw UsageError("use either --script or --model/--x/--y");
    }
    const script::Program program = script::parse(read_file(f.script));
    script::EvaluationResult r;
    try {
      r = script::evaluate(program, tol, parse_bindings(f.binds));
    } catch (const script::RuntimeGeometryError& e) {
      err << f.script << ":" << e.what() << "\n";
      return kExitFailure;
    }
    fig.model = model_of(program).value_or(Model::Disk);
    std::vector<Point2d> inputs;
    for (const auto& s : program.statements) {
      if (s.kind == script::Statement::Kind::Input) inputs.push_back(std::get<Point2d>(*r.find(s.name)));
    }
    for (const auto& [name, v] : r.bindings) {
      fig.objects.emplace_back(name, std::visit([](const auto& o) -> GeomObject { return o; }, v));
    }
    if (inputs.size() >= 2) fig.segment = std::pair{inputs[0], inputs[1]};
    for (const auto& [name, v] : r.outputs) {
      if (const auto* p = std::get_if<Point2d>(&v)) {
        fig.result = std::pair{name, *p};
        break;
      }
    }
  } else {
    if (f.pair.model.empty() || f.pair.x.empty() || f.pair.y.empty()) {
      throw UsageError("render needs --model, --x and --y, or --script");
    }
    fig = figure_from_trace(compute(f.pair, tol).trace);
  }
  write_file(f.out, render_svg(fig, spec));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ruler-and-compass hyperbolic midpoints in the half-plane and the disk", "hypmid"};
  app.require_subcommand(1);

  PairFlags mid;
  bool plain = false;
  auto* midpoint_cmd = app.add_subcommand("midpoint", "Construct the hyperbolic midpoint of x and y");
  midpoint_cmd->add_option("--model", mid.model, "h2 or b2")->required();
  midpoint_cmd->add_option("--x", mid.x, "first point A,B")->required();
  midpoint_cmd->add_option("--y", mid.y, "second point C,D")->required();
  midpoint_cmd->add_option("--method", mid.method, "auto, case1, equal, I..VI or angles");
  auto* json_flag = midpoint_cmd->add_flag("--json", "JSON output (default)");
  midpoint_cmd->add_flag("--plain", plain, "plain text output")->excludes(json_flag);

  SweepConfig sweep;
  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Seeded sweep over every identity the constructions rely on");
  verify_cmd->add_option("--suite", suite, "h2, b2 or all");
  verify_cmd->add_option("--samples", sweep.samples, "pairs per model (positive)");
  verify_cmd->add_option("--seed", sweep.seed, "RNG seed");
  verify_cmd->add_option("--tol", sweep.tol, "claim threshold");

  auto* script_cmd = app.add_subcommand("script", "Run, format or generate .hgc construction scripts");
  script_cmd->require_subcommand(1);
  std::string script_file;
  std::vector<std::string> binds;
  auto* run_cmd = script_cmd->add_subcommand("run", "Evaluate a script and check its assertions");
  run_cmd->add_option("file", script_file, "script path")->required();
  run_cmd->add_option("--bind", binds, "NAME=A,B value for an input");
  bool check = false;
  bool write = false;
  auto* fmt_cmd = script_cmd->add_subcommand("fmt", "Print the canonical form of a script");
  fmt_cmd->add_option("file", script_file, "script path")->required();
  auto* check_flag = fmt_cmd->add_flag("--check", check, "exit 1 if the file is not canonical");
  fmt_cmd->add_flag("--write", write, "rewrite the file in place")->excludes(check_flag);
  PairFlags emit_flags;
  std::string emit_out;
  auto* emit_cmd = script_cmd->add_subcommand("emit", "Write the script of a construction");
  emit_cmd->add_option("--model", emit_flags.model, "h2 or b2")->required();
  emit_cmd->add_option("--x", emit_flags.x, "first point A,B")->required();
  emit_cmd->add_option("--y", emit_flags.y, "second point C,D")->required();
  emit_cmd->add_option("--method", emit_flags.method, "auto, case1, equal, I..VI or angles");
  emit_cmd->add_option("--out", emit_out, "output path (stdout when omitted)");

  RenderFlags rf;
  auto* render_cmd = app.add_subcommand("render", "Draw a construction as SVG 1.1");
  render_cmd->add_option("--model", rf.pair.model, "h2 or b2");
  render_cmd->add_option("--x", rf.pair.x, "first point A,B");
  render_cmd->add_option("--y", rf.pair.y, "second point C,D");
  render_cmd->add_option("--method", rf.pair.method, "construction method");
  render_cmd->add_option("--script", rf.script, "draw the objects of a script instead");
  render_cmd->add_option("--bind", rf.binds, "NAME=A,B value for a script input");
  render_cmd->add_option("--out", rf.out, "SVG path")->required();
  render_cmd->add_option("--width", rf.width, "canvas width in pixels");
  render_cmd->add_option("--height", rf.height, "canvas height in pixels");
  render_cmd->add_flag("--no-labels", rf.no_labels, "omit labels");

  std::vector<std::string> args = glue_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*midpoint_cmd) return cmd_midpoint(mid, plain, out);
    if (*verify_cmd) {
      sweep.suite = parse_suite(suite);
      if (sweep.samples <= 0) throw UsageError("--samples must be positive");
      if (!(sweep.tol > 0.0)) throw UsageError("--tol must be positive");
      return cmd_verify(sweep, out);
    }
    if (*run_cmd) return cmd_script_run(script_file, binds, out, err);
    if (*fmt_cmd) return cmd_script_fmt(script_file, check, write, out, err);
    if (*emit_cmd) return cmd_script_emit(emit_flags, emit_out, out);
    if (*render_cmd) return cmd_render(rf, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MethodInapplicable& e) {
    err << "method inapplicable: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const script::ParseError& e) {
    err << (*run_cmd || *fmt_cmd ? script_file : rf.script) << ":" << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace hypmid::cli
