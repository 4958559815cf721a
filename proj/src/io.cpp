#include "rsl/io.hpp"

#include <string>

#include "rsl/error.hpp"

namespace rsl::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::InvalidArgument, "malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<Point> points_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) malformed(std::string(what) + " must be a nonempty array");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

Body body_from_json(const json& j) {
  std::vector<Point> verts = points_from_json(field(j, "vertices"), "vertices");
  std::vector<Ball> balls;
  if (j.contains("balls")) {
    const auto& jb = j.at("balls");
    if (!jb.is_array()) malformed("balls must be an array");
    for (const auto& b : jb) balls.push_back(Ball{point_from_json(field(b, "center")), number(field(b, "radius"), "radius")});
  }
  return Body(std::move(verts), std::move(balls));
}

}  // namespace

json to_json(const Point& p) { return json(std::vector<double>(p.coords().begin(), p.coords().end())); }

json to_json(const Body& b) {
  json verts = json::array();
  for (const auto& v : b.vertices()) verts.push_back(to_json(v));
  json balls = json::array();
  for (const auto& ball : b.balls()) balls.push_back({{"center", to_json(ball.center)}, {"radius", ball.radius}});
  return {{"vertices", verts}, {"balls", balls}};
}

json to_json(const PointCloud& c) {
  json pts = json::array();
  for (const auto& p : c.points()) pts.push_back(to_json(p));
  return {{"points", pts}};
}

json to_json(const FiniteProbSpace& s) { return {{"weights", s.weights()}}; }

json to_json(const Kernel& k) {
  json rows = json::array();
  for (const auto& row : k.rows()) {
    json r = json::array();
    for (const auto& a : row.support()) r.push_back({{"w", a.weight}, {"x", to_json(a.value)}});
    rows.push_back(r);
  }
  return {{"rows", rows}};
}

json to_json(const IdentityReport& r) {
  json out = json::array();
  for (const auto& c : r.checks) out.push_back({{"identity", c.identity}, {"pass", c.pass}, {"max_dev", c.max_dev}});
  return out;
}

json to_json(const ExpectationResult& r) {
  json aumann = std::visit([](const auto& v) { return to_json(v); }, r.aumann);
  return {{"aumann", aumann},
          {"convexified", to_json(r.convexified)},
          {"hausdorff_gap", r.hausdorff_gap},
          {"method", method_name(r.method)},
          {"direction_count", r.direction_count}};
}

Point point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) malformed("point must be a nonempty array of numbers");
  std::vector<double> c;
  for (const auto& v : j) c.push_back(number(v, "coordinate"));
  return Point(std::move(c));
}

FiniteProbSpace space_from_json(const json& j) {
  const auto& jw = field(j, "weights");
  if (!jw.is_array() || jw.empty()) malformed("weights must be a nonempty array");
  std::vector<double> w;
  for (const auto& v : jw) w.push_back(number(v, "weight"));
  return FiniteProbSpace(std::move(w));
}

Kernel kernel_from_json(const json& j, const FiniteProbSpace& space) {
  const auto& jr = field(j, "rows");
  if (!jr.is_array()) malformed("rows must be an array");
  std::vector<DiscreteMeasure<Point>> rows;
  for (const auto& row : jr) {
    if (!row.is_array() || row.empty()) malformed("kernel row must be a nonempty array");
    std::vector<Weighted<Point>> atoms;
    for (const auto& a : row) atoms.push_back({number(field(a, "w"), "w"), point_from_json(field(a, "x"))});
    rows.emplace_back(std::move(atoms));
  }
  return Kernel(space, std::move(rows));
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) malformed("instance must be an object");
  if (j.contains("schema") && j.at("schema") != kSchema) malformed("unsupported schema");
  FiniteProbSpace space = space_from_json(j);
  const auto& jv = field(j, "values");
  if (!jv.is_array() || jv.empty()) malformed("values must be a nonempty array");
  bool clouds = true;
  for (const auto& v : jv) clouds = clouds && v.is_object() && v.contains("points");
  if (clouds) {
    std::vector<PointCloud> values;
    for (const auto& v : jv) values.emplace_back(points_from_json(v.at("points"), "points"));
    return RandomCloud(std::move(space), std::move(values));
  }
  std::vector<Body> values;
  for (const auto& v : jv) values.push_back(body_from_json(v));
  return RandomSet(std::move(space), std::move(values));
}

json instance_to_json(const RandomSet& x) {
  json values = json::array();
  for (const auto& b : x.values()) values.push_back(to_json(b));
  return {{"schema", kSchema}, {"weights", x.space().weights()}, {"values", values}};
}

json instance_to_json(const RandomCloud& x) {
  json values = json::array();
  for (const auto& c : x.values()) values.push_back(to_json(c));
  return {{"schema", kSchema}, {"weights", x.space().weights()}, {"values", values}};
}

}  // namespace rsl::io
