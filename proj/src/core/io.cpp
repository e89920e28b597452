#include "io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mpr {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError(path + ": " + msg);
}

const json& field(const json& obj, const std::string& name, const std::string& path) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(path, "missing field \"" + name + "\"");
  return *it;
}

MpValue read_value(const json& j, const std::string& path) {
  if (j.is_number_integer()) return MpValue(Rational(mpz_class(j.dump(), 10)));
  if (j.is_number_float()) fail(path, "write non-integers as strings, e.g. \"1/2\" or \"0.5\"");
  if (j.is_string()) {
    try {
      return parse_value(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer, a \"p/q\" string or \"-inf\"");
}

std::size_t read_size(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

MpVector read_vector(const json& j, const std::string& path, std::size_t len) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != len)
    fail(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
  MpVector v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = read_value(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

MpMatrix read_matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (j.size() != rows)
    fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  MpMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    MpVector r = read_vector(j[i], path + "[" + std::to_string(i) + "]", cols);
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
  }
  return m;
}

SetExpr read_set(const json& j, const std::string& path, std::size_t dim) {
  if (!j.is_object()) fail(path, "expected a set expression object");
  const json& op = field(j, "op", path);
  if (!op.is_string()) fail(path + ".op", "expected a string");
  const std::string name = op.get<std::string>();
  if (name == "empty") return SetExpr::empty();
  if (name == "halfspace") {
    AffineHalfSpace h;
    h.a = read_vector(field(j, "a", path), path + ".a", dim);
    h.b = read_vector(field(j, "b", path), path + ".b", dim);
    if (j.contains("c")) h.c = read_value(j["c"], path + ".c");
    if (j.contains("d")) h.d = read_value(j["d"], path + ".d");
    return SetExpr::halfspace(std::move(h));
  }
  if (name == "complement") return SetExpr::complement(read_set(field(j, "arg", path), path + ".arg", dim));
  if (name == "union" || name == "intersection") {
    const json& args = field(j, "args", path);
    if (!args.is_array()) fail(path + ".args", "expected an array");
    std::vector<SetExpr> parts;
    for (std::size_t i = 0; i < args.size(); ++i)
      parts.push_back(read_set(args[i], path + ".args[" + std::to_string(i) + "]", dim));
    return name == "union" ? SetExpr::set_union(std::move(parts)) : SetExpr::intersection(std::move(parts));
  }
  fail(path + ".op", "unknown set operator \"" + name + "\"");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

ordered_json value_json(const MpValue& v) {
  if (v.is_eps()) return "-inf";
  const Rational& q = v.value();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

ordered_json vector_json(const MpVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(value_json(x));
  return a;
}

ordered_json matrix_json(const MpMatrix& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
  return a;
}

ordered_json set_json(const SetExpr& s) {
  using K = SetExpr::Kind;
  ordered_json j;
  switch (s.kind()) {
    case K::Empty: j["op"] = "empty"; break;
    case K::Halfspace:
      j["op"] = "halfspace";
      j["a"] = vector_json(s.literal().a);
      j["b"] = vector_json(s.literal().b);
      j["c"] = value_json(s.literal().c);
      j["d"] = value_json(s.literal().d);
      break;
    case K::Complement:
      j["op"] = "complement";
      j["arg"] = set_json(s.args()[0]);
      break;
    case K::Union:
    case K::Intersection: {
      j["op"] = s.kind() == K::Union ? "union" : "intersection";
      ordered_json args = ordered_json::array();
      for (const auto& a : s.args()) args.push_back(set_json(a));
      j["args"] = std::move(args);
      break;
    }
  }
  return j;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) fail("$", "expected an object");
  Problem p;
  p.n = read_size(field(j, "n", "$"), "$.n");
  if (p.n == 0) fail("$.n", "must be at least 1");
  p.sys.n = p.n;
  p.has_dynamics = j.contains("A") || j.contains("B");
  if (p.has_dynamics) {
    p.sys.m = read_size(field(j, "m", "$"), "$.m");
    p.sys.A = read_matrix(field(j, "A", "$"), "$.A", p.n, p.n);
    p.sys.B = read_matrix(field(j, "B", "$"), "$.B", p.n, p.sys.m);
    if (j.contains("U")) p.sys.U = read_set(j["U"], "$.U", p.sys.m);
  } else if (j.contains("U")) {
    fail("$.U", "a control region needs the matrices A and B");
  }
  p.target = read_set(field(j, "target", "$"), "$.target", p.n);
  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) fail("$.options", "expected an object");
    if (o.contains("steps")) {
      std::size_t s = read_size(o["steps"], "$.options.steps");
      if (s == 0) fail("$.options.steps", "must be at least 1");
      p.steps = static_cast<unsigned>(s);
    }
    if (o.contains("mode")) {
      const json& m = o["mode"];
      if (m == "one-shot")
        p.mode = StepMode::one_shot;
      else if (m == "iterated")
        p.mode = StepMode::iterated;
      else
        fail("$.options.mode", "expected \"one-shot\" or \"iterated\"");
    }
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string problem_to_json(const Problem& p) {
  ordered_json j;
  j["n"] = p.n;
  if (p.has_dynamics) {
    j["m"] = p.sys.m;
    j["A"] = matrix_json(p.sys.A);
    j["B"] = matrix_json(p.sys.B);
    j["U"] = set_json(p.sys.U);
  }
  j["target"] = set_json(p.target);
  j["options"] = {{"steps", p.steps}, {"mode", p.mode == StepMode::one_shot ? "one-shot" : "iterated"}};
  return j.dump(2) + "\n";
}

std::string result_to_json(const UnionOfPolyhedra& set, const Stats& stats) {
  const bool affine = set.kind == UnionOfPolyhedra::Kind::affine;
  ordered_json j;
  j["format"] = "mpreach-result/1";
  j["kind"] = affine ? "polyhedra" : "cones";
  j["dim"] = set.dim;
  j["exact"] = set.exact;
  ordered_json pieces = ordered_json::array();
  for (const auto& c : set.cones) {
    ordered_json piece;
    if (affine) {
      PolyVForm p = dehomogenize(c);
      piece["rays"] = ordered_json::array();
      for (const auto& r : p.rays) piece["rays"].push_back(vector_json(r));
      piece["vertices"] = ordered_json::array();
      for (const auto& v : p.vertices) piece["vertices"].push_back(vector_json(v));
    } else {
      piece["generators"] = ordered_json::array();
      for (const auto& g : c.generators()) piece["generators"].push_back(vector_json(g));
    }
    pieces.push_back(std::move(piece));
  }
  j[affine ? "polyhedra" : "cones"] = std::move(pieces);
  ordered_json st = ordered_json::object();
  for (const auto& [k, v] : stats) st[k] = v;
  j["stats"] = std::move(st);
  return j.dump(2) + "\n";
}

ResultFile parse_result(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) fail("$", "expected an object");
  if (field(j, "format", "$") != "mpreach-result/1") fail("$.format", "unsupported result format");
  const json& kind = field(j, "kind", "$");
  ResultFile r;
  r.set.dim = read_size(field(j, "dim", "$"), "$.dim");
  const json& exact = field(j, "exact", "$");
  if (!exact.is_boolean()) fail("$.exact", "expected a boolean");
  r.set.exact = exact.get<bool>();
  if (kind == "polyhedra") {
    r.set.kind = UnionOfPolyhedra::Kind::affine;
    const json& ps = field(j, "polyhedra", "$");
    if (!ps.is_array()) fail("$.polyhedra", "expected an array");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::string path = "$.polyhedra[" + std::to_string(i) + "]";
      PolyVForm p;
      p.dim = r.set.dim;
      for (const char* part : {"rays", "vertices"}) {
        const json& list = field(ps[i], part, path);
        if (!list.is_array()) fail(path + "." + part, "expected an array");
        for (std::size_t k = 0; k < list.size(); ++k) {
          MpVector v = read_vector(list[k], path + "." + part + "[" + std::to_string(k) + "]", p.dim);
          (part[0] == 'r' ? p.rays : p.vertices).push_back(std::move(v));
        }
      }
      r.set.cones.push_back(homogenize(p));
    }
  } else if (kind == "cones") {
    r.set.kind = UnionOfPolyhedra::Kind::conic;
    const json& cs = field(j, "cones", "$");
    if (!cs.is_array()) fail("$.cones", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string path = "$.cones[" + std::to_string(i) + "].generators";
      const json& list = field(cs[i], "generators", "$.cones[" + std::to_string(i) + "]");
      if (!list.is_array()) fail(path, "expected an array");
      std::vector<MpVector> gens;
      for (std::size_t k = 0; k < list.size(); ++k)
        gens.push_back(read_vector(list[k], path + "[" + std::to_string(k) + "]", r.set.dim));
      r.set.cones.emplace_back(r.set.dim, std::move(gens));
    }
  } else {
    fail("$.kind", "expected \"polyhedra\" or \"cones\"");
  }
  if (j.contains("stats")) {
    const json& st = j["stats"];
    if (!st.is_object()) fail("$.stats", "expected an object");
    for (const auto& [k, v] : st.items()) {
      if (!v.is_number_integer()) fail("$.stats." + k, "expected an integer");
      r.stats[k] = v.get<std::int64_t>();
    }
  }
  return r;
}

MpVector parse_point(std::string_view text, std::size_t n) {
  std::vector<MpValue> vals;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      vals.push_back(parse_value(item));
    } catch (const std::invalid_argument& e) {
      throw InputError("point entry " + std::to_string(vals.size()) + ": " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (vals.size() != n)
    throw InputError("point has " + std::to_string(vals.size()) + " entries, expected " + std::to_string(n));
  return MpVector(std::move(vals));
}

std::string format_point(const MpVector& x, char sep) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += sep;
    s += to_string(x[i]);
  }
  return s;
}

}  // namespace mpr
