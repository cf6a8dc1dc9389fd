#include "constellation/io.hpp"

#include <fstream>
#include <sstream>

#include "constellation/error.hpp"

namespace constellation {

namespace {

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw Error(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw Error(where + ": missing key \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw Error(where + ": expected an integer");
  return j.get<int>();
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw Error(where + ": expected a rational as a string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(where + ": " + e.what());
  }
}

std::vector<VertexSet> vertex_family(const Json& j, int m, const std::string& where) {
  if (!j.is_array()) throw Error(where + ": expected an array of vertex lists");
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw Error(at + ": expected an array of vertices");
    VertexSet s;
    for (std::size_t t = 0; t < j[i].size(); ++t) {
      const std::string vat = at + "[" + std::to_string(t) + "]";
      const int v = as_int(j[i][t], vat);
      if (v < 0 || v >= m) throw Error(vat + ": vertex " + std::to_string(v) + " outside [0, m)");
      if (s.contains(v)) throw Error(vat + ": repeated vertex " + std::to_string(v));
      s = s.with(v);
    }
    out.push_back(s);
  }
  return out;
}

Json family_to_json(const std::vector<VertexSet>& family) {
  Json out = Json::array();
  for (VertexSet s : family) out.push_back(s.indices());
  return out;
}

std::vector<RationalVector> point_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(where + ": expected an array of points");
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_vector_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Recompute line and column from the byte offset; the library message
    // already carries them but in a verbose form.
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON: " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot open file for writing");
  out << j.dump(2) << '\n';
  if (!out) throw Error(path + ": write failed");
}

SimplicialComplex complex_from_json(const Json& j) {
  const int m = as_int(member(j, "m", "complex"), "complex.m");
  if (m < 0 || m > kMaxVertices) throw Error("complex.m: must be in [0, 64]");
  const bool has_max = j.contains("maximal_faces");
  const bool has_min = j.contains("minimal_nonfaces");
  if (has_max == has_min) throw Error("complex: exactly one of \"maximal_faces\" and \"minimal_nonfaces\" is required");
  if (has_max) return SimplicialComplex::from_maximal_faces(m, vertex_family(j["maximal_faces"], m, "complex.maximal_faces"));
  return SimplicialComplex::from_minimal_nonfaces(m, vertex_family(j["minimal_nonfaces"], m, "complex.minimal_nonfaces"));
}

Json complex_to_json(const SimplicialComplex& k) {
  Json out;
  out["m"] = k.num_vertices();
  out["maximal_faces"] = family_to_json(k.maximal_faces());
  return out;
}

Polytope polytope_from_json(const Json& j) {
  return Polytope::from_vertices(point_list(member(j, "vertices", "polytope"), "polytope.vertices"));
}

Json polytope_to_json(const Polytope& p) {
  Json out;
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(rational_vector_to_json(v));
  out["vertices"] = std::move(verts);
  return out;
}

PointConfiguration configuration_from_json(const Json& j) {
  PointConfiguration x;
  x.dim = as_int(member(j, "dim", "configuration"), "configuration.dim");
  if (x.dim < 0) throw Error("configuration.dim: must be >= 0");
  x.points = point_list(member(j, "points", "configuration"), "configuration.points");
  for (std::size_t i = 0; i < x.points.size(); ++i)
    if (x.points[i].size() != static_cast<std::size_t>(x.dim))
      throw Error("configuration.points[" + std::to_string(i) + "]: expected " + std::to_string(x.dim) + " coordinates");
  return x;
}

Json configuration_to_json(const PointConfiguration& x) {
  Json out;
  out["dim"] = x.dim;
  Json pts = Json::array();
  for (const auto& p : x.points) pts.push_back(rational_vector_to_json(p));
  out["points"] = std::move(pts);
  return out;
}

Json betti_to_json(const BettiTable& t) {
  Json out;
  out["field"] = to_string(t.field);
  Json entries = Json::array();
  for (const auto& [key, value] : t.entries) {
    Json e;
    e["i"] = key.first;
    e["deg"] = key.second;
    e["value"] = value;
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

BettiTable betti_from_json(const Json& j, int m) {
  BettiTable t;
  t.m = m;
  const Json& f = member(j, "field", "betti");
  if (!f.is_string()) throw Error("betti.field: expected a string");
  t.field = parse_field(f.get<std::string>());
  const Json& entries = member(j, "entries", "betti");
  if (!entries.is_array()) throw Error("betti.entries: expected an array");
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const std::string at = "betti.entries[" + std::to_string(n) + "]";
    const int i = as_int(member(entries[n], "i", at), at + ".i");
    const int deg = as_int(member(entries[n], "deg", at), at + ".deg");
    const Json& v = member(entries[n], "value", at);
    if (!v.is_number_integer()) throw Error(at + ".value: expected an integer");
    t.add(i, deg, v.get<long long>());
  }
  return t;
}

Json rational_vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

RationalVector rational_vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(where + ": expected an array of coordinates");
  RationalVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_rational(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

VertexSet parse_vertex_list(std::string_view text) {
  VertexSet s;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string item(text.substr(pos, end - pos));
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error("vertex list: bad entry \"" + item + "\"");
    }
    if (used != item.size() || v < 0 || v >= kMaxVertices) throw Error("vertex list: bad entry \"" + item + "\"");
    s = s.with(v);
    pos = end + 1;
  }
  return s;
}

}  // namespace constellation
