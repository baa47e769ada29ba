#include "sympow/io.hpp"

#include <fstream>
#include <limits>
#include <set>

namespace sympow::io {

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) throw ValidationError("expected a JSON object at the top level");
  auto it = doc.find(name);
  if (it == doc.end()) throw ValidationError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::uint64_t nonnegative(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ValidationError(where + ": expected an integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const auto s = v.get<std::int64_t>();
  if (s < 0) throw ValidationError(where + ": negative value " + std::to_string(s));
  return static_cast<std::uint64_t>(s);
}

std::size_t vertex_count(const json& doc) {
  const auto n = nonnegative(field(doc, "vertices"), "vertices");
  if (n == 0) throw ValidationError("vertices: must be positive");
  if (n > kMaxSetVars) throw ValidationError("vertices: at most 64 supported");
  return static_cast<std::size_t>(n);
}

VertexSet vertex_list(const json& row, std::size_t n, const std::string& where) {
  if (!row.is_array()) throw ValidationError(where + ": expected an array of vertices");
  VertexSet s = 0;
  for (const auto& v : row) {
    const auto i = nonnegative(v, where);
    if (i >= n) throw ValidationError(where + ": vertex " + std::to_string(i) + " out of range");
    s |= VertexSet{1} << i;
  }
  return s;
}

}  // namespace

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

NamedIdeal parse_ideal(const json& doc) {
  const auto& vars = field(doc, "variables");
  if (!vars.is_array() || vars.empty()) throw ValidationError("variables: expected a nonempty array of names");
  NamedIdeal out;
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!v.is_string()) throw ValidationError("variables: names must be strings");
    auto name = v.get<std::string>();
    if (name.empty()) throw ValidationError("variables: empty name");
    if (!seen.insert(name).second) throw ValidationError("variables: duplicate name \"" + name + "\"");
    out.variables.push_back(std::move(name));
  }
  const auto n = out.variables.size();

  const auto& gens = field(doc, "generators");
  if (!gens.is_array()) throw ValidationError("generators: expected an array of exponent vectors");
  std::vector<Monomial> monomials;
  for (std::size_t r = 0; r < gens.size(); ++r) {
    const auto where = "generators[" + std::to_string(r) + "]";
    const auto& row = gens[r];
    if (!row.is_array()) throw ValidationError(where + ": expected an array");
    if (row.size() != n) {
      throw ValidationError(where + ": has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    }
    std::vector<Exponent> e;
    for (const auto& x : row) {
      const auto value = nonnegative(x, where);
      if (value > std::numeric_limits<Exponent>::max()) throw ValidationError(where + ": exponent too large");
      e.push_back(static_cast<Exponent>(value));
    }
    monomials.emplace_back(std::move(e));
  }
  out.ideal = minimalize(n, std::move(monomials));
  return out;
}

Graph parse_graph(const json& doc) {
  const auto n = vertex_count(doc);
  const auto& edges = field(doc, "edges");
  if (!edges.is_array()) throw ValidationError("edges: expected an array of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> list;
  for (std::size_t r = 0; r < edges.size(); ++r) {
    const auto where = "edges[" + std::to_string(r) + "]";
    const auto& e = edges[r];
    if (!e.is_array() || e.size() != 2) throw ValidationError(where + ": expected a pair");
    list.emplace_back(nonnegative(e[0], where), nonnegative(e[1], where));
  }
  return Graph(n, std::move(list));
}

SimplicialComplex parse_complex(const json& doc) {
  const auto n = vertex_count(doc);
  const auto& facets = field(doc, "facets");
  if (!facets.is_array()) throw ValidationError("facets: expected an array of vertex lists");
  std::vector<VertexSet> faces;
  for (std::size_t r = 0; r < facets.size(); ++r) {
    faces.push_back(vertex_list(facets[r], n, "facets[" + std::to_string(r) + "]"));
  }
  return SimplicialComplex::from_faces(n, std::move(faces));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

json to_json(const Monomial& m) { return json(std::vector<Exponent>(m.exponents().begin(), m.exponents().end())); }

json to_json(const NamedIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.ideal.generators()) gens.push_back(to_json(g));
  return json{{"variables", ideal.variables}, {"generators", std::move(gens)}};
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"vertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

json set_to_json(VertexSet s) { return json(elements(s)); }

json to_json(const SimplicialComplex& complex) {
  json facets = json::array();
  for (auto f : complex.facets) facets.push_back(set_to_json(f));
  return json{{"vertices", complex.num_vertices}, {"facets", std::move(facets)}};
}

json to_json(const ExactRational& q) {
  auto part = [](const boost::multiprecision::cpp_int& v) -> json {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
      return json(v.convert_to<std::int64_t>());
    }
    return json(v.str());
  };
  return json{{"num", part(boost::multiprecision::numerator(q))}, {"den", part(boost::multiprecision::denominator(q))}};
}

}  // namespace sympow::io
