#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sympow/graph.hpp"
#include "sympow/monomial.hpp"
#include "sympow/rational_lp.hpp"
#include "sympow/stanley_reisner.hpp"

namespace sympow::io {

using nlohmann::json;

struct NamedIdeal {
  std::vector<std::string> variables;
  MonomialIdeal ideal;
};

std::vector<std::string> default_names(std::size_t n);

// File formats. All parsers throw ValidationError with a description of the defect.
//   ideal:   {"variables": ["x","y"], "generators": [[1,1],[0,2]]}
//   graph:   {"vertices": 5, "edges": [[0,1],[1,2]]}
//   complex: {"vertices": 7, "facets": [[0,1,2]]}
NamedIdeal parse_ideal(const json& doc);
Graph parse_graph(const json& doc);
SimplicialComplex parse_complex(const json& doc);

json read_json_file(const std::string& path);

json to_json(const NamedIdeal& ideal);
json to_json(const Graph& g);
json to_json(const SimplicialComplex& complex);
json to_json(const Monomial& m);
json to_json(const ExactRational& q);
json set_to_json(VertexSet s);

}  // namespace sympow::io
