#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

// Hypergraph file format: {"n": int, "k": int, "edges": [[int,...],...]},
// vertices 1-based, edges in any order on input. Throws MalformedInput on
// schema violations and the constructor errors on invalid edges.
UniformHypergraph read_hypergraph_json(std::istream& in);
UniformHypergraph read_hypergraph_file(const std::string& path);

void write_hypergraph_json(std::ostream& out, const UniformHypergraph& h);

}  // namespace hyperent
