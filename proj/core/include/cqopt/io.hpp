#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "cqopt/cut_oracle.hpp"
#include "cqopt/geometry.hpp"
#include "cqopt/matroid.hpp"

namespace cqopt {

// Point set text format: first line "d N", then N lines of d rationals
// ("p/q" or plain integers).
PointSet load_point_set(std::istream& in);

// Graph file: "n m" then m lines "u v [w]" with 0-indexed endpoints.
HiddenGraph load_graph(std::istream& in);

struct DirectedGraphFile {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Directed graph file: "n m" then m lines "u v".
DirectedGraphFile load_directed_graph(std::istream& in);

// Linear matroid file: "k n" then k rows of n rationals.
LinearMatroid load_linear_matroid(std::istream& in);

// Matroid file: a kind tag ("graphic" n m + edge list, "linear" + matrix,
// "partition" + blocks/capacities, "uniform" n k).
std::unique_ptr<MatroidOracle> load_matroid(std::istream& in);

// Certificates export as JSON pair lists.
std::string certificate_to_json(const Certificate& cert);

}  // namespace cqopt
