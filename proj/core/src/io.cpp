#include "cqopt/io.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <sstream>

namespace cqopt {

PointSet load_point_set(std::istream& in) {
  int d, count;
  if (!(in >> d >> count)) throw std::invalid_argument("point set header must be 'd N'");
  PointSet ps;
  ps.d = d;
  for (int i = 0; i < count; ++i) {
    VecR p(d);
    for (int j = 0; j < d; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("truncated point set file");
      p[j] = parse_rational(tok);
    }
    ps.points.push_back(std::move(p));
  }
  return ps;
}

HiddenGraph load_graph(std::istream& in) {
  int n;
  long m;
  if (!(in >> n >> m)) throw std::invalid_argument("graph header must be 'n m'");
  std::vector<std::pair<Edge, Rational>> weighted;
  std::vector<Edge> simple;
  bool any_weight = false;
  std::string line;
  std::getline(in, line);
  for (long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw std::invalid_argument("truncated graph file");
    std::istringstream row(line);
    int u, v;
    row >> u >> v;
    std::string wtok;
    if (row >> wtok) {
      any_weight = true;
      weighted.push_back({{std::min(u, v), std::max(u, v)}, parse_rational(wtok)});
    } else {
      simple.push_back({std::min(u, v), std::max(u, v)});
      weighted.push_back({{std::min(u, v), std::max(u, v)}, Rational(1)});
    }
  }
  return any_weight ? HiddenGraph::weighted(n, weighted) : HiddenGraph::simple(n, simple);
}

DirectedGraphFile load_directed_graph(std::istream& in) {
  DirectedGraphFile g;
  long m;
  if (!(in >> g.n >> m)) throw std::invalid_argument("graph header must be 'n m'");
  for (long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("truncated graph file");
    g.edges.emplace_back(u, v);
  }
  return g;
}

LinearMatroid load_linear_matroid(std::istream& in) {
  int k, n;
  if (!(in >> k >> n)) throw std::invalid_argument("matroid header must be 'k n'");
  LinearMatroid lm;
  lm.v.assign(k, VecR(n));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("truncated matroid file");
      lm.v[r][c] = parse_rational(tok);
    }
  return lm;
}

std::unique_ptr<MatroidOracle> load_matroid(std::istream& in) {
  std::string kind;
  if (!(in >> kind)) throw std::invalid_argument("missing matroid kind");
  if (kind == "graphic") {
    int nv;
    long m;
    in >> nv >> m;
    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
      int u, v;
      in >> u >> v;
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return std::make_unique<GraphicMatroid>(nv, std::move(edges));
  }
  if (kind == "linear") return std::make_unique<LinearMatroidOracle>(load_linear_matroid(in));
  if (kind == "uniform") {
    int n, k;
    in >> n >> k;
    return std::make_unique<UniformMatroid>(n, k);
  }
  if (kind == "partition") {
    int n, blocks;
    in >> n >> blocks;
    std::vector<int> block_of(n), caps(blocks);
    for (int i = 0; i < n; ++i) in >> block_of[i];
    for (int b = 0; b < blocks; ++b) in >> caps[b];
    return std::make_unique<PartitionMatroid>(std::move(block_of), std::move(caps));
  }
  throw std::invalid_argument("unknown matroid kind: " + kind);
}

std::string certificate_to_json(const Certificate& cert) {
  nlohmann::json j = nlohmann::json::array();
  for (auto [a, b] : cert.pairs) j.push_back({a, b});
  return j.dump();
}

}  // namespace cqopt
