#include "netdecomp/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace netdecomp {

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.assign(universe, true);
  s.count_ = universe;
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> ids) {
  VertexSet s(universe);
  for (Vertex v : ids) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size()) {
    throw std::invalid_argument("VertexSet::insert: id " + std::to_string(v) +
                                " outside universe [0, " + std::to_string(bits_.size()) + ")");
  }
  if (!bits_[v]) {
    bits_[v] = true;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v < bits_.size() && bits_[v]) {
    bits_[v] = false;
    --count_;
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g;
  g.adj_.resize(vertex_count);
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ") with n = " + std::to_string(vertex_count));
    }
    if (a == b) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& nbrs = g.adj_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (v > u) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& alive, Vertex source,
                               int max_depth) {
  if (!alive.contains(source)) {
    throw std::invalid_argument("bfs_distances: source " + std::to_string(source) +
                                " is not in the alive set");
  }
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    int next = dist[u] + 1;
    if (max_depth >= 0 && next > max_depth) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0 && alive.contains(w)) {
        dist[w] = next;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> components;
  std::vector<bool> seen(g.vertex_count(), false);
  s.for_each([&](Vertex start) {
    if (seen[start]) return;
    VertexSet comp(g.vertex_count());
    std::deque<Vertex> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      comp.insert(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w] && s.contains(w)) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    components.push_back(std::move(comp));
  });
  return components;
}

std::optional<int> strong_diameter(const Graph& g, const VertexSet& members) {
  int diameter = 0;
  bool disconnected = false;
  members.for_each([&](Vertex v) {
    if (disconnected) return;
    auto dist = bfs_distances(g, members, v);
    members.for_each([&](Vertex w) {
      if (dist[w] < 0) {
        disconnected = true;
      } else {
        diameter = std::max(diameter, dist[w]);
      }
    });
  });
  if (disconnected) return std::nullopt;
  return diameter;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("edge list line " + std::to_string(line_no) + ": " + what);
}

bool content_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos != std::string::npos && line[pos] != '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!content_line(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 0 || m < 0) parse_fail(line_no, "expected header 'n m'");
      std::string extra;
      if (fields >> extra) parse_fail(line_no, "trailing data after header");
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    long long u, v;
    if (!(fields >> u >> v)) parse_fail(line_no, "expected edge 'u v'");
    std::string extra;
    if (fields >> extra) parse_fail(line_no, "trailing data after edge");
    if (static_cast<long long>(edges.size()) == m) parse_fail(line_no, "more edges than declared");
    if (u < 0 || v < 0 || v >= n) parse_fail(line_no, "endpoint out of range [0, n)");
    if (u >= v) parse_fail(line_no, "edges must satisfy u < v");
    std::uint64_t key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
                        static_cast<std::uint64_t>(v);
    if (!seen.insert(key).second) parse_fail(line_no, "duplicate edge");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw std::runtime_error("edge list line 1: missing header 'n m'");
  if (static_cast<long long>(edges.size()) != m) {
    throw std::runtime_error("edge list: declared " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

std::uint64_t graph_fingerprint(const Graph& g) {
  std::ostringstream text;
  write_edge_list(text, g);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char ch : text.str()) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

}  // namespace netdecomp
