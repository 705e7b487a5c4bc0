#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "netdecomp/graph.hpp"

namespace netdecomp {

enum class GraphKind { path, cycle, grid, complete, hypercube, gnp, random_tree };

std::string_view to_string(GraphKind kind);

/// Parsed generator description. Spec strings:
///   path:n=10  cycle:n=5  grid:20x25 (or grid:rows=20,cols=25)
///   complete:n=4  hypercube:d=4  gnp:n=100,p=0.05  random-tree:n=50
struct GenSpec {
  GraphKind kind = GraphKind::path;
  std::size_t n = 0;      // vertex count (path/cycle/complete/gnp/random-tree)
  std::size_t rows = 0;   // grid
  std::size_t cols = 0;   // grid
  int dim = 0;            // hypercube
  double p = 0.0;         // gnp edge probability

  /// Canonical spec string; parse(to_string(s)) == s.
  std::string to_string() const;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Throws std::invalid_argument on malformed or out-of-range specs.
GenSpec parse_gen_spec(std::string_view text);

/// Deterministic for a given (spec, seed); the seed only matters for the
/// randomized kinds (gnp, random-tree).
Graph generate(const GenSpec& spec, std::uint64_t seed);

}  // namespace netdecomp
