#pragma once

#include <utility>
#include <vector>

#include "pluckerlab/rational.hpp"

namespace pluckerlab {

// Noncrossing perfect matching on 2s vertices in circular order. Vertices
// are labeled 1..2s clockwise: v_1..v_s up the left column, v_{s+1}..v_{2s}
// down the right column. partner[v] (1-based via partner_of) is the vertex
// matched to v.
class KauffmanDiagram {
 public:
  KauffmanDiagram() = default;
  KauffmanDiagram(int s, std::vector<int> partner);

  static KauffmanDiagram identity(int s);
  // Generator t_i, 1 <= i < s: cup (v_i, v_{i+1}) and cap
  // (v_{2s-i}, v_{2s+1-i}); all other strands horizontal.
  static KauffmanDiagram generator(int s, int i);
  static KauffmanDiagram from_edges(int s, const std::vector<std::pair<int, int>>& edges);

  int s() const { return s_; }
  int partner_of(int v) const { return partner_[v - 1]; }
  bool has_edge(int a, int b) const { return partner_of(a) == b; }

  // Smallest-endpoint-first edges, sorted; the canonical form.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const KauffmanDiagram& o) const { return partner_ == o.partner_; }
  bool operator<(const KauffmanDiagram& o) const { return edges() < o.edges(); }

 private:
  int s_ = 0;
  std::vector<int> partner_;
};

// All noncrossing perfect matchings on 2s vertices, sorted by canonical edge
// list; count is the s-th Catalan number.
std::vector<KauffmanDiagram> enumerate_diagrams(int s);

// Diagrammatic composition: glue d1's right boundary to d2's left boundary,
// trace strands, count closed loops. Algebra product = xi^loops * diagram
// with xi = 2.
std::pair<KauffmanDiagram, int> tl_multiply(const KauffmanDiagram& d1, const KauffmanDiagram& d2);

// Vertex relabelings v -> v+1 mod 2s and v -> 2s+1-v; both preserve the
// noncrossing property.
KauffmanDiagram shift_diagram(const KauffmanDiagram& k);
KauffmanDiagram reflect_diagram(const KauffmanDiagram& k);

}  // namespace pluckerlab
