#pragma once

#include "pluckerlab/diagram.hpp"
#include "pluckerlab/index_tuple.hpp"
#include "pluckerlab/matrix.hpp"

namespace pluckerlab {

enum class VertexColor { white, black, edge_endpoint };

// Output of the two-scan coloring of a pair (I, J): a color for each of the
// 2s vertices plus the mandatory edges E(I, J).
struct ColoredPrematching {
  int s = 0;
  std::vector<VertexColor> color;  // index v-1 for vertex v
  std::vector<std::pair<int, int>> mandatory_edges;

  int white_count() const;
  int black_count() const;
};

// s = |I n [n]| + |J n [n]|.
int prematch_size(const IndexTuple& I, const IndexTuple& J);

// Sequential scan i = 1..n (I\J -> white, J\I -> black, I n J -> mandatory
// edge, else skip), then i = n+1..m+n with the roles of I n J and the
// complement swapped. Throws if the scan overruns or underruns the 2s
// vertices (inconsistent inputs).
ColoredPrematching prematch(const IndexTuple& I, const IndexTuple& J);

// Phi(I, J): all Kauffman diagrams containing every mandatory edge whose
// remaining edges join white to black; sorted canonically.
std::vector<KauffmanDiagram> compatible_set(const IndexTuple& I, const IndexTuple& J);

// b_K for the complementary case (ambient [2s], J = I^c): 1 iff every edge
// of K joins I to its complement.
int complementary_b(const IndexTuple& I, const KauffmanDiagram& k);

// X_{M,M'} with row multiset M = P1 u P2 and column multiset M' = Q1 u Q2
// (sorted, repeats kept), where (Pi, Qi) are the minor positions of I and J.
RationalMatrix generalized_submatrix(const RationalMatrix& X, const IndexTuple& I,
                                     const IndexTuple& J);

// Delta_I(embed(X)) Delta_J(embed(X)) together with the immanant terms
// (K, Imm_K(X_{M,M'})) over K in Phi(I, J); the terms sum to the product
// exactly. Tuples are sorted internally.
struct ProductDecomposition {
  Rational value;
  std::vector<std::pair<KauffmanDiagram, Rational>> terms;
};
ProductDecomposition decompose_product(const IndexTuple& I, const IndexTuple& J,
                                       const RationalMatrix& X);

}  // namespace pluckerlab
