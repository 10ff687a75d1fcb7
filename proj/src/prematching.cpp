#include "pluckerlab/prematching.hpp"

#include <algorithm>
#include <stdexcept>

#include "pluckerlab/plucker.hpp"
#include "pluckerlab/tl_algebra.hpp"

namespace pluckerlab {

int ColoredPrematching::white_count() const {
  return static_cast<int>(std::count(color.begin(), color.end(), VertexColor::white));
}

int ColoredPrematching::black_count() const {
  return static_cast<int>(std::count(color.begin(), color.end(), VertexColor::black));
}

int prematch_size(const IndexTuple& I, const IndexTuple& J) {
  if (!(I.shape == J.shape)) throw std::invalid_argument("prematch: shape mismatch");
  const int n = I.shape.n;
  int s = 0;
  for (int x : I.entries) s += (x <= n);
  for (int x : J.entries) s += (x <= n);
  return s;
}

ColoredPrematching prematch(const IndexTuple& I, const IndexTuple& J) {
  const int s = prematch_size(I, J);
  const int amb = I.shape.ambient();
  const int n = I.shape.n;
  std::vector<int> where(amb + 1, 0);  // 1 = I only, 2 = J only, 3 = both
  for (int x : I.entries) where[x] |= 1;
  for (int x : J.entries) where[x] |= 2;

  ColoredPrematching pm;
  pm.s = s;
  pm.color.assign(2 * s, VertexColor::white);
  int j = 1;  // next unassigned vertex
  auto take_colored = [&](VertexColor c) {
    if (j > 2 * s) throw std::runtime_error("prematch: scan overruns the 2s vertices");
    pm.color[j - 1] = c;
    ++j;
  };
  auto take_edge = [&]() {
    if (j + 1 > 2 * s) throw std::runtime_error("prematch: scan overruns the 2s vertices");
    pm.color[j - 1] = VertexColor::edge_endpoint;
    pm.color[j] = VertexColor::edge_endpoint;
    pm.mandatory_edges.emplace_back(j, j + 1);
    j += 2;
  };
  for (int i = 1; i <= n; ++i) {
    switch (where[i]) {
      case 1: take_colored(VertexColor::white); break;
      case 2: take_colored(VertexColor::black); break;
      case 3: take_edge(); break;
      default: break;
    }
  }
  for (int i = n + 1; i <= amb; ++i) {
    switch (where[i]) {
      case 1: take_colored(VertexColor::white); break;
      case 2: take_colored(VertexColor::black); break;
      case 0: take_edge(); break;
      default: break;
    }
  }
  if (j != 2 * s + 1) throw std::runtime_error("prematch: scan leaves vertices unassigned");
  return pm;
}

std::vector<KauffmanDiagram> compatible_set(const IndexTuple& I, const IndexTuple& J) {
  const ColoredPrematching pm = prematch(I, J);
  std::vector<KauffmanDiagram> out;
  if (pm.s == 0 || pm.white_count() != pm.black_count()) return out;
  for (const KauffmanDiagram& k : enumerate_diagrams(pm.s)) {
    bool ok = true;
    for (const auto& [a, b] : pm.mandatory_edges)
      if (!k.has_edge(a, b)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (const auto& [a, b] : k.edges()) {
      const VertexColor ca = pm.color[a - 1];
      const VertexColor cb = pm.color[b - 1];
      if (ca == VertexColor::edge_endpoint) continue;  // must be a mandatory edge, checked above
      if (!((ca == VertexColor::white && cb == VertexColor::black) ||
            (ca == VertexColor::black && cb == VertexColor::white))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(k);
  }
  return out;
}

int complementary_b(const IndexTuple& I, const KauffmanDiagram& k) {
  if (I.shape.ambient() != 2 * k.s())
    throw std::invalid_argument("complementary_b: ambient must be [2s]");
  std::vector<bool> in(2 * k.s() + 1, false);
  for (int x : I.entries) in[x] = true;
  for (const auto& [a, b] : k.edges())
    if (in[a] == in[b]) return 0;
  return 1;
}

RationalMatrix generalized_submatrix(const RationalMatrix& X, const IndexTuple& I,
                                     const IndexTuple& J) {
  const auto [P1, Q1] = plucker_to_minor(I);
  const auto [P2, Q2] = plucker_to_minor(J);
  std::vector<int> M = P1;
  M.insert(M.end(), P2.begin(), P2.end());
  std::sort(M.begin(), M.end());
  std::vector<int> Mp = Q1;
  Mp.insert(Mp.end(), Q2.begin(), Q2.end());
  std::sort(Mp.begin(), Mp.end());
  if (M.size() != Mp.size())
    throw std::invalid_argument("generalized_submatrix: row/column multiset size mismatch");
  return submatrix(X, M, Mp);
}

ProductDecomposition decompose_product(const IndexTuple& I, const IndexTuple& J,
                                       const RationalMatrix& X) {
  const IndexTuple Is = I.sorted();
  const IndexTuple Js = J.sorted();
  const RationalMatrix Xbar = embed(X, I.shape.m);
  ProductDecomposition out;
  out.value = plucker(Xbar, Is) * plucker(Xbar, Js);
  const RationalMatrix sub = generalized_submatrix(X, Is, Js);
  for (const KauffmanDiagram& k : compatible_set(Is, Js))
    out.terms.emplace_back(k, immanant(k, sub));
  return out;
}

}  // namespace pluckerlab
