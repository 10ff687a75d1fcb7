#include "pluckerlab/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace pluckerlab {

KauffmanDiagram::KauffmanDiagram(int s, std::vector<int> partner)
    : s_(s), partner_(std::move(partner)) {
  if (s < 1) throw std::invalid_argument("diagram: s must be positive");
  if (static_cast<int>(partner_.size()) != 2 * s)
    throw std::invalid_argument("diagram: partner array must have length 2s");
  for (int v = 1; v <= 2 * s; ++v) {
    const int p = partner_of(v);
    if (p < 1 || p > 2 * s || p == v || partner_of(p) != v)
      throw std::invalid_argument("diagram: partner is not a fixed-point-free involution");
  }
  // Noncrossing: no edges {a,b}, {c,d} with a < c < b < d. For vertices in
  // convex position the circular and linear conditions coincide.
  for (int a = 1; a <= 2 * s; ++a) {
    const int b = partner_of(a);
    if (b < a) continue;
    for (int c = a + 1; c < b; ++c)
      if (partner_of(c) > b) throw std::invalid_argument("diagram: crossing edges");
  }
}

KauffmanDiagram KauffmanDiagram::identity(int s) {
  std::vector<int> partner(2 * s);
  for (int v = 1; v <= 2 * s; ++v) partner[v - 1] = 2 * s + 1 - v;
  return KauffmanDiagram(s, std::move(partner));
}

KauffmanDiagram KauffmanDiagram::generator(int s, int i) {
  if (i < 1 || i >= s) throw std::out_of_range("generator: need 1 <= i < s");
  KauffmanDiagram d = identity(s);
  std::vector<int> partner = d.partner_;
  auto link = [&partner](int a, int b) {
    partner[a - 1] = b;
    partner[b - 1] = a;
  };
  link(i, i + 1);
  link(2 * s - i, 2 * s + 1 - i);
  return KauffmanDiagram(s, std::move(partner));
}

KauffmanDiagram KauffmanDiagram::from_edges(int s, const std::vector<std::pair<int, int>>& edges) {
  if (static_cast<int>(edges.size()) != s)
    throw std::invalid_argument("from_edges: need exactly s edges");
  std::vector<int> partner(2 * s, 0);
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > 2 * s || b < 1 || b > 2 * s)
      throw std::out_of_range("from_edges: vertex out of range");
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  return KauffmanDiagram(s, std::move(partner));
}

std::vector<std::pair<int, int>> KauffmanDiagram::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= 2 * s_; ++v)
    if (partner_of(v) > v) out.emplace_back(v, partner_of(v));
  return out;  // already sorted by first endpoint
}

namespace {

// Noncrossing matchings of the interval [lo, hi] as edge lists: match lo to
// an odd-offset partner, then take the cartesian product of the inside and
// outside blocks.
std::vector<std::vector<std::pair<int, int>>> matchings(int lo, int hi) {
  std::vector<std::vector<std::pair<int, int>>> result;
  if (lo > hi) {
    result.push_back({});
    return result;
  }
  for (int p = lo + 1; p <= hi; p += 2) {
    const auto inside = matchings(lo + 1, p - 1);
    const auto outside = matchings(p + 1, hi);
    for (const auto& in : inside)
      for (const auto& outp : outside) {
        std::vector<std::pair<int, int>> m;
        m.emplace_back(lo, p);
        m.insert(m.end(), in.begin(), in.end());
        m.insert(m.end(), outp.begin(), outp.end());
        result.push_back(std::move(m));
      }
  }
  return result;
}

}  // namespace

std::vector<KauffmanDiagram> enumerate_diagrams(int s) {
  if (s < 1) throw std::invalid_argument("enumerate_diagrams: s must be positive");
  std::vector<KauffmanDiagram> out;
  for (const auto& m : matchings(1, 2 * s)) out.push_back(KauffmanDiagram::from_edges(s, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<KauffmanDiagram, int> tl_multiply(const KauffmanDiagram& d1, const KauffmanDiagram& d2) {
  if (d1.s() != d2.s()) throw std::invalid_argument("tl_multiply: size mismatch");
  const int s = d1.s();
  // Composite node ids: 1..s = left boundary (d1's v_h); s+1..2s = interface
  // height h (d1's v_{2s+1-h} glued to d2's v_h); 2s+1..3s = right boundary
  // (d2's v_{2s+1-h}).
  auto d1_node = [s](int v) { return v <= s ? v : s + (2 * s + 1 - v); };
  auto d2_node = [s](int v) { return v <= s ? s + v : 2 * s + (2 * s + 1 - v); };
  std::vector<std::vector<int>> adj(3 * s + 1);
  for (const auto& [a, b] : d1.edges()) {
    adj[d1_node(a)].push_back(d1_node(b));
    adj[d1_node(b)].push_back(d1_node(a));
  }
  for (const auto& [a, b] : d2.edges()) {
    adj[d2_node(a)].push_back(d2_node(b));
    adj[d2_node(b)].push_back(d2_node(a));
  }
  std::vector<bool> used(3 * s + 1, false);
  auto is_boundary = [s](int node) { return node <= s || node > 2 * s; };
  auto boundary_vertex = [s](int node) { return node <= s ? node : 2 * s + 1 - (node - 2 * s); };

  std::vector<std::pair<int, int>> edges;
  for (int start = 1; start <= 3 * s; ++start) {
    if (!is_boundary(start) || used[start]) continue;
    used[start] = true;
    int prev = start;
    int cur = adj[start][0];
    while (!is_boundary(cur)) {
      used[cur] = true;
      const int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    used[cur] = true;
    const int a = boundary_vertex(start);
    const int b = boundary_vertex(cur);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  int loops = 0;
  for (int start = s + 1; start <= 2 * s; ++start) {
    if (used[start]) continue;
    ++loops;
    int prev = start;
    int cur = adj[start][0];
    used[start] = true;
    while (cur != start) {
      used[cur] = true;
      const int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
  }
  return {KauffmanDiagram::from_edges(s, edges), loops};
}

KauffmanDiagram shift_diagram(const KauffmanDiagram& k) {
  const int n2 = 2 * k.s();
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : k.edges()) edges.emplace_back(a % n2 + 1, b % n2 + 1);
  return KauffmanDiagram::from_edges(k.s(), edges);
}

KauffmanDiagram reflect_diagram(const KauffmanDiagram& k) {
  const int n2 = 2 * k.s();
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : k.edges()) edges.emplace_back(n2 + 1 - a, n2 + 1 - b);
  return KauffmanDiagram::from_edges(k.s(), edges);
}

}  // namespace pluckerlab
