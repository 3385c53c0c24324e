#include "fextremal/transform.hpp"

#include <algorithm>
#include <string>

#include "fextremal/errors.hpp"
#include "fextremal/invariants.hpp"

namespace fextremal {

MiddleSet middle_degree_vertices(const Tree& t, int delta) {
  std::vector<int> deg = vertex_degrees(t);
  MiddleSet mid;
  for (int v = 0; v < t.n; ++v) {
    if (deg[v] > delta)
      throw DegreeBoundViolated("vertex " + std::to_string(v) + " has degree " +
                                std::to_string(deg[v]) + " > " +
                                std::to_string(delta));
    if (deg[v] > 1 && deg[v] < delta) mid.vertices.push_back(v);
  }
  std::stable_sort(mid.vertices.begin(), mid.vertices.end(),
                   [&deg](int a, int b) { return deg[a] > deg[b]; });
  return mid;
}

long long f_delta(long long d_u, long long d_v) {
  if (d_v < 2 || d_u < d_v)
    throw DomainError("f_delta requires d_u >= d_v >= 2");
  auto cube = [](long long v) { return checked_mul(checked_mul(v, v), v); };
  long long gain = checked_add(cube(d_u + 1), -cube(d_u));
  return checked_add(gain, checked_add(cube(d_v - 1), -cube(d_v)));
}

namespace {

bool has_edge(const Tree& t, int a, int b) {
  for (int x : t.adj[a])
    if (x == b) return true;
  return false;
}

// true iff `target` is reachable from `start` without crossing edge (a,b)
bool reaches_avoiding(const Tree& t, int start, int target, int a, int b) {
  std::vector<char> seen(t.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == target) return true;
    for (int x : t.adj[u]) {
      if ((u == a && x == b) || (u == b && x == a)) continue;
      if (!seen[x]) {
        seen[x] = 1;
        stack.push_back(x);
      }
    }
  }
  return false;
}

}  // namespace

Tree edge_shift(const Tree& t, int u, int v, int w) {
  if (u < 0 || u >= t.n || v < 0 || v >= t.n || w < 0 || w >= t.n)
    throw DomainError("edge_shift: vertex id out of range");
  if (u == v || u == w || v == w)
    throw DomainError("edge_shift: u, v, w must be three distinct vertices");
  if (!has_edge(t, v, w))
    throw EdgeMissing("edge_shift: vw is not an edge");
  if (has_edge(t, u, w))
    throw EdgePresent("edge_shift: uw is already an edge");
  if (reaches_avoiding(t, w, u, v, w))
    throw WouldDisconnect("edge_shift: u sits in w's component, the move "
                          "would disconnect v's side");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(t.edges.size());
  std::pair<int, int> drop{std::min(v, w), std::max(v, w)};
  for (const auto& e : t.edges)
    if (e != drop) edges.push_back(e);
  edges.push_back({std::min(u, w), std::max(u, w)});
  return validate_tree(t.n, std::move(edges));
}

Tree extremalize(const Tree& t, int delta, const ShiftTraceSink& trace) {
  if (t.n < 2) throw DomainError("extremalize requires n >= 2");
  Tree cur = t;
  long long step = 0;
  while (true) {
    MiddleSet mid = middle_degree_vertices(cur, delta);
    if (mid.vertices.size() < 2) return cur;

    std::vector<int> deg = vertex_degrees(cur);
    int u = mid.vertices.front();
    // v = smallest id inside the minimal-degree block at the tail
    size_t lo = mid.vertices.size() - 1;
    while (lo > 0 && deg[mid.vertices[lo - 1]] == deg[mid.vertices.back()]) --lo;
    int v = mid.vertices[lo] == u ? mid.vertices[lo + 1] : mid.vertices[lo];

    // neighbor of v on the path toward u, found by a parent scan from u
    std::vector<int> parent(cur.n, -1);
    std::vector<int> order{u};
    parent[u] = u;
    for (size_t i = 0; i < order.size() && parent[v] == -1; ++i) {
      for (int x : cur.adj[order[i]]) {
        if (parent[x] == -1) {
          parent[x] = order[i];
          order.push_back(x);
        }
      }
    }
    int toward_u = parent[v];
    int w = -1;
    for (int x : cur.adj[v])
      if (x != toward_u && (w == -1 || x < w)) w = x;

    long long f_before = f_index(cur).exact;
    cur = edge_shift(cur, u, v, w);
    if (trace) {
      ShiftRecord rec;
      rec.step = ++step;
      rec.u = u;
      rec.v = v;
      rec.w = w;
      rec.f_before = f_before;
      rec.f_after = f_index(cur).exact;
      trace(rec);
    }
  }
}

Tree construct_extremal(long long n, long long delta) {
  ExtremalSpec spec = extremal_spec(n, delta);
  return tree_from_degree_sequence(expand(spec.spec, n));
}

}  // namespace fextremal
