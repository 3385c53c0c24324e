#pragma once

#include <functional>
#include <vector>

#include "fextremal/extremal.hpp"
#include "fextremal/graph.hpp"

namespace fextremal {

// Vertices with degree strictly between 1 and delta, sorted by degree
// non-increasing, vertex id ascending within equal degree. Trees that
// maximize the F-index under the bound have at most one such vertex.
struct MiddleSet {
  std::vector<int> vertices;
};

// Throws DegreeBoundViolated when some vertex of t exceeds delta.
MiddleSet middle_degree_vertices(const Tree& t, int delta);

// F-index gain of moving one edge endpoint from a degree-d_v vertex to a
// degree-d_u vertex: (d_u+1)^3 - d_u^3 + (d_v-1)^3 - d_v^3. Strictly
// positive whenever d_u >= d_v >= 2 (convexity of the cube); that
// precondition is enforced with DomainError.
long long f_delta(long long d_u, long long d_v);

// Deletes edge vw and adds edge uw. Legal iff vw is an edge, uw is not,
// u, v, w are three distinct vertices, and u is on v's side of the split
// made by deleting vw (otherwise the move would disconnect the graph and
// close a cycle). Returns the new validated tree; d(u) gains one, d(v)
// loses one.
Tree edge_shift(const Tree& t, int u, int v, int w);

// One extremalization move, for optional tracing.
struct ShiftRecord {
  long long step = 0;
  int u = 0;
  int v = 0;
  int w = 0;
  long long f_before = 0;
  long long f_after = 0;
};

using ShiftTraceSink = std::function<void(const ShiftRecord&)>;

// Drives t to the F-maximal shape under the degree bound by repeated edge
// shifts: while at least two middle-degree vertices remain, the
// highest-degree one (u) absorbs an edge from the lowest-degree one (v),
// taking v's smallest-id neighbor away from u's direction. Every step
// raises F by exactly f_delta(d(u), d(v)), so the loop ends after at most
// n*delta moves; a tree with at most one middle vertex has the
// extremal_spec degree spec by the counting identities.
Tree extremalize(const Tree& t, int delta, const ShiftTraceSink& trace = {});

// Direct greedy build of a tree realizing extremal_spec(n, delta):
// breadth-first attachment fills each vertex to degree delta, the Case II
// residue vertex last.
Tree construct_extremal(long long n, long long delta);

}  // namespace fextremal
