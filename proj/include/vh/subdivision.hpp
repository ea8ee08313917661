#pragma once

#include <array>
#include <vector>

#include "vh/pairing.hpp"

namespace vh {

struct Chord {
  EdgeClass cls = EdgeClass::V;
  int a = 0, b = 0;  // boundary edge midpoints, a < b
};

struct CrossingRef {
  int v_chord = 0;  // indices into ArrangementDisk::chords
  int h_chord = 0;
};

// The chord system of one polygon, computed purely combinatorially: a V and an
// H chord cross iff their endpoint pairs interleave, and the crossings along a
// chord (a,b) are ordered by the crossing chords' endpoints inside the arc
// (a,b); chords crossing a common chord never cross each other, which makes
// that order well defined.
struct ArrangementDisk {
  int L = 0;
  std::vector<EdgeClass> boundary_classes;      // size L
  std::vector<Chord> chords;                    // V chords first, then H
  std::vector<CrossingRef> crossings;
  std::vector<std::vector<int>> chord_crossings;  // per chord, ordered a -> b
};

ArrangementDisk build_chords(const SideDecomposition& sd, const Pairing& vp, const Pairing& hp);

// Planar dual of the chord system inside the disk: one vertex per complement
// face, one edge per chord segment, one square per crossing.
struct DiskComplex {
  int L = 0;
  std::vector<EdgeClass> boundary_classes;

  int num_vertices = 0;                 // faces of the arrangement
  std::vector<bool> vertex_on_boundary;

  struct Edge {
    EdgeClass cls = EdgeClass::V;  // class of the chord the edge crosses
    int f0 = 0, f1 = 0;            // oriented as discovered; see squares/boundary
  };
  std::vector<Edge> edges;

  // One per crossing; corner[i] are the four faces around it in rotation
  // order, edge[i]/sign[i] the dual edge traversed from corner[i] to
  // corner[i+1] (+1 when that traversal runs f0 -> f1).
  struct Square {
    std::array<int, 4> corner{};
    std::array<int, 4> edge{};
    std::array<int, 4> sign{};
  };
  std::vector<Square> squares;
  int num_crossings = 0;

  // The image of the polygon boundary: traversing boundary edge k of the
  // polygon corresponds to crossing the chord at midpoint k, i.e. traversing
  // dual edge boundary_edge[k] from boundary_vertex[k-1] to boundary_vertex[k].
  std::vector<int> boundary_vertex;     // size L
  std::vector<int> boundary_edge;      // size L
  std::vector<int> boundary_edge_sign;  // size L

  bool proper = false;  // boundary faces pairwise distinct (embedded boundary)

  int euler() const { return num_vertices - (int)edges.size() + (int)squares.size(); }
};

DiskComplex dualize_polygon(const ArrangementDisk& arr);

// Labeled-cycle comparison of the polygon boundary with the dual's boundary
// cycle (length, classes, and endpoint consistency).
bool boundary_isomorphic(const DiskComplex& c);

// The glued subdivision: the 1-skeleton of the source complex plus, per
// polygon, the private interior vertices and edges of its disk; squares come
// from crossings.  Ids are deterministic (skeleton first, then per polygon in
// discovery order).
struct SquareComplexGlobal {
  int num_vertices = 0;
  std::vector<BicomplexEdge> edges;
  struct Square {
    std::array<SignedEdge, 4> boundary;  // traversal order, alternating V/H
    int polygon = -1;
    int crossing = -1;
  };
  std::vector<Square> squares;
  int num_skeleton_vertices = 0;
  int num_skeleton_edges = 0;
  bool subdivided = false;
  std::uint64_t source_hash = 0;

  EdgeClass edge_class(const SignedEdge& se) const { return edges[se.edge].cls; }
  int tail(const SignedEdge& se) const {
    return se.sign > 0 ? edges[se.edge].src : edges[se.edge].dst;
  }
  int head(const SignedEdge& se) const {
    return se.sign > 0 ? edges[se.edge].dst : edges[se.edge].src;
  }
  int euler() const { return num_vertices - (int)edges.size() + (int)squares.size(); }
};

// Glues one disk per polygon along its boundary cycle.  Throws
// std::invalid_argument on length/class mismatches and std::runtime_error if
// two boundary identifications of a shared face or dual edge disagree.
SquareComplexGlobal assemble(const Bicomplex& x, const std::vector<DiskComplex>& disks);

}  // namespace vh
