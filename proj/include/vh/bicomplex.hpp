#pragma once

#include <compare>
#include <vector>

#include "vh/presentation.hpp"

namespace vh {

// Directed reference to an edge: sign +1 traverses src->dst, -1 the reverse.
struct SignedEdge {
  int edge = 0;
  int sign = 1;
  SignedEdge inverse() const { return {edge, -sign}; }
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

struct BicomplexEdge {
  int id = 0;
  EdgeClass cls = EdgeClass::V;
  int src = 0;
  int dst = 0;
};

struct Polygon {
  std::vector<SignedEdge> attaching;  // cyclic, begins at the start of a vertical run
  int origin_relator = -1;
};

// A 2-complex with V/H labeled edges whose 2-cells use both classes.
struct Bicomplex {
  int num_vertices = 0;  // vertices are 0..num_vertices-1
  std::vector<BicomplexEdge> edges;
  std::vector<Polygon> polygons;
  bool subdivided = false;
  std::uint64_t source_hash = 0;

  EdgeClass edge_class(const SignedEdge& se) const { return edges[se.edge].cls; }
  int tail(const SignedEdge& se) const {
    return se.sign > 0 ? edges[se.edge].src : edges[se.edge].dst;
  }
  int head(const SignedEdge& se) const {
    return se.sign > 0 ? edges[se.edge].dst : edges[se.edge].src;
  }
};

struct Run {
  EdgeClass cls = EdgeClass::V;
  int begin = 0;  // index into the attaching sequence
  int length = 0;
};

// Maximal same-class runs V1 H1 ... Vr Hr of one polygon boundary.
struct SideDecomposition {
  std::vector<Run> runs;  // strictly alternating, first run vertical
  int r() const { return (int)runs.size() / 2; }
  int total_length() const;
  std::vector<int> vertical_lengths() const;
  std::vector<int> horizontal_lengths() const;
  std::vector<int> lengths(EdgeClass cls) const;
  int side_of(int index) const;  // run index containing boundary position
  EdgeClass class_of(int index) const;
};

// One vertex, one edge per generator, one polygon per relator.
// Throws std::invalid_argument if a relator is entirely vertical or horizontal.
Bicomplex build_standard_2complex(const Presentation& p);

SideDecomposition side_decompose(const Bicomplex& x, const Polygon& poly);

// Every side's length is at most the sum of the other same-class sides.
bool check_triangle(const SideDecomposition& sd);

// Canonical form of a one-vertical-one-horizontal length-2 boundary subpath:
// a path e1.e2 with e1 horizontal is stored as (e2^-1, e1^-1).
struct CornerKey {
  SignedEdge vertical;
  SignedEdge horizontal;
  friend bool operator==(const CornerKey&, const CornerKey&) = default;
  friend auto operator<=>(const CornerKey&, const CornerKey&) = default;
};

struct CornerOccurrence {
  int polygon = 0;
  int position = 0;  // corner between attaching[position] and attaching[position+1]
};

struct RepeatedCorner {
  CornerKey key;
  std::vector<CornerOccurrence> occurrences;  // size >= 2
};

CornerKey canonical_corner(const Bicomplex& x, const SignedEdge& e1, const SignedEdge& e2);

// All corner keys occurring at two or more positions (across or within polygons).
std::vector<RepeatedCorner> find_repeated_corners(const Bicomplex& x);

bool needs_parity_subdivision(const Bicomplex& x);

// If some polygon has an odd number of vertical or of horizontal boundary
// edges, subdivide every 1-cell into two (edge e becomes 2e, 2e+1 around a
// new midpoint vertex); otherwise return the complex unchanged.
Bicomplex parity_subdivide(const Bicomplex& x);

int euler_characteristic(const Bicomplex& x);

// Edges used by no polygon (permitted, but reported).
std::vector<int> free_edges(const Bicomplex& x);

}  // namespace vh
