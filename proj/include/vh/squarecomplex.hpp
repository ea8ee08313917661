#pragma once

#include <limits>
#include <optional>
#include <string>

#include "vh/subdivision.hpp"

namespace vh {

// The local structure at a 0-cell: one node per incident edge-end, one arc
// per incident square corner (a multigraph; a square visiting the vertex
// twice contributes two arcs).
struct LinkGraph {
  int vertex = -1;
  struct Node {
    int edge = 0;
    int end = 0;  // 0 = source end, 1 = target end
    EdgeClass cls = EdgeClass::V;
  };
  std::vector<Node> nodes;
  struct Arc {
    int n0 = 0, n1 = 0;  // node indices
    int square = 0;
    int corner = 0;
  };
  std::vector<Arc> arcs;
};

LinkGraph vertex_link(const SquareComplexGlobal& x, int v);

// Shortest cycle length in the multigraph; nullopt for forests.  Parallel
// arcs and self-loops count as cycles of length 2 and 1.
std::optional<int> link_girth(const LinkGraph& g);

bool link_bipartite(const LinkGraph& g);

struct LinkViolation {
  int vertex = 0;
  int girth = 0;
  std::vector<int> squares;  // the squares of a witnessing short cycle
};

struct NpcReport {
  bool pass = true;
  bool bipartite_ok = true;  // failure here signals a labeling defect
  std::vector<LinkViolation> violations;
};

// Nonpositive curvature: every vertex link has girth >= 4.
NpcReport npc_check(const SquareComplexGlobal& x);

// Curvature in integer quarter turns: interior vertices get 4 - s(v) and
// boundary vertices 2 - s(v), where s(v) counts square corners; the total
// over a disk is exactly 4.
struct CurvatureLedger {
  std::vector<int> kappa;  // per disk vertex
  int total = 0;
};

// Requires an honest disk: Euler characteristic 1 and an embedded boundary.
// A total other than 4 throws std::logic_error.
CurvatureLedger gauss_bonnet_disk(const DiskComplex& c);

struct HyperbolicityReport {
  bool pass = true;
  std::vector<int> offending_polygons;  // side count < 6
};

// Every polygon has at least six sides; sufficient for hyperbolicity of the
// fundamental group, so failure decides nothing.
HyperbolicityReport hyperbolicity_criterion(const Bicomplex& x);

struct SmallCancellationReport {
  bool pass = true;
  int denominator = 6;
  int max_piece_length = 0;
  Word max_piece;
  std::vector<int> max_piece_per_relator;
};

// Metric small cancellation C'(1/den): every common subword of two distinct
// occurrences among the cyclic relators and their inverses (occurrences at
// different positions of one relator count) is shorter than |R|/den for every
// relator R containing it.
SmallCancellationReport small_cancellation_check(const Presentation& p, int denominator = 6);

std::string link_to_dot(const SquareComplexGlobal& x, const LinkGraph& g);

// {"vertices": [...], "edges": [...], "squares": [...], "meta": {...}} with
// squares listing signed edge ids (edge id + 1, negated for reversed
// traversal).  Byte-identical for identical complexes.
std::string complex_to_json(const SquareComplexGlobal& x);

}  // namespace vh
