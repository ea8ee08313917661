#include "vh/subdivision.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace vh {

namespace {

bool strictly_inside(int x, int a, int b) { return a < x && x < b; }

}  // namespace

ArrangementDisk build_chords(const SideDecomposition& sd, const Pairing& vp, const Pairing& hp) {
  for (const Pairing* p : {&vp, &hp}) {
    AdmissibilityReport rep = verify_admissible(sd, *p);
    if (!rep.ok) throw std::invalid_argument("inadmissible pairing: " + rep.violation);
  }
  if (vp.cls != EdgeClass::V || hp.cls != EdgeClass::H)
    throw std::invalid_argument("pairings passed in the wrong class order");

  ArrangementDisk arr;
  arr.L = sd.total_length();
  arr.boundary_classes.resize(arr.L);
  for (int k = 0; k < arr.L; k++) arr.boundary_classes[k] = sd.class_of(k);
  for (auto [a, b] : vp.pairs) arr.chords.push_back({EdgeClass::V, a, b});
  int nv = (int)arr.chords.size();
  for (auto [a, b] : hp.pairs) arr.chords.push_back({EdgeClass::H, a, b});
  arr.chord_crossings.resize(arr.chords.size());

  for (int i = 0; i < nv; i++) {
    const Chord& v = arr.chords[i];
    std::vector<std::pair<int, int>> hits;  // (endpoint inside (a,b), h chord)
    for (int j = nv; j < (int)arr.chords.size(); j++) {
      const Chord& h = arr.chords[j];
      bool ca = strictly_inside(h.a, v.a, v.b);
      bool cb = strictly_inside(h.b, v.a, v.b);
      if (ca != cb) hits.push_back({ca ? h.a : h.b, j});
    }
    std::sort(hits.begin(), hits.end());
    for (auto [pos, j] : hits) {
      int id = (int)arr.crossings.size();
      arr.crossings.push_back({i, j});
      arr.chord_crossings[i].push_back(id);
    }
  }
  for (int j = nv; j < (int)arr.chords.size(); j++) {
    const Chord& h = arr.chords[j];
    std::vector<std::pair<int, int>> hits;
    for (int id = 0; id < (int)arr.crossings.size(); id++) {
      if (arr.crossings[id].h_chord != j) continue;
      const Chord& v = arr.chords[arr.crossings[id].v_chord];
      hits.push_back({strictly_inside(v.a, h.a, h.b) ? v.a : v.b, id});
    }
    std::sort(hits.begin(), hits.end());
    for (auto [pos, id] : hits) arr.chord_crossings[j].push_back(id);
  }
  return arr;
}

namespace {

// Combinatorial embedding of the chord system plus the boundary circle.
// Graph vertices: midpoints 0..L-1, then one vertex per crossing.  Segments
// carry two darts (2s: u->v, 2s+1: v->u); rotations list out-darts in
// counterclockwise order, so the face left of a dart is traced by taking the
// rotation predecessor of its reverse.
struct Tracer {
  const ArrangementDisk& arr;
  int L, S = 0;  // S chord segments; arcs are segments S..S+L-1

  struct Segment {
    int u = 0, v = 0;
    int chord = -1;  // -1 for boundary arcs
  };
  std::vector<Segment> segments;
  std::vector<std::vector<int>> rotation;  // per vertex, out-dart ids ccw
  std::vector<int> rotation_pos;           // per dart, index in its tail's rotation
  std::vector<int> face_of;                // per dart
  int num_faces = 0;
  int outer_face = -1;
  std::vector<int> face_sides;      // orbit length
  std::vector<int> face_arc_count;  // arcs in the orbit

  explicit Tracer(const ArrangementDisk& a) : arr(a), L(a.L) { build(); trace(); }

  int tail(int dart) const {
    const Segment& s = segments[dart / 2];
    return dart % 2 == 0 ? s.u : s.v;
  }
  int to(int dart) const {
    const Segment& s = segments[dart / 2];
    return dart % 2 == 0 ? s.v : s.u;
  }

  void build() {
    int X = (int)arr.crossings.size();
    // Chord chains: midpoint a, crossings in order, midpoint b.
    std::vector<int> seg_at_mid(L, -1);         // chord segment dart out of each midpoint
    std::vector<std::array<int, 4>> cross_darts(X);  // darts toward v.a, v.b, h.a, h.b
    for (int ci = 0; ci < (int)arr.chords.size(); ci++) {
      const Chord& c = arr.chords[ci];
      std::vector<int> chain{c.a};
      for (int id : arr.chord_crossings[ci]) chain.push_back(L + id);
      chain.push_back(c.b);
      std::vector<int> segs;
      for (size_t t = 0; t + 1 < chain.size(); t++) {
        segs.push_back((int)segments.size());
        segments.push_back({chain[t], chain[t + 1], ci});
      }
      seg_at_mid[c.a] = 2 * segs.front();
      seg_at_mid[c.b] = 2 * segs.back() + 1;
      bool vertical = c.cls == EdgeClass::V;
      for (size_t t = 0; t < arr.chord_crossings[ci].size(); t++) {
        int id = arr.chord_crossings[ci][t];
        cross_darts[id][vertical ? 0 : 2] = 2 * segs[t] + 1;  // toward a
        cross_darts[id][vertical ? 1 : 3] = 2 * segs[t + 1];  // toward b
      }
    }
    S = (int)segments.size();
    for (int k = 0; k < L; k++) segments.push_back({k, (k + 1) % L, -1});

    rotation.resize(L + X);
    for (int k = 0; k < L; k++) {
      if (seg_at_mid[k] < 0) throw std::logic_error("midpoint without a chord");
      rotation[k] = {2 * (S + k), seg_at_mid[k], 2 * (S + (k + L - 1) % L) + 1};
    }
    for (int id = 0; id < X; id++) {
      const Chord& v = arr.chords[arr.crossings[id].v_chord];
      const Chord& h = arr.chords[arr.crossings[id].h_chord];
      std::vector<std::pair<int, int>> order = {{v.a, cross_darts[id][0]},
                                                {v.b, cross_darts[id][1]},
                                                {h.a, cross_darts[id][2]},
                                                {h.b, cross_darts[id][3]}};
      std::sort(order.begin(), order.end());
      for (auto [pos, dart] : order) rotation[L + id].push_back(dart);
    }
    rotation_pos.assign(2 * segments.size(), -1);
    for (const auto& rot : rotation)
      for (int i = 0; i < (int)rot.size(); i++) rotation_pos[rot[i]] = i;
    for (int d = 0; d < (int)rotation_pos.size(); d++)
      if (rotation_pos[d] < 0) throw std::logic_error("dart missing from rotation system");
  }

  int next(int dart) const {
    int r = dart ^ 1;
    const auto& rot = rotation[tail(r)];
    int i = rotation_pos[r];
    return rot[(i + rot.size() - 1) % rot.size()];
  }

  void trace() {
    face_of.assign(2 * segments.size(), -1);
    for (int v = 0; v < (int)rotation.size(); v++) {
      for (int d0 : rotation[v]) {
        if (face_of[d0] >= 0) continue;
        int f = num_faces++;
        face_sides.push_back(0);
        face_arc_count.push_back(0);
        int d = d0;
        do {
          face_of[d] = f;
          face_sides[f]++;
          if (d / 2 >= S) face_arc_count[f]++;
          d = next(d);
        } while (d != d0);
      }
    }
    outer_face = face_of[2 * S + 1];  // right of arc 0 = outside the disk
    for (int k = 0; k < L; k++) {
      if (face_of[2 * (S + k) + 1] != outer_face)
        throw std::logic_error("boundary does not bound a single outer face");
      if (face_of[2 * (S + k)] == outer_face)
        throw std::logic_error("an arc's inner side traced to the outer face");
    }
    for (int f = 0; f < num_faces; f++) {
      if (f == outer_face || face_arc_count[f] > 0) continue;
      if (face_sides[f] < 4 || face_sides[f] % 2)
        throw std::logic_error("interior face with fewer than four sides");
    }
  }
};

}  // namespace

DiskComplex dualize_polygon(const ArrangementDisk& arr) {
  Tracer tr(arr);
  DiskComplex c;
  c.L = arr.L;
  c.boundary_classes = arr.boundary_classes;
  c.num_crossings = (int)arr.crossings.size();

  std::vector<int> face_vertex(tr.num_faces, -1);
  for (int f = 0; f < tr.num_faces; f++)
    if (f != tr.outer_face) face_vertex[f] = c.num_vertices++;
  c.vertex_on_boundary.assign(c.num_vertices, false);

  for (int s = 0; s < tr.S; s++) {
    EdgeClass cls = arr.chords[tr.segments[s].chord].cls;
    c.edges.push_back({cls, face_vertex[tr.face_of[2 * s]], face_vertex[tr.face_of[2 * s + 1]]});
  }

  c.boundary_vertex.resize(c.L);
  c.boundary_edge.resize(c.L);
  c.boundary_edge_sign.resize(c.L);
  for (int k = 0; k < c.L; k++) {
    c.boundary_vertex[k] = face_vertex[tr.face_of[2 * (tr.S + k)]];
    c.vertex_on_boundary[c.boundary_vertex[k]] = true;
    c.boundary_edge[k] = tr.rotation[k][1] / 2;  // the chord segment at midpoint k
  }
  for (int k = 0; k < c.L; k++) {
    const DiskComplex::Edge& e = c.edges[c.boundary_edge[k]];
    int prev = c.boundary_vertex[(k + c.L - 1) % c.L];
    int cur = c.boundary_vertex[k];
    if (e.f0 == prev && e.f1 == cur)
      c.boundary_edge_sign[k] = 1;
    else if (e.f1 == prev && e.f0 == cur)
      c.boundary_edge_sign[k] = -1;
    else
      throw std::logic_error("boundary dual edge does not join the adjacent boundary faces");
    if (e.cls != c.boundary_classes[k])
      throw std::logic_error("boundary dual edge class mismatch");
  }

  for (int id = 0; id < c.num_crossings; id++) {
    DiskComplex::Square sq;
    const auto& rot = tr.rotation[arr.L + id];
    for (int i = 0; i < 4; i++) {
      sq.corner[i] = face_vertex[tr.face_of[rot[i]]];
      sq.edge[i] = rot[(i + 1) % 4] / 2;
    }
    for (int i = 0; i < 4; i++) {
      const DiskComplex::Edge& e = c.edges[sq.edge[i]];
      int from = sq.corner[i], to = sq.corner[(i + 1) % 4];
      if (e.f0 == from && e.f1 == to)
        sq.sign[i] = 1;
      else if (e.f1 == from && e.f0 == to)
        sq.sign[i] = -1;
      else
        throw std::logic_error("square side does not join its adjacent sectors");
    }
    c.squares.push_back(sq);
  }

  std::vector<int> sorted = c.boundary_vertex;
  std::sort(sorted.begin(), sorted.end());
  c.proper = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  if (c.euler() != 1) throw std::logic_error("dual of a disk arrangement must have Euler characteristic 1");
  return c;
}

bool boundary_isomorphic(const DiskComplex& c) {
  if ((int)c.boundary_vertex.size() != c.L || (int)c.boundary_edge.size() != c.L) return false;
  for (int k = 0; k < c.L; k++) {
    const DiskComplex::Edge& e = c.edges[c.boundary_edge[k]];
    if (e.cls != c.boundary_classes[k]) return false;
    int prev = c.boundary_vertex[(k + c.L - 1) % c.L];
    int cur = c.boundary_vertex[k];
    int from = c.boundary_edge_sign[k] > 0 ? e.f0 : e.f1;
    int to = c.boundary_edge_sign[k] > 0 ? e.f1 : e.f0;
    if (from != prev || to != cur) return false;
  }
  return true;
}

SquareComplexGlobal assemble(const Bicomplex& x, const std::vector<DiskComplex>& disks) {
  if (disks.size() != x.polygons.size())
    throw std::invalid_argument("expected one disk per polygon");
  for (size_t pi = 0; pi < disks.size(); pi++) {
    const auto& att = x.polygons[pi].attaching;
    const DiskComplex& d = disks[pi];
    if (d.L != (int)att.size())
      throw std::invalid_argument("disk boundary length mismatch on polygon " + std::to_string(pi));
    for (int k = 0; k < d.L; k++)
      if (d.boundary_classes[k] != x.edge_class(att[k]))
        throw std::invalid_argument("disk boundary class mismatch on polygon " + std::to_string(pi));
  }

  SquareComplexGlobal g;
  g.subdivided = x.subdivided;
  g.source_hash = x.source_hash;
  g.num_skeleton_vertices = x.num_vertices;
  g.num_skeleton_edges = (int)x.edges.size();
  g.num_vertices = x.num_vertices;
  g.edges = x.edges;

  for (size_t pi = 0; pi < disks.size(); pi++) {
    const DiskComplex& d = disks[pi];
    const auto& att = x.polygons[pi].attaching;

    // Vertex targets: boundary face k carries the boundary vertex after edge
    // k, i.e. the head of attaching[k]; all identifications must agree.
    std::vector<std::optional<int>> vertex_target(d.num_vertices);
    for (int k = 0; k < d.L; k++) {
      int target = x.head(att[k]);
      auto& slot = vertex_target[d.boundary_vertex[k]];
      if (slot && *slot != target)
        throw std::runtime_error("polygon " + std::to_string(pi) +
                                 ": a pinched boundary face touches two different "
                                 "1-skeleton vertices; the disk cannot be glued");
      slot = target;
    }
    std::vector<int> global_vertex(d.num_vertices);
    for (int v = 0; v < d.num_vertices; v++)
      global_vertex[v] = vertex_target[v] ? *vertex_target[v] : g.num_vertices++;

    // Edge targets: traversing boundary edge k of the polygon crosses dual
    // edge boundary_edge[k]; in the stored f0->f1 orientation that dual edge
    // is attaching[k] (sign +1) or its inverse (sign -1).
    std::vector<std::optional<SignedEdge>> edge_target(d.edges.size());
    for (int k = 0; k < d.L; k++) {
      SignedEdge ref = d.boundary_edge_sign[k] > 0 ? att[k] : att[k].inverse();
      auto& slot = edge_target[d.boundary_edge[k]];
      if (slot && !(*slot == ref))
        throw std::runtime_error("polygon " + std::to_string(pi) +
                                 ": a chord with no crossings joins boundary edges that "
                                 "are not inverse in the 1-skeleton; the disk cannot be glued");
      slot = ref;
    }
    std::vector<SignedEdge> global_edge(d.edges.size());
    for (size_t e = 0; e < d.edges.size(); e++) {
      if (edge_target[e]) {
        global_edge[e] = *edge_target[e];
        const BicomplexEdge& skel = g.edges[global_edge[e].edge];
        if (skel.cls != d.edges[e].cls)
          throw std::logic_error("boundary dual edge class disagrees with the 1-skeleton");
      } else {
        int id = (int)g.edges.size();
        g.edges.push_back({id, d.edges[e].cls, global_vertex[d.edges[e].f0],
                           global_vertex[d.edges[e].f1]});
        global_edge[e] = {id, 1};
      }
    }

    for (int s = 0; s < (int)d.squares.size(); s++) {
      const DiskComplex::Square& sq = d.squares[s];
      SquareComplexGlobal::Square out;
      out.polygon = (int)pi;
      out.crossing = s;
      for (int i = 0; i < 4; i++) {
        SignedEdge ref = global_edge[sq.edge[i]];
        out.boundary[i] = sq.sign[i] > 0 ? ref : ref.inverse();
      }
      for (int i = 0; i < 4; i++) {
        if (g.tail(out.boundary[i]) != global_vertex[sq.corner[i]] ||
            g.head(out.boundary[i]) != global_vertex[sq.corner[(i + 1) % 4]])
          throw std::logic_error("square boundary does not close up after gluing");
        if (g.edge_class(out.boundary[i]) == g.edge_class(out.boundary[(i + 1) % 4]))
          throw std::logic_error("square boundary does not alternate V/H after gluing");
      }
      g.squares.push_back(out);
    }
  }
  return g;
}

}  // namespace vh
