#include "vh/bicomplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace vh {

int SideDecomposition::total_length() const {
  int n = 0;
  for (const Run& run : runs) n += run.length;
  return n;
}

std::vector<int> SideDecomposition::lengths(EdgeClass cls) const {
  std::vector<int> out;
  for (const Run& run : runs)
    if (run.cls == cls) out.push_back(run.length);
  return out;
}

std::vector<int> SideDecomposition::vertical_lengths() const { return lengths(EdgeClass::V); }
std::vector<int> SideDecomposition::horizontal_lengths() const { return lengths(EdgeClass::H); }

int SideDecomposition::side_of(int index) const {
  for (int i = 0; i < (int)runs.size(); i++)
    if (index >= runs[i].begin && index < runs[i].begin + runs[i].length) return i;
  throw std::out_of_range("boundary position outside polygon");
}

EdgeClass SideDecomposition::class_of(int index) const { return runs[side_of(index)].cls; }

Bicomplex build_standard_2complex(const Presentation& p) {
  Bicomplex x;
  x.num_vertices = 1;
  x.source_hash = presentation_hash(p);
  for (int i = 0; i < (int)p.generators.size(); i++)
    x.edges.push_back({i, p.generators[i].cls, 0, 0});
  for (int r = 0; r < (int)p.relators.size(); r++) {
    const Word& w = p.relators[r];
    Polygon poly;
    poly.origin_relator = r;
    for (const Letter& l : w) poly.attaching.push_back({l.gen, l.sign});
    int L = (int)poly.attaching.size();
    int start = -1;
    for (int j = 0; j < L; j++) {
      if (x.edge_class(poly.attaching[j]) == EdgeClass::V &&
          x.edge_class(poly.attaching[(j + L - 1) % L]) == EdgeClass::H) {
        start = j;
        break;
      }
    }
    if (start < 0)
      throw std::invalid_argument("relator " + std::to_string(r + 1) +
                                  " uses only one edge class and cannot bound a 2-cell");
    std::rotate(poly.attaching.begin(), poly.attaching.begin() + start, poly.attaching.end());
    x.polygons.push_back(std::move(poly));
  }
  return x;
}

SideDecomposition side_decompose(const Bicomplex& x, const Polygon& poly) {
  SideDecomposition sd;
  int L = (int)poly.attaching.size();
  for (int j = 0; j < L; j++) {
    EdgeClass c = x.edge_class(poly.attaching[j]);
    if (sd.runs.empty() || sd.runs.back().cls != c)
      sd.runs.push_back({c, j, 1});
    else
      sd.runs.back().length++;
  }
  if (sd.runs.empty() || sd.runs.front().cls != EdgeClass::V ||
      sd.runs.back().cls != EdgeClass::H || sd.runs.size() % 2 != 0)
    throw std::logic_error("polygon is not rotated to a canonical V...H run sequence");
  return sd;
}

bool check_triangle(const SideDecomposition& sd) {
  for (EdgeClass cls : {EdgeClass::V, EdgeClass::H}) {
    std::vector<int> len = sd.lengths(cls);
    int sum = std::accumulate(len.begin(), len.end(), 0);
    for (int l : len)
      if (l > sum - l) return false;
  }
  return true;
}

CornerKey canonical_corner(const Bicomplex& x, const SignedEdge& e1, const SignedEdge& e2) {
  if (x.edge_class(e1) == x.edge_class(e2))
    throw std::invalid_argument("corner must join edges of different classes");
  if (x.edge_class(e1) == EdgeClass::V) return {e1, e2};
  return {e2.inverse(), e1.inverse()};
}

std::vector<RepeatedCorner> find_repeated_corners(const Bicomplex& x) {
  std::map<CornerKey, std::vector<CornerOccurrence>> occ;
  for (int pi = 0; pi < (int)x.polygons.size(); pi++) {
    const auto& att = x.polygons[pi].attaching;
    int L = (int)att.size();
    for (int j = 0; j < L; j++) {
      const SignedEdge& e1 = att[j];
      const SignedEdge& e2 = att[(j + 1) % L];
      if (x.edge_class(e1) == x.edge_class(e2)) continue;
      occ[canonical_corner(x, e1, e2)].push_back({pi, j});
    }
  }
  std::vector<RepeatedCorner> out;
  for (auto& [key, list] : occ)
    if (list.size() >= 2) out.push_back({key, list});
  return out;
}

bool needs_parity_subdivision(const Bicomplex& x) {
  for (const Polygon& poly : x.polygons) {
    int v = 0, h = 0;
    for (const SignedEdge& se : poly.attaching)
      (x.edge_class(se) == EdgeClass::V ? v : h)++;
    if (v % 2 || h % 2) return true;
  }
  return false;
}

Bicomplex parity_subdivide(const Bicomplex& x) {
  if (x.subdivided || !needs_parity_subdivision(x)) return x;
  Bicomplex y;
  y.subdivided = true;
  y.source_hash = x.source_hash;
  y.num_vertices = x.num_vertices + (int)x.edges.size();
  for (const BicomplexEdge& e : x.edges) {
    int mid = x.num_vertices + e.id;
    y.edges.push_back({2 * e.id, e.cls, e.src, mid});
    y.edges.push_back({2 * e.id + 1, e.cls, mid, e.dst});
  }
  for (const Polygon& poly : x.polygons) {
    Polygon q;
    q.origin_relator = poly.origin_relator;
    for (const SignedEdge& se : poly.attaching) {
      if (se.sign > 0) {
        q.attaching.push_back({2 * se.edge, 1});
        q.attaching.push_back({2 * se.edge + 1, 1});
      } else {
        q.attaching.push_back({2 * se.edge + 1, -1});
        q.attaching.push_back({2 * se.edge, -1});
      }
    }
    y.polygons.push_back(std::move(q));
  }
  return y;
}

int euler_characteristic(const Bicomplex& x) {
  return x.num_vertices - (int)x.edges.size() + (int)x.polygons.size();
}

std::vector<int> free_edges(const Bicomplex& x) {
  std::vector<bool> used(x.edges.size(), false);
  for (const Polygon& poly : x.polygons)
    for (const SignedEdge& se : poly.attaching) used[se.edge] = true;
  std::vector<int> out;
  for (int e = 0; e < (int)x.edges.size(); e++)
    if (!used[e]) out.push_back(e);
  return out;
}

}  // namespace vh
