#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <utility>

#include "vh/fixtures.hpp"
#include "vh/squarecomplex.hpp"
#include "vh/subdivision.hpp"

using namespace vh;

namespace {

Presentation parse_ok(const std::string& text) {
  ParseResult r = parse_presentation(text);
  REQUIRE(r.ok());
  return *r.presentation;
}

struct Built {
  Bicomplex x;
  std::vector<SideDecomposition> sds;
  std::vector<ArrangementDisk> arrs;
  std::vector<DiskComplex> disks;
};

Built build_all(const Presentation& p) {
  Built b{parity_subdivide(build_standard_2complex(p)), {}, {}, {}};
  for (const auto& poly : b.x.polygons) {
    SideDecomposition sd = side_decompose(b.x, poly);
    ArrangementDisk arr = build_chords(sd, greedy_pairing(sd, EdgeClass::V),
                                       greedy_pairing(sd, EdgeClass::H));
    b.disks.push_back(dualize_polygon(arr));
    b.arrs.push_back(std::move(arr));
    b.sds.push_back(std::move(sd));
  }
  return b;
}

bool chord_is(const Chord& c, EdgeClass cls, int a, int b) {
  return c.cls == cls && c.a == a && c.b == b;
}

}  // namespace

TEST_CASE("square chord system") {
  Built b = build_all(torus_presentation());
  REQUIRE(b.arrs.size() == 1);
  const ArrangementDisk& arr = b.arrs[0];
  CHECK(arr.L == 4);
  REQUIRE(arr.chords.size() == 2);
  CHECK(arr.chords[0].cls == EdgeClass::V);
  CHECK(arr.chords[0].a == 0);
  CHECK(arr.chords[0].b == 2);
  CHECK(arr.chords[1].cls == EdgeClass::H);
  CHECK(arr.chords[1].a == 1);
  CHECK(arr.chords[1].b == 3);
  REQUIRE(arr.crossings.size() == 1);
  CHECK(arr.crossings[0].v_chord == 0);
  CHECK(arr.crossings[0].h_chord == 1);
  CHECK(arr.chord_crossings[0] == std::vector<int>{0});
  CHECK(arr.chord_crossings[1] == std::vector<int>{0});
}

TEST_CASE("square dual is one square") {
  Built b = build_all(torus_presentation());
  const DiskComplex& d = b.disks[0];
  CHECK(d.num_vertices == 4);
  CHECK(d.edges.size() == 4);
  CHECK(d.squares.size() == 1);
  CHECK(d.num_crossings == 1);
  CHECK(d.euler() == 1);
  CHECK(d.proper);
  CHECK(boundary_isomorphic(d));
  for (int k = 0; k < 4; k++) CHECK(d.boundary_classes[k] == (k % 2 ? EdgeClass::H : EdgeClass::V));
  // The one square's corners are the four boundary faces, each once.
  std::set<int> corners(d.squares[0].corner.begin(), d.squares[0].corner.end());
  CHECK(corners.size() == 4);
}

TEST_CASE("nested chords of the conjugate relator") {
  // h v^2 h^-1 v^2 rotated to v v h^-1 v v h: unique pairings, two crossings.
  Built b = build_all(counterexample3(2, 2));
  const ArrangementDisk& arr = b.arrs[0];
  REQUIRE(arr.chords.size() == 3);
  CHECK(chord_is(arr.chords[0], EdgeClass::V, 0, 4));
  CHECK(chord_is(arr.chords[1], EdgeClass::V, 1, 3));
  CHECK(chord_is(arr.chords[2], EdgeClass::H, 2, 5));
  CHECK(arr.crossings.size() == 2);
  // The H chord traverses the nested V chords inner first from midpoint 2.
  CHECK(arr.chord_crossings[2].size() == 2);
  CHECK(arr.crossings[arr.chord_crossings[2][0]].v_chord == 1);
  CHECK(arr.crossings[arr.chord_crossings[2][1]].v_chord == 0);

  const DiskComplex& d = b.disks[0];
  CHECK(d.num_vertices == 6);
  CHECK(d.edges.size() == 7);
  CHECK(d.squares.size() == 2);
  CHECK(d.euler() == 1);
  CHECK(d.proper);
  CHECK(boundary_isomorphic(d));
}

TEST_CASE("chords with several crossings are ordered by entry arc") {
  // d a^-1 d a^-1 b^-1 d^-1 c^-1 b: V chords (0,2),(3,6), H chords (1,4),(5,7).
  Built b = build_all(
      parse_ok("vertical: a b\nhorizontal: c d\nrelator: d a^-1 d a^-1 b^-1 d^-1 c^-1 b\n"));
  const ArrangementDisk& arr = b.arrs[0];
  REQUIRE(arr.chords.size() == 4);
  CHECK(chord_is(arr.chords[0], EdgeClass::V, 0, 2));
  CHECK(chord_is(arr.chords[1], EdgeClass::V, 3, 6));
  CHECK(chord_is(arr.chords[2], EdgeClass::H, 1, 4));
  CHECK(chord_is(arr.chords[3], EdgeClass::H, 5, 7));
  REQUIRE(arr.crossings.size() == 3);
  // Chord (1,4) meets (0,2) before (3,6); chord (5,7) meets only (3,6).
  REQUIRE(arr.chord_crossings[2].size() == 2);
  CHECK(arr.crossings[arr.chord_crossings[2][0]].v_chord == 0);
  CHECK(arr.crossings[arr.chord_crossings[2][1]].v_chord == 1);
  CHECK(arr.chord_crossings[3].size() == 1);
  CHECK(arr.crossings[arr.chord_crossings[3][0]].v_chord == 1);

  const DiskComplex& d = b.disks[0];
  CHECK(d.proper);
  CHECK(d.num_vertices == 8);
  CHECK(d.edges.size() == 10);
  CHECK(d.squares.size() == 3);
  CHECK(d.euler() == 1);
}

TEST_CASE("disconnected chord system pinches the boundary") {
  // Unique pairings give chords (0,6),(3,5) and (1,7),(2,4): two crossing
  // pairs that never meet, so one face touches two boundary arcs.
  Built b = build_all(
      parse_ok("vertical: a b\nhorizontal: c d\nrelator: c a^-1 c^-1 d^-1 a c b a^-1\n"));
  const ArrangementDisk& arr = b.arrs[0];
  REQUIRE(arr.chords.size() == 4);
  CHECK(chord_is(arr.chords[0], EdgeClass::V, 0, 6));
  CHECK(chord_is(arr.chords[1], EdgeClass::V, 3, 5));
  CHECK(chord_is(arr.chords[2], EdgeClass::H, 1, 7));
  CHECK(chord_is(arr.chords[3], EdgeClass::H, 2, 4));
  CHECK(arr.crossings.size() == 2);

  const DiskComplex& d = b.disks[0];
  CHECK(!d.proper);
  CHECK(d.num_vertices == 7);
  CHECK(d.edges.size() == 8);
  CHECK(d.squares.size() == 2);
  CHECK(d.euler() == 1);
  // The two squares share exactly one vertex and no edge.
  std::set<int> c0(d.squares[0].corner.begin(), d.squares[0].corner.end());
  std::set<int> c1(d.squares[1].corner.begin(), d.squares[1].corner.end());
  std::vector<int> common;
  std::set_intersection(c0.begin(), c0.end(), c1.begin(), c1.end(), std::back_inserter(common));
  CHECK(common.size() == 1);
}

TEST_CASE("parallel chords dualize to a path") {
  ArrangementDisk arr;
  arr.L = 4;
  arr.boundary_classes = {EdgeClass::V, EdgeClass::V, EdgeClass::V, EdgeClass::V};
  arr.chords = {{EdgeClass::V, 0, 1}, {EdgeClass::V, 2, 3}};
  arr.chord_crossings = {{}, {}};
  DiskComplex d = dualize_polygon(arr);
  CHECK(d.num_vertices == 3);
  CHECK(d.edges.size() == 2);
  CHECK(d.squares.empty());
  CHECK(d.euler() == 1);
  CHECK(!d.proper);
}

TEST_CASE("every disk of the six-relator complex is an embedded disk") {
  Built b = build_all(leary_presentation());
  CHECK(b.x.subdivided);
  REQUIRE(b.disks.size() == 6);
  std::vector<int> expected_squares{6, 10, 10, 10, 10, 12};
  for (size_t i = 0; i < b.disks.size(); i++) {
    const DiskComplex& d = b.disks[i];
    CHECK(d.euler() == 1);
    CHECK((int)d.squares.size() == d.num_crossings);
    CHECK((int)d.squares.size() == expected_squares[i]);
    CHECK(d.proper);
    CHECK(boundary_isomorphic(d));
    CHECK(d.L == (int)b.x.polygons[i].attaching.size());
    for (int k = 0; k < d.L; k++)
      CHECK(d.boundary_classes[k] == b.x.edge_class(b.x.polygons[i].attaching[k]));
  }
}

TEST_CASE("squares alternate classes around each crossing") {
  Built b = build_all(leary_presentation());
  for (const DiskComplex& d : b.disks)
    for (const auto& sq : d.squares)
      for (int i = 0; i < 4; i++) {
        CHECK(d.edges[sq.edge[i]].cls != d.edges[sq.edge[(i + 1) % 4]].cls);
        // Consecutive square edges meet at the shared corner face.
        int from = sq.sign[i] > 0 ? d.edges[sq.edge[i]].f1 : d.edges[sq.edge[i]].f0;
        CHECK(from == sq.corner[(i + 1) % 4]);
      }
}

TEST_CASE("assembling the torus gives back one square on the skeleton") {
  Built b = build_all(torus_presentation());
  SquareComplexGlobal g = assemble(b.x, b.disks);
  CHECK(g.num_vertices == 1);
  CHECK(g.edges.size() == 2);
  CHECK(g.squares.size() == 1);
  CHECK(g.euler() == 0);
  CHECK(g.num_skeleton_vertices == 1);
  CHECK(g.num_skeleton_edges == 2);
  CHECK(!g.subdivided);
  // The square's path is the original attaching map up to starting corner.
  const auto& sq = g.squares[0];
  CHECK(sq.polygon == 0);
  std::multiset<std::pair<int, int>> sides;
  for (int i = 0; i < 4; i++) {
    CHECK(g.edge_class(sq.boundary[i]) != g.edge_class(sq.boundary[(i + 1) % 4]));
    CHECK(g.head(sq.boundary[i]) == g.tail(sq.boundary[(i + 1) % 4]));
    sides.insert({sq.boundary[i].edge, sq.boundary[i].sign});
  }
  CHECK(sides == std::multiset<std::pair<int, int>>{{0, 1}, {0, -1}, {1, 1}, {1, -1}});
}

TEST_CASE("assembled six-relator complex") {
  Built b = build_all(leary_presentation());
  SquareComplexGlobal g = assemble(b.x, b.disks);
  CHECK(g.num_skeleton_vertices == 7);
  CHECK(g.num_skeleton_edges == 12);
  CHECK(g.num_vertices == 24);
  CHECK(g.edges.size() == 81);
  CHECK(g.squares.size() == 58);
  CHECK(g.euler() == 1);
  CHECK(g.euler() == euler_characteristic(b.x));
  CHECK(g.subdivided);
  CHECK(g.source_hash == b.x.source_hash);

  // Skeleton edges come first and keep their classes.
  for (int e = 0; e < g.num_skeleton_edges; e++) {
    CHECK(g.edges[e].id == e);
    CHECK(g.edges[e].cls == b.x.edges[e].cls);
    CHECK(g.edges[e].src == b.x.edges[e].src);
    CHECK(g.edges[e].dst == b.x.edges[e].dst);
  }
  int total_crossings = 0;
  for (const auto& d : b.disks) total_crossings += d.num_crossings;
  CHECK((int)g.squares.size() == total_crossings);
  for (const auto& sq : g.squares) {
    for (int i = 0; i < 4; i++) {
      CHECK(g.edge_class(sq.boundary[i]) !=
            g.edge_class(sq.boundary[(i + 1) % 4]));
      CHECK(g.head(sq.boundary[i]) == g.tail(sq.boundary[(i + 1) % 4]));
    }
  }
}

TEST_CASE("assembly export is deterministic") {
  Built b1 = build_all(leary_presentation());
  Built b2 = build_all(leary_presentation());
  CHECK(complex_to_json(assemble(b1.x, b1.disks)) == complex_to_json(assemble(b2.x, b2.disks)));
}

TEST_CASE("assembly rejects mismatched disks") {
  Built torus = build_all(torus_presentation());
  Built leary = build_all(leary_presentation());
  CHECK_THROWS_AS(assemble(torus.x, leary.disks), std::invalid_argument);
  CHECK_THROWS_AS(assemble(torus.x, leary.disks), std::invalid_argument);
  std::vector<DiskComplex> wrong{leary.disks[0]};
  CHECK_THROWS_AS(assemble(torus.x, wrong), std::invalid_argument);
}

TEST_CASE("assembly rejects a pinched face spanning two skeleton vertices") {
  // Hand-built two-vertex skeleton with a fabricated disk whose boundary walk
  // visits one face at positions with different attaching heads.
  Bicomplex x;
  x.num_vertices = 2;
  x.edges = {{0, EdgeClass::V, 0, 1}, {1, EdgeClass::H, 1, 0}};
  x.polygons.push_back({{{0, 1}, {1, 1}}, 0});
  DiskComplex d;
  d.L = 2;
  d.boundary_classes = {EdgeClass::V, EdgeClass::H};
  d.num_vertices = 1;
  d.vertex_on_boundary = {true};
  d.edges = {{EdgeClass::V, 0, 0}, {EdgeClass::H, 0, 0}};
  d.boundary_vertex = {0, 0};
  d.boundary_edge = {0, 1};
  d.boundary_edge_sign = {1, 1};
  d.proper = false;
  CHECK_THROWS_AS(assemble(x, {d}), std::runtime_error);
}
