#include "vh/squarecomplex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vh {

LinkGraph vertex_link(const SquareComplexGlobal& x, int v) {
  if (v < 0 || v >= x.num_vertices) throw std::invalid_argument("unknown vertex");
  LinkGraph g;
  g.vertex = v;
  std::map<std::pair<int, int>, int> node_index;  // (edge, end) -> node
  for (int e = 0; e < (int)x.edges.size(); e++) {
    if (x.edges[e].src == v) {
      node_index[{e, 0}] = (int)g.nodes.size();
      g.nodes.push_back({e, 0, x.edges[e].cls});
    }
    if (x.edges[e].dst == v) {
      node_index[{e, 1}] = (int)g.nodes.size();
      g.nodes.push_back({e, 1, x.edges[e].cls});
    }
  }
  for (int s = 0; s < (int)x.squares.size(); s++) {
    const auto& b = x.squares[s].boundary;
    for (int i = 0; i < 4; i++) {
      const SignedEdge& prev = b[(i + 3) % 4];
      const SignedEdge& cur = b[i];
      if (x.head(prev) != x.tail(cur))
        throw std::logic_error("square boundary is not a closed path");
      if (x.head(prev) != v) continue;
      int n0 = node_index.at({prev.edge, prev.sign > 0 ? 1 : 0});
      int n1 = node_index.at({cur.edge, cur.sign > 0 ? 0 : 1});
      g.arcs.push_back({n0, n1, s, i});
    }
  }
  return g;
}

std::optional<int> link_girth(const LinkGraph& g) {
  int n = (int)g.nodes.size();
  for (const auto& a : g.arcs)
    if (a.n0 == a.n1) return 1;
  std::map<std::pair<int, int>, int> mult;
  for (const auto& a : g.arcs) mult[{std::min(a.n0, a.n1), std::max(a.n0, a.n1)}]++;
  for (const auto& [k, m] : mult)
    if (m >= 2) return 2;

  std::vector<std::vector<int>> adj(n);
  for (const auto& [k, m] : mult) {
    adj[k.first].push_back(k.second);
    adj[k.second].push_back(k.first);
  }
  int best = std::numeric_limits<int>::max();
  for (int start = 0; start < n; start++) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> q{start};
    dist[start] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : adj[u]) {
        if (w == parent[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

bool link_bipartite(const LinkGraph& g) {
  for (const auto& a : g.arcs)
    if (g.nodes[a.n0].cls == g.nodes[a.n1].cls) return false;
  return true;
}

namespace {

// One pass over edges and squares; node numbering matches vertex_link.
std::vector<LinkGraph> build_all_links(const SquareComplexGlobal& x) {
  std::vector<LinkGraph> links(x.num_vertices);
  for (int v = 0; v < x.num_vertices; v++) links[v].vertex = v;
  std::vector<std::array<int, 2>> node_of(x.edges.size());
  for (int e = 0; e < (int)x.edges.size(); e++) {
    node_of[e][0] = (int)links[x.edges[e].src].nodes.size();
    links[x.edges[e].src].nodes.push_back({e, 0, x.edges[e].cls});
    node_of[e][1] = (int)links[x.edges[e].dst].nodes.size();
    links[x.edges[e].dst].nodes.push_back({e, 1, x.edges[e].cls});
  }
  for (int s = 0; s < (int)x.squares.size(); s++) {
    const auto& b = x.squares[s].boundary;
    for (int i = 0; i < 4; i++) {
      const SignedEdge& prev = b[(i + 3) % 4];
      const SignedEdge& cur = b[i];
      if (x.head(prev) != x.tail(cur))
        throw std::logic_error("square boundary is not a closed path");
      links[x.head(prev)].arcs.push_back({node_of[prev.edge][prev.sign > 0 ? 1 : 0],
                                          node_of[cur.edge][cur.sign > 0 ? 0 : 1], s, i});
    }
  }
  return links;
}

}  // namespace

NpcReport npc_check(const SquareComplexGlobal& x) {
  NpcReport rep;
  for (LinkGraph& g : build_all_links(x)) {
    if (!link_bipartite(g)) rep.bipartite_ok = false;
    std::optional<int> girth = link_girth(g);
    if (!girth || *girth >= 4) continue;
    LinkViolation viol;
    viol.vertex = g.vertex;
    viol.girth = *girth;
    if (*girth <= 2) {
      std::map<std::pair<int, int>, std::vector<int>> mult;
      for (const auto& a : g.arcs) {
        auto key = std::make_pair(std::min(a.n0, a.n1), std::max(a.n0, a.n1));
        mult[key].push_back(a.square);
        if (a.n0 == a.n1 || mult[key].size() >= 2) {
          viol.squares = mult[key];
          break;
        }
      }
    }
    rep.violations.push_back(std::move(viol));
    rep.pass = false;
  }
  return rep;
}

CurvatureLedger gauss_bonnet_disk(const DiskComplex& c) {
  if (c.euler() != 1 || !c.proper)
    throw std::invalid_argument(
        "gauss_bonnet_disk requires a disk: Euler characteristic 1 and an embedded boundary");
  std::vector<int> corners(c.num_vertices, 0);
  for (const auto& sq : c.squares)
    for (int v : sq.corner) corners[v]++;
  CurvatureLedger ledger;
  ledger.kappa.resize(c.num_vertices);
  for (int v = 0; v < c.num_vertices; v++) {
    ledger.kappa[v] = (c.vertex_on_boundary[v] ? 2 : 4) - corners[v];
    ledger.total += ledger.kappa[v];
  }
  if (ledger.total != 4)
    throw std::logic_error("curvature of a disk summed to " + std::to_string(ledger.total) +
                           " quarter turns instead of 4");
  return ledger;
}

HyperbolicityReport hyperbolicity_criterion(const Bicomplex& x) {
  HyperbolicityReport rep;
  for (int pi = 0; pi < (int)x.polygons.size(); pi++) {
    SideDecomposition sd = side_decompose(x, x.polygons[pi]);
    if ((int)sd.runs.size() < 6) {
      rep.offending_polygons.push_back(pi);
      rep.pass = false;
    }
  }
  return rep;
}

SmallCancellationReport small_cancellation_check(const Presentation& p, int denominator) {
  SmallCancellationReport rep;
  rep.denominator = denominator;
  rep.max_piece_per_relator.assign(p.relators.size(), 0);

  struct Occurrence {
    const Word* w;
    int rotation;
    int relator;
  };
  std::vector<std::vector<Word>> cyclic(p.relators.size());
  std::vector<Occurrence> occ;
  for (int r = 0; r < (int)p.relators.size(); r++) {
    cyclic[r] = {p.relators[r], inverse_word(p.relators[r])};
    for (const Word& w : cyclic[r])
      for (int k = 0; k < (int)w.size(); k++) occ.push_back({&w, k, r});
  }

  auto common_prefix = [](const Occurrence& x, const Occurrence& y) {
    int nx = (int)x.w->size(), ny = (int)y.w->size();
    int cap = std::min(nx, ny);
    for (int t = 0; t < cap; t++)
      if (!((*x.w)[(x.rotation + t) % nx] == (*y.w)[(y.rotation + t) % ny])) return t;
    return cap;
  };

  for (size_t i = 0; i < occ.size(); i++) {
    for (size_t j = i + 1; j < occ.size(); j++) {
      int len = common_prefix(occ[i], occ[j]);
      if (len == 0) continue;
      rep.max_piece_per_relator[occ[i].relator] =
          std::max(rep.max_piece_per_relator[occ[i].relator], len);
      rep.max_piece_per_relator[occ[j].relator] =
          std::max(rep.max_piece_per_relator[occ[j].relator], len);
      if (len > rep.max_piece_length) {
        rep.max_piece_length = len;
        rep.max_piece.clear();
        int n = (int)occ[i].w->size();
        for (int t = 0; t < len; t++) rep.max_piece.push_back((*occ[i].w)[(occ[i].rotation + t) % n]);
      }
    }
  }
  for (int r = 0; r < (int)p.relators.size(); r++)
    if ((long long)denominator * rep.max_piece_per_relator[r] >= (long long)p.relators[r].size())
      rep.pass = false;
  return rep;
}

std::string link_to_dot(const SquareComplexGlobal& x, const LinkGraph& g) {
  std::ostringstream out;
  out << "graph link_v" << g.vertex << " {\n";
  for (int i = 0; i < (int)g.nodes.size(); i++) {
    const auto& n = g.nodes[i];
    out << "  n" << i << " [label=\"e" << n.edge << (n.end == 0 ? ".src" : ".dst") << " "
        << class_letter(n.cls) << "\" shape=" << (n.cls == EdgeClass::V ? "box" : "ellipse")
        << "];\n";
  }
  for (const auto& a : g.arcs)
    out << "  n" << a.n0 << " -- n" << a.n1 << " [label=\"s" << a.square << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string complex_to_json(const SquareComplexGlobal& x) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < x.num_vertices; v++) j["vertices"].push_back(v);
  j["edges"] = nlohmann::json::array();
  for (const auto& e : x.edges)
    j["edges"].push_back({{"id", e.id},
                          {"class", std::string(1, class_letter(e.cls))},
                          {"src", e.src},
                          {"dst", e.dst}});
  j["squares"] = nlohmann::json::array();
  for (int s = 0; s < (int)x.squares.size(); s++) {
    nlohmann::json b = nlohmann::json::array();
    for (const SignedEdge& se : x.squares[s].boundary) b.push_back(se.sign * (se.edge + 1));
    j["squares"].push_back({{"id", s}, {"boundary", b}});
  }
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", (unsigned long long)x.source_hash);
  j["meta"] = {{"source_presentation_hash", std::string(hash)}, {"subdivided", x.subdivided}};
  return j.dump(2) + "\n";
}

}  // namespace vh
