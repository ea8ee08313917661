#include "vh/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vh {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "n/a";
  }
}

namespace {

std::string signed_edge_name(const Presentation& p, bool subdivided, const SignedEdge& se) {
  // Corner witnesses are reported on the original complex, where edge ids are
  // generator ids.
  (void)subdivided;
  std::string s = p.generators[se.edge].name;
  if (se.sign < 0) s += "^-1";
  return s;
}

}  // namespace

CheckOutcome run_check(const Presentation& p, const CheckOptions& opt) {
  CheckOutcome out;
  VerificationReport& r = out.report;
  r.serialized = serialize_presentation(p);
  r.hash = presentation_hash(p);

  Bicomplex x0;
  try {
    x0 = build_standard_2complex(p);
  } catch (const std::invalid_argument& e) {
    r.bicomplex_error = e.what();
    r.failing_stage = "bicomplex";
    return out;
  }
  out.complex0 = x0;
  r.vertices0 = x0.num_vertices;
  r.edges0 = (int)x0.edges.size();
  r.polygons0 = (int)x0.polygons.size();
  r.chi0 = euler_characteristic(x0);
  r.free_edge_ids = free_edges(x0);

  bool triangle_all = true;
  for (int pi = 0; pi < (int)x0.polygons.size(); pi++) {
    SideDecomposition sd = side_decompose(x0, x0.polygons[pi]);
    PolygonCheck pc;
    pc.polygon = pi;
    pc.origin_relator = x0.polygons[pi].origin_relator;
    pc.vertical = sd.vertical_lengths();
    pc.horizontal = sd.horizontal_lengths();
    pc.sides = (int)sd.runs.size();
    pc.triangle_ok = check_triangle(sd);
    triangle_all = triangle_all && pc.triangle_ok;
    r.polygon_checks.push_back(std::move(pc));
  }
  r.triangle = triangle_all ? Verdict::Pass : Verdict::Fail;

  std::vector<RepeatedCorner> repeated = find_repeated_corners(x0);
  r.corners = repeated.empty() ? Verdict::Pass : Verdict::Fail;
  for (const RepeatedCorner& rc : repeated)
    r.corner_witnesses.push_back({signed_edge_name(p, false, rc.key.vertical),
                                  signed_edge_name(p, false, rc.key.horizontal), rc.occurrences});

  HyperbolicityReport hyp = hyperbolicity_criterion(x0);
  r.hyperbolicity = hyp.pass ? Verdict::Pass : Verdict::Fail;
  r.hyperbolicity_offenders = hyp.offending_polygons;

  SmallCancellationReport sc = small_cancellation_check(p);
  r.small_cancellation = sc.pass ? Verdict::Pass : Verdict::Fail;
  r.max_piece_length = sc.max_piece_length;
  r.max_piece = word_to_string(p, sc.max_piece);

  if (!triangle_all) {
    r.failing_stage = "triangle";
    return out;
  }

  r.parity_applied = needs_parity_subdivision(x0);
  Bicomplex x = parity_subdivide(x0);
  out.complex_sub = x;

  bool pairings_ok = true;
  std::vector<std::pair<Pairing, Pairing>> polygon_pairings;
  for (int pi = 0; pi < (int)x.polygons.size() && pairings_ok; pi++) {
    SideDecomposition sd = side_decompose(x, x.polygons[pi]);
    std::pair<Pairing, Pairing> pr;
    for (EdgeClass cls : {EdgeClass::V, EdgeClass::H}) {
      const CheckOptions::PairingOverride* ov = nullptr;
      for (const auto& o : opt.overrides)
        if (o.polygon == pi && o.pairing.cls == cls) ov = &o;
      Pairing pairing;
      if (ov) {
        pairing = ov->pairing;
        std::sort(pairing.pairs.begin(), pairing.pairs.end());
        AdmissibilityReport ar = verify_admissible(sd, pairing);
        if (!ar.ok) {
          pairings_ok = false;
          r.pairing_failure = "polygon " + std::to_string(pi) + " (" + class_letter(cls) +
                              std::string("): ") + ar.violation;
          break;
        }
      } else {
        std::string reason;
        if (!pairing_exists(sd.lengths(cls), &reason)) {
          pairings_ok = false;
          r.pairing_failure =
              "polygon " + std::to_string(pi) + " (" + class_letter(cls) + std::string("): ") + reason;
          break;
        }
        pairing = greedy_pairing(sd, cls);
      }
      if (opt.oracle) {
        std::vector<int> lengths = sd.lengths(cls);
        int total = 0;
        for (int l : lengths) total += l;
        if (total <= 24) {
          BruteForceResult bf = brute_force_pairing(lengths);
          if (bf.pairing.has_value() != pairing_exists(lengths))
            throw std::logic_error("oracle disagrees with the pairing existence predicate");
          r.oracle_checked = true;
        }
      }
      (cls == EdgeClass::V ? pr.first : pr.second) = std::move(pairing);
    }
    if (!pairings_ok) break;
    r.pairing_records.push_back({pi, pr.first.pairs, pr.second.pairs});
    polygon_pairings.push_back(std::move(pr));
  }
  r.pairings = pairings_ok ? Verdict::Pass : Verdict::Fail;

  bool all_proper = true;
  if (pairings_ok) {
    for (int pi = 0; pi < (int)x.polygons.size(); pi++) {
      SideDecomposition sd = side_decompose(x, x.polygons[pi]);
      ArrangementDisk arr = build_chords(sd, polygon_pairings[pi].first, polygon_pairings[pi].second);
      DiskComplex disk = dualize_polygon(arr);
      DiskRecord dr;
      dr.polygon = pi;
      dr.vertices = disk.num_vertices;
      dr.edges = (int)disk.edges.size();
      dr.squares = (int)disk.squares.size();
      dr.crossings = disk.num_crossings;
      dr.chi = disk.euler();
      dr.proper = disk.proper;
      dr.boundary_ok = boundary_isomorphic(disk);
      if (disk.proper) dr.gauss_bonnet = gauss_bonnet_disk(disk).total;
      all_proper = all_proper && disk.proper;
      r.disk_records.push_back(dr);
      out.disks.push_back(std::move(disk));
    }
    r.gauss_bonnet = all_proper ? Verdict::Pass : Verdict::Fail;
  }

  if (pairings_ok && !opt.skip_assembly) {
    try {
      out.xprime = assemble(x, out.disks);
      r.assembly = Verdict::Pass;
      r.xprime_vertices = out.xprime->num_vertices;
      r.xprime_edges = (int)out.xprime->edges.size();
      r.xprime_squares = (int)out.xprime->squares.size();
      r.xprime_chi = out.xprime->euler();
    } catch (const std::runtime_error& e) {
      r.assembly = Verdict::Fail;
      r.assembly_failure = e.what();
    }
  }

  if (out.xprime) {
    NpcReport npc = npc_check(*out.xprime);
    r.npc = npc.pass ? Verdict::Pass : Verdict::Fail;
    r.npc_violations = npc.violations;
    r.links_bipartite = npc.bipartite_ok;
  }

  if (r.corners == Verdict::Fail)
    r.failing_stage = "corners";
  else if (r.pairings == Verdict::Fail)
    r.failing_stage = "pairing";
  else if (r.gauss_bonnet == Verdict::Fail)
    r.failing_stage = "gauss-bonnet";
  else if (r.assembly == Verdict::Fail)
    r.failing_stage = "assembly";
  else if (r.npc == Verdict::Fail)
    r.failing_stage = "npc";
  return out;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); i++) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream o;
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", (unsigned long long)r.hash);
  o << "presentation hash " << hash << "\n";
  for (const auto& w : r.warnings) o << "warning: " << w << "\n";
  if (!r.bicomplex_error.empty()) {
    o << "stage bicomplex: fail (" << r.bicomplex_error << ")\n";
    o << "verdict: fail (bicomplex)\n";
    return o.str();
  }
  o << "stage bicomplex: " << r.vertices0 << " vertices, " << r.edges0 << " edges, " << r.polygons0
    << " polygons, chi " << r.chi0 << "\n";
  if (!r.free_edge_ids.empty()) o << "  note: edges unused by any polygon: " << join(r.free_edge_ids) << "\n";
  o << "stage triangle: " << verdict_name(r.triangle) << "\n";
  for (const auto& pc : r.polygon_checks)
    o << "  polygon " << pc.polygon << " (relator " << pc.origin_relator + 1 << "): V ("
      << join(pc.vertical) << ") H (" << join(pc.horizontal) << ") sides " << pc.sides << " "
      << (pc.triangle_ok ? "pass" : "fail") << "\n";
  o << "stage corners: " << verdict_name(r.corners);
  if (r.corners == Verdict::Pass) o << " (no repeated corner)";
  o << "\n";
  for (const auto& cw : r.corner_witnesses) {
    o << "  corner (" << cw.vertical << ", " << cw.horizontal << ") occurs at";
    for (const auto& occ : cw.occurrences) o << " [polygon " << occ.polygon << " pos " << occ.position << "]";
    o << "\n";
  }
  if (r.triangle == Verdict::Fail) {
    o << "verdict: fail (triangle)\n";
    return o.str();
  }
  o << "stage parity: " << (r.parity_applied ? "subdivision applied (all edges doubled)" : "not needed")
    << "\n";
  o << "stage pairing: " << verdict_name(r.pairings);
  if (r.oracle_checked) o << " (oracle checked)";
  o << "\n";
  if (!r.pairing_failure.empty()) o << "  " << r.pairing_failure << "\n";
  if (!r.disk_records.empty()) {
    o << "stage disks:\n";
    for (const auto& d : r.disk_records) {
      o << "  polygon " << d.polygon << ": " << d.vertices << " vertices, " << d.edges << " edges, "
        << d.squares << " squares, " << d.crossings << " crossings, chi " << d.chi
        << (d.proper ? ", boundary embedded" : ", boundary pinched")
        << (d.boundary_ok ? "" : ", BOUNDARY MISMATCH");
      if (d.gauss_bonnet) o << ", curvature " << *d.gauss_bonnet << "/4";
      o << "\n";
    }
    o << "stage gauss-bonnet: " << verdict_name(r.gauss_bonnet) << "\n";
  }
  if (r.assembly != Verdict::NotApplicable) {
    o << "stage assembly: " << verdict_name(r.assembly);
    if (r.assembly == Verdict::Pass)
      o << " (" << r.xprime_vertices << " vertices, " << r.xprime_edges << " edges, "
        << r.xprime_squares << " squares, chi " << r.xprime_chi << ")";
    else
      o << " (" << r.assembly_failure << ")";
    o << "\n";
  }
  if (r.npc != Verdict::NotApplicable) {
    o << "stage npc: " << verdict_name(r.npc) << (r.links_bipartite ? "" : " (LINK NOT BIPARTITE)")
      << "\n";
    for (const auto& v : r.npc_violations) {
      o << "  vertex " << v.vertex << " link girth " << v.girth << " squares";
      for (int s : v.squares) o << " " << s;
      o << "\n";
    }
  }
  o << "stage hyperbolicity-criterion: " << verdict_name(r.hyperbolicity);
  if (!r.hyperbolicity_offenders.empty()) o << " (polygons " << join(r.hyperbolicity_offenders) << ")";
  o << "\n";
  o << "stage small-cancellation: " << verdict_name(r.small_cancellation) << " (max piece length "
    << r.max_piece_length;
  if (!r.max_piece.empty()) o << ": " << r.max_piece;
  o << ")\n";
  o << "verdict: " << (r.success() ? "pass" : "fail (" + r.failing_stage + ")") << "\n";
  return o.str();
}

std::string report_to_json(const VerificationReport& r) {
  using nlohmann::json;
  json j;
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", (unsigned long long)r.hash);
  j["presentation"] = {{"hash", std::string(hash)}, {"warnings", r.warnings}};
  json stages;
  if (!r.bicomplex_error.empty()) {
    stages["bicomplex"] = {{"pass", false}, {"error", r.bicomplex_error}};
  } else {
    stages["bicomplex"] = {{"pass", true},
                           {"vertices", r.vertices0},
                           {"edges", r.edges0},
                           {"polygons", r.polygons0},
                           {"chi", r.chi0},
                           {"free_edges", r.free_edge_ids}};
    json polys = json::array();
    for (const auto& pc : r.polygon_checks)
      polys.push_back({{"polygon", pc.polygon},
                       {"relator", pc.origin_relator + 1},
                       {"vertical", pc.vertical},
                       {"horizontal", pc.horizontal},
                       {"sides", pc.sides},
                       {"pass", pc.triangle_ok}});
    stages["triangle"] = {{"verdict", verdict_name(r.triangle)}, {"polygons", polys}};
    json corners = json::array();
    for (const auto& cw : r.corner_witnesses) {
      json occ = json::array();
      for (const auto& oc : cw.occurrences) occ.push_back({oc.polygon, oc.position});
      corners.push_back({{"vertical", cw.vertical}, {"horizontal", cw.horizontal}, {"occurrences", occ}});
    }
    stages["corners"] = {{"verdict", verdict_name(r.corners)}, {"repeated", corners}};
    stages["parity"] = {{"applied", r.parity_applied}};
    json pairing = {{"verdict", verdict_name(r.pairings)}, {"oracle_checked", r.oracle_checked}};
    if (!r.pairing_failure.empty()) pairing["failure"] = r.pairing_failure;
    json precords = json::array();
    for (const auto& pr : r.pairing_records) {
      json vp = json::array(), hp = json::array();
      for (auto [a, b] : pr.v_pairs) vp.push_back({a, b});
      for (auto [a, b] : pr.h_pairs) hp.push_back({a, b});
      precords.push_back({{"polygon", pr.polygon}, {"vertical", vp}, {"horizontal", hp}});
    }
    pairing["polygons"] = precords;
    stages["pairing"] = pairing;
    json disks = json::array();
    for (const auto& d : r.disk_records) {
      json dj = {{"polygon", d.polygon}, {"vertices", d.vertices},   {"edges", d.edges},
                 {"squares", d.squares}, {"crossings", d.crossings}, {"chi", d.chi},
                 {"proper", d.proper},   {"boundary_ok", d.boundary_ok}};
      if (d.gauss_bonnet)
        dj["gauss_bonnet"] = *d.gauss_bonnet;
      else
        dj["gauss_bonnet"] = nullptr;
      disks.push_back(dj);
    }
    stages["disks"] = disks;
    stages["gauss_bonnet"] = {{"verdict", verdict_name(r.gauss_bonnet)}};
    json assembly = {{"verdict", verdict_name(r.assembly)}};
    if (r.assembly == Verdict::Pass)
      assembly.update({{"vertices", r.xprime_vertices},
                       {"edges", r.xprime_edges},
                       {"squares", r.xprime_squares},
                       {"chi", r.xprime_chi}});
    if (!r.assembly_failure.empty()) assembly["failure"] = r.assembly_failure;
    stages["assembly"] = assembly;
    json npc = {{"verdict", verdict_name(r.npc)}, {"bipartite", r.links_bipartite}};
    json viols = json::array();
    for (const auto& v : r.npc_violations)
      viols.push_back({{"vertex", v.vertex}, {"girth", v.girth}, {"squares", v.squares}});
    npc["violations"] = viols;
    stages["npc"] = npc;
    stages["hyperbolicity_criterion"] = {{"verdict", verdict_name(r.hyperbolicity)},
                                         {"offending", r.hyperbolicity_offenders}};
    stages["small_cancellation"] = {{"verdict", verdict_name(r.small_cancellation)},
                                    {"max_piece_length", r.max_piece_length},
                                    {"max_piece", r.max_piece},
                                    {"denominator", 6}};
  }
  j["stages"] = stages;
  j["failing_stage"] = r.failing_stage;
  j["verdict"] = r.success() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

}  // namespace vh
