#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vh/squarecomplex.hpp"

namespace vh {

enum class Verdict { Pass, Fail, NotApplicable };
const char* verdict_name(Verdict v);

struct CheckOptions {
  bool oracle = false;         // cross-check pairings against the exhaustive oracle
  bool skip_assembly = false;  // stop after per-polygon disks
  struct PairingOverride {
    int polygon = 0;  // index into the (possibly subdivided) polygon list
    Pairing pairing;
  };
  std::vector<PairingOverride> overrides;
};

struct PolygonCheck {
  int polygon = 0;
  int origin_relator = 0;
  std::vector<int> vertical, horizontal;
  int sides = 0;
  bool triangle_ok = false;
};

struct CornerWitness {
  std::string vertical, horizontal;  // signed generator names
  std::vector<CornerOccurrence> occurrences;
};

struct PairingRecord {
  int polygon = 0;
  std::vector<std::pair<int, int>> v_pairs, h_pairs;
};

struct DiskRecord {
  int polygon = 0;
  int vertices = 0, edges = 0, squares = 0, crossings = 0, chi = 0;
  bool proper = false, boundary_ok = false;
  std::optional<int> gauss_bonnet;  // quarter-turn total; absent when pinched
};

struct VerificationReport {
  std::string serialized;
  std::uint64_t hash = 0;
  std::vector<std::string> warnings;

  int vertices0 = 0, edges0 = 0, polygons0 = 0, chi0 = 0;
  std::vector<int> free_edge_ids;
  std::string bicomplex_error;

  std::vector<PolygonCheck> polygon_checks;
  Verdict triangle = Verdict::NotApplicable;

  Verdict corners = Verdict::NotApplicable;
  std::vector<CornerWitness> corner_witnesses;

  bool parity_applied = false;

  Verdict pairings = Verdict::NotApplicable;
  std::string pairing_failure;
  bool oracle_checked = false;
  std::vector<PairingRecord> pairing_records;

  std::vector<DiskRecord> disk_records;
  Verdict gauss_bonnet = Verdict::NotApplicable;

  Verdict assembly = Verdict::NotApplicable;
  std::string assembly_failure;
  int xprime_vertices = 0, xprime_edges = 0, xprime_squares = 0, xprime_chi = 0;

  Verdict npc = Verdict::NotApplicable;
  std::vector<LinkViolation> npc_violations;
  bool links_bipartite = true;

  Verdict hyperbolicity = Verdict::NotApplicable;  // report-only
  std::vector<int> hyperbolicity_offenders;

  Verdict small_cancellation = Verdict::NotApplicable;  // report-only
  int max_piece_length = 0;
  std::string max_piece;

  // First failed criterion among bicomplex, triangle, corners, pairing,
  // gauss-bonnet, assembly, npc; empty on success.  The two report-only
  // verdicts never fail a run.
  std::string failing_stage;
  bool success() const { return failing_stage.empty(); }
};

struct CheckOutcome {
  VerificationReport report;
  std::optional<Bicomplex> complex0;
  std::optional<Bicomplex> complex_sub;
  std::vector<DiskComplex> disks;
  std::optional<SquareComplexGlobal> xprime;
};

// The full pipeline: standard 2-complex, side decompositions, triangle and
// repeated-corner checks, parity subdivision, pairings, disks, assembly,
// links, curvature, and the two report-only criteria.
CheckOutcome run_check(const Presentation& p, const CheckOptions& opt = {});

std::string report_to_text(const VerificationReport& r);
std::string report_to_json(const VerificationReport& r);

}  // namespace vh
