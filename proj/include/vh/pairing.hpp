#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vh/bicomplex.hpp"

namespace vh {

// Can same-class sides with these lengths be perfectly matched cross-side and
// non-crossing?  True iff the sum is even and no length exceeds the sum of the
// others.  An optional reason explains a negative verdict.
bool pairing_exists(const std::vector<int>& lengths, std::string* reason = nullptr);

// A perfect matching of the boundary positions of one class.  Positions are
// indices into the polygon's attaching sequence when built from a
// SideDecomposition, or 0-based class positions for the standalone oracle.
struct Pairing {
  EdgeClass cls = EdgeClass::V;
  std::vector<std::pair<int, int>> pairs;  // each (a, b) with a < b, sorted
};

struct AdmissibilityReport {
  bool ok = true;
  std::string violation;  // first violated condition with a witness
};

// Conditions: (1) the two members of each pair lie in distinct sides,
// (2) pairs are non-crossing chords (no index interleaving), (3) every
// boundary position of the class belongs to exactly one pair.
AdmissibilityReport verify_admissible(const SideDecomposition& sd, const Pairing& p);

// Deterministic greedy construction: repeatedly take the side with the most
// unpaired positions (lowest side on ties), peel its lowest-index unpaired
// position, and join it to the adjacent unpaired position outside its own
// block (for a singleton block, the nearer of the two neighbours by cyclic
// boundary distance, increasing direction on ties).  The triangle inequality
// is asserted on the residual counts after every step and the result is
// post-verified; violations throw std::logic_error.
Pairing greedy_pairing(const SideDecomposition& sd, EdgeClass cls);

// Boundary positions carrying class cls, in increasing order.
std::vector<int> class_positions(const SideDecomposition& sd, EdgeClass cls);

struct BruteForceResult {
  std::optional<Pairing> pairing;  // lexicographically first, class positions
  long long count = 0;             // number of admissible matchings
};

// Exhaustive oracle over class positions 0..sum-1 grouped into sides by
// `lengths`.  Requires sum <= 24.
BruteForceResult brute_force_pairing(const std::vector<int>& lengths);

}  // namespace vh
