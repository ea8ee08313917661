#include "vh/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vh {

bool pairing_exists(const std::vector<int>& lengths, std::string* reason) {
  if (lengths.empty()) {
    if (reason) *reason = "no sides";
    return false;
  }
  int sum = std::accumulate(lengths.begin(), lengths.end(), 0);
  if (sum % 2) {
    if (reason) *reason = "odd total length " + std::to_string(sum);
    return false;
  }
  for (size_t i = 0; i < lengths.size(); i++) {
    if (lengths[i] > sum - lengths[i]) {
      if (reason)
        *reason = "side " + std::to_string(i) + " has length " + std::to_string(lengths[i]) +
                  " exceeding the sum " + std::to_string(sum - lengths[i]) + " of the others";
      return false;
    }
  }
  return true;
}

std::vector<int> class_positions(const SideDecomposition& sd, EdgeClass cls) {
  std::vector<int> out;
  for (const Run& run : sd.runs)
    if (run.cls == cls)
      for (int k = 0; k < run.length; k++) out.push_back(run.begin + k);
  return out;
}

namespace {

bool chords_cross(std::pair<int, int> p, std::pair<int, int> q) {
  auto [a, b] = p;
  auto [c, d] = q;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

AdmissibilityReport verify_admissible(const SideDecomposition& sd, const Pairing& p) {
  std::vector<int> pos = class_positions(sd, p.cls);
  std::vector<int> seen(sd.total_length(), 0);
  for (auto [a, b] : p.pairs) {
    for (int v : {a, b}) {
      if (v < 0 || v >= sd.total_length() || sd.class_of(v) != p.cls)
        return {false, "position " + std::to_string(v) + " is not a " +
                           std::string(1, class_letter(p.cls)) + " boundary position"};
      seen[v]++;
    }
    if (sd.side_of(a) == sd.side_of(b))
      return {false, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                         ") lies in a single side"};
  }
  for (int v : pos)
    if (seen[v] != 1)
      return {false, "position " + std::to_string(v) + " is covered " +
                         std::to_string(seen[v]) + " times"};
  for (size_t i = 0; i < p.pairs.size(); i++)
    for (size_t j = i + 1; j < p.pairs.size(); j++)
      if (chords_cross(p.pairs[i], p.pairs[j]))
        return {false, "chords (" + std::to_string(p.pairs[i].first) + "," +
                           std::to_string(p.pairs[i].second) + ") and (" +
                           std::to_string(p.pairs[j].first) + "," +
                           std::to_string(p.pairs[j].second) + ") cross"};
  return {true, ""};
}

Pairing greedy_pairing(const SideDecomposition& sd, EdgeClass cls) {
  std::vector<int> pos = class_positions(sd, cls);
  int N = (int)pos.size();
  int L = sd.total_length();

  // Sides of this class, as intervals of class-position indices.
  std::vector<int> side_begin, side_len, side_of;
  side_of.resize(N);
  {
    int q = 0;
    for (const Run& run : sd.runs) {
      if (run.cls != cls) continue;
      side_begin.push_back(q);
      side_len.push_back(run.length);
      for (int k = 0; k < run.length; k++) side_of[q++] = (int)side_begin.size() - 1;
    }
  }
  int sides = (int)side_begin.size();

  std::string reason;
  if (!pairing_exists(side_len, &reason))
    throw std::invalid_argument("no admissible pairing: " + reason);

  std::vector<int> lo(sides), hi(sides);
  for (int s = 0; s < sides; s++) {
    lo[s] = side_begin[s];
    hi[s] = side_begin[s] + side_len[s] - 1;
  }
  auto count = [&](int s) { return hi[s] - lo[s] + 1; };
  std::vector<bool> paired(N, false);
  auto scan = [&](int from, int step) {
    for (int q = (from + step + N) % N;; q = (q + step + N) % N) {
      if (q == from) throw std::logic_error("no unpaired partner found");
      if (!paired[q]) return q;
    }
  };

  Pairing result{cls, {}};
  for (int step = 0; step < N / 2; step++) {
    int best = -1;
    for (int s = 0; s < sides; s++)
      if (count(s) > 0 && (best < 0 || count(s) > count(best))) best = s;
    int v = lo[best];
    int u;
    if (count(best) >= 2) {
      u = scan(v, -1);
    } else {
      int down = scan(v, -1);
      int up = scan(v, +1);
      int dist_down = (pos[v] - pos[down] + L) % L;
      int dist_up = (pos[up] - pos[v] + L) % L;
      u = dist_up <= dist_down ? up : down;
    }
    if (side_of[u] == best) throw std::logic_error("greedy partner fell in the same side");
    paired[v] = paired[u] = true;
    lo[best]++;
    int s = side_of[u];
    if (u == lo[s])
      lo[s]++;
    else if (u == hi[s])
      hi[s]--;
    else
      throw std::logic_error("greedy partner is not at the end of its unpaired block");
    result.pairs.push_back({std::min(pos[v], pos[u]), std::max(pos[v], pos[u])});

    // The induction invariant of the greedy argument: the residual counts
    // still admit a pairing.
    int sum = 0, mx = 0;
    for (int t = 0; t < sides; t++) {
      sum += count(t);
      mx = std::max(mx, count(t));
    }
    if (sum % 2 || mx > sum - mx)
      throw std::logic_error("greedy step broke the triangle inequality");
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  AdmissibilityReport rep = verify_admissible(sd, result);
  if (!rep.ok) throw std::logic_error("greedy pairing failed verification: " + rep.violation);
  return result;
}

namespace {

// Interval DP over class positions: non-crossing matchings nest, so position
// lo pairs with some k and splits [lo..hi] into independent halves.
struct BruteForce {
  std::vector<int> side;
  std::vector<std::vector<long long>> memo;

  long long count(int lo, int hi) {
    if (lo > hi) return 1;
    long long& m = memo[lo][hi];
    if (m >= 0) return m;
    m = 0;
    for (int k = lo + 1; k <= hi; k += 2)
      if (side[lo] != side[k]) m += count(lo + 1, k - 1) * count(k + 1, hi);
    return m;
  }

  void first(int lo, int hi, std::vector<std::pair<int, int>>& out) {
    if (lo > hi) return;
    for (int k = lo + 1; k <= hi; k += 2) {
      if (side[lo] != side[k] && count(lo + 1, k - 1) > 0 && count(k + 1, hi) > 0) {
        out.push_back({lo, k});
        first(lo + 1, k - 1, out);
        first(k + 1, hi, out);
        return;
      }
    }
    throw std::logic_error("reconstruction reached an unmatched interval");
  }
};

}  // namespace

BruteForceResult brute_force_pairing(const std::vector<int>& lengths) {
  int N = std::accumulate(lengths.begin(), lengths.end(), 0);
  if (N > 24) throw std::invalid_argument("brute force bound exceeded (total length > 24)");
  BruteForceResult res;
  if (N % 2) return res;
  BruteForce bf;
  for (size_t s = 0; s < lengths.size(); s++)
    for (int k = 0; k < lengths[s]; k++) bf.side.push_back((int)s);
  bf.memo.assign(N, std::vector<long long>(N, -1));
  res.count = N == 0 ? 0 : bf.count(0, N - 1);
  if (res.count > 0) {
    Pairing p{EdgeClass::V, {}};
    bf.first(0, N - 1, p.pairs);
    std::sort(p.pairs.begin(), p.pairs.end());
    res.pairing = std::move(p);
  }
  return res;
}

}  // namespace vh
