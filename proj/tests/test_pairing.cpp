#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "vh/pairing.hpp"

using namespace vh;

namespace {

// Runs of the requested class with the given lengths, separated by length-1
// runs of the other class.
SideDecomposition synthetic(const std::vector<int>& lengths, EdgeClass cls = EdgeClass::V) {
  SideDecomposition sd;
  int at = 0;
  for (int l : lengths) {
    if (cls == EdgeClass::H) sd.runs.push_back({EdgeClass::V, at++, 1});
    sd.runs.push_back({cls, at, l});
    at += l;
    if (cls == EdgeClass::V) sd.runs.push_back({EdgeClass::H, at++, 1});
  }
  return sd;
}

// Class-position pairs of a pairing on a synthetic decomposition.
std::vector<std::pair<int, int>> class_pairs(const SideDecomposition& sd, const Pairing& p) {
  std::vector<int> pos = class_positions(sd, p.cls);
  auto rank = [&](int b) {
    return (int)(std::lower_bound(pos.begin(), pos.end(), b) - pos.begin());
  };
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : p.pairs) out.push_back({rank(a), rank(b)});
  return out;
}

// Every partition of class positions into pairs, filtered by admissibility.
long long count_naive(const std::vector<int>& lengths) {
  int n = std::accumulate(lengths.begin(), lengths.end(), 0);
  if (n % 2) return 0;
  std::vector<int> side;
  for (size_t i = 0; i < lengths.size(); i++) side.insert(side.end(), lengths[i], (int)i);
  std::vector<std::pair<int, int>> acc;
  long long count = 0;
  auto crossing = [](std::pair<int, int> x, std::pair<int, int> y) {
    auto inside = [&](int p) { return x.first < p && p < x.second; };
    return inside(y.first) != inside(y.second);
  };
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      count++;
      return;
    }
    int a = 0;
    while (used[a]) a++;
    used[a] = true;
    for (int b = a + 1; b < n; b++) {
      if (used[b] || side[a] == side[b]) continue;
      bool ok = true;
      for (auto& pr : acc)
        if (crossing(pr, {a, b})) ok = false;
      if (!ok) continue;
      used[b] = true;
      acc.push_back({a, b});
      self(self, remaining - 2);
      acc.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  rec(rec, n);
  return count;
}

void enumerate_vectors(int r, int max_entry, const std::function<void(std::vector<int>&)>& f) {
  std::vector<int> v(r, 1);
  while (true) {
    f(v);
    int i = r - 1;
    while (i >= 0 && v[i] == max_entry) v[i--] = 1;
    if (i < 0) break;
    v[i]++;
  }
}

}  // namespace

TEST_CASE("existence predicate") {
  std::string reason;
  CHECK(pairing_exists({1, 1}));
  CHECK(pairing_exists({2, 4, 4}));
  CHECK(pairing_exists({2, 1, 1}));
  CHECK(!pairing_exists({3, 1}, &reason));
  CHECK(reason.find("exceed") != std::string::npos);
  CHECK(!pairing_exists({1, 1, 1}, &reason));
  CHECK(reason.find("odd") != std::string::npos);
  CHECK(!pairing_exists({2}, &reason));
  CHECK(pairing_exists({1, 1, 1, 1}));
}

TEST_CASE("greedy pairs the square") {
  Pairing p = greedy_pairing(synthetic({1, 1}), EdgeClass::V);
  REQUIRE(p.pairs.size() == 1);
  CHECK(class_pairs(synthetic({1, 1}), p) ==
        std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("greedy on (2,1,1) gives the unique admissible matching") {
  SideDecomposition sd = synthetic({2, 1, 1});
  Pairing p = greedy_pairing(sd, EdgeClass::V);
  auto pairs = class_pairs(sd, p);
  std::sort(pairs.begin(), pairs.end());
  CHECK(pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
  CHECK(verify_admissible(sd, p).ok);
}

TEST_CASE("greedy rejects impossible vectors") {
  CHECK_THROWS_AS(greedy_pairing(synthetic({1, 2, 2}), EdgeClass::V), std::invalid_argument);
  CHECK_THROWS_AS(greedy_pairing(synthetic({3, 1}), EdgeClass::V), std::invalid_argument);
}

TEST_CASE("greedy handles the horizontal class and real relator shapes") {
  // v v h v h v h: vertical runs (2,1,1), horizontal (1,1,1).
  ParseResult r =
      parse_presentation("vertical: v\nhorizontal: h\nrelator: v v h v h v h\n");
  REQUIRE(r.ok());
  Bicomplex x = build_standard_2complex(*r.presentation);
  SideDecomposition sd = side_decompose(x, x.polygons[0]);
  CHECK(sd.vertical_lengths() == std::vector<int>{2, 1, 1});

  Pairing vp = greedy_pairing(sd, EdgeClass::V);
  CHECK(verify_admissible(sd, vp).ok);
  auto vpairs = class_pairs(sd, vp);
  std::sort(vpairs.begin(), vpairs.end());
  CHECK(vpairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});

  CHECK_THROWS_AS(greedy_pairing(sd, EdgeClass::H), std::invalid_argument);  // odd sum 3
}

TEST_CASE("verifier reports each violated condition") {
  SideDecomposition sd = synthetic({2, 1, 1});
  std::vector<int> pos = class_positions(sd, EdgeClass::V);
  REQUIRE(pos == std::vector<int>{0, 1, 3, 5});

  Pairing same_side{EdgeClass::V, {{pos[0], pos[1]}, {pos[2], pos[3]}}};
  auto r1 = verify_admissible(sd, same_side);
  CHECK(!r1.ok);
  CHECK(r1.violation.find("side") != std::string::npos);

  Pairing crossing{EdgeClass::V, {{pos[0], pos[2]}, {pos[1], pos[3]}}};
  auto r2 = verify_admissible(sd, crossing);
  CHECK(!r2.ok);
  CHECK(r2.violation.find("cross") != std::string::npos);

  Pairing incomplete{EdgeClass::V, {{pos[1], pos[2]}}};
  auto r3 = verify_admissible(sd, incomplete);
  CHECK(!r3.ok);

  Pairing wrong_class{EdgeClass::V, {{pos[0], 2}, {pos[2], pos[3]}}};
  CHECK(!verify_admissible(sd, wrong_class).ok);
}

TEST_CASE("brute force small cases") {
  BruteForceResult one = brute_force_pairing({1, 1});
  CHECK(one.count == 1);
  REQUIRE(one.pairing.has_value());
  CHECK(one.pairing->pairs == std::vector<std::pair<int, int>>{{0, 1}});

  CHECK(!brute_force_pairing({3, 1}).pairing.has_value());
  CHECK(brute_force_pairing({3, 1}).count == 0);
  CHECK(brute_force_pairing({1, 1, 1}).count == 0);

  BruteForceResult sq = brute_force_pairing({2, 2});
  CHECK(sq.count == 1);
  REQUIRE(sq.pairing.has_value());
  std::vector<std::pair<int, int>> expect{{0, 3}, {1, 2}};
  CHECK(sq.pairing->pairs == expect);

  CHECK_THROWS_AS(brute_force_pairing(std::vector<int>(13, 2)), std::invalid_argument);
}

TEST_CASE("brute force matches naive enumeration") {
  for (int r = 1; r <= 4; r++) {
    enumerate_vectors(r, 3, [&](std::vector<int>& v) {
      if (std::accumulate(v.begin(), v.end(), 0) > 10) return;
      CAPTURE(v);
      BruteForceResult bf = brute_force_pairing(v);
      CHECK(bf.count == count_naive(v));
      CHECK(bf.pairing.has_value() == (bf.count > 0));
    });
  }
}

TEST_CASE("oracle equivalence with the existence predicate") {
  for (int r = 1; r <= 4; r++) {
    enumerate_vectors(r, 6, [&](std::vector<int>& v) {
      if (std::accumulate(v.begin(), v.end(), 0) > 12) return;
      CAPTURE(v);
      CHECK(brute_force_pairing(v).pairing.has_value() == pairing_exists(v));
    });
  }
}

TEST_CASE("greedy output is always admissible") {
  for (int r = 1; r <= 5; r++) {
    enumerate_vectors(r, 4, [&](std::vector<int>& v) {
      if (!pairing_exists(v)) return;
      CAPTURE(v);
      for (EdgeClass cls : {EdgeClass::V, EdgeClass::H}) {
        SideDecomposition sd = synthetic(v, cls);
        Pairing p = greedy_pairing(sd, cls);
        CHECK(verify_admissible(sd, p).ok);
        CHECK(p.pairs.size() * 2 == class_positions(sd, cls).size());
      }
    });
  }
}

TEST_CASE("brute force first pairing is lexicographically minimal") {
  BruteForceResult bf = brute_force_pairing({2, 1, 2, 1});
  REQUIRE(bf.pairing.has_value());
  CHECK(bf.count > 1);
  // First pair starts at position 0 with the smallest legal partner.
  CHECK(bf.pairing->pairs[0].first == 0);
}
