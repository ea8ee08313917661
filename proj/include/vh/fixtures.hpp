#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vh/presentation.hpp"

namespace vh {

// v^m h^n: one side per class, so the triangle inequality fails for all m, n.
Presentation counterexample1(int m, int n);
// v^m h^n and v^-m h^n.
Presentation counterexample2(int m, int n);
// h v^m h^-1 v^n: subdivides exactly when |m| = |n|.
Presentation counterexample3(int m, int n);
// <u, v, h | h^-1 u h v^-1 u^-1, h^-1 v h u^-1 v^-1> with u, v vertical.
Presentation counterexample4();

struct FixtureInfo {
  std::string name;
  std::string parameters;  // human description of accepted parameters
  std::string summary;
};

const std::vector<FixtureInfo>& fixture_list();

// name in {leary1, leary-family, torus, counterexample1..4}; n is the family
// size for leary-family and the second exponent otherwise (defaults 4 and
// m=2, n=3).  Returns nothing for an unknown name.
std::optional<Presentation> builtin_presentation(const std::string& name, std::optional<int> n,
                                                 std::optional<int> m);

}  // namespace vh
