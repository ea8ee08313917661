#include "vh/fixtures.hpp"

#include <stdexcept>

namespace vh {

namespace {

Word power(int gen, int exp) {
  Word w;
  for (int k = 0; k < std::abs(exp); k++) w.push_back({gen, exp > 0 ? 1 : -1});
  return w;
}

Word concat(std::initializer_list<Word> parts) {
  Word w;
  for (const Word& part : parts) w.insert(w.end(), part.begin(), part.end());
  return w;
}

void require_nonzero(int m, int n) {
  if (m == 0 || n == 0) throw std::invalid_argument("exponents must be nonzero");
}

Presentation vh_gens() {
  Presentation p;
  p.generators = {{"v", EdgeClass::V}, {"h", EdgeClass::H}};
  return p;
}

}  // namespace

Presentation counterexample1(int m, int n) {
  require_nonzero(m, n);
  Presentation p = vh_gens();
  p.relators.push_back(concat({power(0, m), power(1, n)}));
  return p;
}

Presentation counterexample2(int m, int n) {
  require_nonzero(m, n);
  Presentation p = vh_gens();
  p.relators.push_back(concat({power(0, m), power(1, n)}));
  p.relators.push_back(concat({power(0, -m), power(1, n)}));
  return p;
}

Presentation counterexample3(int m, int n) {
  require_nonzero(m, n);
  Presentation p = vh_gens();
  p.relators.push_back(concat({power(1, 1), power(0, m), power(1, -1), power(0, n)}));
  return p;
}

Presentation counterexample4() {
  ParseResult r = parse_presentation(
      "vertical: u v\n"
      "horizontal: h\n"
      "relator: h^-1 u h v^-1 u^-1\n"
      "relator: h^-1 v h u^-1 v^-1\n");
  if (!r.ok()) throw std::logic_error("counterexample4 failed to parse");
  return *r.presentation;
}

const std::vector<FixtureInfo>& fixture_list() {
  static const std::vector<FixtureInfo> fixtures = {
      {"leary1", "", "6 generators, 6 relators; subdivides into a nonpositively curved complex"},
      {"leary-family", "--n N (N >= 4, default 4)", "2N relators of length 49; C'(1/6)"},
      {"torus", "", "v h v^-1 h^-1; already a nonpositively curved square"},
      {"counterexample1", "--m M --n N (defaults 2, 3)", "v^m h^n; triangle inequality fails"},
      {"counterexample2", "--m M --n N (defaults 2, 3)", "v^m h^n and v^-m h^n; triangle inequality fails"},
      {"counterexample3", "--m M --n N (defaults 2, 3)", "h v^m h^-1 v^n; subdivides exactly when |m| = |n|"},
      {"counterexample4", "", "two relators over u, v, h; triangle inequality fails"},
  };
  return fixtures;
}

std::optional<Presentation> builtin_presentation(const std::string& name, std::optional<int> n,
                                                 std::optional<int> m) {
  int mm = m.value_or(2);
  int nn = n.value_or(3);
  if (name == "leary1") return leary_presentation();
  if (name == "leary-family") return leary_family(n.value_or(4));
  if (name == "torus") return torus_presentation();
  if (name == "counterexample1") return counterexample1(mm, nn);
  if (name == "counterexample2") return counterexample2(mm, nn);
  if (name == "counterexample3") return counterexample3(mm, nn);
  if (name == "counterexample4") return counterexample4();
  return std::nullopt;
}

}  // namespace vh
