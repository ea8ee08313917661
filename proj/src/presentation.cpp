#include "vh/presentation.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vh {

int Presentation::find_generator(std::string_view name) const {
  for (int i = 0; i < (int)generators.size(); i++)
    if (generators[i].name == name) return i;
  return -1;
}

bool is_freely_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); i++)
    if (w[i + 1] == w[i].inverse()) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  if (w.size() >= 2 && w.back() == w.front().inverse()) return false;
  return true;
}

Word free_reduce(Word w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[hi - 1] == w[lo].inverse()) {
    lo++;
    hi--;
  }
  return Word(w.begin() + lo, w.begin() + hi);
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

namespace {

bool is_ident_start(char c) { return std::isalpha((unsigned char)c); }
bool is_ident_char(char c) {
  return std::isalnum((unsigned char)c) || c == '_';
}

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace((unsigned char)line[i])) {
      i++;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace((unsigned char)line[j]) &&
           line[j] != '#')
      j++;
    out.push_back({line.substr(i, j - i), (int)i + 1});
    i = j;
  }
  return out;
}

}  // namespace

ParseResult parse_presentation(const std::string& text) {
  ParseResult res;
  Presentation p;
  std::map<std::string, int> index;
  // Relators are collected as (word, line) and resolved against the full
  // generator list at the end, so generator lines may follow relator lines.
  struct RawTerm {
    std::string name;
    long long exp;
    int line, column;
  };
  std::vector<std::vector<RawTerm>> raw_relators;

  auto fail = [&](int line, int col, std::string msg) {
    res.error = ParseError{line, col, std::move(msg)};
    return res;
  };

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto toks = tokenize_line(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;
    if (head == "vertical:" || head == "horizontal:") {
      EdgeClass cls = head[0] == 'v' ? EdgeClass::V : EdgeClass::H;
      if (toks.size() == 1)
        return fail(lineno, toks[0].column, "expected generator names after '" + head + "'");
      for (size_t t = 1; t < toks.size(); t++) {
        const std::string& name = toks[t].text;
        if (!is_ident_start(name[0]))
          return fail(lineno, toks[t].column, "invalid generator name '" + name + "'");
        for (char c : name)
          if (!is_ident_char(c))
            return fail(lineno, toks[t].column, "invalid generator name '" + name + "'");
        if (index.count(name)) {
          if (p.generators[index[name]].cls != cls)
            return fail(lineno, toks[t].column,
                        "generator '" + name + "' declared in both vertical and horizontal lists");
          return fail(lineno, toks[t].column, "generator '" + name + "' declared twice");
        }
        index[name] = (int)p.generators.size();
        p.generators.push_back({name, cls});
      }
    } else if (head == "relator:") {
      if (toks.size() == 1)
        return fail(lineno, toks[0].column, "expected terms after 'relator:'");
      std::vector<RawTerm> rel;
      for (size_t t = 1; t < toks.size(); t++) {
        const std::string& term = toks[t].text;
        size_t caret = term.find('^');
        std::string name = caret == std::string::npos ? term : term.substr(0, caret);
        long long exp = 1;
        if (caret != std::string::npos) {
          std::string es = term.substr(caret + 1);
          size_t pos = 0;
          bool bad = es.empty();
          if (!bad) {
            try {
              exp = std::stoll(es, &pos);
            } catch (const std::exception&) {
              bad = true;
            }
          }
          if (bad || pos != es.size())
            return fail(lineno, toks[t].column, "invalid exponent in term '" + term + "'");
          if (exp == 0)
            return fail(lineno, toks[t].column, "zero exponent in term '" + term + "'");
        }
        if (name.empty() || !is_ident_start(name[0]))
          return fail(lineno, toks[t].column, "invalid term '" + term + "'");
        for (char c : name)
          if (!is_ident_char(c))
            return fail(lineno, toks[t].column, "invalid term '" + term + "'");
        rel.push_back({name, exp, lineno, toks[t].column});
      }
      raw_relators.push_back(std::move(rel));
    } else {
      return fail(lineno, toks[0].column,
                  "expected 'vertical:', 'horizontal:' or 'relator:', got '" + head + "'");
    }
  }

  for (size_t r = 0; r < raw_relators.size(); r++) {
    Word w;
    for (const RawTerm& term : raw_relators[r]) {
      auto it = index.find(term.name);
      if (it == index.end())
        return fail(term.line, term.column, "unknown generator '" + term.name + "' in relator");
      int sign = term.exp > 0 ? 1 : -1;
      for (long long k = 0; k < std::llabs(term.exp); k++)
        w.push_back({it->second, sign});
    }
    Word reduced = cyclic_reduce(w);
    if (reduced.empty()) {
      const RawTerm& t0 = raw_relators[r][0];
      return fail(t0.line, t0.column, "relator " + std::to_string(r + 1) + " is empty after reduction");
    }
    if (reduced != w)
      res.warnings.push_back("relator " + std::to_string(r + 1) +
                             " was not cyclically reduced; reduced form is used");
    p.relators.push_back(std::move(reduced));
  }

  res.presentation = std::move(p);
  return res;
}

std::string word_to_string(const Presentation& p, const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); i++) {
    if (i) out += ' ';
    out += p.generators[w[i].gen].name;
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

std::string serialize_presentation(const Presentation& p) {
  std::string out;
  for (EdgeClass cls : {EdgeClass::V, EdgeClass::H}) {
    out += cls == EdgeClass::V ? "vertical:" : "horizontal:";
    for (const Generator& g : p.generators)
      if (g.cls == cls) out += ' ' + g.name;
    out += '\n';
  }
  for (const Word& w : p.relators) out += "relator: " + word_to_string(p, w) + '\n';
  return out;
}

std::uint64_t presentation_hash(const Presentation& p) {
  std::string s = serialize_presentation(p);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

Presentation from_text_or_die(const std::string& text) {
  ParseResult r = parse_presentation(text);
  if (!r.ok()) throw std::logic_error("builtin presentation failed to parse: " + r.error->message);
  if (!r.warnings.empty())
    throw std::logic_error("builtin presentation was not reduced: " + r.warnings[0]);
  return *r.presentation;
}

}  // namespace

Presentation leary_presentation() {
  return from_text_or_die(
      "vertical: a c e\n"
      "horizontal: b d f\n"
      "relator: a b c d e f\n"
      "relator: a b^-1 c^2 f^-1 e^2 d^-1\n"
      "relator: a^2 f c^2 b e d\n"
      "relator: a d^-2 c b^-2 e f^-1\n"
      "relator: a f^-2 c d^-1 e b^-2\n"
      "relator: a d^2 c f^2 e b^2\n");
}

Presentation leary_family(int n) {
  if (n < 4) throw std::invalid_argument("leary_family requires n >= 4");
  Presentation p;
  for (int i = 0; i < n; i++) p.generators.push_back({"a_" + std::to_string(i), EdgeClass::V});
  for (int i = 0; i < n; i++) p.generators.push_back({"b_" + std::to_string(i), EdgeClass::H});
  auto a = [&](int i, int s) { return Letter{i % n, s}; };
  auto b = [&](int i, int s) { return Letter{n + i % n, s}; };
  // A_i = a_i a_{i+2} a_i^-2 a_{i+2}^-1 a_i and the same pattern for B_i.
  auto block = [&](auto gen, int i) {
    return Word{gen(i, 1), gen(i + 2, 1), gen(i, -1), gen(i, -1), gen(i + 2, -1), gen(i, 1)};
  };
  auto append = [](Word& w, const Word& part) { w.insert(w.end(), part.begin(), part.end()); };
  for (int i = 0; i < n; i++) {
    Word w{a(i, 1)};
    for (int k = 0; k < 4; k++) {
      append(w, block(a, i + k));
      append(w, block(b, i));
    }
    if (!is_cyclically_reduced(w)) throw std::logic_error("family word not reduced");
    p.relators.push_back(std::move(w));
  }
  for (int i = 0; i < n; i++) {
    Word w{b(i, 1)};
    for (int k = 0; k < 4; k++) {
      append(w, block(b, i));
      append(w, inverse_word(block(a, i + k)));
    }
    if (!is_cyclically_reduced(w)) throw std::logic_error("family word not reduced");
    p.relators.push_back(std::move(w));
  }
  return p;
}

Presentation torus_presentation() {
  return from_text_or_die(
      "vertical: v\n"
      "horizontal: h\n"
      "relator: v h v^-1 h^-1\n");
}

}  // namespace vh
