#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vh {

enum class EdgeClass { V, H };

inline char class_letter(EdgeClass c) { return c == EdgeClass::V ? 'V' : 'H'; }
inline EdgeClass other_class(EdgeClass c) {
  return c == EdgeClass::V ? EdgeClass::H : EdgeClass::V;
}

struct Generator {
  std::string name;
  EdgeClass cls;
};

// One letter of a group word: a generator reference with a sign.
struct Letter {
  int gen = 0;   // index into Presentation::generators
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
  Letter inverse() const { return {gen, -sign}; }
};

using Word = std::vector<Letter>;

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;

  int find_generator(std::string_view name) const;
  EdgeClass letter_class(const Letter& l) const { return generators[l.gen].cls; }
};

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
Word free_reduce(Word w);
// Free reduction plus removal of cancelling first/last letters.
Word cyclic_reduce(Word w);
Word inverse_word(const Word& w);

struct ParseError {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;
};

struct ParseResult {
  std::optional<Presentation> presentation;
  std::vector<std::string> warnings;  // e.g. a relator needed reduction
  std::optional<ParseError> error;
  bool ok() const { return presentation.has_value(); }
};

// Line-oriented text format; '#' starts a comment.
//   vertical: a c e
//   horizontal: b d f
//   relator: a b^-2 c
// Multiple vertical:/horizontal: lines accumulate. A term g^k expands to |k|
// letters of sign sign(k); relators are freely and cyclically reduced with a
// warning when that changes them.
ParseResult parse_presentation(const std::string& text);

std::string word_to_string(const Presentation& p, const Word& w);
std::string serialize_presentation(const Presentation& p);
// FNV-1a over the canonical serialization.
std::uint64_t presentation_hash(const Presentation& p);

// Built-in examples.
Presentation leary_presentation();
Presentation leary_family(int n);  // requires n >= 4
Presentation torus_presentation();

}  // namespace vh
