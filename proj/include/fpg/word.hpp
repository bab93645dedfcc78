#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/errors.hpp"

namespace fpg {

// A letter is a generator with a sign: +(i+1) for generator i, -(i+1) for its
// inverse. 0 never occurs in a word.
using Letter = std::int32_t;

inline int letter_gen(Letter l) { return (l > 0 ? l : -l) - 1; }
inline Letter letter_inv(Letter l) { return -l; }

// Deterministic letter order: a < a^-1 < b < b^-1 < ...
inline int letter_key(Letter l) { return 2 * letter_gen(l) + (l < 0 ? 1 : 0); }

struct Alphabet {
  std::vector<std::string> names;

  int size() const { return static_cast<int>(names.size()); }
  // -1 when absent.
  int index_of(std::string_view name) const;
  static bool valid_name(std::string_view name);
  // Throws AlphabetError on duplicates or malformed names.
  static Alphabet make(std::vector<std::string> names);

  bool operator==(const Alphabet&) const = default;
};

// Freely reduced word. Immutable value type.
class Word {
 public:
  Word() = default;
  // Reduces the raw letter sequence.
  static Word reduce(std::span<const Letter> raw);
  static Word from_letter(Letter l) { return reduce({&l, 1}); }

  const std::vector<Letter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int max_gen() const;  // largest generator index used, -1 if empty

  Word inverse() const;
  Word pow(int n) const;
  // g * w * g^-1
  Word conjugated_by(const Word& g) const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

  // Total order by (length, letter_key sequence); used everywhere a canonical
  // order is needed.
  bool lex_less(const Word& other) const;

 private:
  std::vector<Letter> letters_;
};

// [x, y] = x^-1 y^-1 x y
Word commutator(const Word& x, const Word& y);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);
Word rotate(const Word& w, int by);  // left rotation of a cyclically reduced word

// Total assignment of domain generators to words over the codomain.
struct GeneratorMap {
  Alphabet domain;
  Alphabet codomain;
  std::vector<Word> images;  // images.size() == domain.size()

  static GeneratorMap identity(const Alphabet& a);
  Word apply(const Word& w) const;  // throws AlphabetError on out-of-domain symbol
  // (other ∘ this): first this, then other.
  GeneratorMap then(const GeneratorMap& other) const;
};

inline Word substitute(const Word& w, const GeneratorMap& m) { return m.apply(w); }

// Grammar: juxtaposition with `*`, inverse `^-1`, integer powers `^n`,
// brackets `(...)`, commutator `[x,y]`, identity `1`.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace fpg
