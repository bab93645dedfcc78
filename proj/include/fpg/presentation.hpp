#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpg/word.hpp"

namespace fpg {

// Generators plus cyclically reduced relators in canonical order. Relators are
// stored in canonical form (least rotation of min(word, inverse)), deduplicated,
// sorted by length then lexicographically; empty relators are dropped.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  int num_generators() const { return alphabet.size(); }
  int num_relators() const { return static_cast<int>(relators.size()); }

  // Canonicalizes the relator list; throws AlphabetError if a relator uses an
  // undeclared generator.
  static Presentation make(Alphabet alphabet, std::vector<Word> relators);

  bool operator==(const Presentation&) const = default;
};

// Least rotation (by lex_less) among all rotations of the cyclic reduction of w
// and of its inverse.
Word canonical_relator(const Word& w);

// Grammar: `< gens | items >` where items are words or relations `u = v`
// (stored as u * v^-1).
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

struct MarkedSubgroup {
  Presentation ambient;
  std::vector<Word> generators;
  std::string label;
};

struct TietzeOptions {
  int max_substitution_length = 64;
  int move_budget = 10000;
};

struct TietzeResult {
  Presentation presentation;
  bool complete = true;  // false when the move budget ran out
  // (name, substituted word formatted over the pre-elimination alphabet)
  std::vector<std::pair<std::string, std::string>> eliminated;
};

TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& opts = {});

// p.relators ∪ kill, then Tietze simplification.
Presentation quotient_by(const Presentation& p, const std::vector<Word>& kill,
                         const TietzeOptions& opts = {});

struct DirectProduct {
  Presentation presentation;
  // (original name in q, renamed) for clashes with p's alphabet
  std::vector<std::pair<std::string, std::string>> renamed;
  int left_generators = 0;  // p's generators occupy indices [0, left_generators)
};

// Generators = union (q renamed on clash); relators = both relator lists plus
// all commutators [x, y], x from p, y from q.
DirectProduct direct_product(const Presentation& p, const Presentation& q);

}  // namespace fpg
