#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"
#include "fpg/stringindex.hpp"

namespace fpg {

// Exact non-negative rational, reduced.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long n, long long d);
  bool operator==(const Rational&) const = default;
  bool operator<(const Rational& o) const;
  std::string str() const;
};

// One element of the symmetrized relator set: rotation `rotation` of relator
// `relator` (of its inverse when `inverted`).
struct PieceOccurrence {
  int relator = 0;
  bool inverted = false;
  int rotation = 0;
  std::string word;  // the full rotated word, formatted
};

struct CancellationWitness {
  std::string piece;  // extremal piece, formatted
  PieceOccurrence first;
  PieceOccurrence second;
};

struct CancellationReport {
  int max_piece_length = 0;
  int min_relator_length = 0;
  Rational lambda;         // max over relators of (longest piece in r) / |r|
  Rational lambda_target;  // strict: passes iff lambda < target
  bool passes = false;
  std::vector<int> proper_power_relators;  // indices into p.relators
  std::optional<CancellationWitness> witness;
};

// Exhaustive piece computation over the symmetrized set via a suffix array of
// the doubled cyclic relators. A piece is a word with two distinct occurrences
// (cyclic word, offset) as a proper factor of the symmetrized relators.
CancellationReport sc_verify(const Presentation& p, Rational target = Rational{1, 6});

// Re-traces the witness against the presentation, independently of sc_verify.
bool recheck_witness(const CancellationReport& report, const Presentation& p,
                     std::string* why = nullptr);

// Greendlinger-style word-problem solver for a C'(1/6)-certified presentation.
class DehnSolver {
 public:
  // Runs sc_verify(p, 1/6); throws PreconditionError when it does not pass.
  explicit DehnSolver(const Presentation& p);

  // Repeatedly replaces a majority subword of a symmetrized relator by the
  // inverse of its complement; empty result certifies triviality.
  Word reduce(const Word& w, std::vector<int>* step_lengths = nullptr) const;

  const CancellationReport& report() const { return report_; }

 private:
  struct Family {
    int relator;
    bool inverted;
    Word base;                         // the cyclic word
    std::vector<std::int32_t> doubled; // base twice minus the last letter
  };
  Presentation p_;
  CancellationReport report_;
  std::vector<Family> families_;
  SuffixAutomaton automaton_;
  int min_length_ = 0;
};

Word dehn_reduce(const Word& w, const Presentation& p);

}  // namespace fpg
