#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace fpg {

// Suffix array over an integer sequence (values may be negative; each distinct
// value is its own symbol). O(n log^2 n) doubling construction plus Kasai LCP.
struct SuffixArray {
  std::vector<int> sa;    // suffix start positions in sorted order
  std::vector<int> rank;  // inverse of sa
  std::vector<int> lcp;   // lcp[i] = lcp(sa[i-1], sa[i]); lcp[0] = 0

  static SuffixArray build(const std::vector<std::int32_t>& text);
};

// Generalized suffix automaton over integer sequences; recognizes every factor
// of every inserted string and remembers one occurrence per state.
class SuffixAutomaton {
 public:
  SuffixAutomaton();
  // Appends one whole string; occurrences are tagged with string_id.
  void add_string(const std::vector<std::int32_t>& s, int string_id);

  struct Occurrence {
    int string_id = -1;
    int end_pos = -1;  // inclusive end index of the sample occurrence
  };

  // Walks `text` and reports, for each end position i, the length of the
  // longest factor of the corpus ending at i plus a state id.
  struct MatchStep {
    int length = 0;
    int state = 0;
  };
  std::vector<MatchStep> longest_matches(const std::vector<std::int32_t>& text) const;

  int link(int state) const { return nodes_[state].link; }
  int length(int state) const { return nodes_[state].len; }
  Occurrence occurrence(int state) const { return nodes_[state].occ; }

 private:
  struct Node {
    int len = 0;
    int link = -1;
    Occurrence occ;
    std::map<std::int32_t, int> next;
  };
  int extend(int last, std::int32_t c, int string_id, int pos);
  std::vector<Node> nodes_;
};

}  // namespace fpg
