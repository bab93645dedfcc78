#pragma once

#include <algorithm>
#include <vector>

#include "fpg/coset.hpp"
#include "fpg/presentation.hpp"

// Brute-force oracle for low-index results: enumerate every assignment of
// permutations of {1..n} to the generators, keep those that satisfy all
// relators and act transitively, and convert each to the coset table of the
// stabilizer of point 1, relabelled by breadth-first search from 1. The set of
// distinct tables equals the set of index-n subgroups.
namespace testoracle {

using Perm = std::vector<int>;  // images of 1..n stored at [0..n-1]

inline int act(const std::vector<Perm>& gens, const std::vector<Perm>& invs, int pt,
               fpg::Letter l) {
  int g = fpg::letter_gen(l);
  return l > 0 ? gens[g][pt - 1] : invs[g][pt - 1];
}

inline std::vector<fpg::CosetTable> transitive_tables(const fpg::Presentation& p,
                                                      int n) {
  int ng = p.num_generators();
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i + 1;

  // all permutations of {1..n}
  std::vector<Perm> all;
  Perm cur = base;
  do {
    all.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));

  std::vector<fpg::CosetTable> out;
  std::vector<int> choice(ng, 0);
  while (true) {
    std::vector<Perm> gens, invs;
    for (int g = 0; g < ng; ++g) {
      gens.push_back(all[choice[g]]);
      Perm inv(n);
      for (int i = 0; i < n; ++i) inv[gens[g][i] - 1] = i + 1;
      invs.push_back(inv);
    }
    bool ok = true;
    for (const fpg::Word& r : p.relators) {
      for (int pt = 1; pt <= n && ok; ++pt) {
        int x = pt;
        for (fpg::Letter l : r.letters()) x = act(gens, invs, x, l);
        ok = x == pt;
      }
      if (!ok) break;
    }
    if (ok) {
      // transitivity from point 1
      std::vector<int> seen(n + 1, 0);
      std::vector<int> queue{1};
      seen[1] = 1;
      int cnt = 1;
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (int g = 0; g < ng; ++g)
          for (int s : {gens[g][queue[q] - 1], invs[g][queue[q] - 1]})
            if (!seen[s]) {
              seen[s] = 1;
              queue.push_back(s);
              ++cnt;
            }
      if (cnt == n) {
        // BFS relabelling from point 1 gives the standardized coset table
        std::vector<int> label(n + 1, 0);
        label[1] = 1;
        std::vector<int> order{1};
        int next = 1;
        for (std::size_t q = 0; q < order.size(); ++q)
          for (int g = 0; g < ng; ++g)
            for (int s : {gens[g][order[q] - 1], invs[g][order[q] - 1]})
              if (!label[s]) {
                label[s] = ++next;
                order.push_back(s);
              }
        fpg::CosetTable t;
        t.ngens = ng;
        t.index = n;
        t.complete = true;
        t.entries.assign(static_cast<std::size_t>(n) * 2 * ng, 0);
        for (int pt = 1; pt <= n; ++pt)
          for (int g = 0; g < ng; ++g) {
            t.entries[(label[pt] - 1) * 2 * ng + 2 * g] = label[gens[g][pt - 1]];
            t.entries[(label[pt] - 1) * 2 * ng + 2 * g + 1] = label[invs[g][pt - 1]];
          }
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      }
    }
    int g = ng - 1;
    while (g >= 0 && ++choice[g] == static_cast<int>(all.size())) choice[g--] = 0;
    if (g < 0) break;
  }
  return out;
}

}  // namespace testoracle
