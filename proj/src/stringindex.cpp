#include "fpg/stringindex.hpp"

#include <algorithm>
#include <numeric>

namespace fpg {

SuffixArray SuffixArray::build(const std::vector<std::int32_t>& text) {
  int n = static_cast<int>(text.size());
  SuffixArray out;
  out.sa.resize(n);
  out.rank.resize(n);
  out.lcp.assign(n, 0);
  if (n == 0) return out;

  // initial ranks from the raw symbols
  std::vector<std::int32_t> sorted(text);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> r(n), tmp(n);
  for (int i = 0; i < n; ++i)
    r[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), text[i]) -
                            sorted.begin());
  std::iota(out.sa.begin(), out.sa.end(), 0);

  // prefix-doubling with counting sort on (rank, rank+k) pairs
  std::vector<int> cnt, by_second(n);
  std::sort(out.sa.begin(), out.sa.end(), [&](int a, int b) { return r[a] < r[b]; });
  for (int k = 1;; k <<= 1) {
    auto second = [&](int i) { return i + k < n ? r[i + k] + 1 : 0; };
    cnt.assign(n + 2, 0);
    for (int i = 0; i < n; ++i) ++cnt[second(i)];
    for (int i = 1; i < n + 2; ++i) cnt[i] += cnt[i - 1];
    for (int i = n - 1; i >= 0; --i) by_second[--cnt[second(out.sa[i])]] = out.sa[i];
    cnt.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) ++cnt[r[i]];
    for (int i = 1; i < n + 1; ++i) cnt[i] += cnt[i - 1];
    for (int i = n - 1; i >= 0; --i) out.sa[--cnt[r[by_second[i]]]] = by_second[i];
    tmp[out.sa[0]] = 0;
    for (int i = 1; i < n; ++i) {
      int a = out.sa[i - 1], b = out.sa[i];
      tmp[b] = tmp[a] + (r[a] != r[b] || second(a) != second(b) ? 1 : 0);
    }
    r = tmp;
    if (r[out.sa[n - 1]] == n - 1) break;
  }
  out.rank = r;

  // Kasai
  int h = 0;
  for (int i = 0; i < n; ++i) {
    if (out.rank[i] == 0) {
      h = 0;
      continue;
    }
    int j = out.sa[out.rank[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    out.lcp[out.rank[i]] = h;
    if (h > 0) --h;
  }
  return out;
}

SuffixAutomaton::SuffixAutomaton() {
  nodes_.emplace_back();  // root
  nodes_[0].link = -1;
}

int SuffixAutomaton::extend(int last, std::int32_t c, int string_id, int pos) {
  auto it = nodes_[last].next.find(c);
  if (it != nodes_[last].next.end()) {
    int q = it->second;
    if (nodes_[q].len == nodes_[last].len + 1) return q;
    int clone = static_cast<int>(nodes_.size());
    nodes_.push_back(nodes_[q]);
    nodes_[clone].len = nodes_[last].len + 1;
    nodes_[q].link = clone;
    for (int p = last; p >= 0;) {
      auto jt = nodes_[p].next.find(c);
      if (jt == nodes_[p].next.end() || jt->second != q) break;
      jt->second = clone;
      p = nodes_[p].link;
    }
    return clone;
  }
  int cur = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  nodes_[cur].len = nodes_[last].len + 1;
  nodes_[cur].occ = Occurrence{string_id, pos};
  int p = last;
  while (p >= 0 && !nodes_[p].next.count(c)) {
    nodes_[p].next[c] = cur;
    p = nodes_[p].link;
  }
  if (p < 0) {
    nodes_[cur].link = 0;
  } else {
    int q = nodes_[p].next[c];
    if (nodes_[p].len + 1 == nodes_[q].len) {
      nodes_[cur].link = q;
    } else {
      int clone = static_cast<int>(nodes_.size());
      nodes_.push_back(nodes_[q]);
      nodes_[clone].len = nodes_[p].len + 1;
      nodes_[q].link = clone;
      nodes_[cur].link = clone;
      while (p >= 0) {
        auto jt = nodes_[p].next.find(c);
        if (jt == nodes_[p].next.end() || jt->second != q) break;
        jt->second = clone;
        p = nodes_[p].link;
      }
    }
  }
  return cur;
}

void SuffixAutomaton::add_string(const std::vector<std::int32_t>& s, int string_id) {
  int last = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    last = extend(last, s[i], string_id, static_cast<int>(i));
}

std::vector<SuffixAutomaton::MatchStep> SuffixAutomaton::longest_matches(
    const std::vector<std::int32_t>& text) const {
  std::vector<MatchStep> out(text.size());
  int state = 0, len = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::int32_t c = text[i];
    while (state != 0 && !nodes_[state].next.count(c)) {
      state = nodes_[state].link;
      len = nodes_[state].len;
    }
    auto it = nodes_[state].next.find(c);
    if (it != nodes_[state].next.end()) {
      state = it->second;
      ++len;
    } else {
      state = 0;
      len = 0;
    }
    out[i] = MatchStep{len, state};
  }
  return out;
}

}  // namespace fpg
