#include "fpg/coset.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <map>

#include "fpg/digest.hpp"
#include "fpg/jsonio.hpp"

namespace fpg {

namespace {

using Clock = std::chrono::steady_clock;

int inv_col(int col) { return col ^ 1; }

}  // namespace

int CosetTable::trace(int coset, const Word& w) const {
  int c = coset;
  for (Letter l : w.letters()) {
    c = apply(c, l);
    if (c == 0) return 0;
  }
  return c;
}

EnumerationLimits EnumerationLimits::from_env() {
  EnumerationLimits lim;
  if (const char* v = std::getenv("FPGROUP_MAX_COSETS")) lim.max_cosets = std::atoi(v);
  if (const char* v = std::getenv("FPGROUP_MAX_TIME_MS")) lim.max_time_ms = std::atol(v);
  if (const char* v = std::getenv("FPGROUP_MAX_NODES")) lim.max_nodes = std::atol(v);
  return lim;
}

std::string to_string(TcStrategy s) {
  return s == TcStrategy::hlt ? "hlt+lookahead" : "felsch";
}

namespace {

// Classic coset-table machine with union-find coincidence handling.
class Machine {
 public:
  Machine(const Presentation& p, const std::vector<Word>& subgroup)
      : ncols_(2 * p.num_generators()), subgroup_(subgroup) {
    for (const Word& r : p.relators) relators_.push_back(r);
    new_coset();  // coset 1
  }

  int live_count() const { return live_; }
  int size() const { return static_cast<int>(tab_.size()) - 1; }
  bool is_live(int a) { return rep(a) == a; }

  int entry(int a, int c) {
    int b = tab_[a][c];
    return b == 0 ? 0 : rep(b);
  }

  // Scans the word at coset a; fills gaps (defining new cosets) when fill is
  // true, otherwise only closes 0/1-letter gaps.
  void scan(int a, const Word& w, bool fill) {
    const auto& ls = w.letters();
    int n = static_cast<int>(ls.size());
    int f = a, b = a, i = 0, j = n - 1;
    while (true) {
      while (i <= j && entry(f, CosetTable::column(ls[i])) != 0)
        f = entry(f, CosetTable::column(ls[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inv_col(CosetTable::column(ls[j]))) != 0)
        b = entry(b, inv_col(CosetTable::column(ls[j--])));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {  // deduction closes the gap
        set_edge(f, CosetTable::column(ls[i]), b);
        return;
      }
      if (!fill) return;
      define(f, CosetTable::column(ls[i]));
    }
  }

  void define(int a, int c) {
    int b = new_coset();
    set_edge(a, c, b);
  }

  void fill_row(int a) {
    for (int c = 0; c < ncols_; ++c)
      if (is_live(a) && entry(a, c) == 0) define(a, c);
  }

  bool scan_all_once() {
    // no-fill pass over every relator at every live coset; returns true if the
    // table changed (deduction or coincidence)
    long before = changes_;
    for (int a = 1; a <= size(); ++a) {
      if (!is_live(a)) continue;
      for (const Word& r : relators_) {
        if (!is_live(a)) break;
        scan(a, r, false);
      }
    }
    return changes_ != before;
  }

  void scan_subgroup(bool fill) {
    for (const Word& w : subgroup_) scan(rep(1), w, fill);
  }

  const std::vector<Word>& relators() const { return relators_; }

  bool row_complete(int a) {
    for (int c = 0; c < ncols_; ++c)
      if (entry(a, c) == 0) return false;
    return true;
  }

  // Compresses to live cosets and renumbers them in BFS order from coset 1.
  CosetTable extract(bool complete) {
    std::vector<int> order;
    std::vector<int> number(tab_.size(), 0);
    int start = rep(1);
    order.push_back(start);
    number[start] = 1;
    for (std::size_t q = 0; q < order.size(); ++q) {
      int a = order[q];
      for (int c = 0; c < ncols_; ++c) {
        int b = entry(a, c);
        if (b != 0 && number[b] == 0) {
          number[b] = static_cast<int>(order.size()) + 1;
          order.push_back(b);
        }
      }
    }
    CosetTable t;
    t.ngens = ncols_ / 2;
    t.index = static_cast<int>(order.size());
    t.complete = complete;
    t.entries.assign(static_cast<std::size_t>(t.index) * ncols_, 0);
    for (int i = 0; i < t.index; ++i)
      for (int c = 0; c < ncols_; ++c) {
        int b = entry(order[i], c);
        t.entries[static_cast<std::size_t>(i) * ncols_ + c] = b == 0 ? 0 : number[b];
      }
    return t;
  }

  int first_undefined(int& coset, int& col) {
    for (int a = 1; a <= size(); ++a) {
      if (!is_live(a)) continue;
      for (int c = 0; c < ncols_; ++c)
        if (entry(a, c) == 0) {
          coset = a;
          col = c;
          return 1;
        }
    }
    return 0;
  }

 private:
  int new_coset() {
    if (tab_.empty()) tab_.emplace_back();  // dummy row 0
    tab_.push_back(std::vector<int>(ncols_, 0));
    parent_.push_back(0);  // dummy alignment on first call
    if (parent_.size() < tab_.size()) parent_.resize(tab_.size());
    int id = static_cast<int>(tab_.size()) - 1;
    parent_[id] = id;
    ++live_;
    return id;
  }

  int rep(int a) {
    int r = a;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[a] != r) {
      int next = parent_[a];
      parent_[a] = r;
      a = next;
    }
    return r;
  }

  void set_edge(int a, int c, int b) {
    a = rep(a);
    b = rep(b);
    if (tab_[a][c] != 0) {
      if (rep(tab_[a][c]) != b) coincidence(rep(tab_[a][c]), b);
      return;
    }
    tab_[a][c] = b;
    if (tab_[b][inv_col(c)] == 0)
      tab_[b][inv_col(c)] = a;
    else if (rep(tab_[b][inv_col(c)]) != a)
      coincidence(rep(tab_[b][inv_col(c)]), a);
    ++changes_;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    ++changes_;
    deadq_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!deadq_.empty()) {
      int e = deadq_.front();
      deadq_.pop_front();
      for (int c = 0; c < ncols_; ++c) {
        int f = tab_[e][c];
        if (f == 0) continue;
        tab_[f][inv_col(c)] = 0;
        int e1 = rep(e), f1 = rep(f);
        if (tab_[e1][c] != 0) {
          merge(f1, tab_[e1][c]);
        } else if (tab_[f1][inv_col(c)] != 0) {
          merge(e1, tab_[f1][inv_col(c)]);
        } else {
          tab_[e1][c] = f1;
          tab_[f1][inv_col(c)] = e1;
        }
      }
    }
  }

  int ncols_;
  std::vector<std::vector<int>> tab_;  // row 0 unused
  std::vector<int> parent_;
  std::deque<int> deadq_;
  std::vector<Word> relators_;
  std::vector<Word> subgroup_;
  int live_ = 0;
  long changes_ = 0;
};

}  // namespace

TcResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                      const EnumerationLimits& limits, TcStrategy strategy) {
  for (const Word& w : subgroup)
    if (w.max_gen() >= p.num_generators())
      throw AlphabetError("subgroup word uses an undeclared generator");
  Machine m(p, subgroup);
  auto deadline = Clock::now() + std::chrono::milliseconds(limits.max_time_ms);
  auto out_of_time = [&] { return Clock::now() > deadline; };

  TcResult res;
  if (strategy == TcStrategy::hlt) {
    m.scan_subgroup(true);
    for (int a = 1; a <= m.size(); ++a) {
      if (!m.is_live(a)) continue;
      for (const Word& r : m.relators()) {
        if (!m.is_live(a)) break;
        m.scan(a, r, true);
      }
      if (m.is_live(a)) m.fill_row(a);
      if (m.live_count() > limits.max_cosets || out_of_time()) {
        // lookahead: deduction/coincidence pass may collapse the table
        while (m.scan_all_once() && m.live_count() > limits.max_cosets) {
        }
        if (m.live_count() > limits.max_cosets || out_of_time()) {
          res.status = TcResult::Status::exhausted;
          res.cosets_reached = m.live_count();
          res.table = m.extract(false);
          return res;
        }
      }
    }
  } else {
    m.scan_subgroup(true);
    while (true) {
      while (m.scan_all_once()) {
      }
      int a = 0, c = 0;
      if (!m.first_undefined(a, c)) break;
      m.define(a, c);
      if (m.live_count() > limits.max_cosets || out_of_time()) {
        res.status = TcResult::Status::exhausted;
        res.cosets_reached = m.live_count();
        res.table = m.extract(false);
        return res;
      }
    }
  }
  res.status = TcResult::Status::complete;
  res.table = m.extract(true);
  res.cosets_reached = res.table.index;
  return res;
}

bool check_coset_table(const Presentation& p, const std::vector<Word>& subgroup,
                       const CosetTable& t, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (t.ngens != p.num_generators()) return fail("generator count mismatch");
  if (t.index <= 0) return fail("empty table");
  int ncols = 2 * t.ngens;
  if (static_cast<int>(t.entries.size()) != t.index * ncols)
    return fail("entry array has wrong size");
  for (int a = 1; a <= t.index; ++a)
    for (int c = 0; c < ncols; ++c) {
      int b = t.at(a, c);
      if (b < 0 || b > t.index) return fail("entry out of range");
      if (t.complete && b == 0) return fail("undefined entry in complete table");
      if (b != 0 && t.at(b, c ^ 1) != a)
        return fail("columns are not mutually inverse");
    }
  // transitivity
  std::vector<char> seen(t.index + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    ++reached;
    for (int c = 0; c < ncols; ++c) {
      int b = t.at(a, c);
      if (b != 0 && !seen[b]) {
        seen[b] = 1;
        stack.push_back(b);
      }
    }
  }
  if (reached != t.index) return fail("table is not transitive");
  if (t.complete) {
    for (int a = 1; a <= t.index; ++a)
      for (const Word& r : p.relators)
        if (t.trace(a, r) != a) return fail("relator does not close at coset");
    for (const Word& w : subgroup)
      if (t.trace(1, w) != 1) return fail("subgroup generator moves coset 1");
  }
  return true;
}

namespace {

// Backtracking enumeration of standardized complete tables of index 2..max.
class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, int max_index, const EnumerationLimits& lim)
      : relators_(p.relators),
        ncols_(2 * p.num_generators()),
        max_(max_index),
        limits_(lim),
        deadline_(Clock::now() + std::chrono::milliseconds(lim.max_time_ms)) {
    tab_.assign(static_cast<std::size_t>(max_ + 1) * ncols_, 0);
    n_used_ = 1;
  }

  LowIndexResult run() {
    dfs();
    LowIndexResult res;
    res.status = exhausted_ ? LowIndexResult::Status::exhausted
                            : LowIndexResult::Status::complete;
    res.nodes = nodes_;
    std::sort(found_.begin(), found_.end(), [](const CosetTable& a, const CosetTable& b) {
      if (a.index != b.index) return a.index < b.index;
      return a.entries < b.entries;
    });
    res.tables = std::move(found_);
    annotate_conjugacy(res);
    return res;
  }

 private:
  int& slot(int coset, int col) {
    return tab_[static_cast<std::size_t>(coset) * ncols_ + col];
  }

  bool assign(int c, int col, int d) {
    if (slot(c, col) != 0) return slot(c, col) == d;
    if (slot(d, col ^ 1) != 0 && slot(d, col ^ 1) != c) return false;
    slot(c, col) = d;
    trail_.emplace_back(c, col);
    if (slot(d, col ^ 1) == 0) {
      slot(d, col ^ 1) = c;
      trail_.emplace_back(d, col ^ 1);
    }
    return true;
  }

  // Deduction closure: scan every relator at every coset, filling single gaps,
  // until a fixpoint or a contradiction.
  bool closure() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 1; a <= n_used_; ++a)
        for (const Word& r : relators_) {
          int state = scan_deduce(a, r, changed);
          if (state < 0) return false;
        }
    }
    return true;
  }

  // Returns -1 on contradiction, 0 otherwise; sets changed on deduction.
  int scan_deduce(int a, const Word& r, bool& changed) {
    const auto& ls = r.letters();
    int n = static_cast<int>(ls.size());
    int f = a, b = a, i = 0, j = n - 1;
    while (i <= j && slot(f, CosetTable::column(ls[i])) != 0)
      f = slot(f, CosetTable::column(ls[i++]));
    if (i > j) return f == b ? 0 : -1;
    while (j >= i && slot(b, CosetTable::column(ls[j]) ^ 1) != 0)
      b = slot(b, CosetTable::column(ls[j--]) ^ 1);
    if (j < i) return f == b ? 0 : -1;
    if (i == j) {
      if (!assign(f, CosetTable::column(ls[i]), b)) return -1;
      changed = true;
    }
    return 0;
  }

  void dfs() {
    if (exhausted_) return;
    if (++nodes_ > limits_.max_nodes || Clock::now() > deadline_) {
      exhausted_ = true;
      return;
    }
    int c = 0, col = 0;
    if (!find_undefined(c, col)) {
      if (n_used_ >= 2) record();
      return;
    }
    int top = n_used_ < max_ ? n_used_ + 1 : n_used_;
    for (int d = 1; d <= top; ++d) {
      std::size_t mark = trail_.size();
      int saved = n_used_;
      if (d > n_used_) n_used_ = d;
      if (assign(c, col, d) && closure()) dfs();
      while (trail_.size() > mark) {
        auto [tc, tcol] = trail_.back();
        trail_.pop_back();
        slot(tc, tcol) = 0;
      }
      n_used_ = saved;
      if (exhausted_) return;
    }
  }

  bool find_undefined(int& c, int& col) {
    for (int a = 1; a <= n_used_; ++a)
      for (int x = 0; x < ncols_; ++x)
        if (slot(a, x) == 0) {
          c = a;
          col = x;
          return true;
        }
    return false;
  }

  void record() {
    CosetTable t;
    t.ngens = ncols_ / 2;
    t.index = n_used_;
    t.complete = true;
    t.entries.assign(tab_.begin() + ncols_,
                     tab_.begin() + static_cast<std::size_t>(n_used_ + 1) * ncols_);
    found_.push_back(std::move(t));
  }

  // Conjugates of the subgroup are the stabilizers of the other points of the
  // same action; group tables accordingly.
  void annotate_conjugacy(LowIndexResult& res) {
    std::map<std::vector<int>, int> class_of;
    res.conjugacy_class.clear();
    for (const CosetTable& t : res.tables) {
      std::vector<int> key = restandardize(t, 1);
      for (int j = 2; j <= t.index; ++j) key = std::min(key, restandardize(t, j));
      auto [it, inserted] = class_of.try_emplace(key, static_cast<int>(class_of.size()));
      res.conjugacy_class.push_back(it->second);
    }
  }

  static std::vector<int> restandardize(const CosetTable& t, int base) {
    int ncols = 2 * t.ngens;
    std::vector<int> number(t.index + 1, 0);
    std::vector<int> order{base};
    number[base] = 1;
    for (std::size_t q = 0; q < order.size(); ++q)
      for (int c = 0; c < ncols; ++c) {
        int b = t.at(order[q], c);
        if (number[b] == 0) {
          number[b] = static_cast<int>(order.size()) + 1;
          order.push_back(b);
        }
      }
    std::vector<int> out;
    out.reserve(t.entries.size());
    for (int i : order)
      for (int c = 0; c < ncols; ++c) out.push_back(number[t.at(i, c)]);
    return out;
  }

  std::vector<Word> relators_;
  int ncols_;
  int max_;
  EnumerationLimits limits_;
  Clock::time_point deadline_;
  std::vector<int> tab_;
  std::vector<std::pair<int, int>> trail_;
  int n_used_;
  long nodes_ = 0;
  bool exhausted_ = false;
  std::vector<CosetTable> found_;
};

}  // namespace

LowIndexResult low_index_subgroups(const Presentation& p, int max_index,
                                   const EnumerationLimits& limits) {
  if (max_index < 1) throw PreconditionError("max_index must be >= 1");
  if (p.num_generators() == 0) return LowIndexResult{};
  return LowIndexSearch(p, max_index, limits).run();
}

Certificate certify_no_finite_quotients(const Presentation& p, int bound,
                                        const EnumerationLimits& limits) {
  if (bound < 2) throw PreconditionError("bound must be >= 2");
  auto t0 = Clock::now();
  LowIndexResult li = low_index_subgroups(p, bound, limits);
  Certificate cert;
  cert.claim = "no non-trivial finite quotient of order <= " + std::to_string(bound);
  cert.bound = bound;
  cert.strategy = "low-index-backtracking";
  cert.input_digest = presentation_digest(p);
  cert.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - t0)
                        .count();
  if (li.status == LowIndexResult::Status::exhausted) {
    cert.status = CertStatus::unknown;
    cert.evidence = {{"reason", "search budget exhausted"}, {"nodes", li.nodes}};
  } else if (li.tables.empty()) {
    cert.status = CertStatus::certified;
    cert.evidence = {{"subgroups_found", 0}, {"nodes", li.nodes}};
  } else {
    cert.status = CertStatus::refuted;
    cert.evidence = {{"witness_table", to_json(li.tables.front())},
                     {"subgroups_found", li.tables.size()}};
  }
  return cert;
}

}  // namespace fpg
