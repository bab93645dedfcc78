#pragma once

#include <string>
#include <vector>

#include "fpg/certificate.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

// Complete or partial coset action table. Cosets are 1-based; coset 1 is the
// subgroup itself. Columns come in pairs: 2g for generator g, 2g+1 for its
// inverse. 0 marks an undefined entry.
struct CosetTable {
  int ngens = 0;
  int index = 0;
  bool complete = false;
  std::vector<int> entries;  // index rows, 2*ngens columns, row-major

  static int column(Letter l) { return 2 * letter_gen(l) + (l < 0 ? 1 : 0); }
  int at(int coset, int col) const {
    return entries[static_cast<std::size_t>(coset - 1) * 2 * ngens + col];
  }
  // 0 when undefined
  int apply(int coset, Letter l) const { return at(coset, column(l)); }
  int trace(int coset, const Word& w) const;  // 0 when the trace leaves the table

  bool operator==(const CosetTable&) const = default;
};

struct EnumerationLimits {
  int max_cosets = 200000;
  long max_time_ms = 120000;
  long max_nodes = 50000000;  // backtracking nodes for the low-index search

  // FPGROUP_MAX_COSETS / FPGROUP_MAX_TIME_MS / FPGROUP_MAX_NODES override the
  // defaults when set.
  static EnumerationLimits from_env();
};

enum class TcStrategy { hlt, felsch };
std::string to_string(TcStrategy s);

struct TcResult {
  enum class Status { complete, exhausted };
  Status status = Status::exhausted;
  CosetTable table;        // standardized when complete
  int cosets_reached = 0;  // live cosets at the end (partial size on exhaustion)
};

TcResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                      const EnumerationLimits& limits = {},
                      TcStrategy strategy = TcStrategy::hlt);

// Independent re-checker: inverse-pair consistency, transitivity, every relator
// closing at every coset, every subgroup generator fixing coset 1.
bool check_coset_table(const Presentation& p, const std::vector<Word>& subgroup,
                       const CosetTable& t, std::string* why = nullptr);

struct LowIndexResult {
  enum class Status { complete, exhausted };
  Status status = Status::complete;
  // All proper subgroups of index 2..max_index (not just up to conjugacy), as
  // standardized tables in canonical order.
  std::vector<CosetTable> tables;
  std::vector<int> conjugacy_class;  // class id per table, ids in output order
  long nodes = 0;
};

LowIndexResult low_index_subgroups(const Presentation& p, int max_index,
                                   const EnumerationLimits& limits = {});

// Certified iff the low-index search up to `bound` is exhaustive and empty;
// refuted with a witness table otherwise; unknown on resource exhaustion.
Certificate certify_no_finite_quotients(const Presentation& p, int bound,
                                        const EnumerationLimits& limits = {});

}  // namespace fpg
