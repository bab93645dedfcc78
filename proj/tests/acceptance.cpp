// Acceptance gate: runs the ten desk-scale criteria end to end and prints one
// PASS/FAIL line per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fpg/cli.hpp"
#include "fpg/constructions.hpp"
#include "fpg/homology.hpp"
#include "fpg/reports.hpp"

#include "perm_oracle.hpp"
#include "rng.hpp"
#include "snf_oracle.hpp"

using namespace fpg;

namespace {

int failures = 0;
std::vector<PairReport> emitted_reports;  // inspected by criterion 9

struct Check {
  bool ok = true;
  std::string why;
  void expect(bool cond, const std::string& label) {
    if (!cond && ok) {
      ok = false;
      why = label;
    } else if (!cond) {
      why += "; " + label;
    }
  }
};

void criterion(int id, double budget_s, const std::string& what,
               void (*body)(Check&)) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < budget_s, "time budget exceeded");
  std::printf("criterion %2d: %s (%.1fs) %s%s%s\n", id, c.ok ? "PASS" : "FAIL", secs,
              what.c_str(), c.ok ? "" : " -- ", c.ok ? "" : c.why.c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

Word random_word(TestRng& rng, int ngens, int max_len) {
  std::vector<Letter> raw;
  int len = static_cast<int>(rng.range(1, max_len));
  for (int i = 0; i < len; ++i) {
    Letter l = static_cast<Letter>(rng.range(1, ngens));
    raw.push_back(rng.range(0, 1) ? l : -l);
  }
  return Word::reduce(raw);
}

void c1_snf(Check& c) {
  TestRng rng(101);
  for (int t = 0; t < 200; ++t) {
    int r = static_cast<int>(rng.range(1, 6)), cols = static_cast<int>(rng.range(1, 6));
    IntegerMatrix m = IntegerMatrix::zero(r, cols);
    for (auto& e : m.entries) e = rng.range(-10, 10);
    auto diag = smith_normal_form(m).diagonal;
    c.expect(diag == testoracle::snf_diagonal(m), "diagonal differs from oracle");
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      if (diag[i + 1] != 0)
        c.expect(diag[i] != 0 && diag[i + 1] % diag[i] == 0, "divisibility chain broken");
    if (!c.ok) return;
  }
}

void c2_higman_diagnostics(Check& c) {
  c.expect(h1(higman(HigmanVariant::corrected)).trivial(), "h1(corrected) not trivial");
  InvariantFactors v = h1(higman(HigmanVariant::paper_verbatim));
  c.expect(v.free_rank == 1, "h1(verbatim) free rank is " +
                                 std::to_string(v.free_rank) + ", not 1");
  bool refused = false;
  try {
    emitted_reports.push_back(theorem_main_pipeline(higman(HigmanVariant::paper_verbatim)));
  } catch (const HypothesisRefuted&) {
    refused = true;
  }
  c.expect(refused, "pipeline accepted the verbatim variant");
}

void c3_bounded_quotients(Check& c) {
  Certificate cert = certify_no_finite_quotients(higman(), 6);
  c.expect(cert.status == CertStatus::certified, "certificate not certified");
  c.expect(cert.bound == 6, "wrong bound");
  for (int n = 2; n <= 3; ++n)
    c.expect(testoracle::transitive_tables(higman(), n).empty(),
             "oracle found a transitive action on " + std::to_string(n) + " points");
}

void c4_coset_enumeration(Check& c) {
  Presentation p = parse_presentation("< a, b | a^2, b^3, (a*b)^3 >");
  TcResult r = todd_coxeter(p, {});
  c.expect(r.status == TcResult::Status::complete && r.table.index == 12,
           "expected 12 cosets");
  std::string why;
  c.expect(check_coset_table(p, {}, r.table, &why), "re-checker failed: " + why);

  TcResult c5r = todd_coxeter(parse_presentation("< a | a^5 >"), {});
  c.expect(c5r.status == TcResult::Status::complete && c5r.table.index == 5,
           "expected 5 cosets");

  LowIndexResult li = low_index_subgroups(parse_presentation("< a, b | >"), 2);
  c.expect(li.status == LowIndexResult::Status::complete && li.tables.size() == 3,
           "expected exactly 3 subgroups of F2 at index 2");
}

void c5_small_cancellation(Check& c) {
  Presentation g2 = parse_presentation("< a, b, c, d | [a,b]*[c,d] >");
  CancellationReport r = sc_verify(g2);
  c.expect(r.lambda == Rational::of(1, 8) && r.passes, "genus-2 lambda != 1/8");
  c.expect(recheck_witness(r, g2, nullptr), "genus-2 witness recheck failed");

  Presentation ab3 = parse_presentation("< a, b | (a*b)^3 >");
  CancellationReport r2 = sc_verify(ab3);
  c.expect(r2.lambda == Rational::of(5, 6) && !r2.passes, "(ab)^3 lambda != 5/6");
  c.expect(recheck_witness(r2, ab3, nullptr), "(ab)^3 witness recheck failed");
}

void c6_dehn(Check& c) {
  RipsOutput rips = rips_wise(higman());
  c.expect(rips.sc_report.passes, "rips output not certified");
  DehnSolver solver(rips.gamma);
  TestRng rng(106);
  int ng = rips.gamma.num_generators();
  for (int t = 0; t < 100; ++t) {
    Word w;
    for (int k = 0, n = static_cast<int>(rng.range(1, 3)); k < n; ++k) {
      const Word& rel = rips.gamma.relators[static_cast<std::size_t>(
          rng.range(0, rips.gamma.num_relators() - 1))];
      Word conj = random_word(rng, ng, 4);
      w = w * (rng.range(0, 1) ? rel : rel.inverse()).conjugated_by(conj);
    }
    std::vector<int> steps;
    Word reduced = solver.reduce(w, &steps);
    c.expect(reduced.empty(), "constructed trivial word did not reduce to empty");
    for (std::size_t i = 1; i < steps.size(); ++i)
      c.expect(steps[i] < steps[i - 1], "reduction step did not shorten the word");
    if (!c.ok) return;
  }
}

void c7_rips_structural(Check& c) {
  RipsOutput r = rips_wise(higman());
  c.expect(r.gamma.num_generators() == 7, "expected 7 generators");
  c.expect(r.gamma.num_relators() == 28, "expected 28 relators");
  c.expect(r.sc_report.passes, "C'(1/6) certificate missing");
  c.expect(recheck_witness(r.sc_report, r.gamma, nullptr), "witness recheck failed");
  c.expect(quotient_by(r.gamma, r.n_subgroup.generators) ==
               tietze_simplify(higman()).presentation,
           "quotient by nu's does not recover the input");
  RipsOutput rerun = rips_wise(higman());
  c.expect(to_json(r).dump() == to_json(rerun).dump(), "rerun not byte-identical");
}

void c8_family(Check& c) {
  SeedSequence trivial = constant_trivial_seed();
  SeedSequence hig = constant_higman_seed();

  PairReport h = gn_family(hig, 0);
  emitted_reports.push_back(h);
  c.expect(h.g.num_generators() == 8 && h.g.num_relators() == 35,
           "expected 8 generators / 35 relators");
  c.expect(h.a.label == "A_n" && h.b && h.b->label == "B_n", "A_n/B_n not marked");
  c.expect(h.direct_factor == Verdict::no, "higman with citation stub should be 'no'");

  SeedSequence hig_blind = constant_higman_seed();
  hig_blind.oracle.reset();
  PairReport hu = gn_family(hig_blind, 0);
  emitted_reports.push_back(hu);
  c.expect(hu.direct_factor == Verdict::unknown,
           "higman without the oracle should be 'unknown'");

  PairReport t = gn_family(trivial, 0);
  emitted_reports.push_back(t);
  c.expect(t.direct_factor == Verdict::yes, "trivial seed should be 'yes'");

  // verdict monotonicity: a larger budget never downgrades a decided verdict
  PipelineOptions small, big;
  small.quotient_bound = 2;
  small.tietze.move_budget = 100;
  big.quotient_bound = 6;
  for (SeedSequence* s : {&trivial, &hig}) {
    Verdict vs = gn_family(*s, 0, small).direct_factor;
    Verdict vb = gn_family(*s, 0, big).direct_factor;
    c.expect(vs == vb || vs == Verdict::unknown,
             "verdict regressed under a budget increase");
  }
}

void c9_hygiene(Check& c) {
  emitted_reports.push_back(theorem_main_pipeline(parse_presentation("< a | a >")));
  emitted_reports.push_back(goldstein_guralnick_pair(parse_presentation("< a | a >"),
                                                     parse_presentation("< z | z >")));
  c.expect(!emitted_reports.empty(), "no reports were collected");
  for (const PairReport& r : emitted_reports) {
    for (const Certificate& cert : r.profinite_claims)
      c.expect(cert.status != CertStatus::certified,
               "profinite claim marked certified: " + cert.claim);
    std::vector<const Certificate*> all;
    for (const Certificate& cert : r.certificates) all.push_back(&cert);
    for (const Certificate& cert : r.profinite_claims) all.push_back(&cert);
    for (const Certificate* cert : all) {
      c.expect(!cert->input_digest.empty(), "certificate missing input digest");
      c.expect(!cert->claim.empty(), "certificate missing claim");
      Json j = to_json(*cert);
      c.expect(j.contains("bound") && j.contains("status"), "certificate JSON incomplete");
    }
  }
}

void c10_round_trip(Check& c) {
  TestRng rng(110);
  for (int t = 0; t < 500; ++t) {
    int ng = static_cast<int>(rng.range(1, 4));
    std::vector<std::string> names;
    for (int i = 0; i < ng; ++i) {
      std::string nm(1, static_cast<char>('a' + i));
      if (rng.range(0, 3) == 0) nm += std::to_string(rng.range(0, 9));
      names.push_back(nm);
    }
    std::vector<Word> rel;
    for (int i = 0, n = static_cast<int>(rng.range(0, 4)); i < n; ++i)
      rel.push_back(random_word(rng, ng, 10));
    Presentation p = Presentation::make(Alphabet::make(names), rel);
    c.expect(parse_presentation(format_presentation(p)) == p, "round-trip mismatch");
    if (!c.ok) return;
  }

  const char* malformed[] = {
      "",          "<",           "< a",          "< a |",       "< a | a",
      "< a | x >", "< 1a | >",    "< a, a | >",   "< a | a^ >",  "< a | a* >",
      "< a | (a >", "< a | [a >", "< a | a = >",  "< a | = a >", "a | a",
      "< a b | >", "< a, | >",    "< a | a >>",   "< a | 2 >",   "< a | a^x >",
  };
  int idx = 0;
  for (const char* text : malformed) {
    std::string path = "/tmp/fpg_acc_malformed_" + std::to_string(idx++) + ".txt";
    {
      std::ofstream f(path);
      f << text;
    }
    std::ostringstream out, err;
    int code = run({"parse", path}, out, err);
    c.expect(code == 3, std::string("malformed case accepted: '") + text + "'");
    c.expect(err.str().find("line") != std::string::npos,
             std::string("no position info for: '") + text + "'");
    std::remove(path.c_str());
  }
}

}  // namespace

int main() {
  criterion(1, 5.0, "snf matches the determinantal-divisor oracle (200 matrices)", c1_snf);
  criterion(2, 1.0, "higman diagnostics (corrected trivial, verbatim rank 1, refusal)",
            c2_higman_diagnostics);
  criterion(3, 120.0, "bounded quotient certificate for higman at B=6", c3_bounded_quotients);
  criterion(4, 5.0, "coset enumeration (12 cosets, 5 cosets, F2 low index)", c4_coset_enumeration);
  criterion(5, 1.0, "small cancellation exact lambdas with witnesses", c5_small_cancellation);
  criterion(6, 30.0, "dehn solver kills 100 constructed trivial words", c6_dehn);
  criterion(7, 60.0, "rips structural counts, recovery, determinism", c7_rips_structural);
  criterion(8, 120.0, "gn family shape, verdicts, monotonicity", c8_family);
  criterion(9, 5.0, "report hygiene across all emitted pair reports", c9_hygiene);
  criterion(10, 5.0, "round-trip parsing and the malformed corpus", c10_round_trip);
  if (failures) std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
