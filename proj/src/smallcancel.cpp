#include "fpg/smallcancel.hpp"

#include <algorithm>
#include <numeric>

namespace fpg {

Rational Rational::of(long long n, long long d) {
  long long g = std::gcd(n, d);
  if (g == 0) return Rational{0, 1};
  return Rational{n / g, d / g};
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

struct CyclicFamily {
  int relator;
  bool inverted;
  Word base;
};

bool is_rotation_of(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  for (int i = 0; i < u.size(); ++i)
    if (rotate(u, i) == v) return true;
  return u == v;  // covers the empty word
}

// One cyclic word per relator plus one for its inverse, unless the inverse is
// itself a rotation of the relator.
std::vector<CyclicFamily> cyclic_families(const Presentation& p) {
  std::vector<CyclicFamily> fams;
  for (int i = 0; i < p.num_relators(); ++i) {
    const Word& r = p.relators[i];
    fams.push_back({i, false, r});
    Word ri = r.inverse();
    if (!is_rotation_of(r, ri)) fams.push_back({i, true, ri});
  }
  return fams;
}

int minimal_period(const Word& w) {
  // KMP failure function on the letter sequence
  int n = w.size();
  std::vector<int> f(n + 1, 0);
  f[0] = -1;
  int k = -1;
  for (int i = 0; i < n; ++i) {
    while (k >= 0 && w.letters()[k] != w.letters()[i]) k = f[k];
    f[i + 1] = ++k;
  }
  int period = n - f[n];
  return (n % period == 0) ? period : n;
}

std::vector<std::int32_t> doubled_letters(const Word& base) {
  std::vector<std::int32_t> d(base.letters().begin(), base.letters().end());
  for (int i = 0; i + 1 < base.size(); ++i) d.push_back(base.letters()[i]);
  return d;
}

}  // namespace

CancellationReport sc_verify(const Presentation& p, Rational target) {
  if (p.relators.empty())
    throw PreconditionError("sc_verify needs at least one relator");
  CancellationReport rep;
  rep.lambda_target = target;
  rep.min_relator_length = p.relators.front().size();
  for (const Word& r : p.relators)
    rep.min_relator_length = std::min(rep.min_relator_length, r.size());
  for (int i = 0; i < p.num_relators(); ++i)
    if (minimal_period(p.relators[i]) < p.relators[i].size())
      rep.proper_power_relators.push_back(i);

  std::vector<CyclicFamily> fams = cyclic_families(p);

  // corpus: doubled cyclic words joined by unique separators
  std::vector<std::int32_t> text;
  struct Pos {
    int family;
    int local;
  };
  std::vector<Pos> pos_of;  // parallel to text
  for (std::size_t f = 0; f < fams.size(); ++f) {
    auto d = doubled_letters(fams[f].base);
    for (std::size_t i = 0; i < d.size(); ++i) {
      text.push_back(d[i]);
      pos_of.push_back({static_cast<int>(f), static_cast<int>(i)});
    }
    text.push_back(-1000000 - static_cast<std::int32_t>(f));
    pos_of.push_back({-1, -1});
  }
  SuffixArray sa = SuffixArray::build(text);

  // occurrence suffixes (one per (cyclic word, offset)) in suffix-array order,
  // with the min-lcp gap to the previous occurrence suffix
  struct Occ {
    int family;
    int local;  // < base length
    int gap;    // lcp with the previous occurrence suffix in SA order
  };
  std::vector<Occ> occ;
  int running = -1;  // min lcp since the last occurrence suffix
  for (std::size_t k = 0; k < sa.sa.size(); ++k) {
    if (running < 0)
      running = 0;  // first entry
    else
      running = std::min(running, sa.lcp[k]);
    Pos pp = pos_of[sa.sa[k]];
    if (pp.family < 0) continue;
    int L = fams[pp.family].base.size();
    if (pp.local >= L) continue;
    occ.push_back({pp.family, pp.local, running});
    running = 1 << 30;
  }

  std::vector<int> best(p.num_relators(), 0);
  int witness_a = -1, witness_b = -1, witness_len = 0;

  auto consider = [&](int i, int j, int lcp_ij) {
    int ri = fams[occ[i].family].relator;
    int rj = fams[occ[j].family].relator;
    int cap = std::min({lcp_ij, p.relators[ri].size() - 1, p.relators[rj].size() - 1});
    if (cap > best[ri]) {
      best[ri] = cap;
      if (cap > witness_len) {
        witness_len = cap;
        witness_a = i;
        witness_b = j;
      }
    }
  };

  // For every occurrence, its best lcp against each relator-length class is
  // attained at the nearest class member in SA order, so two running-min
  // sweeps per class cover all pairs.
  std::vector<int> lengths;
  for (const Word& r : p.relators) lengths.push_back(r.size());
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  auto class_of = [&](int k) {
    int len = p.relators[fams[occ[k].family].relator].size();
    return static_cast<int>(std::lower_bound(lengths.begin(), lengths.end(), len) -
                            lengths.begin());
  };
  std::vector<int> occ_class(occ.size());
  for (std::size_t k = 0; k < occ.size(); ++k) occ_class[k] = class_of(k);

  int n_occ = static_cast<int>(occ.size());
  for (std::size_t c = 0; c < lengths.size(); ++c) {
    int run = -1, last = -1;
    for (int k = 0; k < n_occ; ++k) {  // lcp with the previous class-c member
      if (last >= 0) {
        run = std::min(run, occ[k].gap);
        if (run > 0) consider(k, last, run);
      }
      if (occ_class[k] == static_cast<int>(c)) {
        last = k;
        run = 1 << 30;
      }
    }
    run = -1, last = -1;
    for (int k = n_occ - 1; k >= 0; --k) {  // lcp with the next class-c member
      if (last >= 0) {
        run = std::min(run, occ[k + 1].gap);
        if (run > 0) consider(k, last, run);
      }
      if (occ_class[k] == static_cast<int>(c)) {
        last = k;
        run = 1 << 30;
      }
    }
  }

  rep.max_piece_length = *std::max_element(best.begin(), best.end());
  Rational lambda{0, 1};
  for (int i = 0; i < p.num_relators(); ++i) {
    Rational cand = Rational::of(best[i], p.relators[i].size());
    if (lambda < cand) lambda = cand;
  }
  rep.lambda = lambda;
  rep.passes = lambda < target;
  if (witness_len > 0) {
    auto mk = [&](int k) {
      const CyclicFamily& f = fams[occ[k].family];
      Word rot = rotate(f.base, occ[k].local);
      return PieceOccurrence{f.relator, f.inverted, occ[k].local,
                             format_word(rot, p.alphabet)};
    };
    CancellationWitness w;
    w.first = mk(witness_a);
    w.second = mk(witness_b);
    Word rot = rotate(fams[occ[witness_a].family].base, occ[witness_a].local);
    std::vector<Letter> piece(rot.letters().begin(), rot.letters().begin() + witness_len);
    w.piece = format_word(Word::reduce(piece), p.alphabet);
    rep.witness = std::move(w);
  }
  return rep;
}

bool recheck_witness(const CancellationReport& report, const Presentation& p,
                     std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!report.witness) return report.max_piece_length == 0;
  const CancellationWitness& w = *report.witness;
  if (w.first.relator == w.second.relator && w.first.inverted == w.second.inverted &&
      w.first.rotation == w.second.rotation)
    return fail("witness occurrences are not distinct");
  Word piece = parse_word(w.piece, p.alphabet);
  if (piece.size() != report.max_piece_length)
    return fail("piece length does not match the report");
  for (const PieceOccurrence* o : {&w.first, &w.second}) {
    if (o->relator < 0 || o->relator >= p.num_relators())
      return fail("witness relator index out of range");
    Word base = p.relators[o->relator];
    if (o->inverted) base = base.inverse();
    Word rot = rotate(base, o->rotation);
    if (format_word(rot, p.alphabet) != o->word)
      return fail("witness word is not the stated rotation");
    if (piece.size() >= rot.size()) return fail("piece is not a proper factor");
    if (!std::equal(piece.letters().begin(), piece.letters().end(),
                    rot.letters().begin()))
      return fail("piece is not a prefix of the witness word");
  }
  return true;
}

DehnSolver::DehnSolver(const Presentation& p) : p_(p), report_(sc_verify(p)) {
  if (!report_.passes)
    throw PreconditionError("presentation is not C'(1/6); Dehn reduction unsound");
  std::vector<CyclicFamily> fams = cyclic_families(p_);
  min_length_ = report_.min_relator_length;
  for (std::size_t f = 0; f < fams.size(); ++f) {
    Family fam{fams[f].relator, fams[f].inverted, fams[f].base,
               doubled_letters(fams[f].base)};
    automaton_.add_string(fam.doubled, static_cast<int>(f));
    families_.push_back(std::move(fam));
  }
}

Word DehnSolver::reduce(const Word& w, std::vector<int>* step_lengths) const {
  Word cur = w;
  if (step_lengths) step_lengths->push_back(cur.size());
  while (true) {
    std::vector<std::int32_t> text(cur.letters().begin(), cur.letters().end());
    auto steps = automaton_.longest_matches(text);
    bool rewritten = false;
    for (std::size_t i = 0; i < text.size() && !rewritten; ++i) {
      if (2 * steps[i].length <= min_length_) continue;
      int state = steps[i].state;
      int ml = steps[i].length;
      while (state != 0) {
        auto oc = automaton_.occurrence(state);
        const Family& fam = families_[oc.string_id];
        int L = fam.base.size();
        int len = std::min({ml, automaton_.length(state), L});
        int minlen = automaton_.length(automaton_.link(state)) + 1;
        if (len >= minlen && 2 * len > L) {
          // factor cur[i-len+1..i] == rotation of fam.base starting at s0
          int s0 = (oc.end_pos - len + 1) % L;
          Word rot = rotate(fam.base, s0);
          std::vector<Letter> next(cur.letters().begin(),
                                   cur.letters().begin() + (i - len + 1));
          // replace the majority prefix by the inverse of the complement
          for (int k = L - 1; k >= len; --k)
            next.push_back(-rot.letters()[k]);
          next.insert(next.end(), cur.letters().begin() + i + 1, cur.letters().end());
          Word reduced = Word::reduce(next);
          cur = std::move(reduced);
          if (step_lengths) step_lengths->push_back(cur.size());
          rewritten = true;
          break;
        }
        state = automaton_.link(state);
        ml = std::min(ml, automaton_.length(state));
      }
    }
    if (!rewritten) return cur;
  }
}

Word dehn_reduce(const Word& w, const Presentation& p) {
  return DehnSolver(p).reduce(w);
}

}  // namespace fpg
