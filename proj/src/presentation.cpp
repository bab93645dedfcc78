#include "fpg/presentation.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "word_parse.hpp"

namespace fpg {

namespace {

// Booth's least-rotation algorithm over the letter_key order.
int least_rotation_index(const std::vector<Letter>& v) {
  int n = static_cast<int>(v.size());
  auto key = [&](int i) { return letter_key(v[i % n]); };
  int i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    int a = key(i + k), b = key(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace

Word canonical_relator(const Word& w) {
  Word core = cyclic_reduce(w).core;
  if (core.empty()) return core;
  Word best = rotate(core, least_rotation_index(core.letters()));
  Word inv = core.inverse();
  Word cand = rotate(inv, least_rotation_index(inv.letters()));
  return cand.lex_less(best) ? cand : best;
}

Presentation Presentation::make(Alphabet alphabet, std::vector<Word> relators) {
  std::vector<Word> canon;
  for (const Word& r : relators) {
    if (r.max_gen() >= alphabet.size())
      throw AlphabetError("relator uses an undeclared generator");
    Word c = canonical_relator(r);
    if (!c.empty()) canon.push_back(std::move(c));
  }
  std::sort(canon.begin(), canon.end(),
            [](const Word& a, const Word& b) { return a.lex_less(b); });
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return Presentation{std::move(alphabet), std::move(canon)};
}

Presentation parse_presentation(std::string_view text) {
  detail::Lexer lx(text);
  lx.expect(detail::Tok::Less, "'<'");
  std::vector<std::string> names;
  if (lx.peek().kind == detail::Tok::Name) {
    names.push_back(lx.next().text);
    while (lx.peek().kind == detail::Tok::Comma) {
      lx.next();
      names.push_back(lx.expect(detail::Tok::Name, "a generator name").text);
    }
  }
  detail::Token pipe = lx.peek();
  lx.expect(detail::Tok::Pipe, "'|'");
  Alphabet alphabet;
  try {
    alphabet = Alphabet::make(std::move(names));
  } catch (const AlphabetError& e) {
    throw ParseError(e.what(), pipe.line, pipe.column);
  }
  std::vector<Word> relators;
  if (lx.peek().kind != detail::Tok::Greater) {
    while (true) {
      Word u = detail::parse_word_tokens(lx, alphabet);
      if (lx.peek().kind == detail::Tok::Equals) {
        lx.next();
        Word v = detail::parse_word_tokens(lx, alphabet);
        u = u * v.inverse();
      }
      relators.push_back(std::move(u));
      if (lx.peek().kind == detail::Tok::Comma)
        lx.next();
      else
        break;
    }
  }
  lx.expect(detail::Tok::Greater, "'>'");
  if (lx.peek().kind != detail::Tok::End) lx.fail("trailing input after '>'");
  return Presentation::make(std::move(alphabet), std::move(relators));
}

std::string format_presentation(const Presentation& p) {
  std::string out = "< ";
  for (int i = 0; i < p.alphabet.size(); ++i) {
    if (i) out += ", ";
    out += p.alphabet.names[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += format_word(p.relators[i], p.alphabet);
  }
  out += " >";
  return out;
}

namespace {

struct Elimination {
  int gen = -1;
  Word image;  // word over the current alphabet, not containing gen
};

// A generator is eliminable when some relator contains it exactly once and the
// rest of the relator is short enough to substitute.
std::optional<Elimination> find_elimination(const Presentation& p, int max_len) {
  std::optional<Elimination> best;
  for (const Word& r : p.relators) {
    std::vector<int> count(p.alphabet.size(), 0);
    for (Letter l : r.letters()) ++count[letter_gen(l)];
    for (int pos = 0; pos < r.size(); ++pos) {
      Letter l = r.letters()[pos];
      int g = letter_gen(l);
      if (count[g] != 1) continue;
      if (r.size() - 1 > max_len) continue;
      // rotate so the occurrence is first: r ~ l * rest
      Word rot = rotate(r, pos);
      std::vector<Letter> rest(rot.letters().begin() + 1, rot.letters().end());
      Word image = l > 0 ? Word::reduce(rest).inverse() : Word::reduce(rest);
      if (!best || image.size() < best->image.size() ||
          (image.size() == best->image.size() && g < best->gen))
        best = Elimination{g, std::move(image)};
    }
  }
  return best;
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& opts) {
  TietzeResult res;
  res.presentation = Presentation::make(p.alphabet, p.relators);
  int moves = 0;
  while (true) {
    auto elim = find_elimination(res.presentation, opts.max_substitution_length);
    if (!elim) break;
    if (moves >= opts.move_budget) {
      res.complete = false;
      break;
    }
    ++moves;
    const Alphabet& old = res.presentation.alphabet;
    res.eliminated.emplace_back(old.names[elim->gen], format_word(elim->image, old));
    std::vector<std::string> names;
    for (int i = 0; i < old.size(); ++i)
      if (i != elim->gen) names.push_back(old.names[i]);
    Alphabet next = Alphabet::make(names);
    // reindexing map with the eliminated generator sent to its image
    GeneratorMap reindex{old, next, {}};
    for (int i = 0; i < old.size(); ++i) {
      if (i == elim->gen) {
        reindex.images.emplace_back();  // patched below
      } else {
        int j = next.index_of(old.names[i]);
        reindex.images.push_back(Word::from_letter(static_cast<Letter>(j + 1)));
      }
    }
    // elim->image contains no occurrence of gen, so reindexing it is safe
    reindex.images[elim->gen] = reindex.apply(elim->image);
    std::vector<Word> relators;
    for (const Word& r : res.presentation.relators) relators.push_back(reindex.apply(r));
    res.presentation = Presentation::make(std::move(next), std::move(relators));
  }
  return res;
}

Presentation quotient_by(const Presentation& p, const std::vector<Word>& kill,
                         const TietzeOptions& opts) {
  std::vector<Word> relators = p.relators;
  relators.insert(relators.end(), kill.begin(), kill.end());
  return tietze_simplify(Presentation::make(p.alphabet, std::move(relators)), opts)
      .presentation;
}

DirectProduct direct_product(const Presentation& p, const Presentation& q) {
  DirectProduct out;
  out.left_generators = p.alphabet.size();
  std::vector<std::string> names = p.alphabet.names;
  for (const std::string& qn : q.alphabet.names) {
    std::string candidate = qn;
    int suffix = 1;
    while (std::find(names.begin(), names.end(), candidate) != names.end())
      candidate = qn + "_" + std::to_string(suffix++);
    if (candidate != qn) out.renamed.emplace_back(qn, candidate);
    names.push_back(candidate);
  }
  Alphabet alphabet = Alphabet::make(std::move(names));
  std::vector<Word> relators = p.relators;
  int shift = p.alphabet.size();
  for (const Word& r : q.relators) {
    std::vector<Letter> raw;
    for (Letter l : r.letters())
      raw.push_back(l > 0 ? l + shift : l - shift);
    relators.push_back(Word::reduce(raw));
  }
  for (int x = 0; x < p.alphabet.size(); ++x)
    for (int y = 0; y < q.alphabet.size(); ++y)
      relators.push_back(commutator(Word::from_letter(x + 1),
                                    Word::from_letter(shift + y + 1)));
  out.presentation = Presentation::make(std::move(alphabet), std::move(relators));
  return out;
}

}  // namespace fpg
