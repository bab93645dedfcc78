#include "fpg/word.hpp"

#include <algorithm>
#include <cctype>

#include "lexer.hpp"
#include "word_parse.hpp"

namespace fpg {

int Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

bool Alphabet::valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Alphabet Alphabet::make(std::vector<std::string> names) {
  Alphabet a{std::move(names)};
  for (std::size_t i = 0; i < a.names.size(); ++i) {
    if (!valid_name(a.names[i]))
      throw AlphabetError("invalid generator name '" + a.names[i] + "'");
    for (std::size_t j = i + 1; j < a.names.size(); ++j)
      if (a.names[i] == a.names[j])
        throw AlphabetError("duplicate generator name '" + a.names[i] + "'");
  }
  return a;
}

Word Word::reduce(std::span<const Letter> raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

int Word::max_gen() const {
  int m = -1;
  for (Letter l : letters_) m = std::max(m, letter_gen(l));
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters_;
  raw.insert(raw.end(), b.letters_.begin(), b.letters_.end());
  return Word::reduce(raw);
}

Word Word::pow(int n) const {
  Word base = n < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

Word Word::conjugated_by(const Word& g) const { return g * *this * g.inverse(); }

bool Word::lex_less(const Word& other) const {
  if (letters_.size() != other.letters_.size())
    return letters_.size() < other.letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    int a = letter_key(letters_[i]), b = letter_key(other.letters_[i]);
    if (a != b) return a < b;
  }
  return false;
}

Word commutator(const Word& x, const Word& y) {
  return x.inverse() * y.inverse() * x * y;
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  int lo = 0, hi = static_cast<int>(ls.size());
  std::vector<Letter> conj;
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    conj.push_back(ls[lo]);
    ++lo;
    --hi;
  }
  CyclicReduction r;
  r.core = Word::reduce(std::span<const Letter>(ls.data() + lo, hi - lo));
  r.conjugator = Word::reduce(conj);
  return r;
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.letters().front() != -w.letters().back();
}

Word rotate(const Word& w, int by) {
  if (w.empty()) return w;
  int n = w.size();
  by = ((by % n) + n) % n;
  std::vector<Letter> raw;
  raw.reserve(n);
  for (int i = 0; i < n; ++i) raw.push_back(w.letters()[(i + by) % n]);
  return Word::reduce(raw);
}

GeneratorMap GeneratorMap::identity(const Alphabet& a) {
  GeneratorMap m{a, a, {}};
  for (int i = 0; i < a.size(); ++i)
    m.images.push_back(Word::from_letter(static_cast<Letter>(i + 1)));
  return m;
}

Word GeneratorMap::apply(const Word& w) const {
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    int g = letter_gen(l);
    if (g >= static_cast<int>(images.size()))
      throw AlphabetError("symbol outside the domain of the generator map");
    const Word& im = l > 0 ? images[g] : images[g].inverse();
    raw.insert(raw.end(), im.letters().begin(), im.letters().end());
  }
  return Word::reduce(raw);
}

GeneratorMap GeneratorMap::then(const GeneratorMap& other) const {
  GeneratorMap m{domain, other.codomain, {}};
  m.images.reserve(images.size());
  for (const Word& im : images) m.images.push_back(other.apply(im));
  return m;
}

namespace detail {

// word := factor ('*' factor)*
// factor := primary ('^' int)?
// primary := NAME | '(' word ')' | '[' word ',' word ']' | '1'
static Word parse_primary(Lexer& lx, const Alphabet& alphabet) {
  const Token& t = lx.peek();
  switch (t.kind) {
    case Tok::Name: {
      Token name = lx.next();
      int idx = alphabet.index_of(name.text);
      if (idx < 0)
        throw ParseError("unknown generator '" + name.text + "'", name.line, name.column);
      return Word::from_letter(static_cast<Letter>(idx + 1));
    }
    case Tok::Int: {
      Token num = lx.next();
      if (num.value != 1)
        throw ParseError("only '1' denotes the identity", num.line, num.column);
      return Word{};
    }
    case Tok::LParen: {
      lx.next();
      Word w = parse_word_tokens(lx, alphabet);
      lx.expect(Tok::RParen, "')'");
      return w;
    }
    case Tok::LBracket: {
      lx.next();
      Word x = parse_word_tokens(lx, alphabet);
      lx.expect(Tok::Comma, "','");
      Word y = parse_word_tokens(lx, alphabet);
      lx.expect(Tok::RBracket, "']'");
      return commutator(x, y);
    }
    default:
      lx.fail("expected a word");
  }
}

Word parse_word_tokens(Lexer& lx, const Alphabet& alphabet) {
  Word acc;
  while (true) {
    Word f = parse_primary(lx, alphabet);
    if (lx.peek().kind == Tok::Caret) {
      lx.next();
      Token e = lx.expect(Tok::Int, "an integer exponent");
      f = f.pow(static_cast<int>(e.value));
    }
    acc = acc * f;
    if (lx.peek().kind == Tok::Star)
      lx.next();
    else
      break;
  }
  return acc;
}

}  // namespace detail

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  detail::Lexer lx(text);
  Word w = detail::parse_word_tokens(lx, alphabet);
  if (lx.peek().kind != detail::Tok::End) lx.fail("trailing input after word");
  return w;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long run = static_cast<long>(j - i);
    if (!out.empty()) out += '*';
    out += alphabet.names.at(letter_gen(ls[i]));
    long exp = ls[i] > 0 ? run : -run;
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

}  // namespace fpg
