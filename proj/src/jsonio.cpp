#include "fpg/jsonio.hpp"

#include "fpg/digest.hpp"

namespace fpg {

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::string presentation_digest(const Presentation& p) {
  return hex64(fnv1a(format_presentation(p)));
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::certified: return "certified";
    case CertStatus::theorem_cited: return "theorem-cited";
    case CertStatus::asserted: return "asserted";
    case CertStatus::unknown: return "unknown";
    case CertStatus::refuted: return "refuted";
  }
  return "unknown";
}

Json to_json(const Presentation& p) {
  Json j;
  j["generators"] = p.alphabet.names;
  Json rel = Json::array();
  for (const Word& r : p.relators) rel.push_back(format_word(r, p.alphabet));
  j["relators"] = std::move(rel);
  return j;
}

Presentation presentation_from_json(const Json& j) {
  Alphabet a = Alphabet::make(j.at("generators").get<std::vector<std::string>>());
  std::vector<Word> relators;
  for (const auto& s : j.at("relators"))
    relators.push_back(parse_word(s.get<std::string>(), a));
  return Presentation::make(std::move(a), std::move(relators));
}

Json to_json(const MarkedSubgroup& m) {
  Json j;
  j["label"] = m.label;
  j["ambient"] = to_json(m.ambient);
  Json gens = Json::array();
  for (const Word& w : m.generators) gens.push_back(format_word(w, m.ambient.alphabet));
  j["generators"] = std::move(gens);
  return j;
}

Json to_json(const IntegerMatrix& m) {
  Json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  Json e = Json::array();
  for (const mpz_class& v : m.entries) e.push_back(v.get_str());
  j["entries"] = std::move(e);
  return j;
}

IntegerMatrix matrix_from_json(const Json& j) {
  IntegerMatrix m = IntegerMatrix::zero(j.at("rows").get<int>(), j.at("cols").get<int>());
  const auto& e = j.at("entries");
  if (static_cast<int>(e.size()) != m.rows * m.cols)
    throw Error("matrix entries array has wrong length");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].is_number_integer())
      m.entries[i] = mpz_class(e[i].get<long>());
    else
      m.entries[i] = mpz_class(e[i].get<std::string>());
  }
  return m;
}

Json to_json(const InvariantFactors& f) {
  Json j;
  Json t = Json::array();
  for (const mpz_class& d : f.torsion) t.push_back(d.get_str());
  j["torsion"] = std::move(t);
  j["free_rank"] = f.free_rank;
  j["trivial"] = f.trivial();
  return j;
}

Json to_json(const CosetTable& t) {
  Json j;
  j["ngens"] = t.ngens;
  j["index"] = t.index;
  j["complete"] = t.complete;
  Json rows = Json::array();
  for (int a = 1; a <= t.index; ++a) {
    Json row = Json::array();
    for (int c = 0; c < 2 * t.ngens; ++c) row.push_back(t.at(a, c));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

CosetTable coset_table_from_json(const Json& j) {
  CosetTable t;
  t.ngens = j.at("ngens").get<int>();
  t.index = j.at("index").get<int>();
  t.complete = j.at("complete").get<bool>();
  for (const auto& row : j.at("table"))
    for (const auto& v : row) t.entries.push_back(v.get<int>());
  if (static_cast<int>(t.entries.size()) != t.index * 2 * t.ngens)
    throw Error("coset table has wrong shape");
  return t;
}

Json to_json(const Certificate& c) {
  Json j;
  j["claim"] = c.claim;
  j["bound"] = c.bound;
  j["status"] = to_string(c.status);
  j["strategy"] = c.strategy;
  j["runtime_ms"] = c.runtime_ms;
  j["input_digest"] = c.input_digest;
  j["evidence"] = c.evidence;
  return j;
}

Presentation read_presentation_text(const std::string& content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '<') return parse_presentation(content);
    break;
  }
  Json j = Json::parse(content, nullptr, true, true);
  return presentation_from_json(j);
}

}  // namespace fpg
