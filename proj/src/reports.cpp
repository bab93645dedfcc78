#include "fpg/reports.hpp"

namespace fpg {

namespace {

CertStatus status_from_string(const std::string& s) {
  if (s == "certified") return CertStatus::certified;
  if (s == "theorem-cited") return CertStatus::theorem_cited;
  if (s == "asserted") return CertStatus::asserted;
  if (s == "unknown") return CertStatus::unknown;
  if (s == "refuted") return CertStatus::refuted;
  throw Error("unknown certificate status: " + s);
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational::of(std::stoll(s), 1);
  return Rational::of(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

Json occurrence_json(const PieceOccurrence& o) {
  return {{"relator", o.relator},
          {"inverted", o.inverted},
          {"rotation", o.rotation},
          {"word", o.word}};
}

PieceOccurrence occurrence_from_json(const Json& j) {
  PieceOccurrence o;
  o.relator = j.at("relator").get<int>();
  o.inverted = j.at("inverted").get<bool>();
  o.rotation = j.at("rotation").get<int>();
  o.word = j.at("word").get<std::string>();
  return o;
}

// the subgroup's ambient is carried separately in report JSON, so only the
// label and the generator words are emitted here
Json marked_json(const MarkedSubgroup& m) {
  Json gens = Json::array();
  for (const Word& w : m.generators) gens.push_back(format_word(w, m.ambient.alphabet));
  return {{"label", m.label}, {"generators", std::move(gens)}};
}

MarkedSubgroup marked_from_json(const Json& j, const Presentation& ambient) {
  MarkedSubgroup m;
  m.ambient = ambient;
  m.label = j.at("label").get<std::string>();
  for (const auto& s : j.at("generators"))
    m.generators.push_back(parse_word(s.get<std::string>(), ambient.alphabet));
  return m;
}

Json certificates_json(const std::vector<Certificate>& cs) {
  Json a = Json::array();
  for (const Certificate& c : cs) a.push_back(to_json(c));
  return a;
}

}  // namespace

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.claim = j.at("claim").get<std::string>();
  c.bound = j.at("bound").get<long>();
  c.status = status_from_string(j.at("status").get<std::string>());
  c.strategy = j.at("strategy").get<std::string>();
  c.runtime_ms = j.at("runtime_ms").get<long>();
  c.input_digest = j.at("input_digest").get<std::string>();
  c.evidence = j.at("evidence");
  return c;
}

Json to_json(const CancellationReport& r) {
  Json j;
  j["max_piece_length"] = r.max_piece_length;
  j["min_relator_length"] = r.min_relator_length;
  j["lambda"] = r.lambda.str();
  j["lambda_target"] = r.lambda_target.str();
  j["passes"] = r.passes;
  j["proper_power_relators"] = r.proper_power_relators;
  if (r.witness) {
    j["witness"] = {{"piece", r.witness->piece},
                    {"first", occurrence_json(r.witness->first)},
                    {"second", occurrence_json(r.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

CancellationReport cancellation_report_from_json(const Json& j) {
  CancellationReport r;
  r.max_piece_length = j.at("max_piece_length").get<int>();
  r.min_relator_length = j.at("min_relator_length").get<int>();
  r.lambda = rational_from_string(j.at("lambda").get<std::string>());
  r.lambda_target = rational_from_string(j.at("lambda_target").get<std::string>());
  r.passes = j.at("passes").get<bool>();
  r.proper_power_relators = j.at("proper_power_relators").get<std::vector<int>>();
  if (!j.at("witness").is_null()) {
    CancellationWitness w;
    const Json& wj = j.at("witness");
    w.piece = wj.at("piece").get<std::string>();
    w.first = occurrence_from_json(wj.at("first"));
    w.second = occurrence_from_json(wj.at("second"));
    r.witness = std::move(w);
  }
  return r;
}

Json to_json(const RipsOutput& r) {
  Json j;
  j["gamma"] = to_json(r.gamma);
  j["n_subgroup"] = marked_json(r.n_subgroup);
  j["q"] = to_json(r.q_input);
  j["params"] = {{"block_base", r.params.block_base},
                 {"escalation_factor", r.params.escalation_factor},
                 {"max_rounds", r.params.max_rounds}};
  j["block_base_used"] = r.block_base_used;
  j["sc_report"] = to_json(r.sc_report);
  j["metadata"] = certificates_json(r.metadata);
  return j;
}

RipsOutput rips_output_from_json(const Json& j) {
  RipsOutput r;
  r.gamma = presentation_from_json(j.at("gamma"));
  r.n_subgroup = marked_from_json(j.at("n_subgroup"), r.gamma);
  r.q_input = presentation_from_json(j.at("q"));
  const Json& p = j.at("params");
  r.params.block_base = p.at("block_base").get<long>();
  r.params.escalation_factor = p.at("escalation_factor").get<int>();
  r.params.max_rounds = p.at("max_rounds").get<int>();
  r.block_base_used = j.at("block_base_used").get<long>();
  r.sc_report = cancellation_report_from_json(j.at("sc_report"));
  for (const auto& c : j.at("metadata")) r.metadata.push_back(certificate_from_json(c));
  return r;
}

Json to_json(const PairReport& r) {
  Json j;
  j["g"] = to_json(r.g);
  j["a"] = marked_json(r.a);
  j["b"] = r.b ? marked_json(*r.b) : Json(nullptr);
  j["certificates"] = certificates_json(r.certificates);
  j["profinite_claims"] = certificates_json(r.profinite_claims);
  j["direct_factor"] = to_string(r.direct_factor);
  if (r.rips) j["rips"] = to_json(*r.rips);
  return j;
}

Json to_json(const FibreProduct& f) {
  PairReport r;
  r.g = f.subgroup.ambient;
  r.a = f.subgroup;
  r.certificates = f.certificates;
  r.direct_factor = Verdict::unknown;
  for (auto it = r.certificates.begin(); it != r.certificates.end();) {
    if (it->claim.find("profinite") != std::string::npos) {
      r.profinite_claims.push_back(*it);
      it = r.certificates.erase(it);
    } else {
      ++it;
    }
  }
  return to_json(r);
}

Json to_json(const NikolovSegal& n) {
  PairReport r;
  r.g = n.subgroup.ambient;
  r.a = n.subgroup;
  r.certificates = n.certificates;
  r.direct_factor = Verdict::unknown;
  return to_json(r);
}

}  // namespace fpg
