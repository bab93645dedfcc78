#include "fpg/constructions.hpp"

#include <algorithm>

#include "fpg/digest.hpp"
#include "fpg/homology.hpp"
#include "fpg/jsonio.hpp"
#include "fpg/smallcancel.hpp"

namespace fpg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
    case Verdict::not_applicable: return "n/a";
  }
  return "unknown";
}

Presentation higman(HigmanVariant variant) {
  std::string fourth = variant == HigmanVariant::corrected ? "a^2" : "d^2";
  return parse_presentation(
      "< a, b, c, d | a*b*a^-1 = b^2, b*c*b^-1 = c^2, c*d*c^-1 = d^2, "
      "d*a*d^-1 = " + fourth + " >");
}

namespace {

Certificate make_cert(std::string claim, CertStatus status, std::string strategy,
                      std::string digest, long bound = 0, Json evidence = {}) {
  Certificate c;
  c.claim = std::move(claim);
  c.status = status;
  c.strategy = std::move(strategy);
  c.input_digest = std::move(digest);
  c.bound = bound;
  c.evidence = std::move(evidence);
  return c;
}

Certificate h1_certificate(const Presentation& q) {
  InvariantFactors inv = h1(q);
  return make_cert("H1(Q) = 0",
                   inv.trivial() ? CertStatus::certified : CertStatus::refuted,
                   "smith-normal-form", presentation_digest(q), 0, to_json(inv));
}

// Quotient map pi: Gamma -> Q killing the nu generators.
GeneratorMap quotient_map(const RipsOutput& rips_out) {
  GeneratorMap m{rips_out.gamma.alphabet, rips_out.q_input.alphabet, {}};
  int nx = rips_out.q_input.num_generators();
  for (int i = 0; i < rips_out.gamma.num_generators(); ++i)
    m.images.push_back(i < nx ? Word::from_letter(i + 1) : Word{});
  return m;
}

Certificate rips_structural_cert(const RipsOutput& r) {
  std::string digest = presentation_digest(r.gamma);
  Json ev = {{"generators", r.gamma.num_generators()},
             {"relators", r.gamma.num_relators()},
             {"expected_generators", r.q_input.num_generators() + 3},
             {"expected_relators",
              r.q_input.num_relators() + 6 * r.q_input.num_generators()},
             {"block_base_used", r.block_base_used}};
  return make_cert("rips output has |X|+3 generators and |R|+6|X| relators",
                   CertStatus::certified, "structural-count", digest, 0, ev);
}

Certificate rips_sc_cert(const RipsOutput& r) {
  Json ev = {{"lambda", r.sc_report.lambda.str()},
             {"max_piece_length", r.sc_report.max_piece_length},
             {"min_relator_length", r.sc_report.min_relator_length}};
  return make_cert("rips output satisfies C'(1/6)", CertStatus::certified,
                   "suffix-array-piece-scan", presentation_digest(r.gamma), 0, ev);
}

Certificate rips_recovery_cert(const RipsOutput& r) {
  return make_cert("killing nu1,nu2,nu3 recovers the input presentation",
                   CertStatus::certified, "tietze-quotient",
                   presentation_digest(r.gamma), 0,
                   Json{{"q", to_json(r.q_input)}});
}

Verdict seed_verdict(const Presentation& q, long n,
                     const std::optional<NontrivialityOracle>& oracle,
                     const PipelineOptions& opts, std::vector<Certificate>& certs,
                     const std::string& digest) {
  TietzeResult tr = tietze_simplify(q, opts.tietze);
  if (tr.presentation.num_generators() == 0 && tr.presentation.relators.empty()) {
    certs.push_back(make_cert("seed presents the trivial group",
                              CertStatus::certified, "tietze-trivialization", digest,
                              opts.tietze.move_budget,
                              Json{{"reason", "seed Tietze-trivializes"}}));
    return Verdict::yes;
  }
  if (oracle) {
    if (auto cert = oracle->check(n, q)) {
      certs.push_back(*cert);
      return Verdict::no;
    }
  }
  return Verdict::unknown;
}

}  // namespace

PairReport theorem_main_pipeline(const Presentation& q, const PipelineOptions& opts) {
  std::string qd = presentation_digest(q);
  PairReport report;

  Certificate h1c = h1_certificate(q);
  if (h1c.status != CertStatus::certified)
    throw HypothesisRefuted("H1(Q) = 0", "invariant factors " + h1c.evidence.dump());
  report.certificates.push_back(h1c);

  Certificate qc = certify_no_finite_quotients(q, opts.quotient_bound, opts.limits);
  if (qc.status == CertStatus::refuted)
    throw HypothesisRefuted("no non-trivial finite quotients",
                            "finite quotient witness " + qc.evidence.dump());
  report.certificates.push_back(qc);

  report.certificates.push_back(make_cert("H2(Q;Z) = 0", CertStatus::asserted,
                                          "caller-assertion", qd, 0,
                                          Json{{"flag", "assert-h2-zero"}}));
  report.certificates.push_back(make_cert("Q is infinite", CertStatus::asserted,
                                          "caller-assertion", qd, 0,
                                          Json{{"flag", "assert-infinite"}}));

  RipsOutput rips_out = rips_wise(q, opts.rips);
  report.certificates.push_back(rips_structural_cert(rips_out));
  report.certificates.push_back(rips_sc_cert(rips_out));
  report.certificates.push_back(rips_recovery_cert(rips_out));
  for (const Certificate& c : rips_out.metadata) report.certificates.push_back(c);

  std::string gd = presentation_digest(rips_out.gamma);
  report.profinite_claims.push_back(make_cert(
      "the inclusion N -> Gamma induces an isomorphism of profinite completions",
      CertStatus::theorem_cited, "citation", gd, opts.quotient_bound,
      Json{{"citation",
            "splitting of the central extension for super-perfect quotients "
            "(Milnor, Introduction to Algebraic K-Theory)"},
           {"conditional_on",
            Json::array({"H1(Q) = 0 (certified)",
                         "no finite quotients (certified up to the bound only)",
                         "H2(Q;Z) = 0 (asserted)", "Q infinite (asserted)"})}}));

  report.g = rips_out.gamma;
  report.a = rips_out.n_subgroup;
  report.direct_factor =
      seed_verdict(q, 0, std::nullopt, opts, report.certificates, qd);
  report.rips = std::move(rips_out);
  return report;
}

PairReport goldstein_guralnick_pair(const Presentation& q, const Presentation& b,
                                    const PipelineOptions& opts) {
  PairReport base = theorem_main_pipeline(q, opts);
  DirectProduct dp = direct_product(base.g, b);
  std::string gd = presentation_digest(dp.presentation);

  PairReport report;
  report.g = dp.presentation;
  std::vector<Word> a_gens = base.a.generators;  // same indices in the product
  report.a = MarkedSubgroup{report.g, a_gens, "A = N x 1"};
  std::vector<Word> b_gens;
  for (int i = 0; i < b.num_generators(); ++i)
    b_gens.push_back(Word::from_letter(dp.left_generators + i + 1));
  report.b = MarkedSubgroup{report.g, b_gens, "B factor"};
  report.certificates = base.certificates;
  report.certificates.push_back(make_cert("B is residually finite",
                                          CertStatus::asserted, "caller-assertion",
                                          presentation_digest(b)));
  report.profinite_claims = base.profinite_claims;
  report.profinite_claims.push_back(
      make_cert("completion of G is completion(Gamma) x completion(B), with the "
                "closure of A the first factor",
                CertStatus::theorem_cited, "citation", gd, 0,
                Json{{"citation", "profinite completion of a direct product"}}));
  report.profinite_claims.push_back(make_cert(
      "A is not a direct factor of G nor of any finite-index subgroup of G",
      CertStatus::theorem_cited, "citation", gd, 0,
      Json{{"reason",
            "such direct factors are finitely presentable; N is not (Bieri)"}}));
  report.direct_factor = Verdict::no;
  report.rips = std::move(base.rips);
  return report;
}

FibreProduct fibre_product_generators(const RipsOutput& rips_out) {
  DirectProduct dp = direct_product(rips_out.gamma, rips_out.gamma);
  int shift = dp.left_generators;
  int nx = rips_out.q_input.num_generators();
  FibreProduct out;
  std::vector<Word> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(Word::from_letter(nx + 1 + i));
  for (int g = 0; g < rips_out.gamma.num_generators(); ++g)
    gens.push_back(Word::from_letter(g + 1) * Word::from_letter(shift + g + 1));
  out.subgroup = MarkedSubgroup{dp.presentation, std::move(gens), "P"};
  std::string gd = presentation_digest(dp.presentation);
  out.certificates.push_back(make_cert(
      "Q has a K(Q,1) with finite 3-skeleton", CertStatus::asserted,
      "caller-assertion", presentation_digest(rips_out.q_input)));
  out.certificates.push_back(make_cert(
      "P is finitely presented (conditional on the 3-skeleton hypothesis)",
      CertStatus::theorem_cited, "citation", gd, 0,
      Json{{"citation", "1-2-3 theorem: fibre products over groups with "
                        "finite 3-skeleton are finitely presented"}}));
  out.certificates.push_back(make_cert(
      "P -> Gamma x Gamma induces an isomorphism of profinite completions",
      CertStatus::theorem_cited, "citation", gd, 0,
      Json{{"citation", "fibre products over superperfect quotients with no "
                        "finite quotients induce completion isomorphisms"}}));
  out.certificates.push_back(make_cert(
      "neither P nor a finite-index subgroup splits as a direct product",
      CertStatus::theorem_cited, "citation", gd, 0,
      Json{{"citation", "centralizer analysis in Gamma x Gamma"}}));
  return out;
}

NikolovSegal nikolov_segal_subgroup(const RipsOutput& rips_out, const Word& gamma_word) {
  if (gamma_word.max_gen() >= rips_out.gamma.num_generators())
    throw AlphabetError("word uses generators outside gamma");
  GeneratorMap pi = quotient_map(rips_out);
  Word image = pi.apply(gamma_word);
  if (image.empty())
    throw PreconditionError(
        "pi(gamma_word) is the identity of Q (word lies in N up to free reduction)");

  NikolovSegal out;
  std::string qd = presentation_digest(rips_out.q_input);
  bool oracle_used = false;
  if (!rips_out.q_input.relators.empty()) {
    CancellationReport qrep = sc_verify(rips_out.q_input);
    if (qrep.passes) {
      oracle_used = true;
      Word reduced = DehnSolver(rips_out.q_input).reduce(image);
      if (reduced.empty())
        throw PreconditionError("pi(gamma_word) is trivial in Q (Dehn reduction)");
      out.certificates.push_back(make_cert(
          "pi(gamma_word) != 1 in Q", CertStatus::certified, "dehn-reduction", qd, 0,
          Json{{"reduced_image", format_word(reduced, rips_out.q_input.alphabet)}}));
    }
  } else if (!image.empty()) {
    // free Q: free reduction is already a word-problem oracle
    oracle_used = true;
    out.certificates.push_back(make_cert("pi(gamma_word) != 1 in Q",
                                         CertStatus::certified, "free-reduction", qd));
  }
  if (!oracle_used)
    out.certificates.push_back(make_cert(
        "pi(gamma_word) != 1 in Q", CertStatus::asserted, "caller-assertion", qd, 0,
        Json{{"image", format_word(image, rips_out.q_input.alphabet)}}));

  std::vector<Word> gens = rips_out.n_subgroup.generators;
  gens.push_back(gamma_word);
  out.subgroup = MarkedSubgroup{rips_out.gamma, std::move(gens), "N by <gamma>"};
  std::string gd = presentation_digest(rips_out.gamma);
  out.certificates.push_back(make_cert(
      "<N, gamma> = N ⋊ Z where no power of the defining automorphism is inner "
      "yet it acts as an inner automorphism on every finite quotient of N",
      CertStatus::theorem_cited, "citation", gd, 0,
      Json{{"citation", "centralizers in torsion-free hyperbolic groups (Gromov)"}}));
  out.certificates.push_back(make_cert("Q is torsion-free", CertStatus::asserted,
                                       "caller-assertion", qd));
  out.certificates.push_back(make_cert(
      "Gamma is torsion-free hyperbolic", CertStatus::theorem_cited, "citation", gd, 0,
      Json{{"citation", "C'(1/6) small-cancellation groups are hyperbolic"}}));
  return out;
}

SeedSequence constant_higman_seed() {
  SeedSequence s;
  s.name = "higman";
  s.description = "constant sequence: the corrected Higman group J";
  s.provider = [](long) { return higman(HigmanVariant::corrected); };
  NontrivialityOracle oracle;
  oracle.name = "citation-stub";
  oracle.check = [](long, const Presentation& q) -> std::optional<Certificate> {
    Certificate c;
    c.claim = "seed group is nontrivial";
    c.status = CertStatus::theorem_cited;
    c.strategy = "citation-stub";
    c.input_digest = presentation_digest(q);
    c.evidence = {{"citation", "Higman's group J is infinite (Higman 1951)"}};
    return c;
  };
  s.oracle = std::move(oracle);
  return s;
}

SeedSequence constant_trivial_seed() {
  SeedSequence s;
  s.name = "trivial";
  s.description = "constant sequence: < a | a >";
  s.provider = [](long) { return parse_presentation("< a | a >"); };
  return s;
}

PairReport gn_family(const SeedSequence& seed, long n, const PipelineOptions& opts) {
  Presentation q = seed.provider(n);
  std::string qd = presentation_digest(q);

  PairReport report;
  report.certificates.push_back(h1_certificate(q));
  report.certificates.push_back(
      certify_no_finite_quotients(q, opts.quotient_bound, opts.limits));

  RipsOutput rips_out = rips_wise(q, opts.rips);
  report.certificates.push_back(rips_structural_cert(rips_out));
  report.certificates.push_back(rips_sc_cert(rips_out));
  report.certificates.push_back(rips_recovery_cert(rips_out));

  Presentation z = parse_presentation("< t | >");
  DirectProduct dp = direct_product(rips_out.gamma, z);
  report.g = dp.presentation;
  std::string gd = presentation_digest(report.g);
  int nx = rips_out.q_input.num_generators();
  std::vector<Word> a_gens;
  for (int i = 0; i < 3; ++i) a_gens.push_back(Word::from_letter(nx + 1 + i));
  report.a = MarkedSubgroup{report.g, a_gens, "A_n"};
  report.b = MarkedSubgroup{report.g,
                            {Word::from_letter(dp.left_generators + 1)},
                            "B_n"};

  report.certificates.push_back(make_cert(
      "G_n is residually finite and torsion-free", CertStatus::theorem_cited,
      "citation", gd, 0,
      Json{{"citation", "Wise's Rips variant; direct product with Z"}}));
  report.certificates.push_back(make_cert(
      "{n : A_n is a direct factor of G_n} is not recursive",
      CertStatus::theorem_cited, "citation", gd, 0,
      Json{{"citation",
            "undecidability of triviality for perfect bounded-quotient-free "
            "seed sequences"}}));
  report.certificates.push_back(make_cert(
      "if A_n is not a direct factor of G_n, it is not a direct factor of any "
      "finite-index subgroup",
      CertStatus::theorem_cited, "citation", gd, 0,
      Json{{"citation", "finite-index direct factors are finitely presentable"}}));
  report.profinite_claims.push_back(make_cert(
      "B_n is infinite and completion(G_n) = closure(A_n) x closure(B_n)",
      CertStatus::theorem_cited, "citation", gd, 0,
      Json{{"citation", "profinite completion of Gamma_n x Z"}}));
  report.profinite_claims.push_back(make_cert(
      "A_n -> G_n induces an isomorphism onto the closure of A_n",
      CertStatus::theorem_cited, "citation", gd, 0,
      Json{{"citation", "super-perfect quotient splitting argument"}}));

  report.direct_factor =
      seed_verdict(q, n, seed.oracle, opts, report.certificates, qd);
  report.rips = std::move(rips_out);
  return report;
}

}  // namespace fpg
