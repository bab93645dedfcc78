#include "doctest.h"

#include "fpg/constructions.hpp"
#include "fpg/homology.hpp"
#include "fpg/reports.hpp"

using namespace fpg;

namespace {

// every claim trail must obey the hygiene rules
void check_hygiene(const PairReport& r) {
  for (const Certificate& c : r.profinite_claims) {
    CHECK(c.status != CertStatus::certified);
    CHECK_FALSE(c.input_digest.empty());
  }
  for (const Certificate& c : r.certificates) {
    CHECK_FALSE(c.claim.empty());
    CHECK_FALSE(c.input_digest.empty());
  }
}

}  // namespace

TEST_CASE("higman variants") {
  Presentation c = higman();
  CHECK(c.num_generators() == 4);
  CHECK(c.num_relators() == 4);
  CHECK(h1(c).trivial());
  Presentation v = higman(HigmanVariant::paper_verbatim);
  CHECK(v != c);
  CHECK(v.num_relators() == 4);
}

TEST_CASE("theorem pipeline on the trivial seed") {
  PairReport r = theorem_main_pipeline(parse_presentation("< a | a >"));
  CHECK(r.g.num_generators() == 4);
  CHECK(r.a.generators.size() == 3);
  CHECK(r.rips.has_value());
  CHECK(r.direct_factor == Verdict::yes);
  check_hygiene(r);
  REQUIRE(r.profinite_claims.size() == 1);
  CHECK(r.profinite_claims[0].status == CertStatus::theorem_cited);

  bool h1_cert = false, quot_cert = false, h2_asserted = false;
  for (const Certificate& c : r.certificates) {
    if (c.claim == "H1(Q) = 0") h1_cert = c.status == CertStatus::certified;
    if (c.claim.find("finite quotient") != std::string::npos)
      quot_cert = c.status == CertStatus::certified;
    if (c.claim == "H2(Q;Z) = 0") h2_asserted = c.status == CertStatus::asserted;
  }
  CHECK(h1_cert);
  CHECK(quot_cert);
  CHECK(h2_asserted);
}

TEST_CASE("pipeline refuses non-perfect seeds by name") {
  try {
    theorem_main_pipeline(parse_presentation("< a, b | [a,b] >"));
    FAIL("expected HypothesisRefuted");
  } catch (const HypothesisRefuted& e) {
    CHECK(e.hypothesis == "H1(Q) = 0");
  }
}

TEST_CASE("pipeline refuses seeds with small finite quotients") {
  // the (2,3,5) triangle group is perfect but surjects A5, which acts on 5
  // points, so the bounded quotient gate fires
  try {
    theorem_main_pipeline(parse_presentation("< a, b | a^2, b^3, (a*b)^5 >"));
    FAIL("expected HypothesisRefuted");
  } catch (const HypothesisRefuted& e) {
    CHECK(e.hypothesis == "no non-trivial finite quotients");
  }
}

TEST_CASE("goldstein-guralnick pair over a trivial B") {
  PairReport r = goldstein_guralnick_pair(parse_presentation("< a | a >"),
                                          parse_presentation("< z | z >"));
  CHECK(r.b.has_value());
  CHECK(r.b->generators.size() == 1);
  CHECK(r.direct_factor == Verdict::no);
  check_hygiene(r);
  // B's claim trail includes the residual-finiteness assertion
  bool rf = false;
  for (const Certificate& c : r.certificates)
    if (c.claim == "B is residually finite") rf = c.status == CertStatus::asserted;
  CHECK(rf);
}

TEST_CASE("fibre product generators") {
  RipsOutput rips = rips_wise(parse_presentation("< a | a >"));
  FibreProduct f = fibre_product_generators(rips);
  CHECK(f.subgroup.label == "P");
  CHECK(f.subgroup.ambient.num_generators() == 8);
  // 3 nu's plus one diagonal generator per gamma generator
  CHECK(f.subgroup.generators.size() == 3 + 4);
  bool fp_claim = false;
  for (const Certificate& c : f.certificates) {
    CHECK(c.status != CertStatus::certified);
    if (c.claim.find("finitely presented") != std::string::npos) fp_claim = true;
  }
  CHECK(fp_claim);
}

TEST_CASE("nikolov-segal subgroup construction") {
  RipsOutput rips = rips_wise(parse_presentation("< a, b, c, d | [a,b]*[c,d] >"));

  // words inside N are refused outright
  CHECK_THROWS_AS(nikolov_segal_subgroup(rips, rips.n_subgroup.generators[0]),
                  PreconditionError);
  // words whose image Dehn-reduces to 1 in Q are refused too
  CHECK_THROWS_AS(
      nikolov_segal_subgroup(rips, parse_word("[a,b]*[c,d]", rips.gamma.alphabet)),
      PreconditionError);
  CHECK_THROWS_AS(nikolov_segal_subgroup(rips, Word::from_letter(9)), AlphabetError);

  NikolovSegal ns = nikolov_segal_subgroup(rips, parse_word("a", rips.gamma.alphabet));
  CHECK(ns.subgroup.generators.size() == 4);
  bool certified_nontrivial = false;
  for (const Certificate& c : ns.certificates)
    if (c.claim == "pi(gamma_word) != 1 in Q")
      certified_nontrivial = c.status == CertStatus::certified;
  CHECK(certified_nontrivial);  // the genus-2 seed is C'(1/6), so Dehn decides
}

TEST_CASE("gn family verdicts and shape") {
  PairReport t = gn_family(constant_trivial_seed(), 0);
  CHECK(t.direct_factor == Verdict::yes);
  CHECK(t.g.num_generators() == 5);
  CHECK(t.g.num_relators() == 11);
  CHECK(t.a.label == "A_n");
  CHECK(t.b.has_value());
  CHECK(t.b->label == "B_n");
  check_hygiene(t);

  SeedSequence hig = constant_higman_seed();
  PairReport h = gn_family(hig, 0);
  CHECK(h.direct_factor == Verdict::no);
  CHECK(h.g.num_generators() == 8);
  CHECK(h.g.num_relators() == 35);
  check_hygiene(h);

  hig.oracle.reset();
  PairReport hu = gn_family(hig, 0);
  CHECK(hu.direct_factor == Verdict::unknown);
}

TEST_CASE("pair report json shape") {
  PairReport r = gn_family(constant_trivial_seed(), 0);
  Json j = to_json(r);
  CHECK(j.contains("g"));
  CHECK(j.contains("a"));
  CHECK(j.contains("b"));
  CHECK(j.contains("certificates"));
  CHECK(j.contains("profinite_claims"));
  CHECK(j["direct_factor"] == "yes");
  for (const auto& c : j["certificates"]) {
    CHECK(c.contains("bound"));
    CHECK(c.contains("status"));
    CHECK(c.contains("input_digest"));
  }
}
