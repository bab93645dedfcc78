#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fpg/certificate.hpp"
#include "fpg/coset.hpp"
#include "fpg/presentation.hpp"
#include "fpg/rips.hpp"

namespace fpg {

enum class Verdict { yes, no, unknown, not_applicable };
std::string to_string(Verdict v);

// Result of a theorem-level pipeline: ambient group, marked subgroup(s), and
// the full certificate trail. Profinite claims are never machine-checked, so
// none of them may carry status `certified`.
struct PairReport {
  Presentation g;
  MarkedSubgroup a;
  std::optional<MarkedSubgroup> b;
  std::vector<Certificate> certificates;
  std::vector<Certificate> profinite_claims;
  Verdict direct_factor = Verdict::not_applicable;
  std::optional<RipsOutput> rips;  // populated by pipelines that run rips_wise
};

enum class HigmanVariant { corrected, paper_verbatim };

// The 4-generator, 4-relator Higman group J. The `paper_verbatim` variant
// carries the misprinted fourth relator d*a*d^-1 = d^2, which makes the
// generator a eliminable (a = d^2); `corrected` is the standard d*a*d^-1 = a^2.
Presentation higman(HigmanVariant variant = HigmanVariant::corrected);

struct PipelineOptions {
  int quotient_bound = 6;
  RipsParameters rips;
  EnumerationLimits limits;
  TietzeOptions tietze;
};

// Checks H1(q) = 0 and the bounded no-finite-quotient hypothesis, then runs
// rips_wise and assembles the certificate trail. Throws HypothesisRefuted when
// a machine check refutes a hypothesis.
PairReport theorem_main_pipeline(const Presentation& q, const PipelineOptions& opts = {});

// G = Gamma x B with A = N x {1}.
PairReport goldstein_guralnick_pair(const Presentation& q, const Presentation& b,
                                    const PipelineOptions& opts = {});

struct FibreProduct {
  MarkedSubgroup subgroup;  // generators of P inside Gamma x Gamma
  std::vector<Certificate> certificates;
};

// P = {(g1, g2) : pi(g1) = pi(g2)} generated by (nu_i, 1) and the diagonal.
FibreProduct fibre_product_generators(const RipsOutput& rips_out);

struct NikolovSegal {
  MarkedSubgroup subgroup;  // <nu1, nu2, nu3, gamma>
  std::vector<Certificate> certificates;
};

// <N, gamma> = N ⋊ Z for gamma outside N; refuses words whose image in Q is
// visibly trivial (free reduction, or Dehn reduction when Q is C'(1/6)).
NikolovSegal nikolov_segal_subgroup(const RipsOutput& rips_out, const Word& gamma_word);

struct NontrivialityOracle {
  std::string name;
  // Returns a certificate (status theorem-cited or certified) when the seed
  // group is known to be nontrivial; nullopt when the oracle cannot tell.
  std::function<std::optional<Certificate>(long n, const Presentation& q)> check;
};

struct SeedSequence {
  std::string name;
  std::string description;
  std::function<Presentation(long n)> provider;  // total and deterministic
  std::optional<NontrivialityOracle> oracle;
};

SeedSequence constant_higman_seed();   // ships the documented citation-stub oracle
SeedSequence constant_trivial_seed();  // < a | a >

// The augmented family: G_n = rips_wise(seed(n)) x <t>, A_n marked by the
// nu's, B_n marked by t, with the Theorem-2.3-style claim trail and the
// three-valued direct-factor verdict (yes iff the seed Tietze-trivializes,
// no iff an oracle certifies nontriviality, unknown otherwise).
PairReport gn_family(const SeedSequence& seed, long n, const PipelineOptions& opts = {});

}  // namespace fpg
