#pragma once

#include <string>
#include <vector>

#include "fpg/certificate.hpp"
#include "fpg/presentation.hpp"
#include "fpg/smallcancel.hpp"

namespace fpg {

struct RipsParameters {
  long block_base = 10;      // starting exponent scale
  int escalation_factor = 2; // block_base multiplier per retry round
  int max_rounds = 12;
};

struct RipsOutput {
  Presentation gamma;
  MarkedSubgroup n_subgroup;  // nu1, nu2, nu3 inside gamma
  Presentation q_input;
  RipsParameters params;
  long block_base_used = 0;
  CancellationReport sc_report;
  // facts carried from the construction's cited theorem, never machine-checked
  std::vector<Certificate> metadata;
};

// Construction failure after exhausting escalation rounds.
struct RipsError : Error {
  CancellationReport last_report;
  explicit RipsError(CancellationReport rep)
      : Error("rips construction failed: C'(1/6) not reached, lambda = " +
              rep.lambda.str()),
        last_report(std::move(rep)) {}
};

// From <X | R> builds <X ∪ {nu1,nu2,nu3} | S> with S as in the block-word
// recipe, escalating block_base until the C'(1/6) certificate and the
// quotient-recovery invariant both hold.
RipsOutput rips_wise(const Presentation& q, const RipsParameters& params = {});

}  // namespace fpg
