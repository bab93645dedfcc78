#include "doctest.h"

#include "fpg/smallcancel.hpp"

#include "rng.hpp"

using namespace fpg;

TEST_CASE("genus-2 surface relator") {
  Presentation p = parse_presentation("< a, b, c, d | [a,b]*[c,d] >");
  CancellationReport r = sc_verify(p);
  CHECK(r.max_piece_length == 1);
  CHECK(r.min_relator_length == 8);
  CHECK(r.lambda == Rational::of(1, 8));
  CHECK(r.passes);
  CHECK(r.proper_power_relators.empty());
  std::string why;
  CHECK(recheck_witness(r, p, &why));
}

TEST_CASE("(a*b)^3 fails with lambda 5/6") {
  Presentation p = parse_presentation("< a, b | (a*b)^3 >");
  CancellationReport r = sc_verify(p);
  CHECK(r.lambda == Rational::of(5, 6));
  CHECK(r.max_piece_length == 5);
  CHECK_FALSE(r.passes);
  CHECK(r.proper_power_relators == std::vector<int>{0});
  CHECK(recheck_witness(r, p, nullptr));
}

TEST_CASE("single short relator passes vacuously") {
  CancellationReport r = sc_verify(parse_presentation("< a, b | a >"));
  CHECK(r.max_piece_length == 0);
  CHECK(r.lambda == Rational::of(0, 1));
  CHECK(r.passes);
  CHECK_FALSE(r.witness.has_value());
  CHECK_THROWS_AS(sc_verify(parse_presentation("< a | >")), PreconditionError);
}

TEST_CASE("witness recheck catches tampering") {
  Presentation p = parse_presentation("< a, b | (a*b)^3 >");
  CancellationReport r = sc_verify(p);
  REQUIRE(r.witness.has_value());
  CancellationReport bad = r;
  bad.witness->piece = "a";
  CHECK_FALSE(recheck_witness(bad, p, nullptr));
  bad = r;
  bad.witness->second = bad.witness->first;
  CHECK_FALSE(recheck_witness(bad, p, nullptr));
  bad = r;
  bad.witness->first.rotation += 1;
  CHECK_FALSE(recheck_witness(bad, p, nullptr));
}

TEST_CASE("custom lambda target") {
  Presentation p = parse_presentation("< a, b | (a*b)^3 >");
  CHECK(sc_verify(p, Rational::of(1, 1)).passes);       // 5/6 < 1
  CHECK_FALSE(sc_verify(p, Rational::of(5, 6)).passes);  // strict comparison
}

TEST_CASE("dehn reduction in the genus-2 group") {
  Presentation p = parse_presentation("< a, b, c, d | [a,b]*[c,d] >");
  DehnSolver solver(p);

  Word rel = parse_word("[a,b]*[c,d]", p.alphabet);
  CHECK(solver.reduce(rel).empty());
  CHECK(solver.reduce(rel.inverse()).empty());

  Word aba = parse_word("a*b*a", p.alphabet);
  CHECK(solver.reduce(aba) == aba);  // no majority subword; certified nontrivial

  TestRng rng(41);
  auto random_conjugator = [&] {
    std::vector<Letter> raw;
    for (int i = 0, n = static_cast<int>(rng.range(0, 4)); i < n; ++i) {
      Letter l = static_cast<Letter>(rng.range(1, 4));
      raw.push_back(rng.range(0, 1) ? l : -l);
    }
    return Word::reduce(raw);
  };
  for (int t = 0; t < 100; ++t) {
    Word w;
    for (int k = 0, n = static_cast<int>(rng.range(1, 3)); k < n; ++k) {
      Word r = rng.range(0, 1) ? rel : rel.inverse();
      w = w * r.conjugated_by(random_conjugator());
    }
    std::vector<int> steps;
    Word reduced = solver.reduce(w, &steps);
    CHECK(reduced.empty());
    for (std::size_t i = 1; i < steps.size(); ++i) CHECK(steps[i] < steps[i - 1]);
    CHECK(steps.size() <= static_cast<std::size_t>(w.size()) + 1);
  }
}

TEST_CASE("dehn refuses unverified presentations") {
  CHECK_THROWS_AS(DehnSolver(parse_presentation("< a, b | (a*b)^3 >")),
                  PreconditionError);
}
