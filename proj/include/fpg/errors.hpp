#pragma once

#include <stdexcept>
#include <string>

namespace fpg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical/syntactic failure; positions are 1-based.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " at line " + std::to_string(line_) + ", column " +
              std::to_string(col_)),
        line(line_),
        column(col_) {}
};

// A word uses a symbol outside the alphabet it is being interpreted over.
struct AlphabetError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

// A checked hypothesis of a construction failed.
struct HypothesisRefuted : Error {
  std::string hypothesis;
  HypothesisRefuted(const std::string& hyp, const std::string& detail)
      : Error("hypothesis refuted: " + hyp + " (" + detail + ")"),
        hypothesis(hyp) {}
};

}  // namespace fpg
