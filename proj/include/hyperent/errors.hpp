#pragma once

#include <stdexcept>
#include <string>

namespace hyperent {

// Failure modes named by the public API contracts.
enum class Errc {
  DuplicateVertexInEdge,
  VertexOutOfRange,
  WrongEdgeArity,
  ZeroMeanDegree,
  DegenerateRandomEnsemble,
  ModeOutOfRange,
  ShapeMismatch,
  TooLargeForDense,
  OrderTooSmall,
  NegativeInput,
  CountMismatch,
  UnsupportedOrder,
  AlreadyComplete,
  TooManySteps,
  BadDivisibility,
  BadQ,
  TooManyEdges,
  BadStripSize,
  ZeroVarianceSeries,
  OutOfRangeCorrelation,
  OutOfRangeThreshold,
  AsymmetricMatrix,
  MalformedInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace hyperent
