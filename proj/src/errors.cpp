#include "hyperent/errors.hpp"

namespace hyperent {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::WrongEdgeArity: return "WrongEdgeArity";
    case Errc::ZeroMeanDegree: return "ZeroMeanDegree";
    case Errc::DegenerateRandomEnsemble: return "DegenerateRandomEnsemble";
    case Errc::ModeOutOfRange: return "ModeOutOfRange";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::TooLargeForDense: return "TooLargeForDense";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::AlreadyComplete: return "AlreadyComplete";
    case Errc::TooManySteps: return "TooManySteps";
    case Errc::BadDivisibility: return "BadDivisibility";
    case Errc::BadQ: return "BadQ";
    case Errc::TooManyEdges: return "TooManyEdges";
    case Errc::BadStripSize: return "BadStripSize";
    case Errc::ZeroVarianceSeries: return "ZeroVarianceSeries";
    case Errc::OutOfRangeCorrelation: return "OutOfRangeCorrelation";
    case Errc::OutOfRangeThreshold: return "OutOfRangeThreshold";
    case Errc::AsymmetricMatrix: return "AsymmetricMatrix";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "UnknownError";
}

}  // namespace hyperent
