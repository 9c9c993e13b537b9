#pragma once

#include <stdexcept>

namespace cylandau {

// One exception type per contract violation, so callers (and the CLI) can
// tell failure modes apart without string matching.

struct NonPositiveParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonIntegerWinding : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OpenLoop : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InsufficientLoopSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct KindMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WindowOverflow : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GridOverflow : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IncompatibleStates : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TooFewPoints : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OutOfGrid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroState : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GridTooNarrow : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonAdmissibleTranslation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WindowTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cylandau
