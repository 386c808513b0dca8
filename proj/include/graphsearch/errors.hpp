#pragma once

#include <stdexcept>
#include <string>

namespace graphsearch {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph construction / validation.
struct InvalidEdge : Error {
  using Error::Error;
};
struct DuplicateEdge : Error {
  using Error::Error;
};
struct DisconnectedGraph : Error {
  using Error::Error;
};
struct NotAdjacent : Error {
  using Error::Error;
};

// Oracles.
struct InvalidNoise : Error {
  using Error::Error;
};

// Median policies.
struct ScriptViolation : Error {
  using Error::Error;
};

// Adversary games.
struct InvalidSize : Error {
  using Error::Error;
};

// Searchers.
struct BudgetExceeded : Error {
  using Error::Error;
};
struct FirstTargetNotFound : Error {
  using Error::Error;
};
struct NotATree : Error {
  using Error::Error;
};
struct NoBranchAccepted : Error {
  using Error::Error;
};

// Harness.
struct IncompatibleConfig : Error {
  using Error::Error;
};

}  // namespace graphsearch
