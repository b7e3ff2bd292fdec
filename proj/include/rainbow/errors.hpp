#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input or parameters outside an operation's domain.
struct InputError : Error {
  using Error::Error;
};

struct DisconnectedError : InputError {
  DisconnectedError() : InputError("graph is disconnected") {}
};

// The search hit its node budget; the question is left undecided.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace rainbow
