#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpcomm {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured cap.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

class PromiseViolation : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class ZeroWitness : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class NonpositiveBound : public Error {
 public:
  using Error::Error;
};

class RoundLimitExceeded : public Error {
 public:
  using Error::Error;
};

// No coin fixing within the sample budget met the targets; carries the best one seen.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t best_coins, double best_error, double best_cost)
      : Error(what), bestCoins(best_coins), bestError(best_error), bestCost(best_cost) {}
  std::uint64_t bestCoins;
  double bestError;
  double bestCost;
};

}  // namespace fpcomm
