#pragma once

#include <stdexcept>
#include <string>

namespace chordmat {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  EnumerationCapExceeded,
  InvalidCircuitAxioms,
  NotACircuit,
  NotSimple,
  NotBinary,
  SeedNotCircuits,
  NotAFlat,
  InvalidChain,
  DifferentMatroids,
  NoPathFound,
  InvalidSLabel,
  InvalidPartition,
  NotConnected,
  NotSimpleGraph,
  Internal,
};

const char* to_string(ErrorCode code);

/// The single exception type thrown by the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

/// Enumeration caps. Every exhaustive operation checks the relevant field and
/// throws `EnumerationCapExceeded` instead of running unbounded.
struct Limits {
  int max_elements = 64;          // ground-set size, hard ceiling 64
  int max_cycle_space_dim = 24;   // n - r for the circuit sweep
  int max_flat_rank = 16;
  long max_flats = 2'000'000;
  int max_subset_sweep = 20;      // n for 2^n subset sweeps
  int max_graph_vertices = 10;    // permutation searches over vertices
  long max_chains = 5'000'000;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace chordmat
