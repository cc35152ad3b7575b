#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace qaoabench {

using cdouble = std::complex<double>;

// Requested state or table would exceed the configured qubit bound.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed instance file, schedule table, or serialized state.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Guards against accidental exponential blowup; callers may raise it
// explicitly where they know what they are doing.
inline constexpr int kMaxQubitsDefault = 26;

// Default seed for every command that consumes randomness, so that runs
// without --seed are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEEULL;

}  // namespace qaoabench
