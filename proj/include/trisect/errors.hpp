#pragma once
#include <stdexcept>
#include <string>

namespace trisect {

// Bad input: malformed JSON, schema violations, unknown corpus names,
// basis mismatches. CLI exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant: corpus self-check mismatch, exhausted
// convention search. CLI exit code 3.
struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A verification check failed on otherwise well-formed input. CLI exit code 1.
struct check_failure : std::runtime_error {
  explicit check_failure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace trisect
