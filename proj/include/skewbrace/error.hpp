#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace skewbrace {

enum class errc {
  degree_mismatch,
  invalid_permutation,
  duplicate_element,
  not_square,
  not_latin,
  identity_not_zero,
  not_associative,
  not_a_subgroup,
  brace_law,
  capability,
  malformed_record,
  order_mismatch,
  syntax,
  version_mismatch,
  not_closed,
  not_an_ideal,
  internal_consistency,
  out_of_range,
  io,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::degree_mismatch: return "degree mismatch";
    case errc::invalid_permutation: return "invalid permutation";
    case errc::duplicate_element: return "duplicate element";
    case errc::not_square: return "table is not square";
    case errc::not_latin: return "not a Latin square";
    case errc::identity_not_zero: return "identity is not element 0";
    case errc::not_associative: return "not associative";
    case errc::not_a_subgroup: return "not a subgroup";
    case errc::brace_law: return "skew brace law violated";
    case errc::capability: return "capability bound exceeded";
    case errc::malformed_record: return "malformed record";
    case errc::order_mismatch: return "order mismatch";
    case errc::syntax: return "syntax error";
    case errc::version_mismatch: return "version mismatch";
    case errc::not_closed: return "subset not closed";
    case errc::not_an_ideal: return "not an ideal";
    case errc::internal_consistency: return "internal consistency failure";
    case errc::out_of_range: return "out of range";
    case errc::io: return "i/o error";
  }
  return "unknown error";
}

/// The single exception type thrown by the library. `code()` names the
/// failed condition; `witness()` carries the offending triple when the
/// failure is a violated identity (associativity, brace law).
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what,
        std::optional<std::array<std::size_t, 3>> witness = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        witness_(witness) {}

  errc code() const noexcept { return code_; }
  const std::optional<std::array<std::size_t, 3>>& witness() const noexcept {
    return witness_;
  }

 private:
  errc code_;
  std::optional<std::array<std::size_t, 3>> witness_;
};

}  // namespace skewbrace
