#pragma once

#include <stdexcept>
#include <string>

namespace mcf {

enum class Errc {
  invalid_descriptor,
  group_mismatch,
  unsupported_group,
  invalid_subgroup,
  invalid_field,
  invalid_argument,
  invalid_decomposition,
  not_mcfarland_shaped,
  hypothesis_not_met,
  lemma_violation,
  precondition_violation,
  parse_error,
  internal_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_descriptor: return "invalid-descriptor";
    case Errc::group_mismatch: return "group-mismatch";
    case Errc::unsupported_group: return "unsupported-group";
    case Errc::invalid_subgroup: return "invalid-subgroup";
    case Errc::invalid_field: return "invalid-field";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::invalid_decomposition: return "invalid-decomposition";
    case Errc::not_mcfarland_shaped: return "not-mcfarland-shaped";
    case Errc::hypothesis_not_met: return "hypothesis-not-met";
    case Errc::lemma_violation: return "lemma-violation";
    case Errc::precondition_violation: return "precondition-violation";
    case Errc::parse_error: return "parse-error";
    case Errc::internal_error: return "internal-error";
  }
  return "unknown";
}

class McfError : public std::runtime_error {
 public:
  McfError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw McfError(code, what);
}

}  // namespace mcf
