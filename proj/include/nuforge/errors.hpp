#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nuforge {

// Exit-code contract: 0 success / all checks pass, 1 check failure,
// 2 input error, 3 resource limit.
enum class ExitCode : int {
  ok = 0,
  check_failed = 1,
  input_error = 2,
  resource_limit = 3,
};

class Error : public std::runtime_error {
 public:
  Error(std::string msg, ExitCode code)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ExitCode exit_code() const { return code_; }

 private:
  ExitCode code_;
};

class InputError : public Error {
 public:
  explicit InputError(std::string msg)
      : Error(std::move(msg), ExitCode::input_error) {}
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::string msg, std::size_t position)
      : InputError(msg + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownGenerator : public InputError {
 public:
  explicit UnknownGenerator(std::string name)
      : InputError("unknown generator: " + name), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnknownGroup : public InputError {
 public:
  explicit UnknownGroup(const std::string& name)
      : InputError("unknown group: " + name) {}
};

class UnknownCheck : public InputError {
 public:
  explicit UnknownCheck(const std::string& id)
      : InputError("unknown check: " + id) {}
};

class InvalidCayleyTable : public InputError {
 public:
  explicit InvalidCayleyTable(const std::string& why)
      : InputError("invalid Cayley table: " + why) {}
};

class DegreeMismatch : public InputError {
 public:
  DegreeMismatch(std::uint32_t a, std::uint32_t b)
      : InputError("permutation degree mismatch: " + std::to_string(a) +
                   " vs " + std::to_string(b)) {}
};

class ElementOutsideGroup : public InputError {
 public:
  ElementOutsideGroup() : InputError("element lies outside the group") {}
};

class NotNormal : public InputError {
 public:
  NotNormal() : InputError("subgroup is not normal") {}
};

class NotAbelian : public InputError {
 public:
  NotAbelian() : InputError("group is not abelian") {}
};

class GroupTooLarge : public InputError {
 public:
  GroupTooLarge(std::uint64_t order, std::uint64_t bound)
      : InputError("group order " + std::to_string(order) +
                   " exceeds the exhaustive-enumeration bound " +
                   std::to_string(bound)) {}
};

class IncompleteTable : public InputError {
 public:
  IncompleteTable() : InputError("coset table is not complete") {}
};

class CosetLimitExceeded : public Error {
 public:
  explicit CosetLimitExceeded(std::uint64_t cap)
      : Error("coset enumeration exceeded the limit of " +
                  std::to_string(cap) + " cosets",
              ExitCode::resource_limit),
        cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

// Internal invariant violation; always a defect, never an input problem.
class InternalError : public Error {
 public:
  explicit InternalError(std::string msg)
      : Error("internal invariant violated: " + std::move(msg),
              ExitCode::input_error) {}
};

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}

}  // namespace nuforge
