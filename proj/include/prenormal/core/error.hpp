#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prenormal {

  enum class ErrorKind {
    composition,
    invalid_object,
    invalid_morphism,
    unsupported_limit,
    congruence_invalid,
    invalid_input,
    backend_bug,
    unsupported,
    schema,
  };

  inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
      case ErrorKind::composition: return "composition-error";
      case ErrorKind::invalid_object: return "invalid-object";
      case ErrorKind::invalid_morphism: return "invalid-morphism";
      case ErrorKind::unsupported_limit: return "unsupported-limit";
      case ErrorKind::congruence_invalid: return "congruence-invalid";
      case ErrorKind::invalid_input: return "invalid-input";
      case ErrorKind::backend_bug: return "backend-bug";
      case ErrorKind::unsupported: return "unsupported";
      case ErrorKind::schema: return "schema-error";
    }
    return "error";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  [[noreturn]] inline void fail(ErrorKind kind, std::string const& message) {
    throw Error(kind, message);
  }

}  // namespace prenormal
