#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catrw {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CyclicSchema : public Error {
 public:
  CyclicSchema() : Error("operation requires an acyclic schema") {}
};

class EndpointMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidSchema : public Error {
 public:
  explicit InvalidSchema(std::vector<std::string> violations)
      : Error("invalid schema: " + join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
    return out;
  }
  std::vector<std::string> violations_;
};

class PartOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotMonic : public Error {
 public:
  using Error::Error;
};

class MatchNotNatural : public Error {
 public:
  using Error::Error;
};

class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

class TypingMismatch : public Error {
 public:
  using Error::Error;
};

class FootMismatch : public Error {
 public:
  using Error::Error;
};

class CommutativityFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownReference : public Error {
 public:
  using Error::Error;
};

}  // namespace catrw
