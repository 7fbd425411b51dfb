#pragma once

#include <stdexcept>
#include <string>

namespace sgp {

// Domain failure with a stable name; the CLI prints the name verbatim on
// stderr and maps it to exit code 1.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& what) {
  throw DomainError(name, what);
}

}  // namespace sgp
