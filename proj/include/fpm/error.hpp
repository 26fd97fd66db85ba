#pragma once

#include <stdexcept>
#include <string>

namespace fpm {

enum class Errc {
  NonPrimeCharacteristic,
  UnitOrZeroModulus,
  ElementOutsideContext,
  ContextMismatch,
  DimensionMismatch,
  AmbientMismatch,
  InfiniteIdealLattice,
  UnitOrZeroElement,
  QuotientContextUnsupported,
  NotPrimeElement,
  MissingSecondIdeal,
  InfiniteModule,
  SizeBoundExceeded,
  UnknownLaw,
  InvalidArgument,
};

const char* errc_name(Errc c);

/// Error thrown by all precondition violations; carries a stable code so
/// callers can dispatch without parsing the message.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace fpm
