#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fpm/module.hpp"

namespace fpm::cli {

/// Input rejected with a field-precise diagnostic.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A parsed module description: ring context, one presented module, and a
/// named collection of ideals. Elements are decimal strings over the
/// integers and ascending coefficient arrays over polynomial rings.
struct ParsedInput {
  RingContext ctx;
  PresentedModule module;
  std::vector<std::pair<std::string, Ideal>> ideals;  // file order
};

ParsedInput parse_module_description(const std::string& text);
ParsedInput load_module_description(const std::string& path);

/// Canonical re-emission of a parsed input; re-parsing yields an equal
/// context/module/ideals triple.
std::string emit_module_description(const ParsedInput& in);

/// Context token grammar used by --contexts: "Z", "Z/6", "F2", "F2/0.0.1"
/// (polynomial modulus as ascending coefficients joined by dots).
RingContext parse_context_token(const std::string& token);
std::string context_token(const RingContext& ctx);

/// Element grammar for flags: decimal integer, or dot-joined ascending
/// coefficients for polynomial rings.
Element parse_element_token(const BaseRing& ring, const std::string& token);

}  // namespace fpm::cli
