#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ordescent/laxcomma.hpp"

namespace ordescent {

/// A lax morphism together with its valuation order.
struct Instance {
  OrdSet x;
  LaxMorphism f;

  bool operator==(const Instance&) const = default;
};

/// Malformed or invalid instance text; `line` is 1-based, 0 when the problem
/// is a missing key.
class InstanceError : public Error {
 public:
  InstanceError(std::size_t line, const std::string& what, std::optional<Witness> w = std::nullopt)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line), witness_(std::move(w)) {}
  std::size_t line() const { return line_; }
  const std::optional<Witness>& witness() const { return witness_; }

 private:
  std::size_t line_;
  std::optional<Witness> witness_;
};

// Instance text is one `key: value` per line; `#` starts a comment.
//
//   x.size: 2
//   x.leq: (0,1)
//   a.size: 3
//   a.leq: (1,2)
//   alpha: 1 0 1
//   b.size: 2
//   b.leq: (0,1)
//   beta: 1 1
//   f: 0 0 1
//
// `*.leq` lists generating pairs (i,j) meaning i <= j; the order is their
// reflexive-transitive closure. The `*.leq` keys may be empty or omitted.

Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

/// Writes every strict pair of each order, so the text reloads to an equal
/// instance.
std::string dump_instance(const Instance& instance);

}  // namespace ordescent
