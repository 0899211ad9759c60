#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordescent {

using Element = std::size_t;

/// Certificate explaining a negative verdict.
///
/// Indices are grouped by the set they live in, so a witness can be carried
/// across relabelings (connected components, posetal reflection) without
/// knowing which predicate produced it:
///   - `domain`: elements of the source carrier (A, or an index set J),
///   - `codomain`: elements of the target carrier (B, or an index set K),
///   - `base`: elements of the order under test or of the valuation order X,
///   - `family`: a family of X-elements indexed by the domain (descent data).
/// The meaning of each position is fixed per `condition`; see the
/// predicate documentation.
struct Witness {
  std::string condition;
  std::vector<std::size_t> domain;
  std::vector<std::size_t> codomain;
  std::vector<std::size_t> base;
  std::vector<Element> family;

  bool operator==(const Witness&) const = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }

  explicit operator bool() const { return holds; }
};

std::string to_string(const Witness& w);
std::string to_string(const Verdict& v);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element index outside of its carrier.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Input data violating a structural invariant (non-monotone map, lax
/// inequality, ...). Carries the offending elements.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, Witness w) : Error(what), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// A predicate was called outside of its domain of validity, e.g. a lattice
/// law that the valuation order does not satisfy.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::optional<Witness> w = std::nullopt)
      : Error(what), witness_(std::move(w)) {}
  const std::optional<Witness>& witness() const { return witness_; }

 private:
  std::optional<Witness> witness_;
};

class NotLocallyComplete : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An exhaustive enumeration would exceed the configured candidate cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

}  // namespace ordescent
