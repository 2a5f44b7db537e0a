#pragma once

#include <stdexcept>
#include <string>

namespace relfix {

// Construction errors: bad labels, non-total maps, malformed input values.
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carrier too large for a subset-enumerating operation.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An engine was called in strict mode on an instance violating its
// hypotheses; the message names the failing clause.
struct PreconditionViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A constructed derivation violates its defining clauses (e.g. the relation
// is not antisymmetric after all); carries the clause and position.
struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quotient construction found (~ u =) non-transitive.
struct PartitionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An engine's self-validation failed although preconditions held.
// Signals a bug; must never fire on hypothesis-satisfying inputs.
struct InternalFailure : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace relfix
