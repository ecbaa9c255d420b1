#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rwkit/errors.hpp"

namespace rwkit {

/// A finite abstract reduction system: a step relation over a finite set of
/// opaque element names. Immutable after construction.
class finite_ars {
 public:
  using element = std::string;
  using step = std::pair<element, element>;

  /// Carrier must be non-empty and contain every step endpoint.
  finite_ars(std::set<element> carrier, std::set<step> steps);

  const std::set<element>& carrier() const noexcept { return carrier_; }
  const std::set<step>& steps() const noexcept { return steps_; }
  bool has_step(const element& x, const element& y) const { return steps_.count({x, y}) != 0; }

  bool operator==(const finite_ars& other) const {
    return carrier_ == other.carrier_ && steps_ == other.steps_;
  }

 private:
  std::set<element> carrier_;
  std::set<step> steps_;
};

enum class closure_kind {
  reflexive,
  symmetric,
  transitive,
  reflexive_transitive,
  equivalence,
};

/// Least superset of a.steps closed under k, over the same carrier.
/// equivalence = reflexive-transitive closure of the symmetric closure.
finite_ars close(const finite_ars& a, closure_kind k);

struct join_witness {
  bool joinable = false;
  std::optional<finite_ars::element> witness;  // set iff joinable
};

/// True iff x and y reduce (in zero or more steps) to a common element.
/// The witness is the first common reduct in breadth-first order from x.
/// Throws input_error if x or y is outside the carrier.
join_witness joinable(const finite_ars& a, const finite_ars::element& x,
                      const finite_ars::element& y);

/// Every peak y *<- x ->* z is joinable.
bool confluent(const finite_ars& a);

/// Every one-step peak y <- x -> z is joinable.
bool locally_confluent(const finite_ars& a);

/// No infinite reduction sequence; on a finite carrier this means the step
/// graph is acyclic.
bool noetherian(const finite_ars& a);

/// Parses the edge-list format: one `x -> y` per line, `;` starts a comment,
/// blank lines ignored. The carrier is the set of mentioned elements.
/// Throws parse_error on malformed lines and input_error if no step occurs.
finite_ars parse_ars(const std::string& text);

std::string to_string(closure_kind k);

}  // namespace rwkit
