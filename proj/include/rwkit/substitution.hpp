#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "rwkit/term.hpp"

namespace rwkit {

/// A finite-domain map from variable names to terms. Identity bindings
/// x -> x are dropped so the domain condition holds by construction.
class substitution {
 public:
  substitution() = default;
  explicit substitution(std::map<std::string, term> bindings);

  static substitution single(const std::string& var, term t);

  bool empty() const noexcept { return bindings_.empty(); }
  std::size_t size() const noexcept { return bindings_.size(); }
  const std::map<std::string, term>& bindings() const noexcept { return bindings_; }
  std::optional<term> lookup(const std::string& var) const;
  /// Image of var: its binding if bound, else var itself as a term.
  term image(const std::string& var) const;
  std::set<std::string> domain() const;
  /// A copy restricted to the given variables.
  substitution restricted_to(const std::set<std::string>& vars) const;
  /// A copy with var rebound (or bound) to t.
  substitution updated(const std::string& var, term t) const;

  bool operator==(const substitution& other) const;
  bool operator!=(const substitution& other) const { return !(*this == other); }

  /// Prints as {x -> t, ...}, domain sorted by variable name.
  std::string to_string() const;

 private:
  std::map<std::string, term> bindings_;
};

/// Homomorphic extension: variables in the domain replaced simultaneously,
/// function symbols unchanged.
term apply(const substitution& sigma, const term& t);

/// Composition in application order: apply(compose(sigma, tau), t) ==
/// apply(tau, apply(sigma, t)) for all t.
substitution compose(const substitution& sigma, const substitution& tau);

/// A bijective variable renaming taking `vars` away from `avoid`.
/// Colliding names get the smallest fresh numeric suffix; non-colliding
/// names are kept.
substitution make_renaming(const std::set<std::string>& vars, const std::set<std::string>& avoid);

/// A fresh name built from `stem` by appending the smallest numeric suffix
/// not present in `avoid` (the bare stem is tried first).
std::string fresh_name(const std::string& stem, const std::set<std::string>& avoid);

/// Least substitution sigma with domain inside vars(pattern) such that
/// apply(sigma, pattern) == subject, if one exists.
std::optional<substitution> match(const term& pattern, const term& subject);

/// Most general unifier of a and b: idempotent, and every unifier factors
/// through it. Fails on symbol clash or occurs-check.
std::optional<substitution> unify(const term& a, const term& b);

}  // namespace rwkit
