#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rwkit/substitution.hpp"
#include "rwkit/term.hpp"

namespace rwkit {

/// An oriented rule lhs -> rhs. The constructor enforces that lhs is not a
/// variable and that every rhs variable occurs in the lhs.
struct rewrite_rule {
  rewrite_rule(term lhs, term rhs);

  term lhs;
  term rhs;

  std::set<std::string> variables() const;
  bool operator==(const rewrite_rule& other) const {
    return lhs == other.lhs && rhs == other.rhs;
  }
  bool operator!=(const rewrite_rule& other) const { return !(*this == other); }
  std::string to_string() const;
};

/// Rules are variants when each is an instance of the other under a
/// bijective variable renaming.
bool is_variant(const rewrite_rule& a, const rewrite_rule& b);

/// A variant of rule whose variables avoid the given set. Variables are
/// renamed bijectively, keeping names that do not collide.
rewrite_rule rename_apart(const rewrite_rule& rule, const std::set<std::string>& avoid);

/// A term rewriting system: a signature, the declared variable names, and an
/// ordered rule sequence. Every rule is checked well-formed under the
/// signature at construction.
class trs {
 public:
  trs(signature sig, std::set<std::string> variables, std::vector<rewrite_rule> rules);

  const signature& sig() const noexcept { return sig_; }
  const std::set<std::string>& variables() const noexcept { return variables_; }
  const std::vector<rewrite_rule>& rules() const noexcept { return rules_; }
  const rewrite_rule& rule(std::size_t i) const;

 private:
  signature sig_;
  std::set<std::string> variables_;
  std::vector<rewrite_rule> rules_;
};

/// One matched rule instance inside a subject term.
struct redex {
  position pos;
  std::size_t rule_index = 0;
  substitution matcher;

  bool operator==(const redex& other) const {
    return pos == other.pos && rule_index == other.rule_index && matcher == other.matcher;
  }
};

/// Rewrites s at p with rule i if its lhs matches there; nullopt otherwise.
/// Throws input_error when p is not a position of s or i is out of range.
std::optional<term> step_at(const trs& system, const term& s, const position& p, std::size_t i);

/// All one-step reducts of s, ordered by (position length-lex, rule index).
std::vector<std::pair<term, redex>> one_step_reducts(const trs& system, const term& s);

bool is_normal_form(const trs& system, const term& s);

struct reach_result {
  bool complete = false;
  std::vector<term> terms;          // discovery (breadth-first) order
  std::vector<std::size_t> depths;  // aligned with terms: steps from the seed
};

/// Breadth-first closure of {s} under one-step reduction. Complete when the
/// frontier empties within `fuel` node expansions, else truncated.
reach_result reachable_set(const trs& system, const term& s, std::size_t fuel);

enum class join_status { yes, no, unknown };

struct join_result {
  join_status status = join_status::unknown;
  std::optional<term> witness;  // set iff status == yes
};

/// Searches for a common reduct of u and v, each side bounded by `fuel`
/// expansions. `no` requires both reachable sets complete and disjoint.
join_result joinable_terms(const trs& system, const term& u, const term& v, std::size_t fuel);

struct normalize_result {
  bool normal_form = false;  // false means fuel ran out first
  term result;
  std::vector<redex> trace;  // the redex contracted at each step
};

/// Repeatedly contracts the first redex in enumeration order (leftmost
/// outermost) for at most `fuel` steps.
normalize_result normalize(const trs& system, const term& s, std::size_t fuel);

/// One link of a uniform reduction sequence: the term after contracting one
/// more occurrence, and where the contraction happened.
struct chain_link {
  term value;
  position at;
};

struct update_chain {
  substitution updated;           // sigma with x rebound to x-image rewritten at q
  term start;                     // apply(sigma, r)
  std::vector<chain_link> links;  // one link per occurrence of x in r
};

/// Replays the uniform reduction sequence for rule `inner` acting inside the
/// x-image of sigma at position q: apply(sigma, r) steps to
/// apply(updated, r) by contracting the occurrences of x in r one at a time,
/// at positions q_i concatenated with q. When x does not occur in r the
/// sequence is empty. Throws input_error unless the inner rule matches the
/// x-image at q.
update_chain substitution_update_chain(const trs& system, const term& r,
                                       const substitution& sigma, const std::string& x,
                                       const position& q, std::size_t inner);

}  // namespace rwkit
