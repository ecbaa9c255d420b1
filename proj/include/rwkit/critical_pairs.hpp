#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rwkit/rewriting.hpp"

namespace rwkit {

/// A unifiable superposition of one rule's lhs inside another's, at a
/// non-variable position. The inner rule is kept in its renamed-apart form so
/// the mgu can be replayed.
struct overlap {
  std::size_t outer_rule = 0;
  std::size_t inner_rule = 0;
  position pos;
  substitution mgu;
  rewrite_rule renamed_inner;
};

struct critical_pair {
  term left;   // peak contracted at the root with the outer rule
  term right;  // peak contracted at the overlap position with the inner rule
  overlap origin;
  bool trivial = false;  // left == right
};

/// All overlaps between ordered rule pairs (i, j), including i = j against a
/// renamed copy, in (i, j, position length-lex) order. The root overlap of a
/// rule with a variant of itself is excluded.
std::vector<overlap> overlaps(const trs& system);

/// Rewrites s at p with the given rule directly (the rule need not belong to
/// a TRS). Nullopt when the lhs does not match.
std::optional<term> step_with(const rewrite_rule& rule, const term& s, const position& p);

/// The peak term of an overlap: apply(mgu, lhs(outer)).
term peak_term(const trs& system, const overlap& o);

std::vector<critical_pair> critical_pairs(const trs& system);

bool is_left_linear(const trs& system);

/// Left-linear with no overlaps at all.
bool is_orthogonal(const trs& system);

/// Maps each variable to a distinct fresh constant (stem "c_" + name) not
/// colliding with the signature. Used to decide joinability of critical
/// pairs, whose sides share variables.
substitution freezing_substitution(const std::set<std::string>& vars, const signature& sig);

struct cp_joinability {
  join_status status = join_status::unknown;
  std::optional<term> witness;             // frozen form, set iff yes
  std::optional<std::size_t> steps_left;   // reduction steps from frozen left to witness
  std::optional<std::size_t> steps_right;  // likewise from frozen right
};

/// Decides joinability of one critical pair with variables frozen as fresh
/// constants. Trivial pairs are joinable with a zero-step witness.
cp_joinability decide_cp_joinability(const trs& system, const critical_pair& cp,
                                     std::size_t fuel);

enum class local_confluence_status { locally_confluent, not_locally_confluent, unknown };

struct local_confluence_result {
  local_confluence_status status = local_confluence_status::locally_confluent;
  std::vector<critical_pair> pairs;
  std::vector<cp_joinability> joinability;     // aligned with pairs
  std::optional<std::size_t> counterexample;   // first non-joinable pair, if any
  std::vector<std::size_t> undecided;          // pairs whose search hit the fuel bound
};

/// Checks every critical pair for joinability: all yes means locally
/// confluent, any no refutes it, otherwise unknown.
local_confluence_result local_confluence_verdict(const trs& system, std::size_t fuel);

enum class confluence_status { confluent, not_confluent, unknown };
enum class confluence_criterion { orthogonality, newman_cp, non_joinable_cp, undecided };

struct confluence_result {
  confluence_status status = confluence_status::unknown;
  confluence_criterion criterion = confluence_criterion::undecided;
  std::string reason;
  std::optional<local_confluence_result> local;  // present when CPs were examined
};

/// Decision ladder: orthogonality, then termination assumption plus joinable
/// critical pairs, then refutation by a non-joinable critical pair, else
/// unknown.
confluence_result confluence_verdict(const trs& system, std::size_t fuel,
                                     bool assume_terminating);

/// Indices of the pairs kept when mirrored duplicates are dropped: pair j is
/// dropped when some earlier pair equals its mirror image up to renaming.
std::vector<std::size_t> symmetric_cp_representatives(const std::vector<critical_pair>& pairs);

std::string to_string(confluence_status s);
std::string to_string(confluence_criterion c);
std::string to_string(local_confluence_status s);
std::string to_string(join_status s);

}  // namespace rwkit
