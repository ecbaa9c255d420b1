#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rwkit/rewriting.hpp"

namespace rwkit {

/// A sequence of pairwise parallel positions. Construction rejects
/// overlapping entries; validity against a subject term is checked where the
/// sequence is used.
class parallel_positions {
 public:
  parallel_positions() = default;
  explicit parallel_positions(std::vector<position> entries);

  const std::vector<position>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  bool operator==(const parallel_positions& other) const { return entries_ == other.entries_; }

 private:
  std::vector<position> entries_;
};

/// Coordinated sequences of positions, rule indices, and matchers describing
/// one parallel contraction. Canonical form: positions sorted length-lex,
/// with rules and matchers permuted alongside. The empty step is the
/// reflexive case.
class parallel_step {
 public:
  parallel_step() = default;

  /// Sorts the three sequences by position and validates the invariants:
  /// equal lengths, pairwise parallel positions.
  static parallel_step make(std::vector<position> positions, std::vector<std::size_t> rules,
                            std::vector<substitution> matchers);
  static parallel_step singleton(const redex& r);

  const std::vector<position>& positions() const noexcept { return positions_; }
  const std::vector<std::size_t>& rule_indices() const noexcept { return rules_; }
  const std::vector<substitution>& matchers() const noexcept { return matchers_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }

  bool operator==(const parallel_step& other) const {
    return positions_ == other.positions_ && rules_ == other.rules_ &&
           matchers_ == other.matchers_;
  }
  bool operator!=(const parallel_step& other) const { return !(*this == other); }

 private:
  std::vector<position> positions_;
  std::vector<std::size_t> rules_;
  std::vector<substitution> matchers_;
};

/// Simultaneous replacement of the subterms at pairwise parallel positions.
/// Equals the fold of sequential replace_at in any order. Length mismatch or
/// a position outside s is an input error.
term replace_par_pos(const term& s, const parallel_positions& pi, const std::vector<term>& ts);

/// Contracts every redex of the step at once. The empty step returns s.
/// Coordination is validated: subterm_at(s, positions[k]) must equal the
/// matcher-instantiated lhs of rule_indices[k], else input_error naming k.
term apply_parallel_step(const trs& system, const term& s, const parallel_step& step);

inline constexpr std::size_t default_max_parallel_redexes = 16;

/// Every parallel reduct of s: one entry per subset of pairwise parallel
/// redexes (the empty subset included), in depth-first subset order over
/// redexes enumerated by (position length-lex, rule index). More than
/// max_redexes redexes in s is a resource error.
std::vector<std::pair<term, parallel_step>> parallel_reducts(
    const trs& system, const term& s, std::size_t max_redexes = default_max_parallel_redexes);

/// Packages a sequential step s -> t as a parallel step: the empty step when
/// s == t, a singleton when some redex of s yields t, nullopt otherwise.
std::optional<parallel_step> one_step_implies_parallel(const trs& system, const term& s,
                                                       const term& t);

struct diamond_result {
  bool holds = true;
  /// First pair of parallel reducts of the subject with no common parallel
  /// reduct, when the property fails.
  std::optional<std::pair<term, term>> peak;
};

/// Checks the diamond property of parallel reduction at s: every two
/// parallel reducts of s must share a parallel reduct.
diamond_result diamond_check(const trs& system, const term& s,
                             std::size_t max_redexes = default_max_parallel_redexes);

struct parallel_moves_result {
  term meet;                 // the common reduct v
  parallel_step after_outer; // closes t (the sequential contraction of outer)
  parallel_step after_inner; // closes u (the parallel contraction of inner)
};

/// Joins the peak t <- s => u formed by one outer redex and a parallel step
/// whose positions are each strictly below or parallel to it. Requires an
/// orthogonal system; the meet is built by rewriting the outer matcher's
/// variable images uniformly. Precondition violations are input errors.
parallel_moves_result parallel_moves_join(const trs& system, const term& s, const redex& outer,
                                          const parallel_step& inner);

}  // namespace rwkit
