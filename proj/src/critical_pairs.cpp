#include "rwkit/critical_pairs.hpp"

#include <algorithm>

#include "rwkit/errors.hpp"

namespace rwkit {

std::vector<overlap> overlaps(const trs& system) {
  std::vector<overlap> out;
  const auto& rules = system.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    std::set<std::string> outer_vars = rules[i].variables();
    for (std::size_t j = 0; j < rules.size(); ++j) {
      rewrite_rule inner = rename_apart(rules[j], outer_vars);
      bool variants = is_variant(rules[i], rules[j]);
      for (const position& p : positions_of(rules[i].lhs)) {
        if (subterm_at(rules[i].lhs, p).is_variable()) continue;
        if (p.is_root() && variants) continue;
        std::optional<substitution> mgu = unify(subterm_at(rules[i].lhs, p), inner.lhs);
        if (!mgu) continue;
        out.push_back(overlap{i, j, p, std::move(*mgu), inner});
      }
    }
  }
  return out;
}

std::optional<term> step_with(const rewrite_rule& rule, const term& s, const position& p) {
  std::optional<substitution> sigma = match(rule.lhs, subterm_at(s, p));
  if (!sigma) return std::nullopt;
  return replace_at(s, apply(*sigma, rule.rhs), p);
}

term peak_term(const trs& system, const overlap& o) {
  return apply(o.mgu, system.rule(o.outer_rule).lhs);
}

std::vector<critical_pair> critical_pairs(const trs& system) {
  std::vector<critical_pair> out;
  for (overlap& o : overlaps(system)) {
    term peak = peak_term(system, o);
    term left = step_with(system.rule(o.outer_rule), peak, position::root()).value();
    term right = step_with(o.renamed_inner, peak, o.pos).value();
    bool trivial = left == right;
    out.push_back(critical_pair{std::move(left), std::move(right), std::move(o), trivial});
  }
  return out;
}

bool is_left_linear(const trs& system) {
  for (const rewrite_rule& rule : system.rules()) {
    if (!is_linear(rule.lhs)) return false;
  }
  return true;
}

bool is_orthogonal(const trs& system) {
  return is_left_linear(system) && overlaps(system).empty();
}

substitution freezing_substitution(const std::set<std::string>& vars, const signature& sig) {
  std::set<std::string> taken;
  for (const auto& [name, arity] : sig.symbols()) taken.insert(name);
  std::map<std::string, term> bindings;
  for (const std::string& v : vars) {
    std::string name = fresh_name("c_" + v, taken);
    taken.insert(name);
    bindings.emplace(v, term::app(name));
  }
  return substitution(std::move(bindings));
}

cp_joinability decide_cp_joinability(const trs& system, const critical_pair& cp,
                                     std::size_t fuel) {
  if (cp.trivial) return {join_status::yes, cp.left, 0, 0};

  std::set<std::string> vars = var_names(cp.left);
  for (const std::string& v : var_names(cp.right)) vars.insert(v);
  substitution freeze = freezing_substitution(vars, system.sig());
  term left = apply(freeze, cp.left);
  term right = apply(freeze, cp.right);

  reach_result from_left = reachable_set(system, left, fuel);
  reach_result from_right = reachable_set(system, right, fuel);
  std::map<term, std::size_t> right_depth;
  for (std::size_t k = 0; k < from_right.terms.size(); ++k) {
    right_depth.emplace(from_right.terms[k], from_right.depths[k]);
  }
  for (std::size_t k = 0; k < from_left.terms.size(); ++k) {
    auto it = right_depth.find(from_left.terms[k]);
    if (it == right_depth.end()) continue;
    return {join_status::yes, from_left.terms[k], from_left.depths[k], it->second};
  }
  if (from_left.complete && from_right.complete) {
    return {join_status::no, std::nullopt, std::nullopt, std::nullopt};
  }
  return {join_status::unknown, std::nullopt, std::nullopt, std::nullopt};
}

local_confluence_result local_confluence_verdict(const trs& system, std::size_t fuel) {
  local_confluence_result out;
  out.pairs = critical_pairs(system);
  for (std::size_t k = 0; k < out.pairs.size(); ++k) {
    cp_joinability j = decide_cp_joinability(system, out.pairs[k], fuel);
    if (j.status == join_status::no && !out.counterexample) out.counterexample = k;
    if (j.status == join_status::unknown) out.undecided.push_back(k);
    out.joinability.push_back(std::move(j));
  }
  if (out.counterexample) {
    out.status = local_confluence_status::not_locally_confluent;
  } else if (!out.undecided.empty()) {
    out.status = local_confluence_status::unknown;
  } else {
    out.status = local_confluence_status::locally_confluent;
  }
  return out;
}

confluence_result confluence_verdict(const trs& system, std::size_t fuel,
                                     bool assume_terminating) {
  if (is_orthogonal(system)) {
    return {confluence_status::confluent, confluence_criterion::orthogonality,
            "orthogonal: left-linear and no overlaps", std::nullopt};
  }
  local_confluence_result local = local_confluence_verdict(system, fuel);
  std::size_t n = local.pairs.size();
  if (assume_terminating && local.status == local_confluence_status::locally_confluent) {
    return {confluence_status::confluent, confluence_criterion::newman_cp,
            "terminating by assumption and all " + std::to_string(n) +
                " critical pair(s) joinable (Newman)",
            std::move(local)};
  }
  if (local.status == local_confluence_status::not_locally_confluent) {
    const critical_pair& cp = local.pairs[*local.counterexample];
    return {confluence_status::not_confluent, confluence_criterion::non_joinable_cp,
            "critical pair " + cp.left.to_string() + " <- peak -> " + cp.right.to_string() +
                " is not joinable",
            std::move(local)};
  }
  std::string reason;
  if (local.status == local_confluence_status::locally_confluent) {
    reason = "all " + std::to_string(n) +
             " critical pair(s) joinable, but the system is not orthogonal and termination "
             "was not asserted";
  } else {
    reason = "joinability of " + std::to_string(local.undecided.size()) +
             " critical pair(s) undecided within the fuel bound";
  }
  return {confluence_status::unknown, confluence_criterion::undecided, std::move(reason),
          std::move(local)};
}

namespace {

term pair_up(const term& a, const term& b) { return term::app("#pair", {a, b}); }

bool pair_variant(const term& a, const term& b) {
  return match(a, b).has_value() && match(b, a).has_value();
}

}  // namespace

std::vector<std::size_t> symmetric_cp_representatives(const std::vector<critical_pair>& pairs) {
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    term mirrored = pair_up(pairs[j].right, pairs[j].left);
    bool duplicate = false;
    for (std::size_t i : kept) {
      if (pair_variant(pair_up(pairs[i].left, pairs[i].right), mirrored)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.push_back(j);
  }
  return kept;
}

std::string to_string(confluence_status s) {
  switch (s) {
    case confluence_status::confluent: return "confluent";
    case confluence_status::not_confluent: return "not-confluent";
    case confluence_status::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(confluence_criterion c) {
  switch (c) {
    case confluence_criterion::orthogonality: return "orthogonality";
    case confluence_criterion::newman_cp: return "newman+critical-pairs";
    case confluence_criterion::non_joinable_cp: return "non-joinable-critical-pair";
    case confluence_criterion::undecided: return "undecided";
  }
  return "undecided";
}

std::string to_string(local_confluence_status s) {
  switch (s) {
    case local_confluence_status::locally_confluent: return "locally-confluent";
    case local_confluence_status::not_locally_confluent: return "not-locally-confluent";
    case local_confluence_status::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(join_status s) {
  switch (s) {
    case join_status::yes: return "yes";
    case join_status::no: return "no";
    case join_status::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace rwkit
