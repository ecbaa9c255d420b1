#include "rwkit/rewriting.hpp"

#include <algorithm>

#include "rwkit/errors.hpp"

namespace rwkit {

namespace {

// Internal pairing symbol; '#' is outside the identifier alphabet, so it can
// never collide with a user symbol.
term pair_up(const term& a, const term& b) { return term::app("#pair", {a, b}); }

}  // namespace

rewrite_rule::rewrite_rule(term lhs_in, term rhs_in)
    : lhs(std::move(lhs_in)), rhs(std::move(rhs_in)) {
  if (lhs.is_variable()) {
    throw input_error("rule left-hand side must not be a variable: " + lhs.to_string());
  }
  std::set<std::string> lhs_vars = var_names(lhs);
  for (const std::string& v : var_names(rhs)) {
    if (!lhs_vars.count(v)) {
      throw input_error("rule right-hand side variable '" + v +
                        "' does not occur in the left-hand side");
    }
  }
}

std::set<std::string> rewrite_rule::variables() const {
  return var_names(lhs);  // rhs variables are a subset by construction
}

std::string rewrite_rule::to_string() const {
  return lhs.to_string() + " -> " + rhs.to_string();
}

bool is_variant(const rewrite_rule& a, const rewrite_rule& b) {
  // Mutual matchability forces a size-preserving, hence bijective, renaming.
  term pa = pair_up(a.lhs, a.rhs);
  term pb = pair_up(b.lhs, b.rhs);
  return match(pa, pb).has_value() && match(pb, pa).has_value();
}

rewrite_rule rename_apart(const rewrite_rule& rule, const std::set<std::string>& avoid) {
  substitution renaming = make_renaming(rule.variables(), avoid);
  return rewrite_rule(apply(renaming, rule.lhs), apply(renaming, rule.rhs));
}

trs::trs(signature sig, std::set<std::string> variables, std::vector<rewrite_rule> rules)
    : sig_(std::move(sig)), variables_(std::move(variables)), rules_(std::move(rules)) {
  for (const rewrite_rule& r : rules_) {
    sig_.check(r.lhs, variables_);
    sig_.check(r.rhs, variables_);
  }
}

const rewrite_rule& trs::rule(std::size_t i) const {
  if (i >= rules_.size()) {
    throw input_error("rule index " + std::to_string(i) + " out of range (have " +
                      std::to_string(rules_.size()) + " rules)");
  }
  return rules_[i];
}

std::optional<term> step_at(const trs& system, const term& s, const position& p, std::size_t i) {
  const rewrite_rule& rule = system.rule(i);
  term sub = subterm_at(s, p);  // validates p
  std::optional<substitution> sigma = match(rule.lhs, sub);
  if (!sigma) return std::nullopt;
  return replace_at(s, apply(*sigma, rule.rhs), p);
}

std::vector<std::pair<term, redex>> one_step_reducts(const trs& system, const term& s) {
  std::vector<std::pair<term, redex>> out;
  for (const position& p : positions_of(s)) {
    term sub = subterm_at(s, p);
    for (std::size_t i = 0; i < system.rules().size(); ++i) {
      std::optional<substitution> sigma = match(system.rules()[i].lhs, sub);
      if (!sigma) continue;
      term reduct = replace_at(s, apply(*sigma, system.rules()[i].rhs), p);
      out.emplace_back(std::move(reduct), redex{p, i, std::move(*sigma)});
    }
  }
  return out;
}

bool is_normal_form(const trs& system, const term& s) {
  for (const position& p : positions_of(s)) {
    term sub = subterm_at(s, p);
    for (const rewrite_rule& rule : system.rules()) {
      if (match(rule.lhs, sub)) return false;
    }
  }
  return true;
}

reach_result reachable_set(const trs& system, const term& s, std::size_t fuel) {
  reach_result out;
  std::set<term> seen{s};
  out.terms.push_back(s);
  out.depths.push_back(0);
  std::size_t frontier = 0;
  std::size_t expansions = 0;
  while (frontier < out.terms.size()) {
    if (expansions == fuel) return out;  // complete stays false
    term current = out.terms[frontier];
    std::size_t depth = out.depths[frontier];
    ++frontier;
    ++expansions;
    std::vector<std::pair<term, redex>> reducts;
    try {
      reducts = one_step_reducts(system, current);
    } catch (const resource_error&) {
      return out;  // a reduct blew the term guard: report what we have
    }
    for (auto& [t, r] : reducts) {
      if (seen.insert(t).second) {
        out.terms.push_back(std::move(t));
        out.depths.push_back(depth + 1);
      }
    }
  }
  out.complete = true;
  return out;
}

join_result joinable_terms(const trs& system, const term& u, const term& v, std::size_t fuel) {
  reach_result from_u = reachable_set(system, u, fuel);
  reach_result from_v = reachable_set(system, v, fuel);
  std::set<term> v_set(from_v.terms.begin(), from_v.terms.end());
  for (const term& t : from_u.terms) {
    if (v_set.count(t)) return {join_status::yes, t};
  }
  if (from_u.complete && from_v.complete) return {join_status::no, std::nullopt};
  return {join_status::unknown, std::nullopt};
}

normalize_result normalize(const trs& system, const term& s, std::size_t fuel) {
  normalize_result out{false, s, {}};
  for (std::size_t step = 0; step < fuel; ++step) {
    bool contracted = false;
    for (const position& p : positions_of(out.result)) {
      term sub = subterm_at(out.result, p);
      for (std::size_t i = 0; i < system.rules().size() && !contracted; ++i) {
        std::optional<substitution> sigma = match(system.rules()[i].lhs, sub);
        if (!sigma) continue;
        std::optional<term> next;
        try {
          next = replace_at(out.result, apply(*sigma, system.rules()[i].rhs), p);
        } catch (const resource_error&) {
          return out;  // next reduct blew the term guard: stop at the last good term
        }
        out.trace.push_back(redex{p, i, std::move(*sigma)});
        out.result = std::move(*next);
        contracted = true;
      }
      if (contracted) break;
    }
    if (!contracted) {
      out.normal_form = true;
      return out;
    }
  }
  out.normal_form = is_normal_form(system, out.result);
  return out;
}

update_chain substitution_update_chain(const trs& system, const term& r,
                                       const substitution& sigma, const std::string& x,
                                       const position& q, std::size_t inner) {
  const rewrite_rule& rule = system.rule(inner);
  term x_image = sigma.image(x);
  term at_q = subterm_at(x_image, q);
  std::optional<substitution> tau = match(rule.lhs, at_q);
  if (!tau) {
    throw input_error("rule " + std::to_string(inner) + " does not match the image of '" + x +
                      "' at " + q.to_string());
  }
  term contractum = apply(*tau, rule.rhs);
  term x_image_new = replace_at(x_image, contractum, q);

  update_chain chain{sigma.updated(x, x_image_new), apply(sigma, r), {}};
  auto occurrences = vars_of(r);
  auto it = occurrences.find(x);
  if (it == occurrences.end()) return chain;  // vacuous: zero-step sequence

  term current = chain.start;
  for (const position& qi : it->second) {
    position where = qi.concat(q);
    current = replace_at(current, contractum, where);
    chain.links.push_back(chain_link{current, where});
  }
  return chain;
}

}  // namespace rwkit
