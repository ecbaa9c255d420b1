#include "rwkit/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "rwkit/critical_pairs.hpp"
#include "rwkit/errors.hpp"

namespace rwkit {

namespace {

void require_pairwise_parallel(const std::vector<position>& ps) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (!parallel(ps[i], ps[j])) {
        throw input_error("positions " + ps[i].to_string() + " and " + ps[j].to_string() +
                          " are not parallel");
      }
    }
  }
}

}  // namespace

parallel_positions::parallel_positions(std::vector<position> entries)
    : entries_(std::move(entries)) {
  require_pairwise_parallel(entries_);
}

parallel_step parallel_step::make(std::vector<position> positions, std::vector<std::size_t> rules,
                                  std::vector<substitution> matchers) {
  if (positions.size() != rules.size() || positions.size() != matchers.size()) {
    throw input_error("parallel step sequences must have equal lengths (got " +
                      std::to_string(positions.size()) + " positions, " +
                      std::to_string(rules.size()) + " rules, " +
                      std::to_string(matchers.size()) + " matchers)");
  }
  require_pairwise_parallel(positions);
  std::vector<std::size_t> order(positions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return length_lex_less(positions[a], positions[b]);
  });
  parallel_step step;
  for (std::size_t k : order) {
    step.positions_.push_back(std::move(positions[k]));
    step.rules_.push_back(rules[k]);
    step.matchers_.push_back(std::move(matchers[k]));
  }
  return step;
}

parallel_step parallel_step::singleton(const redex& r) {
  parallel_step step;
  step.positions_.push_back(r.pos);
  step.rules_.push_back(r.rule_index);
  step.matchers_.push_back(r.matcher);
  return step;
}

term replace_par_pos(const term& s, const parallel_positions& pi, const std::vector<term>& ts) {
  if (pi.size() != ts.size()) {
    throw input_error("replacement needs one term per position (got " +
                      std::to_string(pi.size()) + " positions, " + std::to_string(ts.size()) +
                      " terms)");
  }
  term out = s;
  for (std::size_t k = 0; k < ts.size(); ++k) out = replace_at(out, ts[k], pi.entries()[k]);
  return out;
}

term apply_parallel_step(const trs& system, const term& s, const parallel_step& step) {
  std::vector<term> contracta;
  contracta.reserve(step.size());
  for (std::size_t k = 0; k < step.size(); ++k) {
    const rewrite_rule& rule = system.rule(step.rule_indices()[k]);
    term expected = apply(step.matchers()[k], rule.lhs);
    if (subterm_at(s, step.positions()[k]) != expected) {
      throw input_error("parallel step is not coordinated at index " + std::to_string(k) +
                        ": subterm at " + step.positions()[k].to_string() +
                        " is not the matched left-hand side of rule " +
                        std::to_string(step.rule_indices()[k]));
    }
    contracta.push_back(apply(step.matchers()[k], rule.rhs));
  }
  return replace_par_pos(s, parallel_positions(step.positions()), contracta);
}

std::vector<std::pair<term, parallel_step>> parallel_reducts(const trs& system, const term& s,
                                                             std::size_t max_redexes) {
  std::vector<redex> redexes;
  std::vector<term> contracta;
  for (auto& [t, r] : one_step_reducts(system, s)) {
    contracta.push_back(apply(r.matcher, system.rule(r.rule_index).rhs));
    redexes.push_back(std::move(r));
  }
  if (redexes.size() > max_redexes) {
    throw resource_error("term has " + std::to_string(redexes.size()) +
                         " redexes, above the parallel enumeration cap of " +
                         std::to_string(max_redexes));
  }

  std::vector<std::pair<term, parallel_step>> out;
  std::vector<std::size_t> chosen;
  std::vector<term> stack{s};  // term with every chosen redex contracted

  auto emit = [&] {
    std::vector<position> ps;
    std::vector<std::size_t> rs;
    std::vector<substitution> ms;
    for (std::size_t k : chosen) {
      ps.push_back(redexes[k].pos);
      rs.push_back(redexes[k].rule_index);
      ms.push_back(redexes[k].matcher);
    }
    out.emplace_back(stack.back(), parallel_step::make(std::move(ps), std::move(rs), std::move(ms)));
  };

  auto compatible = [&](std::size_t i) {
    for (std::size_t k : chosen) {
      if (!parallel(redexes[k].pos, redexes[i].pos)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t start) -> void {
    emit();
    for (std::size_t i = start; i < redexes.size(); ++i) {
      if (!compatible(i)) continue;
      chosen.push_back(i);
      stack.push_back(replace_at(stack.back(), contracta[i], redexes[i].pos));
      self(self, i + 1);
      stack.pop_back();
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<parallel_step> one_step_implies_parallel(const trs& system, const term& s,
                                                       const term& t) {
  if (s == t) return parallel_step{};
  for (const auto& [reduct, r] : one_step_reducts(system, s)) {
    if (reduct == t) return parallel_step::singleton(r);
  }
  return std::nullopt;
}

diamond_result diamond_check(const trs& system, const term& s, std::size_t max_redexes) {
  std::vector<term> reducts;
  std::set<term> seen;
  for (const auto& [t, step] : parallel_reducts(system, s, max_redexes)) {
    if (seen.insert(t).second) reducts.push_back(t);
  }
  std::vector<std::set<term>> onwards;
  onwards.reserve(reducts.size());
  for (const term& t : reducts) {
    std::set<term> next;
    for (const auto& [v, step] : parallel_reducts(system, t, max_redexes)) next.insert(v);
    onwards.push_back(std::move(next));
  }
  for (std::size_t i = 0; i < reducts.size(); ++i) {
    for (std::size_t j = i + 1; j < reducts.size(); ++j) {
      bool met = std::any_of(onwards[i].begin(), onwards[i].end(),
                             [&](const term& v) { return onwards[j].count(v) != 0; });
      if (!met) return {false, std::make_pair(reducts[i], reducts[j])};
    }
  }
  return {true, std::nullopt};
}

parallel_moves_result parallel_moves_join(const trs& system, const term& s, const redex& outer,
                                          const parallel_step& inner) {
  if (!is_orthogonal(system)) {
    throw input_error("parallel moves join requires an orthogonal system");
  }
  const rewrite_rule& outer_rule = system.rule(outer.rule_index);
  if (subterm_at(s, outer.pos) != apply(outer.matcher, outer_rule.lhs)) {
    throw input_error("outer redex does not match the subject at " + outer.pos.to_string());
  }
  const position& q = outer.pos;

  std::vector<std::size_t> beside;  // inner indices parallel to q
  std::vector<std::size_t> below;   // inner indices strictly below q
  for (std::size_t k = 0; k < inner.size(); ++k) {
    const position& p = inner.positions()[k];
    if (parallel(q, p)) {
      beside.push_back(k);
    } else if (prefix_leq(q, p) && p != q) {
      below.push_back(k);
    } else {
      throw input_error("inner step position " + p.to_string() +
                        " is neither strictly below nor parallel to the outer redex at " +
                        q.to_string());
    }
  }

  static_cast<void>(apply_parallel_step(system, s, inner));  // validates inner against s
  term t = replace_at(s, apply(outer.matcher, outer_rule.rhs), q);

  // Factor each below-redex through the variable occurrence of the outer lhs
  // it sits under; orthogonality rules out hitting the symbol skeleton.
  auto lhs_vars = vars_of(outer_rule.lhs);
  std::map<std::string, std::vector<std::pair<position, std::size_t>>> inside;  // x -> (m, k)
  for (std::size_t k : below) {
    position w = *inner.positions()[k].strip_prefix(q);
    bool placed = false;
    for (const auto& [x, occs] : lhs_vars) {
      for (const position& px : occs) {
        if (!prefix_leq(px, w)) continue;
        inside[x].emplace_back(*w.strip_prefix(px), k);
        placed = true;
        break;
      }
      if (placed) break;
    }
    if (!placed) {
      throw input_error("inner redex at " + inner.positions()[k].to_string() +
                        " overlaps the outer rule's symbol skeleton");
    }
  }

  // sigma': contract, inside each affected variable image, all inner redexes
  // that fell into it. Left-linearity makes the update uniform.
  substitution sigma_prime = outer.matcher;
  std::map<std::size_t, term> contractum;
  for (std::size_t k : below) {
    const rewrite_rule& rule = system.rule(inner.rule_indices()[k]);
    contractum.emplace(k, apply(inner.matchers()[k], rule.rhs));
  }
  for (const auto& [x, hits] : inside) {
    term image = sigma_prime.image(x);
    for (const auto& [m, k] : hits) image = replace_at(image, contractum.at(k), m);
    sigma_prime = sigma_prime.updated(x, image);
  }

  // Step closing t: the beside-redexes survive unchanged; each below-redex
  // reappears once per occurrence of its variable in the outer rhs.
  std::vector<position> ps;
  std::vector<std::size_t> rs;
  std::vector<substitution> ms;
  for (std::size_t k : beside) {
    ps.push_back(inner.positions()[k]);
    rs.push_back(inner.rule_indices()[k]);
    ms.push_back(inner.matchers()[k]);
  }
  auto rhs_vars = vars_of(outer_rule.rhs);
  for (const auto& [x, hits] : inside) {
    auto it = rhs_vars.find(x);
    if (it == rhs_vars.end()) continue;  // erased by the outer rule: no residuals
    for (const position& o : it->second) {
      for (const auto& [m, k] : hits) {
        ps.push_back(q.concat(o).concat(m));
        rs.push_back(inner.rule_indices()[k]);
        ms.push_back(inner.matchers()[k]);
      }
    }
  }
  parallel_step after_outer = parallel_step::make(std::move(ps), std::move(rs), std::move(ms));

  term meet = apply_parallel_step(system, t, after_outer);
  parallel_step after_inner =
      parallel_step::singleton(redex{q, outer.rule_index, std::move(sigma_prime)});
  return {std::move(meet), std::move(after_outer), std::move(after_inner)};
}

}  // namespace rwkit
