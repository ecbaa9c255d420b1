#include "rwkit/report.hpp"

#include <chrono>
#include <sstream>

namespace rwkit {

namespace {

using nlohmann::json;

std::size_t search_fuel(const analysis_config& cfg) {
  return cfg.fuel.value_or(default_search_fuel);
}

void require_valid(const analysis_config& cfg) {
  if (cfg.fuel && *cfg.fuel == 0) throw input_error("fuel must be at least 1");
  if (cfg.max_term_size == 0) throw input_error("max term size must be at least 1");
  if (cfg.output_format != "text" && cfg.output_format != "json") {
    throw input_error("output format must be 'text' or 'json'");
  }
}

json config_json(const analysis_config& cfg, std::size_t resolved_fuel) {
  return json{{"fuel", resolved_fuel},
              {"max_term_size", cfg.max_term_size},
              {"assume_terminating", cfg.assume_terminating},
              {"output_format", cfg.output_format},
              {"dedupe_symmetric_cps", cfg.dedupe_symmetric_cps}};
}

std::string config_text(const analysis_config& cfg, std::size_t resolved_fuel) {
  std::ostringstream out;
  out << "config: fuel=" << resolved_fuel << " max-term-size=" << cfg.max_term_size
      << " assume-terminating=" << (cfg.assume_terminating ? "yes" : "no")
      << " dedupe-cps=" << (cfg.dedupe_symmetric_cps ? "yes" : "no");
  return out.str();
}

json trs_json(const trs& system) {
  json symbols = json::array();
  for (const auto& [name, arity] : system.sig().symbols()) {
    symbols.push_back(json{{"name", name}, {"arity", arity}});
  }
  json rules = json::array();
  for (std::size_t i = 0; i < system.rules().size(); ++i) {
    rules.push_back(json{{"index", i},
                         {"lhs", system.rules()[i].lhs.to_string()},
                         {"rhs", system.rules()[i].rhs.to_string()}});
  }
  return json{{"variables", json(system.variables())},
              {"symbols", std::move(symbols)},
              {"rules", std::move(rules)}};
}

std::string trs_text(const trs& system) {
  std::ostringstream out;
  out << "rules: " << system.rules().size() << ", symbols: " << system.sig().symbols().size()
      << ", variables: " << system.variables().size();
  return out.str();
}

json subst_json(const substitution& sigma) {
  json out = json::object();
  for (const auto& [var, t] : sigma.bindings()) out[var] = t.to_string();
  return out;
}

json step_json(const parallel_step& step) {
  json positions = json::array();
  json rules = json::array();
  json matchers = json::array();
  for (std::size_t k = 0; k < step.size(); ++k) {
    positions.push_back(step.positions()[k].to_string());
    rules.push_back(step.rule_indices()[k]);
    matchers.push_back(subst_json(step.matchers()[k]));
  }
  return json{{"positions", std::move(positions)},
              {"rules", std::move(rules)},
              {"matchers", std::move(matchers)}};
}

json joinability_json(const cp_joinability& j) {
  json out{{"status", to_string(j.status)}};
  if (j.witness) out["witness"] = j.witness->to_string();
  if (j.steps_left) out["steps_left"] = *j.steps_left;
  if (j.steps_right) out["steps_right"] = *j.steps_right;
  return out;
}

json cp_json(const trs& system, const critical_pair& cp, const cp_joinability& j) {
  const overlap& o = cp.origin;
  return json{{"outer_rule", o.outer_rule},
              {"inner_rule", o.inner_rule},
              {"outer", system.rule(o.outer_rule).to_string()},
              {"inner", system.rule(o.inner_rule).to_string()},
              {"inner_renamed", o.renamed_inner.to_string()},
              {"position", o.pos.to_string()},
              {"mgu", subst_json(o.mgu)},
              {"left", cp.left.to_string()},
              {"right", cp.right.to_string()},
              {"trivial", cp.trivial},
              {"joinability", joinability_json(j)}};
}

void cp_text(std::ostringstream& out, std::size_t index, const critical_pair& cp,
             const cp_joinability& j) {
  const overlap& o = cp.origin;
  out << "  cp " << index << ": outer rule " << o.outer_rule << " / inner rule " << o.inner_rule
      << " at " << o.pos.to_string() << "\n"
      << "    left:  " << cp.left.to_string() << "\n"
      << "    right: " << cp.right.to_string() << "\n"
      << "    joinable: " << to_string(j.status);
  if (j.witness) out << ", witness " << j.witness->to_string();
  if (cp.trivial) out << " (trivial)";
  out << "\n";
}

/// Wall-clock scope timer writing into the envelope at destruction time.
class timed_envelope {
 public:
  timed_envelope(std::string command, std::string input)
      : start_(std::chrono::steady_clock::now()) {
    envelope_["command"] = std::move(command);
    envelope_["input"] = std::move(input);
  }

  json& operator*() { return envelope_; }

  json finish() {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    envelope_["timing_ms"] =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
    return std::move(envelope_);
  }

 private:
  json envelope_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

command_output run_check(const trs& system, const std::string& input,
                         const analysis_config& cfg) {
  require_valid(cfg);
  std::size_t fuel = search_fuel(cfg);
  timed_envelope env("check", input);
  (*env)["config"] = config_json(cfg, fuel);
  (*env)["trs"] = trs_json(system);

  confluence_result verdict = confluence_verdict(system, fuel, cfg.assume_terminating);

  json result{{"verdict", to_string(verdict.status)},
              {"criterion", to_string(verdict.criterion)},
              {"reason", verdict.reason}};
  std::ostringstream text;
  text << "command: check\ninput: " << input << "\n"
       << trs_text(system) << "\n"
       << config_text(cfg, fuel) << "\n"
       << "verdict: " << to_string(verdict.status) << "\n"
       << "criterion: " << to_string(verdict.criterion) << "\n"
       << "reason: " << verdict.reason << "\n";
  if (verdict.local) {
    json pairs = json::array();
    text << "critical pairs: " << verdict.local->pairs.size() << "\n";
    for (std::size_t k = 0; k < verdict.local->pairs.size(); ++k) {
      pairs.push_back(cp_json(system, verdict.local->pairs[k], verdict.local->joinability[k]));
      cp_text(text, k, verdict.local->pairs[k], verdict.local->joinability[k]);
    }
    result["critical_pairs"] = std::move(pairs);
    result["local_confluence"] = to_string(verdict.local->status);
  }
  (*env)["result"] = std::move(result);

  int exit_code = verdict.status == confluence_status::unknown ? 2 : 0;
  return {exit_code, text.str(), env.finish()};
}

command_output run_cps(const trs& system, const std::string& input, const analysis_config& cfg) {
  require_valid(cfg);
  std::size_t fuel = search_fuel(cfg);
  timed_envelope env("cps", input);
  (*env)["config"] = config_json(cfg, fuel);
  (*env)["trs"] = trs_json(system);

  std::vector<critical_pair> pairs = critical_pairs(system);
  std::vector<std::size_t> listed(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) listed[k] = k;
  if (cfg.dedupe_symmetric_cps) listed = symmetric_cp_representatives(pairs);

  json pair_array = json::array();
  std::ostringstream text;
  text << "command: cps\ninput: " << input << "\n"
       << trs_text(system) << "\n"
       << config_text(cfg, fuel) << "\n"
       << "critical pairs: " << listed.size();
  if (cfg.dedupe_symmetric_cps) text << " (of " << pairs.size() << " before deduplication)";
  text << "\n";
  bool any_unknown = false;
  for (std::size_t k : listed) {
    cp_joinability j = decide_cp_joinability(system, pairs[k], fuel);
    any_unknown = any_unknown || j.status == join_status::unknown;
    pair_array.push_back(cp_json(system, pairs[k], j));
    cp_text(text, k, pairs[k], j);
  }
  (*env)["result"] = json{{"count", listed.size()},
                          {"total", pairs.size()},
                          {"deduped", cfg.dedupe_symmetric_cps},
                          {"pairs", std::move(pair_array)}};
  return {any_unknown ? 2 : 0, text.str(), env.finish()};
}

command_output run_orthogonal(const trs& system, const std::string& input,
                              const analysis_config& cfg) {
  require_valid(cfg);
  std::size_t fuel = search_fuel(cfg);
  timed_envelope env("orthogonal", input);
  (*env)["config"] = config_json(cfg, fuel);
  (*env)["trs"] = trs_json(system);

  bool left_linear = is_left_linear(system);
  std::vector<overlap> all = overlaps(system);
  bool orthogonal = left_linear && all.empty();

  json overlap_array = json::array();
  std::ostringstream text;
  text << "command: orthogonal\ninput: " << input << "\n"
       << trs_text(system) << "\n"
       << config_text(cfg, fuel) << "\n"
       << "left linear: " << (left_linear ? "yes" : "no") << "\n"
       << "overlaps: " << all.size() << "\n";
  for (const overlap& o : all) {
    overlap_array.push_back(json{{"outer_rule", o.outer_rule},
                                 {"inner_rule", o.inner_rule},
                                 {"outer", system.rule(o.outer_rule).to_string()},
                                 {"inner", system.rule(o.inner_rule).to_string()},
                                 {"inner_renamed", o.renamed_inner.to_string()},
                                 {"position", o.pos.to_string()},
                                 {"mgu", subst_json(o.mgu)}});
    text << "  outer rule " << o.outer_rule << " / inner rule " << o.inner_rule << " at "
         << o.pos.to_string() << ", mgu " << o.mgu.to_string() << "\n";
  }
  text << "orthogonal: " << (orthogonal ? "yes" : "no") << "\n";
  (*env)["result"] = json{{"orthogonal", orthogonal},
                          {"left_linear", left_linear},
                          {"overlap_count", all.size()},
                          {"overlaps", std::move(overlap_array)}};
  return {0, text.str(), env.finish()};
}

command_output run_normalize(const trs& system, const std::string& input,
                             const std::string& term_text, bool allow_fresh_consts,
                             const analysis_config& cfg) {
  require_valid(cfg);
  std::size_t fuel = cfg.fuel.value_or(default_normalize_fuel);
  timed_envelope env("normalize", input);
  (*env)["config"] = config_json(cfg, fuel);
  (*env)["trs"] = trs_json(system);

  term subject = parse_term(term_text, system, allow_fresh_consts);
  normalize_result outcome = normalize(system, subject, fuel);

  json trace = json::array();
  for (const redex& r : outcome.trace) {
    trace.push_back(json{{"position", r.pos.to_string()},
                         {"rule_index", r.rule_index},
                         {"matcher", subst_json(r.matcher)}});
  }
  (*env)["result"] = json{{"term", subject.to_string()},
                          {"status", outcome.normal_form ? "normal-form" : "out-of-fuel"},
                          {"result", outcome.result.to_string()},
                          {"steps", outcome.trace.size()},
                          {"trace", std::move(trace)}};

  std::ostringstream text;
  text << "command: normalize\ninput: " << input << "\n"
       << trs_text(system) << "\n"
       << config_text(cfg, fuel) << "\n"
       << "term: " << subject.to_string() << "\n"
       << "status: " << (outcome.normal_form ? "normal-form" : "out-of-fuel") << "\n"
       << "steps: " << outcome.trace.size() << "\n"
       << "result: " << outcome.result.to_string() << "\n";
  for (std::size_t k = 0; k < outcome.trace.size(); ++k) {
    text << "  step " << k + 1 << ": rule " << outcome.trace[k].rule_index << " at "
         << outcome.trace[k].pos.to_string() << "\n";
  }
  return {outcome.normal_form ? 0 : 2, text.str(), env.finish()};
}

command_output run_joinable(const trs& system, const std::string& input,
                            const std::string& left_text, const std::string& right_text,
                            bool allow_fresh_consts, const analysis_config& cfg) {
  require_valid(cfg);
  std::size_t fuel = search_fuel(cfg);
  timed_envelope env("joinable", input);
  (*env)["config"] = config_json(cfg, fuel);
  (*env)["trs"] = trs_json(system);

  term left = parse_term(left_text, system, allow_fresh_consts);
  term right = parse_term(right_text, system, allow_fresh_consts);
  join_result verdict = joinable_terms(system, left, right, fuel);

  json result{{"left", left.to_string()},
              {"right", right.to_string()},
              {"status", to_string(verdict.status)}};
  if (verdict.witness) result["witness"] = verdict.witness->to_string();
  (*env)["result"] = std::move(result);

  std::ostringstream text;
  text << "command: joinable\ninput: " << input << "\n"
       << trs_text(system) << "\n"
       << config_text(cfg, fuel) << "\n"
       << "left: " << left.to_string() << "\n"
       << "right: " << right.to_string() << "\n"
       << "status: " << to_string(verdict.status) << "\n";
  if (verdict.witness) text << "witness: " << verdict.witness->to_string() << "\n";
  return {verdict.status == join_status::unknown ? 2 : 0, text.str(), env.finish()};
}

command_output run_parallel(const trs& system, const std::string& input,
                            const std::string& term_text, bool allow_fresh_consts,
                            const analysis_config& cfg) {
  require_valid(cfg);
  std::size_t fuel = search_fuel(cfg);
  timed_envelope env("parallel", input);
  (*env)["config"] = config_json(cfg, fuel);
  (*env)["trs"] = trs_json(system);

  term subject = parse_term(term_text, system, allow_fresh_consts);
  auto reducts = parallel_reducts(system, subject);

  json reduct_array = json::array();
  std::ostringstream text;
  text << "command: parallel\ninput: " << input << "\n"
       << trs_text(system) << "\n"
       << config_text(cfg, fuel) << "\n"
       << "term: " << subject.to_string() << "\n"
       << "parallel reducts: " << reducts.size() << "\n";
  for (std::size_t k = 0; k < reducts.size(); ++k) {
    const auto& [t, step] = reducts[k];
    reduct_array.push_back(json{{"term", t.to_string()}, {"step", step_json(step)}});
    text << "  [" << k << "] " << t.to_string();
    if (step.empty()) {
      text << "  (empty step)";
    } else {
      text << "  at";
      for (const position& p : step.positions()) text << ' ' << p.to_string();
    }
    text << "\n";
  }
  (*env)["result"] = json{{"term", subject.to_string()},
                          {"count", reducts.size()},
                          {"reducts", std::move(reduct_array)}};
  return {0, text.str(), env.finish()};
}

command_output run_ars(const finite_ars& system, const std::string& input,
                       const analysis_config& cfg) {
  require_valid(cfg);
  std::size_t fuel = search_fuel(cfg);
  timed_envelope env("ars", input);
  (*env)["config"] = config_json(cfg, fuel);

  json steps = json::array();
  for (const auto& [x, y] : system.steps()) steps.push_back(json{{"from", x}, {"to", y}});
  (*env)["ars"] = json{{"carrier", json(system.carrier())}, {"steps", std::move(steps)}};

  bool local = locally_confluent(system);
  bool global = confluent(system);
  bool noeth = noetherian(system);
  (*env)["result"] = json{{"elements", system.carrier().size()},
                          {"steps", system.steps().size()},
                          {"locally_confluent", local},
                          {"confluent", global},
                          {"noetherian", noeth}};

  std::ostringstream text;
  text << "command: ars\ninput: " << input << "\n"
       << "elements: " << system.carrier().size() << "\n"
       << "steps: " << system.steps().size() << "\n"
       << "locally confluent: " << (local ? "yes" : "no") << "\n"
       << "confluent: " << (global ? "yes" : "no") << "\n"
       << "noetherian: " << (noeth ? "yes" : "no") << "\n";
  return {0, text.str(), env.finish()};
}

}  // namespace rwkit
