#include "rwkit/ars.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <vector>

namespace rwkit {

finite_ars::finite_ars(std::set<element> carrier, std::set<step> steps)
    : carrier_(std::move(carrier)), steps_(std::move(steps)) {
  if (carrier_.empty()) throw input_error("ARS carrier must be non-empty");
  for (const auto& [x, y] : steps_) {
    if (!carrier_.count(x) || !carrier_.count(y)) {
      throw input_error("ARS step (" + x + ", " + y + ") has an endpoint outside the carrier");
    }
  }
}

namespace {

using element = finite_ars::element;
using step = finite_ars::step;

std::set<step> reflexive_close(const std::set<element>& carrier, std::set<step> steps) {
  for (const element& x : carrier) steps.emplace(x, x);
  return steps;
}

std::set<step> symmetric_close(std::set<step> steps) {
  std::set<step> out = steps;
  for (const auto& [x, y] : steps) out.emplace(y, x);
  return out;
}

std::set<step> transitive_close(std::set<step> steps) {
  std::map<element, std::set<element>> succ;
  for (const auto& [x, y] : steps) succ[x].insert(y);
  std::deque<step> work(steps.begin(), steps.end());
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    auto it = succ.find(y);
    if (it == succ.end()) continue;
    for (const element& z : it->second) {
      if (steps.emplace(x, z).second) work.emplace_back(x, z);
    }
  }
  return steps;
}

/// Elements reachable from x in zero or more steps, in breadth-first order
/// (successors visited in carrier order).
std::vector<element> reachable_from(const finite_ars& a, const element& x) {
  std::map<element, std::set<element>> succ;
  for (const auto& [s, t] : a.steps()) succ[s].insert(t);
  std::vector<element> order;
  std::set<element> seen{x};
  std::deque<element> work{x};
  while (!work.empty()) {
    element cur = work.front();
    work.pop_front();
    order.push_back(cur);
    auto it = succ.find(cur);
    if (it == succ.end()) continue;
    for (const element& next : it->second) {
      if (seen.insert(next).second) work.push_back(next);
    }
  }
  return order;
}

}  // namespace

finite_ars close(const finite_ars& a, closure_kind k) {
  switch (k) {
    case closure_kind::reflexive:
      return finite_ars(a.carrier(), reflexive_close(a.carrier(), a.steps()));
    case closure_kind::symmetric:
      return finite_ars(a.carrier(), symmetric_close(a.steps()));
    case closure_kind::transitive:
      return finite_ars(a.carrier(), transitive_close(a.steps()));
    case closure_kind::reflexive_transitive:
      return finite_ars(a.carrier(),
                        reflexive_close(a.carrier(), transitive_close(a.steps())));
    case closure_kind::equivalence:
      return finite_ars(a.carrier(), reflexive_close(a.carrier(), transitive_close(
                                         symmetric_close(a.steps()))));
  }
  throw input_error("unknown closure kind");
}

join_witness joinable(const finite_ars& a, const finite_ars::element& x,
                      const finite_ars::element& y) {
  if (!a.carrier().count(x)) throw input_error("element '" + x + "' is not in the carrier");
  if (!a.carrier().count(y)) throw input_error("element '" + y + "' is not in the carrier");
  std::vector<element> from_x = reachable_from(a, x);
  std::vector<element> from_y_order = reachable_from(a, y);
  std::set<element> from_y(from_y_order.begin(), from_y_order.end());
  for (const element& z : from_x) {
    if (from_y.count(z)) return {true, z};
  }
  return {false, std::nullopt};
}

bool confluent(const finite_ars& a) {
  for (const element& x : a.carrier()) {
    std::vector<element> reducts = reachable_from(a, x);
    for (const element& y : reducts) {
      for (const element& z : reducts) {
        if (!joinable(a, y, z).joinable) return false;
      }
    }
  }
  return true;
}

bool locally_confluent(const finite_ars& a) {
  for (const auto& [x, y] : a.steps()) {
    for (const auto& [x2, z] : a.steps()) {
      if (x2 != x) continue;
      if (!joinable(a, y, z).joinable) return false;
    }
  }
  return true;
}

bool noetherian(const finite_ars& a) {
  // Kahn's algorithm: the step graph is acyclic iff every node drains.
  std::map<element, std::size_t> indegree;
  std::map<element, std::set<element>> succ;
  for (const element& x : a.carrier()) indegree[x] = 0;
  for (const auto& [x, y] : a.steps()) {
    succ[x].insert(y);
    ++indegree[y];
  }
  std::deque<element> ready;
  for (const auto& [x, d] : indegree) {
    if (d == 0) ready.push_back(x);
  }
  std::size_t drained = 0;
  while (!ready.empty()) {
    element cur = ready.front();
    ready.pop_front();
    ++drained;
    for (const element& next : succ[cur]) {
      if (--indegree[next] == 0) ready.push_back(next);
    }
  }
  return drained == a.carrier().size();
}

finite_ars parse_ars(const std::string& text) {
  std::set<element> carrier;
  std::set<step> steps;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto cut = line.find(';'); cut != std::string::npos) line.erase(cut);
    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    };
    auto read_ident = [&]() -> std::string {
      std::size_t start = i;
      while (i < line.size()) {
        char c = line[i];
        bool ident = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
                     c == '+' || c == '*' || c == '-';
        if (!ident) break;
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') break;
        ++i;
      }
      return line.substr(start, i - start);
    };
    skip_space();
    if (i == line.size()) continue;
    std::string lhs = read_ident();
    if (lhs.empty()) throw parse_error("expected an element identifier", lineno, i + 1);
    skip_space();
    if (i + 1 >= line.size() || line[i] != '-' || line[i + 1] != '>') {
      throw parse_error("expected '->'", lineno, i + 1);
    }
    i += 2;
    skip_space();
    std::string rhs = read_ident();
    if (rhs.empty()) throw parse_error("expected an element identifier", lineno, i + 1);
    skip_space();
    if (i != line.size()) throw parse_error("trailing input after step", lineno, i + 1);
    carrier.insert(lhs);
    carrier.insert(rhs);
    steps.emplace(std::move(lhs), std::move(rhs));
  }
  if (steps.empty()) throw input_error("ARS description contains no steps");
  return finite_ars(std::move(carrier), std::move(steps));
}

std::string to_string(closure_kind k) {
  switch (k) {
    case closure_kind::reflexive: return "reflexive";
    case closure_kind::symmetric: return "symmetric";
    case closure_kind::transitive: return "transitive";
    case closure_kind::reflexive_transitive: return "reflexive-transitive";
    case closure_kind::equivalence: return "equivalence";
  }
  return "unknown";
}

}  // namespace rwkit
