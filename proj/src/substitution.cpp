#include "rwkit/substitution.hpp"

#include <deque>
#include <sstream>
#include <utility>
#include <vector>

namespace rwkit {

namespace {

bool is_identity_binding(const std::string& var, const term& t) {
  return t.is_variable() && t.symbol() == var;
}

}  // namespace

substitution::substitution(std::map<std::string, term> bindings) {
  for (auto& [var, t] : bindings) {
    if (!is_identity_binding(var, t)) bindings_.emplace(var, std::move(t));
  }
}

substitution substitution::single(const std::string& var, term t) {
  substitution s;
  if (!is_identity_binding(var, t)) s.bindings_.emplace(var, std::move(t));
  return s;
}

std::optional<term> substitution::lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

term substitution::image(const std::string& var) const {
  auto it = bindings_.find(var);
  if (it == bindings_.end()) return term::variable(var);
  return it->second;
}

std::set<std::string> substitution::domain() const {
  std::set<std::string> d;
  for (const auto& [var, t] : bindings_) d.insert(var);
  return d;
}

substitution substitution::restricted_to(const std::set<std::string>& vars) const {
  substitution s;
  for (const auto& [var, t] : bindings_) {
    if (vars.count(var)) s.bindings_.emplace(var, t);
  }
  return s;
}

substitution substitution::updated(const std::string& var, term t) const {
  substitution s = *this;
  if (is_identity_binding(var, t)) {
    s.bindings_.erase(var);
  } else {
    s.bindings_.insert_or_assign(var, std::move(t));
  }
  return s;
}

bool substitution::operator==(const substitution& other) const {
  return bindings_ == other.bindings_;
}

std::string substitution::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [var, t] : bindings_) {
    if (!first) out << ", ";
    first = false;
    out << var << " -> " << t.to_string();
  }
  out << '}';
  return out.str();
}

term apply(const substitution& sigma, const term& t) {
  if (t.is_variable()) return sigma.image(t.symbol());
  if (sigma.empty()) return t;
  std::vector<term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const term& arg : t.args()) {
    term mapped = apply(sigma, arg);
    if (mapped != arg) changed = true;
    args.push_back(std::move(mapped));
  }
  if (!changed) return t;
  return term::app(t.symbol(), std::move(args));
}

substitution compose(const substitution& sigma, const substitution& tau) {
  std::map<std::string, term> out;
  for (const auto& [var, t] : sigma.bindings()) out.emplace(var, apply(tau, t));
  for (const auto& [var, t] : tau.bindings()) out.emplace(var, t);  // keeps sigma's binding on clash
  return substitution(std::move(out));
}

std::string fresh_name(const std::string& stem, const std::set<std::string>& avoid) {
  if (!avoid.count(stem)) return stem;
  for (unsigned long n = 0;; ++n) {
    std::string candidate = stem + std::to_string(n);
    if (!avoid.count(candidate)) return candidate;
  }
}

substitution make_renaming(const std::set<std::string>& vars, const std::set<std::string>& avoid) {
  std::set<std::string> taken = avoid;
  std::map<std::string, term> out;
  for (const std::string& var : vars) {
    std::string name = fresh_name(var, taken);
    taken.insert(name);
    out.emplace(var, term::variable(name));
  }
  return substitution(std::move(out));
}

std::optional<substitution> match(const term& pattern, const term& subject) {
  // Bindings include identities so repeated variables are checked for
  // consistency; the substitution constructor drops them at the end.
  std::map<std::string, term> bound;
  std::deque<std::pair<term, term>> work;
  work.emplace_back(pattern, subject);
  while (!work.empty()) {
    auto [p, s] = work.front();
    work.pop_front();
    if (p.is_variable()) {
      auto [it, inserted] = bound.emplace(p.symbol(), s);
      if (!inserted && it->second != s) return std::nullopt;
      continue;
    }
    if (s.is_variable()) return std::nullopt;
    if (p.symbol() != s.symbol() || p.args().size() != s.args().size()) return std::nullopt;
    for (std::size_t i = 0; i < p.args().size(); ++i) work.emplace_back(p.args()[i], s.args()[i]);
  }
  return substitution(std::move(bound));
}

namespace {

bool occurs_in(const std::string& var, const term& t) {
  if (t.is_variable()) return t.symbol() == var;
  for (const term& arg : t.args()) {
    if (occurs_in(var, arg)) return true;
  }
  return false;
}

}  // namespace

std::optional<substitution> unify(const term& a, const term& b) {
  substitution sigma;
  std::deque<std::pair<term, term>> work;
  work.emplace_back(a, b);
  while (!work.empty()) {
    auto [s, t] = work.front();
    work.pop_front();
    s = apply(sigma, s);
    t = apply(sigma, t);
    if (s == t) continue;
    if (s.is_variable() || t.is_variable()) {
      if (!s.is_variable()) std::swap(s, t);
      if (occurs_in(s.symbol(), t)) return std::nullopt;
      substitution bind = substitution::single(s.symbol(), t);
      sigma = compose(sigma, bind);
      continue;
    }
    if (s.symbol() != t.symbol() || s.args().size() != t.args().size()) return std::nullopt;
    for (std::size_t i = 0; i < s.args().size(); ++i) work.emplace_back(s.args()[i], t.args()[i]);
  }
  return sigma;
}

}  // namespace rwkit
