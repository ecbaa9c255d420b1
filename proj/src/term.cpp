#include "rwkit/term.hpp"

#include <algorithm>
#include <atomic>
#include <deque>

namespace rwkit {

// --- position ---------------------------------------------------------

position::position(std::vector<std::uint32_t> path) : path_(std::move(path)) {
  for (auto i : path_) {
    if (i == 0) throw input_error("position entries are 1-based; 0 is not a valid selector");
  }
}

const position& position::root() {
  static const position r;
  return r;
}

position position::concat(const position& q) const {
  std::vector<std::uint32_t> p = path_;
  p.insert(p.end(), q.path_.begin(), q.path_.end());
  position out;
  out.path_ = std::move(p);
  return out;
}

position position::child(std::uint32_t i) const {
  if (i == 0) throw input_error("position entries are 1-based; 0 is not a valid selector");
  position out;
  out.path_ = path_;
  out.path_.push_back(i);
  return out;
}

position position::prefix(std::size_t n) const {
  position out;
  out.path_.assign(path_.begin(), path_.begin() + std::min(n, path_.size()));
  return out;
}

std::optional<position> position::strip_prefix(const position& p) const {
  if (!prefix_leq(p, *this)) return std::nullopt;
  position out;
  out.path_.assign(path_.begin() + p.length(), path_.end());
  return out;
}

std::string position::to_string() const {
  if (path_.empty()) return "epsilon";
  std::string s;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i > 0) s += '.';
    s += std::to_string(path_[i]);
  }
  return s;
}

bool prefix_leq(const position& p, const position& q) noexcept {
  if (p.length() > q.length()) return false;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (p.at(i) != q.at(i)) return false;
  }
  return true;
}

bool parallel(const position& p, const position& q) noexcept {
  return !prefix_leq(p, q) && !prefix_leq(q, p);
}

bool length_lex_less(const position& p, const position& q) noexcept {
  if (p.length() != q.length()) return p.length() < q.length();
  return std::lexicographical_compare(p.path().begin(), p.path().end(), q.path().begin(),
                                      q.path().end());
}

// --- term limits ------------------------------------------------------

namespace {
std::atomic<std::size_t> g_max_height{default_max_term_height};
std::atomic<std::size_t> g_max_nodes{default_max_term_nodes};
}  // namespace

std::size_t term_limits::max_height() noexcept { return g_max_height.load(); }
std::size_t term_limits::max_nodes() noexcept { return g_max_nodes.load(); }

void term_limits::set(std::size_t max_height, std::size_t max_nodes) {
  if (max_height == 0 || max_nodes == 0) throw input_error("term limits must be at least 1");
  g_max_height.store(max_height);
  g_max_nodes.store(max_nodes);
}

// --- term -------------------------------------------------------------

struct term::node {
  std::string sym;
  std::vector<term> children;
  bool var = false;
  std::size_t height = 1;
  std::size_t nodes = 1;
  std::size_t hash = 0;
};

namespace {
std::size_t hash_symbol(const std::string& s, bool var) {
  std::size_t h = var ? 0xcbf29ce484222325ull : 0x84222325cbf29ce4ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}
}  // namespace

term term::variable(std::string name) {
  auto n = std::make_shared<node>();
  n->var = true;
  n->hash = hash_symbol(name, true);
  n->sym = std::move(name);
  return term(std::move(n));
}

term term::app(std::string symbol, std::vector<term> args) {
  auto n = std::make_shared<node>();
  n->var = false;
  std::size_t h = hash_symbol(symbol, false);
  for (const term& a : args) {
    n->nodes += a.node_count();
    n->height = std::max(n->height, a.height() + 1);
    h = h * 1099511628211ull + a.hash();
  }
  if (n->height > term_limits::max_height()) {
    throw resource_error("term height " + std::to_string(n->height) + " exceeds the limit of " +
                         std::to_string(term_limits::max_height()));
  }
  if (n->nodes > term_limits::max_nodes()) {
    throw resource_error("term size " + std::to_string(n->nodes) + " nodes exceeds the limit of " +
                         std::to_string(term_limits::max_nodes()));
  }
  n->hash = h;
  n->sym = std::move(symbol);
  n->children = std::move(args);
  return term(std::move(n));
}

bool term::is_variable() const noexcept { return n_->var; }
const std::string& term::symbol() const noexcept { return n_->sym; }
const std::vector<term>& term::args() const noexcept { return n_->children; }
std::size_t term::node_count() const noexcept { return n_->nodes; }
std::size_t term::height() const noexcept { return n_->height; }
std::size_t term::hash() const noexcept { return n_->hash; }

bool term::operator==(const term& other) const noexcept {
  if (n_ == other.n_) return true;
  if (n_->hash != other.n_->hash || n_->var != other.n_->var || n_->nodes != other.n_->nodes ||
      n_->sym != other.n_->sym || n_->children.size() != other.n_->children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < n_->children.size(); ++i) {
    if (!(n_->children[i] == other.n_->children[i])) return false;
  }
  return true;
}

namespace {
int compare_terms(const term& a, const term& b) {
  if (a.is_variable() != b.is_variable()) return a.is_variable() ? -1 : 1;
  if (int c = a.symbol().compare(b.symbol()); c != 0) return c < 0 ? -1 : 1;
  if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (int c = compare_terms(a.args()[i], b.args()[i]); c != 0) return c;
  }
  return 0;
}
}  // namespace

bool term::operator<(const term& other) const noexcept {
  if (n_ == other.n_) return false;
  return compare_terms(*this, other) < 0;
}

std::string term::to_string() const {
  std::string out;
  // Iterative build to keep deep terms cheap.
  struct frame {
    const term* t;
    std::size_t next_child;
  };
  std::vector<frame> stack{{this, 0}};
  while (!stack.empty()) {
    frame& f = stack.back();
    const term& t = *f.t;
    if (f.next_child == 0) {
      out += t.symbol();
      if (t.args().empty()) {
        stack.pop_back();
        continue;
      }
      out += '(';
    }
    if (f.next_child == t.args().size()) {
      out += ')';
      stack.pop_back();
      continue;
    }
    if (f.next_child > 0) out += ',';
    const term* child = &t.args()[f.next_child];
    ++f.next_child;
    stack.push_back({child, 0});
  }
  return out;
}

// --- signature --------------------------------------------------------

void signature::declare(const std::string& name, std::size_t arity) {
  auto [it, inserted] = arities_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw input_error("symbol '" + name + "' redeclared with arity " + std::to_string(arity) +
                      " (was " + std::to_string(it->second) + ")");
  }
}

std::optional<std::size_t> signature::arity_of(const std::string& name) const {
  auto it = arities_.find(name);
  if (it == arities_.end()) return std::nullopt;
  return it->second;
}

bool signature::contains(const std::string& name) const { return arities_.count(name) > 0; }

void signature::check(const term& t, const std::set<std::string>& variables) const {
  if (t.is_variable()) {
    if (arities_.count(t.symbol())) {
      throw input_error("'" + t.symbol() + "' is used both as a variable and a function symbol");
    }
    if (!variables.count(t.symbol())) {
      throw input_error("undeclared variable '" + t.symbol() + "'");
    }
    return;
  }
  if (variables.count(t.symbol())) {
    throw input_error("'" + t.symbol() + "' is used both as a variable and a function symbol");
  }
  auto a = arity_of(t.symbol());
  if (!a) throw input_error("undeclared function symbol '" + t.symbol() + "'");
  if (*a != t.args().size()) {
    throw input_error("symbol '" + t.symbol() + "' has arity " + std::to_string(*a) +
                      " but is applied to " + std::to_string(t.args().size()) + " arguments");
  }
  for (const term& arg : t.args()) check(arg, variables);
}

// --- positions and replacement ----------------------------------------

std::vector<position> positions_of(const term& t) {
  std::vector<position> out;
  std::deque<std::pair<position, const term*>> queue;
  queue.emplace_back(position(), &t);
  while (!queue.empty()) {
    auto [p, u] = std::move(queue.front());
    queue.pop_front();
    for (std::uint32_t i = 1; i <= u->args().size(); ++i) {
      queue.emplace_back(p.child(i), &u->args()[i - 1]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {
[[noreturn]] void bad_position(const term& t, const position& p, std::size_t failed_len) {
  throw input_error("position " + p.prefix(failed_len).to_string() + " is not valid in " +
                    t.to_string());
}
}  // namespace

term subterm_at(const term& t, const position& p) {
  term cur = t;
  for (std::size_t k = 0; k < p.length(); ++k) {
    std::uint32_t i = p.at(k);
    if (cur.is_variable() || i > cur.args().size()) bad_position(t, p, k + 1);
    cur = cur.args()[i - 1];
  }
  return cur;
}

namespace {
term replace_rec(const term& s, const term& t, const term& whole, const position& p,
                 std::size_t k) {
  if (k == p.length()) return t;
  std::uint32_t i = p.at(k);
  if (s.is_variable() || i > s.args().size()) bad_position(whole, p, k + 1);
  std::vector<term> args = s.args();
  args[i - 1] = replace_rec(args[i - 1], t, whole, p, k + 1);
  return term::app(s.symbol(), std::move(args));
}
}  // namespace

term replace_at(const term& s, const term& t, const position& p) {
  return replace_rec(s, t, s, p, 0);
}

namespace {
void collect_vars(const term& t, std::vector<std::uint32_t>& path,
                  std::map<std::string, std::vector<position>>& out) {
  if (t.is_variable()) {
    out[t.symbol()].push_back(position(path));
    return;
  }
  for (std::uint32_t i = 1; i <= t.args().size(); ++i) {
    path.push_back(i);
    collect_vars(t.args()[i - 1], path, out);
    path.pop_back();
  }
}
}  // namespace

std::map<std::string, std::vector<position>> vars_of(const term& t) {
  std::map<std::string, std::vector<position>> out;
  std::vector<std::uint32_t> path;
  collect_vars(t, path, out);
  for (auto& [name, ps] : out) std::sort(ps.begin(), ps.end(), position_length_lex{});
  return out;
}

std::set<std::string> var_names(const term& t) {
  std::set<std::string> out;
  std::vector<const term*> stack{&t};
  while (!stack.empty()) {
    const term* u = stack.back();
    stack.pop_back();
    if (u->is_variable()) {
      out.insert(u->symbol());
    } else {
      for (const term& a : u->args()) stack.push_back(&a);
    }
  }
  return out;
}

bool is_linear(const term& t) {
  for (const auto& [name, ps] : vars_of(t)) {
    if (ps.size() > 1) return false;
  }
  return true;
}

bool is_ground(const term& t) {
  if (t.is_variable()) return false;
  for (const term& a : t.args()) {
    if (!is_ground(a)) return false;
  }
  return true;
}

}  // namespace rwkit
