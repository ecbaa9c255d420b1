#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rwkit/errors.hpp"

namespace rwkit {

/// A path addressing a subterm: a finite sequence of 1-based child
/// selectors. The empty path is the root.
class position {
 public:
  position() = default;
  explicit position(std::vector<std::uint32_t> path);

  static const position& root();

  bool is_root() const noexcept { return path_.empty(); }
  std::size_t length() const noexcept { return path_.size(); }
  std::uint32_t at(std::size_t i) const { return path_.at(i); }
  const std::vector<std::uint32_t>& path() const noexcept { return path_; }

  /// Concatenation p o q.
  position concat(const position& q) const;
  /// p o <i>.
  position child(std::uint32_t i) const;
  /// First n selectors of this position.
  position prefix(std::size_t n) const;
  /// If p is a prefix of this, the remainder r with this = p o r.
  std::optional<position> strip_prefix(const position& p) const;

  bool operator==(const position& q) const noexcept { return path_ == q.path_; }
  bool operator!=(const position& q) const noexcept { return path_ != q.path_; }

  /// "epsilon" for the root, else dot-separated selectors like "1.2.1".
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> path_;
};

/// True iff p is a prefix of q.
bool prefix_leq(const position& p, const position& q) noexcept;

/// True iff neither position prefixes the other.
bool parallel(const position& p, const position& q) noexcept;

/// Shorter positions first; ties broken lexicographically.
bool length_lex_less(const position& p, const position& q) noexcept;

struct position_length_lex {
  bool operator()(const position& p, const position& q) const noexcept {
    return length_lex_less(p, q);
  }
};

class term;

/// Process-wide construction guards. Terms larger than these bounds fail
/// fast with resource_error. Intended to be set once at startup.
struct term_limits {
  static std::size_t max_height() noexcept;
  static std::size_t max_nodes() noexcept;
  static void set(std::size_t max_height, std::size_t max_nodes);
};

inline constexpr std::size_t default_max_term_height = 64;
inline constexpr std::size_t default_max_term_nodes = 1'000'000;

/// An immutable first-order term: a variable or a function application.
/// Copies share structure; all operations rebuild at most the spine they
/// touch. Equality is structural, variable identity is name identity.
class term {
 public:
  static term variable(std::string name);
  static term app(std::string symbol, std::vector<term> args = {});

  bool is_variable() const noexcept;
  /// Variable name or function symbol.
  const std::string& symbol() const noexcept;
  /// Empty for variables and constants.
  const std::vector<term>& args() const noexcept;

  std::size_t node_count() const noexcept;
  /// Nodes on the longest root-to-leaf path; 1 for a leaf.
  std::size_t height() const noexcept;
  std::size_t hash() const noexcept;

  bool operator==(const term& other) const noexcept;
  bool operator!=(const term& other) const noexcept { return !(*this == other); }
  /// Deterministic total order: variables before applications, then by
  /// symbol, then by arguments. Used only for reproducible enumeration.
  bool operator<(const term& other) const noexcept;

  /// Textual syntax: bare identifier, or f(t1,...,tn).
  std::string to_string() const;

 private:
  struct node;
  explicit term(std::shared_ptr<const node> n) : n_(std::move(n)) {}
  std::shared_ptr<const node> n_;
};

/// A ranked alphabet of function symbols.
class signature {
 public:
  signature() = default;

  /// Conflicting redeclaration is an input error; redeclaring the same
  /// arity is a no-op.
  void declare(const std::string& name, std::size_t arity);
  std::optional<std::size_t> arity_of(const std::string& name) const;
  bool contains(const std::string& name) const;
  const std::map<std::string, std::size_t>& symbols() const noexcept { return arities_; }

  /// Checks t is well-formed: every application symbol declared with the
  /// right arity, every variable drawn from `variables`, and the two name
  /// spaces disjoint. Throws input_error.
  void check(const term& t, const std::set<std::string>& variables) const;

 private:
  std::map<std::string, std::size_t> arities_;
};

/// All positions of t, in length-lexicographic order (root first).
std::vector<position> positions_of(const term& t);

/// Subterm of t at p. Invalid positions raise input_error naming the
/// offending prefix.
term subterm_at(const term& t, const position& p);

/// s with its subterm at p replaced by t; positions parallel to p are
/// untouched.
term replace_at(const term& s, const term& t, const position& p);

/// Variables of t with their occurrence positions (length-lex order).
std::map<std::string, std::vector<position>> vars_of(const term& t);

/// Variable names of t.
std::set<std::string> var_names(const term& t);

/// True iff no variable occurs more than once in t.
bool is_linear(const term& t);

bool is_ground(const term& t);

}  // namespace rwkit

template <>
struct std::hash<rwkit::term> {
  std::size_t operator()(const rwkit::term& t) const noexcept { return t.hash(); }
};

template <>
struct std::hash<rwkit::position> {
  std::size_t operator()(const rwkit::position& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto i : p.path()) {
      h ^= i;
      h *= 1099511628211ull;
    }
    return h;
  }
};
