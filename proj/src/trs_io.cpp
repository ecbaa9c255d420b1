#include "rwkit/trs_io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "rwkit/errors.hpp"

namespace rwkit {

namespace {

struct token {
  enum kind_t { lparen, rparen, comma, arrow, ident, end } kind = end;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

const char* describe(token::kind_t k) {
  switch (k) {
    case token::lparen: return "'('";
    case token::rparen: return "')'";
    case token::comma: return "','";
    case token::arrow: return "'->'";
    case token::ident: return "identifier";
    case token::end: return "end of input";
  }
  return "token";
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '+' ||
         c == '*' || c == '-';
}

class lexer {
 public:
  explicit lexer(const std::string& src) : src_(src) {}

  const token& peek() {
    if (!ahead_) ahead_ = scan();
    return *ahead_;
  }

  token next() {
    if (ahead_) {
      token t = std::move(*ahead_);
      ahead_.reset();
      return t;
    }
    return scan();
  }

  token expect(token::kind_t kind, const std::string& what) {
    token t = next();
    if (t.kind != kind) {
      throw parse_error("expected " + what + ", found " + found(t), t.line, t.col);
    }
    return t;
  }

  static std::string found(const token& t) {
    if (t.kind == token::ident) return "'" + t.text + "'";
    return describe(t.kind);
  }

 private:
  void bump() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  token scan() {
    for (;;) {
      while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) bump();
      if (i_ < src_.size() && src_[i_] == ';') {
        while (i_ < src_.size() && src_[i_] != '\n') bump();
        continue;
      }
      break;
    }
    token t;
    t.line = line_;
    t.col = col_;
    if (i_ >= src_.size()) return t;
    char c = src_[i_];
    if (c == '(' || c == ')' || c == ',') {
      bump();
      t.kind = c == '(' ? token::lparen : c == ')' ? token::rparen : token::comma;
      return t;
    }
    if (c == '-' && i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
      bump();
      bump();
      t.kind = token::arrow;
      return t;
    }
    if (is_ident_char(c)) {
      std::string text;
      while (i_ < src_.size() && is_ident_char(src_[i_])) {
        if (src_[i_] == '-' && i_ + 1 < src_.size() && src_[i_ + 1] == '>') break;
        text.push_back(src_[i_]);
        bump();
      }
      t.kind = token::ident;
      t.text = std::move(text);
      return t;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", line_, col_);
  }

  const std::string& src_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::optional<token> ahead_;
};

struct var_occurrence {
  std::size_t line;
  std::size_t col;
};

struct term_parser {
  lexer& lex;
  const std::set<std::string>& variables;
  std::map<std::string, std::size_t>& arities;
  // Unset when arities are fixed (command-line terms against a parsed file).
  bool infer_arities = true;
  bool allow_fresh_consts = false;
  std::map<std::string, var_occurrence>* var_positions = nullptr;

  term parse() {
    token head = lex.expect(token::ident, "a term");
    if (lex.peek().kind != token::lparen) return leaf(head);

    if (variables.count(head.text)) {
      throw parse_error("variable '" + head.text + "' used as a function symbol", head.line,
                        head.col);
    }
    lex.next();  // (
    std::vector<term> args;
    args.push_back(parse());
    while (lex.peek().kind == token::comma) {
      lex.next();
      args.push_back(parse());
    }
    lex.expect(token::rparen, "')' or ','");
    check_arity(head, args.size());
    return term::app(head.text, std::move(args));
  }

  term leaf(const token& head) {
    if (variables.count(head.text)) {
      if (var_positions) var_positions->emplace(head.text, var_occurrence{head.line, head.col});
      return term::variable(head.text);
    }
    check_arity(head, 0);
    return term::app(head.text);
  }

  void check_arity(const token& head, std::size_t n) {
    auto it = arities.find(head.text);
    if (it == arities.end()) {
      if (!infer_arities) {
        if (n == 0 && allow_fresh_consts) {
          arities.emplace(head.text, 0);
          return;
        }
        throw parse_error("unknown identifier '" + head.text +
                              "': not a declared variable or function symbol",
                          head.line, head.col);
      }
      arities.emplace(head.text, n);
      return;
    }
    if (it->second != n) {
      throw parse_error("function symbol '" + head.text + "' used with " + std::to_string(n) +
                            " argument(s) but previously with " + std::to_string(it->second),
                        head.line, head.col);
    }
  }
};

}  // namespace

trs parse_trs(const std::string& text) {
  lexer lex(text);
  std::set<std::string> variables;
  std::map<std::string, std::size_t> arities;

  lex.expect(token::lparen, "'(' opening the (VAR ...) section");
  token section = lex.expect(token::ident, "'VAR'");
  if (section.text != "VAR") {
    if (section.text == "RULES") {
      throw parse_error("missing (VAR ...) section before (RULES ...)", section.line, section.col);
    }
    throw parse_error("unsupported section '" + section.text + "'; expected (VAR ...)",
                      section.line, section.col);
  }
  while (lex.peek().kind == token::ident) variables.insert(lex.next().text);
  lex.expect(token::rparen, "')' or a variable name");

  lex.expect(token::lparen, "'(' opening the (RULES ...) section");
  section = lex.expect(token::ident, "'RULES'");
  if (section.text != "RULES") {
    throw parse_error("unsupported section '" + section.text + "'; expected (RULES ...)",
                      section.line, section.col);
  }

  std::vector<rewrite_rule> rules;
  term_parser parser{lex, variables, arities, true, false, nullptr};
  while (lex.peek().kind == token::ident) {
    token lhs_head = lex.peek();
    term lhs = parser.parse();
    if (lhs.is_variable()) {
      throw parse_error("rule left-hand side must not be a variable", lhs_head.line,
                        lhs_head.col);
    }
    lex.expect(token::arrow, "'->'");
    std::map<std::string, var_occurrence> rhs_vars;
    parser.var_positions = &rhs_vars;
    term rhs = parser.parse();
    parser.var_positions = nullptr;
    std::set<std::string> lhs_vars = var_names(lhs);
    for (const auto& [name, where] : rhs_vars) {
      if (!lhs_vars.count(name)) {
        throw parse_error("right-hand side variable '" + name +
                              "' does not occur in the left-hand side",
                          where.line, where.col);
      }
    }
    rewrite_rule rule(std::move(lhs), std::move(rhs));
    bool duplicate = false;
    for (const rewrite_rule& seen : rules) {
      if (seen == rule) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) rules.push_back(std::move(rule));
  }
  lex.expect(token::rparen, "')' or a rule");

  token trailing = lex.next();
  if (trailing.kind != token::end) {
    if (trailing.kind == token::lparen && lex.peek().kind == token::ident) {
      token name = lex.peek();
      throw parse_error("unsupported section '" + name.text +
                            "'; only (VAR ...) and (RULES ...) are supported",
                        name.line, name.col);
    }
    throw parse_error("unexpected input after the (RULES ...) section", trailing.line,
                      trailing.col);
  }

  signature sig;
  for (const auto& [name, arity] : arities) sig.declare(name, arity);
  return trs(std::move(sig), std::move(variables), std::move(rules));
}

std::string print_trs(const trs& system) {
  std::ostringstream out;
  out << "(VAR";
  for (const std::string& v : system.variables()) out << ' ' << v;
  out << ")\n(RULES\n";
  for (const rewrite_rule& rule : system.rules()) out << "  " << rule.to_string() << '\n';
  out << ")\n";
  return out.str();
}

term parse_term(const std::string& text, const trs& system, bool allow_fresh_consts) {
  lexer lex(text);
  std::map<std::string, std::size_t> arities = system.sig().symbols();
  term_parser parser{lex, system.variables(), arities, false, allow_fresh_consts, nullptr};
  term t = parser.parse();
  token trailing = lex.next();
  if (trailing.kind != token::end) {
    throw parse_error("unexpected input after the term", trailing.line, trailing.col);
  }
  return t;
}

}  // namespace rwkit
