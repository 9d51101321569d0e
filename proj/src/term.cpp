#include "loops/term.hpp"

#include <cctype>

#include "loops/error.hpp"

namespace loops {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Identity parse() {
    Identity id;
    id.text = std::string(text_);
    id.lhs = parse_side(id.variables);
    skip_ws();
    if (!eat('=')) fail("expected '='");
    id.rhs = parse_side(id.variables);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return id;
  }

 private:
  Term parse_side(std::vector<std::string>& vars) {
    Term t;
    int depth = 0;
    int max_depth = 0;
    expr(t, vars, depth, max_depth);
    if (static_cast<std::size_t>(max_depth) > kMaxTermStack) fail("term too deep");
    return t;
  }

  void expr(Term& t, std::vector<std::string>& vars, int& depth, int& max_depth) {
    unary(t, vars, depth, max_depth);
    for (;;) {
      skip_ws();
      TermOp op;
      if (eat('*')) op = TermOp::Mul;
      else if (eat('\\')) op = TermOp::LDiv;
      else if (eat('/')) op = TermOp::RDiv;
      else return;
      unary(t, vars, depth, max_depth);
      t.code.push_back({op});
      --depth;
    }
  }

  void unary(Term& t, std::vector<std::string>& vars, int& depth, int& max_depth) {
    primary(t, vars, depth, max_depth);
    for (;;) {
      skip_ws();
      if (!eat('^')) return;
      if (eat('l')) t.code.push_back({TermOp::LInv});
      else if (eat('r')) t.code.push_back({TermOp::RInv});
      else fail("expected 'l' or 'r' after '^'");
    }
  }

  void primary(Term& t, std::vector<std::string>& vars, int& depth, int& max_depth) {
    skip_ws();
    if (eat('(')) {
      expr(t, vars, depth, max_depth);
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      return;
    }
    if (eat('1')) {
      t.code.push_back({TermOp::One});
    } else if (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      std::size_t index = 0;
      while (index < vars.size() && vars[index] != name) ++index;
      if (index == vars.size()) {
        if (vars.size() == kMaxVariables) fail("too many variables");
        vars.push_back(name);
      }
      t.code.push_back({TermOp::Var, static_cast<std::uint8_t>(index)});
    } else {
      fail("expected a variable, '1' or '('");
    }
    max_depth = std::max(max_depth, ++depth);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw LoopError(ErrorKind::Parse, "identity '" + std::string(text_) + "' at offset " +
                                          std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct FullTable {
  const LoopTable& q;
  int mul(int a, int b) const { return q.mul(static_cast<Element>(a), static_cast<Element>(b)); }
  int ldiv(int a, int b) const { return q.ldiv(static_cast<Element>(a), static_cast<Element>(b)); }
  int rdiv(int a, int b) const { return q.rdiv(static_cast<Element>(a), static_cast<Element>(b)); }
};

}  // namespace

Identity parse_identity(std::string_view text) { return Parser(text).parse(); }

Element eval(const Term& term, const LoopTable& q, const Element* vars) {
  return static_cast<Element>(eval_partial(term, FullTable{q}, vars));
}

std::optional<std::vector<Element>> find_violation(const Identity& identity,
                                                   const LoopTable& q) {
  const std::size_t k = identity.arity();
  const std::size_t n = q.order();
  std::vector<Element> vars(k, 0);
  const FullTable table{q};
  for (;;) {
    if (eval_partial(identity.lhs, table, vars.data()) !=
        eval_partial(identity.rhs, table, vars.data())) {
      return vars;
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++vars[i] < n) break;
      vars[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (k == 0) return std::nullopt;
  }
}

}  // namespace loops
