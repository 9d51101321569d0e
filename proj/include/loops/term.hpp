#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loops/loop_table.hpp"

namespace loops {

// Loop words over variables, compiled to postfix code.
//
// Syntax: variables are lowercase identifiers, "1" is the identity, binary
// operators "*" (product), "\" (left division x\y) and "/" (right division
// x/y) share one precedence level and associate to the left, and the postfix
// operators "^l" and "^r" denote the left inverse x^l = 1/x and the right
// inverse x^r = x\1. Parentheses group.
enum class TermOp : std::uint8_t { Var, One, Mul, LDiv, RDiv, LInv, RInv };

struct TermInstr {
  TermOp op;
  std::uint8_t var = 0;
};

inline constexpr std::size_t kMaxTermStack = 32;
inline constexpr std::size_t kMaxVariables = 8;

struct Term {
  std::vector<TermInstr> code;
};

// An equation lhs = rhs, universally quantified over `variables`.
struct Identity {
  std::string text;
  std::vector<std::string> variables;
  Term lhs;
  Term rhs;

  std::size_t arity() const { return variables.size(); }
};

// Throws LoopError(Parse) on malformed input.
Identity parse_identity(std::string_view text);

// Evaluates a term against any table type exposing int mul/ldiv/rdiv that
// return -1 for "unknown". Returns -1 as soon as an unknown value is hit.
template <typename Table>
int eval_partial(const Term& term, const Table& table, const Element* vars) {
  int stack[kMaxTermStack];
  int top = 0;
  for (const TermInstr& in : term.code) {
    switch (in.op) {
      case TermOp::Var: stack[top++] = vars[in.var]; break;
      case TermOp::One: stack[top++] = 0; break;
      case TermOp::LInv: {
        const int v = table.rdiv(0, stack[top - 1]);
        if (v < 0) return -1;
        stack[top - 1] = v;
        break;
      }
      case TermOp::RInv: {
        const int v = table.ldiv(stack[top - 1], 0);
        if (v < 0) return -1;
        stack[top - 1] = v;
        break;
      }
      default: {
        const int b = stack[--top];
        const int a = stack[top - 1];
        const int v = in.op == TermOp::Mul    ? table.mul(a, b)
                      : in.op == TermOp::LDiv ? table.ldiv(a, b)
                                              : table.rdiv(a, b);
        if (v < 0) return -1;
        stack[top - 1] = v;
      }
    }
  }
  return stack[0];
}

Element eval(const Term& term, const LoopTable& q, const Element* vars);

// First assignment (in odometer order, last variable fastest) violating the
// identity, or nullopt when it holds in q.
std::optional<std::vector<Element>> find_violation(const Identity& identity,
                                                   const LoopTable& q);
inline bool holds(const Identity& identity, const LoopTable& q) {
  return !find_violation(identity, q).has_value();
}

}  // namespace loops
