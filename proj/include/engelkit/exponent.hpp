#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "engelkit/group.hpp"

namespace engelkit {

// Parse tree for group-ring-style exponents like "2a-1", "-a+2",
// "(g+h)(-k)". Sums keep their written order: the semantics are
// order-sensitive and nothing is ever distributed or collected.
struct ExponentExpr {
  enum class Kind { kSum, kProduct, kGen, kInt };

  Kind kind = Kind::kInt;
  // kSum: children with signs (+1/-1); kProduct: exactly two children.
  std::vector<ExponentExpr> children;
  std::vector<int> signs;
  char label = 0;        // kGen
  long long value = 0;   // kInt, non-negative

  bool operator==(const ExponentExpr&) const = default;

  static ExponentExpr gen(char c);
  static ExponentExpr integer(long long v);
  static ExponentExpr product(ExponentExpr l, ExponentExpr r);
  static ExponentExpr sum(std::vector<ExponentExpr> terms, std::vector<int> signs);
};

// Grammar: expr := ['-'] term (('+'|'-') term)* ; term := factor {factor} ;
// factor := letter | integer | '(' expr ')'. Whitespace-insensitive.
// A bare integer factor is only allowed in the leading position of a term.
ExponentExpr parse_exponent(const std::string& text);

// Canonical printing; print -> parse round-trips to an identical tree.
std::string print_exponent(const ExponentExpr& e);

// u^expr with conjugation semantics:
//   u^{e1+e2} = u^{e1} u^{e2} (left to right; '-' inverts the evaluated term)
//   u^{e1 e2} = (u^{e1})^{e2}
//   u^{g}     = env(g)^{-1} u env(g)
//   u^{n}     = n-th power
int eval_exponent(const FiniteGroup& G, int u, const ExponentExpr& e,
                  const std::map<char, int>& env);

}  // namespace engelkit
