#include "engelkit/exponent.hpp"

#include <cctype>
#include <sstream>

#include "engelkit/errors.hpp"

namespace engelkit {

ExponentExpr ExponentExpr::gen(char c) {
  ExponentExpr e;
  e.kind = Kind::kGen;
  e.label = c;
  return e;
}

ExponentExpr ExponentExpr::integer(long long v) {
  ExponentExpr e;
  e.kind = Kind::kInt;
  e.value = v;
  return e;
}

ExponentExpr ExponentExpr::product(ExponentExpr l, ExponentExpr r) {
  ExponentExpr e;
  e.kind = Kind::kProduct;
  e.children.push_back(std::move(l));
  e.children.push_back(std::move(r));
  return e;
}

ExponentExpr ExponentExpr::sum(std::vector<ExponentExpr> terms, std::vector<int> signs) {
  ExponentExpr e;
  e.kind = Kind::kSum;
  e.children = std::move(terms);
  e.signs = std::move(signs);
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : t_(text) {}

  ExponentExpr parse() {
    skip();
    if (done()) throw ParseError("empty exponent expression");
    ExponentExpr e = expr();
    skip();
    if (!done()) throw ParseError(std::string("unexpected '") + peek() + "' in exponent");
    return e;
  }

 private:
  ExponentExpr expr() {
    std::vector<ExponentExpr> terms;
    std::vector<int> signs;
    skip();
    int sign = 1;
    if (!done() && peek() == '-') {
      sign = -1;
      ++i_;
    }
    terms.push_back(term());
    signs.push_back(sign);
    for (;;) {
      skip();
      if (done() || (peek() != '+' && peek() != '-')) break;
      sign = peek() == '+' ? 1 : -1;
      ++i_;
      terms.push_back(term());
      signs.push_back(sign);
    }
    if (terms.size() == 1 && signs[0] == 1) return std::move(terms[0]);
    return ExponentExpr::sum(std::move(terms), std::move(signs));
  }

  ExponentExpr term() {
    skip();
    ExponentExpr acc = factor(/*leading=*/true);
    for (;;) {
      skip();
      if (done() || peek() == '+' || peek() == '-' || peek() == ')') break;
      acc = ExponentExpr::product(std::move(acc), factor(/*leading=*/false));
    }
    return acc;
  }

  ExponentExpr factor(bool leading) {
    skip();
    if (done()) throw ParseError("expected a factor");
    char c = peek();
    if (c == '(') {
      ++i_;
      ExponentExpr e = expr();
      skip();
      if (done() || peek() != ')') throw ParseError("unbalanced parentheses");
      ++i_;
      if (e.kind == ExponentExpr::Kind::kInt && !leading)
        throw ParseError("integer in non-leading monomial position");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        v = v * 10 + (peek() - '0');
        if (v > (1ll << 40)) throw ParseError("integer too large");
        ++i_;
      }
      if (!leading) throw ParseError("integer in non-leading monomial position");
      return ExponentExpr::integer(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++i_;
      return ExponentExpr::gen(c);
    }
    throw ParseError(std::string("unexpected character '") + c + "' in exponent");
  }

  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool done() const { return i_ >= t_.size(); }
  char peek() const { return t_[i_]; }

  const std::string& t_;
  size_t i_ = 0;
};

void print_factor(const ExponentExpr& e, bool right_side, std::ostream& out);

void print_node(const ExponentExpr& e, std::ostream& out) {
  switch (e.kind) {
    case ExponentExpr::Kind::kInt:
      out << e.value;
      break;
    case ExponentExpr::Kind::kGen:
      out << e.label;
      break;
    case ExponentExpr::Kind::kProduct:
      print_factor(e.children[0], false, out);
      print_factor(e.children[1], true, out);
      break;
    case ExponentExpr::Kind::kSum:
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i == 0) {
          if (e.signs[0] < 0) out << '-';
        } else {
          out << (e.signs[i] < 0 ? '-' : '+');
        }
        const ExponentExpr& c = e.children[i];
        if (c.kind == ExponentExpr::Kind::kSum) {
          out << '(';
          print_node(c, out);
          out << ')';
        } else {
          print_node(c, out);
        }
      }
      break;
  }
}

void print_factor(const ExponentExpr& e, bool right_side, std::ostream& out) {
  bool parens = e.kind == ExponentExpr::Kind::kSum ||
                (right_side && e.kind == ExponentExpr::Kind::kProduct) ||
                (right_side && e.kind == ExponentExpr::Kind::kInt);
  if (parens) out << '(';
  print_node(e, out);
  if (parens) out << ')';
}

}  // namespace

ExponentExpr parse_exponent(const std::string& text) { return Parser(text).parse(); }

std::string print_exponent(const ExponentExpr& e) {
  std::ostringstream out;
  print_node(e, out);
  return out.str();
}

int eval_exponent(const FiniteGroup& G, int u, const ExponentExpr& e,
                  const std::map<char, int>& env) {
  switch (e.kind) {
    case ExponentExpr::Kind::kInt:
      return G.power(u, e.value);
    case ExponentExpr::Kind::kGen: {
      auto it = env.find(e.label);
      if (it == env.end())
        throw UnknownNameError(std::string("unbound label \"") + e.label + "\"");
      return G.conj(u, it->second);
    }
    case ExponentExpr::Kind::kProduct:
      return eval_exponent(G, eval_exponent(G, u, e.children[0], env), e.children[1], env);
    case ExponentExpr::Kind::kSum: {
      int acc = 0;
      for (size_t i = 0; i < e.children.size(); ++i) {
        int v = eval_exponent(G, u, e.children[i], env);
        acc = G.mul(acc, e.signs[i] > 0 ? v : G.inv(v));
      }
      return acc;
    }
  }
  throw Error("unreachable exponent kind");
}

}  // namespace engelkit
