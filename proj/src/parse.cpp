#include "retractlab/parse.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <vector>

#include "retractlab/free_algebra.hpp"

namespace retractlab {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

struct Pos {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  Pos pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  Pos pos;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t q = 0; q < n; ++q, ++k) {
      if (s[k] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (k < s.size()) {
    const char c = s[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const Pos start = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t e = k;
      while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
      out.push_back({Tok::Number, std::string(s.substr(k, e - k)), start});
      advance(e - k);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t e = k;
      while (e < s.size() && std::isalnum(static_cast<unsigned char>(s[e]))) ++e;
      out.push_back({Tok::Ident, std::string(s.substr(k, e - k)), start});
      advance(e - k);
      continue;
    }
    Tok kind{};
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start.line, start.column);
    }
    out.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

struct Node {
  enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Pow } kind;
  Rat value;
  std::string name;
  unsigned exponent = 0;
  Pos pos;
  std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  NodePtr parse() {
    NodePtr n = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return n;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    if (peek().kind == Tok::End) throw ParseError(msg.empty() ? "unexpected end of input" : msg, peek().pos.line, peek().pos.column);
    throw ParseError(msg, peek().pos.line, peek().pos.column);
  }

  static NodePtr binary(Node::Kind k, NodePtr l, NodePtr r, Pos p) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    n->pos = p;
    return n;
  }

  NodePtr expr() {
    NodePtr n = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      NodePtr r = term();
      n = binary(op.kind == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub, std::move(n), std::move(r), op.pos);
    }
    return n;
  }

  NodePtr term() {
    NodePtr n = unary();
    while (peek().kind == Tok::Star) {
      const Token& op = take();
      NodePtr r = unary();
      n = binary(Node::Kind::Mul, std::move(n), std::move(r), op.pos);
    }
    return n;
  }

  NodePtr unary() {
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) {
      const Token& op = take();
      NodePtr inner = unary();
      if (op.kind == Tok::Plus) return inner;
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Neg;
      n->lhs = std::move(inner);
      n->pos = op.pos;
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (peek().kind != Tok::Caret) return base;
    const Token& op = take();
    if (peek().kind != Tok::Number) fail("exponent must be a non-negative integer literal");
    const Token& e = take();
    if (e.text.size() > 9 || std::stoul(e.text) > kMaxExponent) {
      throw ParseError("exponent overflow (limit " + std::to_string(kMaxExponent) + ")", e.pos.line, e.pos.column);
    }
    if (peek().kind == Tok::Caret) fail("chained exponents are ambiguous; add parentheses");
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::Pow;
    n->lhs = std::move(base);
    n->exponent = static_cast<unsigned>(std::stoul(e.text));
    n->pos = op.pos;
    return n;
  }

  NodePtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        std::string text = t.text;
        if (peek().kind == Tok::Slash) {
          take();
          if (peek().kind != Tok::Number) fail("rational literal needs an integer denominator");
          const Token& d = take();
          if (d.text.find_first_not_of('0') == std::string::npos) {
            throw ParseError("zero denominator", d.pos.line, d.pos.column);
          }
          text += "/" + d.text;
        }
        auto n = std::make_unique<Node>();
        n->kind = Node::Kind::Number;
        n->value = parse_rat(text);
        n->pos = t.pos;
        return n;
      }
      case Tok::Ident: {
        take();
        auto n = std::make_unique<Node>();
        n->kind = Node::Kind::Ident;
        n->name = t.text;
        n->pos = t.pos;
        return n;
      }
      case Tok::LParen: {
        take();
        NodePtr inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return inner;
      }
      default:
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

void check_degree(long d, Pos p) {
  if (d > static_cast<long>(kMaxExponent)) {
    throw ParseError("exponent overflow (limit " + std::to_string(kMaxExponent) + ")", p.line, p.column);
  }
}

// Folds the tree into a ring R. `leaf` maps identifiers, `lift` numbers.
template <class R, class Leaf, class Lift>
R evaluate(const Node& n, const Leaf& leaf, const Lift& lift) {
  switch (n.kind) {
    case Node::Kind::Number: return lift(n.value);
    case Node::Kind::Ident: return leaf(n);
    case Node::Kind::Neg: return lift(Rat(-1)) * evaluate<R>(*n.lhs, leaf, lift);
    case Node::Kind::Add: return evaluate<R>(*n.lhs, leaf, lift) + evaluate<R>(*n.rhs, leaf, lift);
    case Node::Kind::Sub: return evaluate<R>(*n.lhs, leaf, lift) - evaluate<R>(*n.rhs, leaf, lift);
    case Node::Kind::Mul: {
      R l = evaluate<R>(*n.lhs, leaf, lift);
      R r = evaluate<R>(*n.rhs, leaf, lift);
      check_degree(l.deg().value_or(0) + r.deg().value_or(0), n.pos);
      return l * r;
    }
    case Node::Kind::Pow: {
      R base = evaluate<R>(*n.lhs, leaf, lift);
      check_degree(base.deg().value_or(0) * static_cast<long>(n.exponent), n.pos);
      return base.pow(n.exponent);
    }
  }
  return lift(Rat(0));
}

}  // namespace

Poly2 parse_poly2(std::string_view text) {
  NodePtr root = Parser(text).parse();
  auto leaf = [](const Node& n) {
    if (n.name == "x") return Poly2::x();
    if (n.name == "y") return Poly2::y();
    if (n.name == "z") throw ParseError("z in bivariate context", n.pos.line, n.pos.column);
    if (n.name.find_first_not_of("xy") == std::string::npos) {
      throw ParseError("implicit multiplication '" + n.name + "' is not accepted; write it with '*'", n.pos.line,
                       n.pos.column);
    }
    throw ParseError("unknown variable '" + n.name + "'", n.pos.line, n.pos.column);
  };
  return evaluate<Poly2>(*root, leaf, [](const Rat& c) { return Poly2::constant(c); });
}

UniPoly parse_unipoly(std::string_view text) {
  NodePtr root = Parser(text).parse();
  auto leaf = [](const Node& n) {
    if (n.name == "z") return UniPoly::z();
    throw ParseError("univariate expressions use only z, got '" + n.name + "'", n.pos.line, n.pos.column);
  };
  return evaluate<UniPoly>(*root, leaf, [](const Rat& c) { return UniPoly::constant(c); });
}

NcPoly parse_ncpoly(std::string_view text, const Field& field) {
  NodePtr root = Parser(text).parse();
  auto leaf = [&](const Node& n) {
    if (n.name.find('z') != std::string::npos) {
      throw ParseError("z is not a free-algebra generator", n.pos.line, n.pos.column);
    }
    if (n.name.find_first_not_of("xy") != std::string::npos) {
      throw ParseError("unknown word '" + n.name + "'", n.pos.line, n.pos.column);
    }
    if (n.name.size() > kDefaultNcDegreeCap) {
      throw ParseError("word exceeds the degree cap", n.pos.line, n.pos.column);
    }
    return NcPoly::word(n.name, Rat(1), field);
  };
  try {
    return evaluate<NcPoly>(*root, leaf, [&](const Rat& c) { return NcPoly::constant(c, field); });
  } catch (const std::length_error& e) {
    throw ParseError(e.what(), root->pos.line, root->pos.column);
  }
}

}  // namespace retractlab
