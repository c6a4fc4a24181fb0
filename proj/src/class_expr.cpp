#include "ogw/class_expr.hpp"

#include <cctype>
#include <vector>

namespace ogw {

namespace {

struct Token {
  enum class Type { Int, Ident, LParen, RParen, Comma, Star, End };
  Type type;
  long long value = 0;
  std::string text;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) {
    size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      const int col = static_cast<int>(i) + 1;
      const char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          ++i;
        }
        tokens_.push_back({Token::Type::Int, v, "", col});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string ident;
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
          ident += text[i];
          ++i;
        }
        tokens_.push_back({Token::Type::Ident, 0, ident, col});
      } else if (c == '(') {
        tokens_.push_back({Token::Type::LParen, 0, "(", col});
        ++i;
      } else if (c == ')') {
        tokens_.push_back({Token::Type::RParen, 0, ")", col});
        ++i;
      } else if (c == ',') {
        tokens_.push_back({Token::Type::Comma, 0, ",", col});
        ++i;
      } else if (c == '*') {
        tokens_.push_back({Token::Type::Star, 0, "*", col});
        ++i;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", col);
      }
    }
    int end_col = tokens_.empty() ? 1 : tokens_.back().column;
    tokens_.push_back({Token::Type::End, 0, "", end_col});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, int ambient_n) : lex_(text), ambient_n_(ambient_n) {
    if (ambient_n < 3) throw std::invalid_argument("ambient n must be >= 3");
  }

  ClassExprPtr parse() {
    ClassExprPtr e = parse_expr();
    if (lex_.peek().type != Token::Type::End) {
      throw ParseError("trailing input after expression", lex_.peek().column);
    }
    return e;
  }

 private:
  ClassExprPtr parse_expr() {
    ClassExprPtr node = parse_factor();
    while (lex_.peek().type == Token::Type::Star) {
      lex_.next();
      ClassExprPtr rhs = parse_factor();
      auto prod = std::make_unique<ClassExprNode>();
      prod->kind = ClassExprNode::Kind::Product;
      prod->lhs = std::move(node);
      prod->rhs = std::move(rhs);
      node = std::move(prod);
    }
    return node;
  }

  ClassExprPtr parse_factor() {
    if (lex_.peek().type == Token::Type::Int) {
      const Token t = lex_.next();
      expect(Token::Type::Star, "'*' after integer scalar");
      auto node = std::make_unique<ClassExprNode>();
      node->kind = ClassExprNode::Kind::Scalar;
      node->scalar = t.value;
      node->rhs = parse_factor();
      return node;
    }
    return parse_class();
  }

  ClassExprPtr parse_class() {
    const Token t = lex_.peek();
    if (t.type != Token::Type::Ident) {
      throw ParseError("expected a class expression", t.column);
    }
    lex_.next();
    auto node = std::make_unique<ClassExprNode>();
    if (t.text == "sigma") {
      node->kind = ClassExprNode::Kind::Sigma;
      expect(Token::Type::LParen, "'(' after sigma");
      node->sigma_a = expect_int("first sigma part");
      if (lex_.peek().type == Token::Type::Comma) {
        lex_.next();
        node->sigma_b = expect_int("second sigma part");
      }
      const Token close = expect(Token::Type::RParen, "')' closing sigma");
      if (node->sigma_a < node->sigma_b) {
        throw ParseError("sigma parts must be weakly decreasing", close.column);
      }
      return node;
    }
    if (t.text == "c" || t.text == "p") {
      node->kind =
          t.text == "c" ? ClassExprNode::Kind::Chern : ClassExprNode::Kind::Pontryagin;
      node->index = expect_int("class degree");
    } else if (t.text == "e") {
      node->kind = ClassExprNode::Kind::Euler;
    } else if (t.text == "ctop") {
      node->kind = ClassExprNode::Kind::TopChern;
    } else {
      throw ParseError("unknown class '" + t.text + "'", t.column);
    }
    expect(Token::Type::LParen, "'(' after class name");
    node->bundle = parse_bundle();
    expect(Token::Type::RParen, "')' closing class");
    if (node->kind == ClassExprNode::Kind::Chern &&
        (node->index < 0 || node->index > node->bundle.rank())) {
      throw ParseError("Chern index out of range for bundle of rank " +
                           std::to_string(node->bundle.rank()),
                       t.column);
    }
    if (node->kind == ClassExprNode::Kind::Pontryagin &&
        (node->index < 0 || node->index > node->bundle.rank())) {
      throw ParseError("Pontryagin index out of range", t.column);
    }
    return node;
  }

  RootBundle parse_bundle() {
    const Token t = lex_.peek();
    if (t.type != Token::Type::Ident) {
      throw ParseError("expected a bundle ('S', 'S*' or 'Sym(k, ...)')", t.column);
    }
    lex_.next();
    if (t.text == "S") {
      if (lex_.peek().type == Token::Type::Star) {
        lex_.next();
        return RootBundle::taut_dual();
      }
      return RootBundle::taut_sub();
    }
    if (t.text == "Sym") {
      expect(Token::Type::LParen, "'(' after Sym");
      const int k = expect_int("symmetric power");
      expect(Token::Type::Comma, "',' in Sym");
      RootBundle base = parse_bundle();
      expect(Token::Type::RParen, "')' closing Sym");
      if (k < 1) throw ParseError("symmetric power must be >= 1", t.column);
      return RootBundle::sym(k, base);
    }
    throw ParseError("unknown bundle '" + t.text + "'", t.column);
  }

  Token expect(Token::Type type, const std::string& what) {
    const Token t = lex_.peek();
    if (t.type != type) {
      throw ParseError("expected " + what, t.column);
    }
    return lex_.next();
  }

  int expect_int(const std::string& what) {
    const Token t = lex_.peek();
    if (t.type != Token::Type::Int) {
      throw ParseError("expected integer (" + what + ")", t.column);
    }
    lex_.next();
    return static_cast<int>(t.value);
  }

  Lexer lex_;
  int ambient_n_;
};

}  // namespace

ClassExprPtr parse_class_expression(const std::string& text, int ambient_n) {
  return Parser(text, ambient_n).parse();
}

SchurClass evaluate_class_expression(const ClassExprNode& ast, int ambient_n) {
  switch (ast.kind) {
    case ClassExprNode::Kind::Product:
      return schur_mul(evaluate_class_expression(*ast.lhs, ambient_n),
                       evaluate_class_expression(*ast.rhs, ambient_n));
    case ClassExprNode::Kind::Scalar:
      return evaluate_class_expression(*ast.rhs, ambient_n) * Rational(ast.scalar);
    case ClassExprNode::Kind::Chern:
      return chern_class(ambient_n, ast.bundle, ast.index);
    case ClassExprNode::Kind::Pontryagin:
      return pontryagin_class(ambient_n, ast.bundle, ast.index);
    case ClassExprNode::Kind::Euler:
    case ClassExprNode::Kind::TopChern:
      return chern_class(ambient_n, ast.bundle, ast.bundle.rank());
    case ClassExprNode::Kind::Sigma:
      return SchurClass::sigma(ambient_n, {ast.sigma_a, ast.sigma_b});
  }
  throw std::logic_error("unreachable class expression kind");
}

}  // namespace ogw
