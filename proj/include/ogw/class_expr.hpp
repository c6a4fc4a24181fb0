#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "ogw/schubert.hpp"

namespace ogw {

// Syntax error with a 1-based column into the original expression text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int column)
      : std::runtime_error(msg + " (column " + std::to_string(column) + ")"),
        column_(column) {}

  int column() const { return column_; }

 private:
  int column_;
};

// AST for the class-expression mini-language:
//   expr   := class | expr '*' expr | INT '*' expr
//   class  := ('c' INT | 'e' | 'p' INT | 'ctop') '(' bundle ')'
//           | 'sigma' '(' INT [',' INT] ')'
//   bundle := 'S' | 'S*' | 'Sym' '(' INT ',' bundle ')'
struct ClassExprNode {
  enum class Kind { Product, Scalar, Chern, Euler, Pontryagin, TopChern, Sigma };

  Kind kind;
  long long scalar = 0;                   // Scalar
  int index = 0;                          // Chern / Pontryagin degree
  int sigma_a = 0, sigma_b = 0;           // Sigma
  RootBundle bundle;                      // class leaves over a bundle
  std::unique_ptr<ClassExprNode> lhs, rhs;  // Product; Scalar uses rhs
};

using ClassExprPtr = std::unique_ptr<ClassExprNode>;

// Parse over a declared ambient G(2, ambient_n); whitespace-insensitive,
// products left-associative. Throws ParseError with a column.
ClassExprPtr parse_class_expression(const std::string& text, int ambient_n);

SchurClass evaluate_class_expression(const ClassExprNode& ast, int ambient_n);

}  // namespace ogw
