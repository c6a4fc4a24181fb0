#include <doctest.h>

#include "ogw/class_expr.hpp"

using namespace ogw;

namespace {

SchurClass eval(const std::string& text, int n) {
  return evaluate_class_expression(*parse_class_expression(text, n), n);
}

}  // namespace

TEST_CASE("top Chern leaf") {
  const auto got = eval("ctop(Sym(5,S*))", 5);
  CHECK(got == chern_top_sym_dual_taut(5, 5));
  CHECK(integrate(got) == Rational(2875));
}

TEST_CASE("four-fold sigma product integrates to 2") {
  const auto got = eval("sigma(1)*sigma(1)*sigma(1)*sigma(1)", 4);
  CHECK(integrate(got) == Rational(2));
}

TEST_CASE("class leaves") {
  CHECK(eval("c2(S*)", 4) == SchurClass::sigma(4, {1, 1}));
  CHECK(eval("c1(S)", 4) == SchurClass::sigma(4, {1, 0}, Rational(-1)));
  CHECK(eval("e(S*)", 4) == SchurClass::sigma(4, {1, 1}));
  CHECK(eval("p1(S*)", 5) ==
        SchurClass::sigma(5, {2, 0}) - SchurClass::sigma(5, {1, 1}));
  CHECK(eval("sigma(2,1)", 5) == SchurClass::sigma(5, {2, 1}));
  // outside the box: the zero class
  CHECK(eval("sigma(7)", 4).is_zero());
}

TEST_CASE("scalars and whitespace") {
  CHECK(eval("2*sigma(1)", 5) == SchurClass::sigma(5, {1, 0}, 2));
  CHECK(eval("  sigma( 1 ) * sigma(1 , 1) ", 5) ==
        eval("sigma(1)*sigma(1,1)", 5));
  CHECK(eval("2*3*sigma(1)", 5) == SchurClass::sigma(5, {1, 0}, 6));
}

TEST_CASE("syntax errors carry a column") {
  try {
    parse_class_expression("c3(", 5);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_class_expression("sigma(2,3)", 5), ParseError);
  CHECK_THROWS_AS(parse_class_expression("q1(S)", 5), ParseError);
  CHECK_THROWS_AS(parse_class_expression("3", 5), ParseError);
  CHECK_THROWS_AS(parse_class_expression("sigma(1)*", 5), ParseError);
  CHECK_THROWS_AS(parse_class_expression("sigma(1) sigma(1)", 5), ParseError);
  CHECK_THROWS_AS(parse_class_expression("c5(S*)", 5), ParseError);  // rank 2
  CHECK_THROWS_AS(parse_class_expression("ctop(Sym(0,S))", 5), ParseError);
}

TEST_CASE("nested symmetric powers") {
  // Sym(2, Sym(2, S*)) has rank C(2+3-1, 2)... the roots of Sym(2,S*) are
  // {2x1, x1+x2, 2x2}; Sym^2 of a rank-3 bundle has 6 roots.
  const auto ast = parse_class_expression("ctop(Sym(2,Sym(2,S*)))", 6);
  CHECK(ast->bundle.rank() == 6);
  const auto got = eval("c1(Sym(2,S*))", 6);
  // c1(Sym^2 E) = 3 c1(E) for rank-2 E: roots sum to 3(x1+x2)
  CHECK(got == SchurClass::sigma(6, {1, 0}, 3));
}

TEST_CASE("ambient validation") {
  CHECK_THROWS_AS(parse_class_expression("sigma(1)", 2), std::invalid_argument);
}
