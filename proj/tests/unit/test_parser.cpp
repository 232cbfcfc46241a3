#include <doctest.h>

#include "lfpwhile/length_example.hpp"
#include "lfpwhile/parser.hpp"

#include "../support/ast_gen.hpp"

using namespace lfpwhile;

TEST_CASE("parsing statements") {
  CHECK(stmt_eq(parse("reg1 := 5"), ast::set_reg1(ast::lit(5))));
  CHECK(stmt_eq(parse("skip"), ast::skip()));
  CHECK(stmt_eq(parse("incr reg2"), ast::incr_reg2_stmt()));
  CHECK(stmt_eq(parse("mem[3] := reg1 + 1"),
                ast::set_mem(ast::lit(3), ast::add(ast::reg1(), ast::lit(1)))));

  SUBCASE("the list-walking loop parses to its exact tree") {
    CHECK(stmt_eq(parse("while reg1 != 0 { incr reg2; reg1 := mem[reg1] }"),
                  length_loop()));
    CHECK(stmt_eq(
        parse("reg1 := 5; reg2 := 0; while reg1 != 0 { incr reg2; reg1 := "
              "mem[reg1] }"),
        length_program(5)));
  }

  SUBCASE("plus is left-associative, mem binds tightest") {
    CHECK(stmt_eq(parse("reg1 := 1 + 2 + 3"),
                  ast::set_reg1(ast::add(ast::add(ast::lit(1), ast::lit(2)),
                                         ast::lit(3)))));
    CHECK(stmt_eq(parse("reg1 := mem[1 + reg2] + 3"),
                  ast::set_reg1(ast::add(
                      ast::mem(ast::add(ast::lit(1), ast::reg2())),
                      ast::lit(3)))));
  }

  SUBCASE("semicolons chain to the right") {
    CHECK(stmt_eq(parse("skip; incr reg2; skip"),
                  ast::seq(ast::skip(), ast::seq(ast::incr_reg2_stmt(),
                                                 ast::skip()))));
  }

  SUBCASE("comments and whitespace are insignificant") {
    CHECK(stmt_eq(parse("  skip  # trailing words\n # whole line\n\t; skip"),
                  ast::seq(ast::skip(), ast::skip())));
  }

  SUBCASE("equality conditions take arbitrary right operands") {
    CHECK(stmt_eq(parse("while reg1 == reg2 + 1 { skip }"),
                  ast::while_loop(
                      ast::eq(ast::reg1(), ast::add(ast::reg2(), ast::lit(1))),
                      ast::skip())));
  }
}

TEST_CASE("positioned syntax errors") {
  auto expect_error = [](std::string_view text, std::size_t line,
                         std::size_t column) {
    try {
      parse(text);
      FAIL("no error for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      CHECK_FALSE(e.expected().empty());
    }
  };

  expect_error("reg1 := mem[", 1, 13);
  expect_error("while reg1 { skip }", 1, 12);
  expect_error("reg1 = 5", 1, 6);
  expect_error("mem[5 := 2", 1, 7);
  expect_error("skip skip", 1, 6);
  expect_error("while reg1 != 1 { skip }", 1, 15);
  expect_error("incr reg1", 1, 6);
  expect_error("{ skip }", 1, 1);
  expect_error("reg1 := 5 +", 1, 12);
  expect_error("", 1, 1);
  expect_error("foo := 1", 1, 1);
  expect_error("skip;\nwhile reg1 != 0 {", 2, 18);
  expect_error("reg1 := 99999999999999999999999", 1, 9);
}

TEST_CASE("pretty printing round-trips") {
  SUBCASE("concrete programs") {
    for (std::string text :
         {"skip", "reg1 := 5", "incr reg2",
          "while reg1 != 0 { incr reg2; reg1 := mem[reg1] }",
          "mem[reg1 + 1] := mem[mem[2]]", "skip; skip; skip"}) {
      StmtPtr stmt = parse(text);
      CHECK(stmt_eq(parse(pretty_print(stmt)), stmt));
    }
  }

  SUBCASE("one thousand generated statements") {
    lfpwhile::testing::AstGen gen(0);
    for (int i = 0; i < 1000; ++i) {
      StmtPtr stmt = gen.gen_stmt(6);
      CAPTURE(pretty_print(stmt));
      CHECK(stmt_eq(parse(pretty_print(stmt)), stmt));
    }
  }
}
