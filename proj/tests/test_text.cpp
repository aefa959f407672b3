#include <doctest.h>

#include "cohen/text.hpp"

using namespace cohen;

TEST_CASE("element round-trips") {
    Ring z = Ring::integers();
    GroupWord c = parse_word(z, 2, 1, "[x1,x2]");
    CHECK(print_element(rep(c)) == "1 + y1.y2 - y2.y1");

    const char* canon[] = {"0", "1", "y1", "-y1", "3*y1.y2", "1 - 2*y2 + y1.y2",
                           "-1 + y3", "y2.y1"};
    for (const char* s : canon) {
        AlgebraElement a = parse_element(z, 3, 1, s);
        CHECK(print_element(a) == s);
        CHECK(parse_element(z, 3, 1, print_element(a)) == a);
    }

    // non-canonical spellings parse to the same value
    CHECK(parse_element(z, 3, 1, " 1+y1 . y2 ") == parse_element(z, 3, 1, "1 + y1.y2"));
    CHECK(parse_element(z, 3, 1, "2*y1 - y1 - y1").is_zero());
    CHECK(parse_element(z, 3, 1, "y1.y1").is_zero());
}

TEST_CASE("modular coefficients print canonically") {
    Ring m5 = Ring::modular(5);
    AlgebraElement a = parse_element(m5, 2, 1, "7*y1 - y2");
    CHECK(print_element(a) == "2*y1 + 4*y2");
    CHECK(parse_element(m5, 2, 1, print_element(a)) == a);
}

TEST_CASE("block elements") {
    Ring z = Ring::integers();
    AlgebraElement a = parse_element(z, 4, 2, "{1|2}.{3|4} - {2|1}");
    CHECK(print_element(a) == "-{2|1} + {1|2}.{3|4}");
    // 'y' is tolerated inside braces
    CHECK(parse_element(z, 4, 2, "{y1|y2}") == parse_element(z, 4, 2, "{1|2}"));
    CHECK_THROWS_AS(parse_element(z, 4, 2, "{1|2|3}"), parse_error);
    CHECK_THROWS_AS(parse_element(z, 4, 2, "y1"), parse_error);
}

TEST_CASE("word round-trips") {
    Ring z = Ring::integers();
    const char* canon[] = {"1", "x1", "x2^-1", "x1^3 x2", "x1 x2 x1^-1 x2^-1"};
    for (const char* s : canon) {
        GroupWord w = parse_word(z, 2, 1, s);
        CHECK(print_word(w) == s);
    }
    // commutator notation expands
    GroupWord c = parse_word(z, 2, 1, "[x1,x2]");
    CHECK(print_word(c) == "x1^-1 x2^-1 x1 x2");
    GroupWord it = parse_word(z, 3, 1, "[x1,x2,x3]");
    CHECK(group_equal(it, iterated_word_commutator({parse_word(z, 3, 1, "x1"),
                                                    parse_word(z, 3, 1, "x2"),
                                                    parse_word(z, 3, 1, "x3")})));
    // parenthesized groups and integer powers of subwords
    GroupWord p = parse_word(z, 2, 1, "(x1 x2)^2");
    CHECK(print_word(p) == "x1 x2 x1 x2");
    CHECK(print_word(parse_word(z, 2, 1, "[x1,x2]^-1")) == "x2^-1 x1^-1 x2 x1");

    // the zero exponent keeps its letter
    GroupWord zx = parse_word(z, 2, 1, "x1^0");
    CHECK(print_word(zx) == "x1^0");
    CHECK(rep(zx).is_unit_element());
}

TEST_CASE("modular word exponents") {
    Ring m4 = Ring::modular(4);
    GroupWord w = parse_word(m4, 2, 2, "{x1|x2}^4");
    CHECK(print_word(w) == "{x1|x2}^0");
    CHECK(is_identity(w));
    CHECK(print_word(parse_word(m4, 2, 2, "{1|2}^-1")) == "{x1|x2}^3");
}

TEST_CASE("word parse errors") {
    Ring z = Ring::integers();
    CHECK_THROWS_AS(parse_word(z, 2, 1, "x3"), parse_error);
    CHECK_THROWS_AS(parse_word(z, 2, 1, "x1 x2)"), parse_error);
    CHECK_THROWS_AS(parse_word(z, 2, 1, "[x1]"), parse_error);
    CHECK_THROWS_AS(parse_word(z, 2, 1, ""), parse_error);
    CHECK_THROWS_AS(parse_word(z, 2, 1, "x0"), parse_error);
    CHECK_THROWS_AS(parse_element(z, 2, 1, "y1 +"), parse_error);
    CHECK_THROWS_AS(parse_element(z, 2, 1, "y1 y2"), parse_error);
}

TEST_CASE("evaluator inputs") {
    Ring z = Ring::integers();
    CInput in = parse_cinput(z, 2, "[1,0] (x) 1 (x) [2,-3]");
    REQUIRE(in.slots.size() == 3);
    CHECK_FALSE(in.slots[0].unit);
    CHECK(in.slots[1].unit);
    CHECK(in.slots[2].vec[1] == -3);
    CHECK(print_cinput(in) == "[1,0] (x) 1 (x) [2,-3]");
    CHECK_THROWS_AS(parse_cinput(z, 2, "[1,0,0]"), parse_error);

    TensorElement t(z, 3);
    t.add_term({1, 2}, 1);
    t.add_term({3}, -2);
    CHECK(print_tensor(t) == "-2*v3 + v1.v2");
    CHECK(print_tensor(TensorElement(z, 2)) == "0");
}
