#include <doctest.h>

#include "cohen/group.hpp"

using namespace cohen;

namespace {

GroupWord letter(const Ring& ring, int n, int i, const mpz_class& e = 1) {
    GroupWord w(ring, n, 1);
    w.append({i}, e);
    return w;
}

GroupWord block_letter(const Ring& ring, int n, int k, const std::vector<int>& b,
                       const mpz_class& e = 1) {
    GroupWord w(ring, n, k);
    w.append(b, e);
    return w;
}

} // namespace

TEST_CASE("letters map to unit translations") {
    Ring z = Ring::integers();
    CHECK(rep(letter(z, 2, 1, 3)) ==
          AlgebraElement::unit(z, 2) + AlgebraElement::generator(z, 2, 1, {1}, 3));

    GroupWord zero_exp = letter(z, 2, 1, 0);
    CHECK(zero_exp.letters().size() == 1); // the letter is kept, only rep collapses it
    CHECK(rep(zero_exp).is_unit_element());
    CHECK(is_identity(zero_exp));

    // block with an internal repeat is a relation, not an error
    Ring m4 = Ring::modular(4);
    CHECK(rep(block_letter(m4, 3, 2, {2, 2}, 1)).is_unit_element());
    // exponents live in the ring
    GroupWord six = block_letter(m4, 3, 2, {1, 2}, 6);
    CHECK(six.letters()[0].exp == 2);
}

TEST_CASE("free product laws") {
    Ring z = Ring::integers();
    GroupWord a = word_mul(letter(z, 2, 1, 2), letter(z, 2, 1, 3));
    CHECK(group_equal(a, letter(z, 2, 1, 5)));
    CHECK(group_equal(word_inv(letter(z, 2, 1, 2)), letter(z, 2, 1, -2)));
    CHECK(is_identity(word_mul(letter(z, 2, 1, 2), letter(z, 2, 1, -2))));

    GroupWord c = word_commutator(letter(z, 2, 1), letter(z, 2, 2));
    CHECK(c.letters().size() == 4);
    CHECK(is_identity(word_mul(c, word_inv(c))));
    CHECK(group_equal(word_pow(c, 2), word_mul(c, c)));
    CHECK(group_equal(word_pow(c, -1), word_inv(c)));
    CHECK(is_identity(word_pow(c, 0)));
}

TEST_CASE("commutator image in the algebra") {
    Ring z = Ring::integers();
    GroupWord c = word_commutator(letter(z, 2, 1), letter(z, 2, 2));
    AlgebraElement expect = AlgebraElement::unit(z, 2);
    expect.add_term(Monomial{{1, 2}}, 1);
    expect.add_term(Monomial{{2, 1}}, -1);
    CHECK(rep(c) == expect);
}

TEST_CASE("defining relations collapse") {
    Ring z = Ring::integers();
    // repeated generator in an iterated commutator
    std::vector<GroupWord> rep_gen = {letter(z, 3, 1), letter(z, 3, 2), letter(z, 3, 1)};
    CHECK(is_identity(iterated_word_commutator(rep_gen)));
    CHECK(is_identity(word_commutator(letter(z, 3, 2, 2), letter(z, 3, 2, 5))));

    // exponents move freely inside a commutator as long as the product matches
    GroupWord lhs = word_commutator(letter(z, 3, 1, 2), letter(z, 3, 2, 3));
    GroupWord rhs = word_commutator(letter(z, 3, 1, 6), letter(z, 3, 2, 1));
    CHECK(group_equal(lhs, rhs));
    CHECK_FALSE(group_equal(lhs, word_commutator(letter(z, 3, 1, 5), letter(z, 3, 2, 1))));

    std::vector<GroupWord> triple_a = {letter(z, 3, 1, 2), letter(z, 3, 2, 3), letter(z, 3, 3, 1)};
    std::vector<GroupWord> triple_b = {letter(z, 3, 1, 1), letter(z, 3, 2, 1), letter(z, 3, 3, 6)};
    CHECK(group_equal(iterated_word_commutator(triple_a), iterated_word_commutator(triple_b)));

    // blocks sharing a flat index commute away too
    Ring m4 = Ring::modular(4);
    GroupWord shared = word_commutator(block_letter(m4, 4, 2, {1, 2}), block_letter(m4, 4, 2, {2, 3}));
    CHECK(is_identity(shared));
}

TEST_CASE("modular torsion") {
    Ring m4 = Ring::modular(4);
    GroupWord b = block_letter(m4, 4, 2, {1, 2});
    CHECK(is_identity(word_pow(b, 4)));
    CHECK_FALSE(is_identity(word_pow(b, 2)));
    CHECK(is_identity(block_letter(m4, 4, 2, {1, 2}, 4)));
}

TEST_CASE("projections and sections commute with rep") {
    Ring z = Ring::integers();
    GroupWord w(z, 3, 1);
    w.append({1}, 2);
    w.append({3}, -1);
    w.append({2}, 4);
    w.append({1}, -2);
    for (int j = 1; j <= 3; ++j)
        CHECK(rep(project_word(w, j)) == projection(rep(w), j));
    for (int j = 1; j <= 4; ++j) {
        CHECK(rep(section_word(w, j)) == section(rep(w), j));
        CHECK(group_equal(project_word(section_word(w, j), j), w));
    }

    Ring m9 = Ring::modular(9);
    GroupWord v(m9, 4, 2);
    v.append({1, 3}, 5);
    v.append({4, 2}, 7);
    for (int j = 1; j <= 4; ++j)
        CHECK(rep(project_word(v, j)) == projection(rep(v), j));
}

TEST_CASE("equalizer membership and restriction") {
    Ring z = Ring::integers();
    GroupWord c = word_commutator(letter(z, 2, 1), letter(z, 2, 2));
    CHECK(is_member_equalizer(c));
    CHECK_FALSE(is_member_equalizer(letter(z, 2, 1)));
    CHECK(is_identity(equalizer_restrict(c)));
    CHECK_THROWS_AS(equalizer_restrict(letter(z, 2, 1)), precondition_error);

    std::vector<GroupWord> triple = {letter(z, 3, 1), letter(z, 3, 2), letter(z, 3, 3)};
    CHECK(is_member_equalizer(iterated_word_commutator(triple)));
}

TEST_CASE("window equalizer membership") {
    Ring z = Ring::integers();
    // two generators seen as two windows of length 2 over one base index
    GroupWord c = word_commutator(letter(z, 2, 1), letter(z, 2, 2));
    CHECK(is_member_window_equalizer(c, 2, 1));
    CHECK_FALSE(is_member_window_equalizer(letter(z, 2, 1), 2, 1));

    // four generators, windows {1,2} and {2,3} after the shift
    GroupWord inner1 = word_commutator(letter(z, 4, 1), letter(z, 4, 2));
    GroupWord inner2 = word_commutator(letter(z, 4, 3), letter(z, 4, 4));
    CHECK(is_member_window_equalizer(word_commutator(inner1, inner2), 2, 2));
    CHECK_FALSE(is_member_window_equalizer(word_commutator(letter(z, 4, 1), letter(z, 4, 3)), 2, 2));
}

TEST_CASE("lifting a kernel element") {
    Ring z = Ring::integers();
    GroupWord alpha = word_commutator(letter(z, 2, 1), letter(z, 2, 2));
    GroupWord lifted = lift_equalizer(alpha, 3);
    CHECK(lifted.n() == 3);
    CHECK(is_member_equalizer(lifted));
    CHECK(group_equal(equalizer_restrict(lifted), alpha));

    // the lift is the ordered product of the three section images
    GroupWord expect = word_mul(word_mul(section_word(alpha, 1), section_word(alpha, 2)),
                                section_word(alpha, 3));
    REQUIRE(lifted.letters().size() == expect.letters().size());
    for (size_t i = 0; i < expect.letters().size(); ++i) {
        CHECK(lifted.letters()[i].block == expect.letters()[i].block);
        CHECK(lifted.letters()[i].exp == expect.letters()[i].exp);
    }

    // lifting twice and restricting twice round-trips
    GroupWord up = lift_equalizer(alpha, 4);
    CHECK(up.n() == 4);
    CHECK(is_member_equalizer(up));
    GroupWord mid = equalizer_restrict(up);
    CHECK(is_member_equalizer(mid));
    CHECK(group_equal(equalizer_restrict(mid), alpha));
}

TEST_CASE("faithfulness bookkeeping") {
    CHECK(representation_faithfulness_proven(Ring::integers(), 1));
    CHECK(representation_faithfulness_proven(Ring::integers(), 3));
    CHECK(representation_faithfulness_proven(Ring::modular(6), 1));
    CHECK(representation_faithfulness_proven(Ring::modular(4), 2));
    CHECK(representation_faithfulness_proven(Ring::modular(7), 2));
    CHECK_FALSE(representation_faithfulness_proven(Ring::modular(6), 2));
}
