#include <doctest.h>

#include "cohen/lcs.hpp"

using namespace cohen;

TEST_CASE("block and sequence enumeration") {
    CHECK(index_blocks(4, 1).size() == 4);
    CHECK(index_blocks(4, 2).size() == 12); // ordered pairs of distinct indices
    CHECK(index_blocks(3, 3).size() == 6);

    // two disjoint blocks of size 2 from four letters, ordered increasingly
    CHECK(admissible_sequences(4, 2, 2).size() == 12);
    CHECK(admissible_sequences(4, 1, 2).size() == 6);
    CHECK(admissible_sequences(2, 1, 3).empty());
    CHECK(admissible_sequences(4, 2, 1).size() == 12);

    // the first sequence is the lexicographically smallest
    auto seqs = admissible_sequences(4, 1, 2);
    REQUIRE_FALSE(seqs.empty());
    CHECK(seqs[0] == std::vector<std::vector<int>>{{1}, {2}});
}

TEST_CASE("bracket basis size against the monomial basis") {
    // t blocks: admissible count times (t-1)! rebracketings
    CHECK(lcs_basis(4, 2, 2).size() == 12);
    CHECK(algebra_basis(4, 2, 2).size() == 24);
    CHECK(lcs_basis(4, 1, 3).size() == 8);  // C(4,3) * 2
    CHECK(lcs_basis(5, 1, 5).size() == 24); // 1 * 4!
    CHECK(lcs_basis(3, 1, 1).size() == 3);
}

TEST_CASE("bracket expansion agrees with the generic expansion") {
    Ring z = Ring::integers();
    std::vector<std::vector<int>> blocks = {{1}, {3}, {2}};
    AlgebraElement direct = iterated_bracket({AlgebraElement::generator(z, 3, 1, {1}),
                                              AlgebraElement::generator(z, 3, 1, {3}),
                                              AlgebraElement::generator(z, 3, 1, {2})});
    CHECK(bracket_expansion(z, 3, 1, blocks) == direct);
}

TEST_CASE("bracket-monomial pairing is the identity") {
    Ring z = Ring::integers();
    ExactMatrix p = pairing_matrix(z, 4, 1, 3);
    CHECK(p.rows() == 8);
    CHECK(p.is_identity());
    CHECK(pairing_matrix(Ring::modular(4), 4, 2, 2).is_identity());
}

TEST_CASE("layer ranks") {
    Ring z = Ring::integers();
    CHECK(lcs_rank(z, 3, 1, 3) == 2);
    CHECK(lcs_rank(z, 4, 1, 4) == 6);
    CHECK(lcs_rank(Ring::modular(3), 2, 1, 2) == 1);
    CHECK(lcs_rank(z, 4, 2, 2) == 12);
}
