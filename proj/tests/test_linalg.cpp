#include <doctest.h>

#include "cohen/linalg.hpp"

using namespace cohen;

namespace {

ExactMatrix make(const Ring& ring, int rows, int cols, std::initializer_list<long> vals) {
    ExactMatrix m(ring, rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, *it++);
    return m;
}

} // namespace

TEST_CASE("rank over z") {
    Ring z = Ring::integers();
    CHECK(matrix_rank(make(z, 2, 2, {1, 2, 2, 4})) == 1);
    CHECK(matrix_rank(make(z, 2, 2, {2, 0, 0, 3})) == 2);
    CHECK(matrix_rank(make(z, 3, 2, {1, 0, 0, 1, 1, 1})) == 2);
    CHECK(matrix_rank(ExactMatrix(z, 0, 4)) == 0);
}

TEST_CASE("kernel over z is the saturated lattice") {
    Ring z = Ring::integers();
    // kernel of (2 4) is generated by (2,-1), not (4,-2)
    ExactMatrix k = kernel_basis(make(z, 1, 2, {2, 4}));
    REQUIRE(k.rows() == 1);
    mpz_class a = k.at(0, 0), b = k.at(0, 1);
    CHECK(2 * a + 4 * b == 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    CHECK(g == 1);

    // kernel rows actually annihilate
    ExactMatrix m = make(z, 2, 4, {1, 2, 3, 4, 0, 1, 1, 1});
    ExactMatrix kb = kernel_basis(m);
    CHECK(kb.rows() == 2);
    for (int r = 0; r < kb.rows(); ++r)
        for (int i = 0; i < m.rows(); ++i) {
            mpz_class dot = 0;
            for (int j = 0; j < 4; ++j)
                dot += m.at(i, j) * kb.at(r, j);
            CHECK(dot == 0);
        }
}

TEST_CASE("hermite form canonicalizes the row span") {
    Ring z = Ring::integers();
    // same lattice, different generators
    ExactMatrix a = make(z, 2, 2, {2, 0, 0, 3});
    ExactMatrix b = make(z, 3, 2, {2, 3, 2, 0, 4, 3});
    CHECK(row_span_canonical(a) == row_span_canonical(b));
    CHECK(submodule_equal(Submodule(z, 2, a), Submodule(z, 2, b)));
    // sublattice of index 2 differs
    ExactMatrix c = make(z, 2, 2, {4, 0, 0, 3});
    CHECK_FALSE(submodule_equal(Submodule(z, 2, a), Submodule(z, 2, c)));

    ExactMatrix h = row_span_canonical(make(z, 2, 2, {0, 5, 7, 3}));
    CHECK(h.at(0, 0) == 7);
    CHECK(h.at(1, 1) == 5);
    CHECK(h.at(0, 1) < 5); // reduced above the pivot
    CHECK(h.at(0, 1) >= 0);
}

TEST_CASE("field elimination mod p") {
    Ring p5 = Ring::modular(5);
    CHECK(matrix_rank(make(p5, 2, 2, {1, 2, 2, 4})) == 1);
    CHECK(matrix_rank(make(p5, 2, 2, {1, 2, 2, 5})) == 2);
    ExactMatrix k = kernel_basis(make(p5, 1, 3, {1, 2, 3}));
    CHECK(k.rows() == 2);
    for (int r = 0; r < 2; ++r) {
        mpz_class dot = k.at(r, 0) + 2 * k.at(r, 1) + 3 * k.at(r, 2);
        CHECK(p5.reduce(dot) == 0);
    }
}

TEST_CASE("composite moduli are rejected for elimination") {
    Ring m6 = Ring::modular(6);
    CHECK_THROWS_AS(matrix_rank(make(m6, 1, 1, {2})), unsupported_ring_error);
    CHECK_THROWS_AS(kernel_basis(make(m6, 1, 1, {2})), unsupported_ring_error);
}

TEST_CASE("matrix product and identity") {
    Ring z = Ring::integers();
    ExactMatrix a = make(z, 2, 2, {1, 1, 0, 1});
    ExactMatrix b = make(z, 2, 2, {1, 0, 1, 1});
    CHECK((a * b) == make(z, 2, 2, {2, 1, 1, 1}));
    CHECK(ExactMatrix::identity(z, 3).is_identity());
    CHECK_FALSE(make(z, 2, 2, {1, 1, 0, 1}).is_identity());
}

TEST_CASE("word sized elimination mod p") {
    const uint64_t p = (uint64_t(1) << 61) - 1;
    std::vector<std::vector<uint64_t>> rows = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(modp_rank(rows, p) == 2);
    auto kern = modp_nullspace({{1, 2, 3}, {0, 1, 1}}, 3, p);
    REQUIRE(kern.size() == 1);
    // (1,-1,1) up to scale: check it annihilates both rows mod p
    const auto& v = kern[0];
    auto dot = [&](std::initializer_list<uint64_t> row) {
        unsigned __int128 s = 0;
        int j = 0;
        for (uint64_t e : row)
            s += (unsigned __int128)e * v[j++];
        return uint64_t(s % p);
    };
    CHECK(dot({1, 2, 3}) == 0);
    CHECK(dot({0, 1, 1}) == 0);
}
