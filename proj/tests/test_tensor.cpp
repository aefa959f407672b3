#include <doctest.h>

#include "cohen/group.hpp"
#include "cohen/tensor.hpp"

using namespace cohen;

namespace {

CInput basis_input(const Ring& ring, int dim, const std::vector<int>& codes) {
    CInput z{ring, dim, {}};
    for (int c : codes) {
        if (c == 0) {
            z.slots.push_back(CSlot::unit_slot());
        } else {
            std::vector<mpz_class> v(dim, 0);
            v[c - 1] = 1;
            z.slots.push_back(CSlot::vector_slot(v));
        }
    }
    return z;
}

} // namespace

TEST_CASE("evaluation on pure inputs") {
    Ring z = Ring::integers();
    AlgebraElement a = AlgebraElement::zero(z, 2);
    a.add_term(Monomial{{1, 2}}, 1);

    // slots (e1, e2): the word y1 y2 reads them in order
    TensorElement got = theta_eval(a, basis_input(z, 2, {1, 2}));
    TensorElement expect(z, 2);
    expect.add_term({1, 2}, 1);
    CHECK(got == expect);

    // a unit slot in either position starves the degree-2 monomial
    CHECK(theta_eval(a, basis_input(z, 2, {0, 2})).is_zero());
    CHECK(theta_eval(a, basis_input(z, 2, {1, 0})).is_zero());

    // the monomial reads slot values, not slot positions: y2 y1 swaps them
    AlgebraElement b = AlgebraElement::zero(z, 2);
    b.add_term(Monomial{{2, 1}}, 1);
    TensorElement swapped = theta_eval(b, basis_input(z, 2, {1, 2}));
    TensorElement expect_swapped(z, 2);
    expect_swapped.add_term({2, 1}, 1);
    CHECK(swapped == expect_swapped);

    // the unit of the algebra is the counit: 1 on all-unit slots, 0 otherwise
    AlgebraElement one = AlgebraElement::unit(z, 2);
    TensorElement e(z, 2);
    e.add_term({}, 1);
    CHECK(theta_eval(one, basis_input(z, 2, {0, 0})) == e);
    CHECK(theta_eval(one, basis_input(z, 2, {0, 1})).is_zero());
}

TEST_CASE("evaluation is multilinear in each slot") {
    Ring z = Ring::integers();
    AlgebraElement a = AlgebraElement::zero(z, 2);
    a.add_term(Monomial{{1, 2}}, 1);
    a.add_term(Monomial{{2, 1}}, -1);

    CInput mixed{z, 2, {CSlot::vector_slot({2, 3}), CSlot::vector_slot({0, 5})}};
    TensorElement got = theta_eval(a, mixed);
    // [y1,y2] on (2e1+3e2, 5e2) = (2e1+3e2)(5e2) - (5e2)(2e1+3e2)
    TensorElement expect(z, 2);
    expect.add_term({1, 2}, 10);
    expect.add_term({2, 2}, 15);
    expect.add_term({2, 1}, -10);
    expect.add_term({2, 2}, -15);
    CHECK(got == expect);
}

TEST_CASE("evaluation against an independent slot-code oracle") {
    Ring z = Ring::integers();
    for (int n = 2; n <= 3; ++n) {
        const int dim = 2;
        for (int t = 0; t <= n; ++t)
            for (const Monomial& m : algebra_basis(n, 1, t)) {
                AlgebraElement a = AlgebraElement::zero(z, n);
                a.add_term(m, 1);
                // enumerate all slot-code words over 0..dim
                std::vector<int> codes(n, 0);
                while (true) {
                    TensorElement got = theta_eval(a, basis_input(z, dim, codes));
                    std::vector<int> nonunit;
                    for (int p = 0; p < n; ++p)
                        if (codes[p] != 0)
                            nonunit.push_back(p + 1);
                    std::vector<int> want = m.idx;
                    std::sort(want.begin(), want.end());
                    TensorElement expect(z, dim);
                    if (nonunit == want) {
                        std::vector<int> word;
                        for (int i : m.idx)
                            word.push_back(codes[i - 1]);
                        expect.add_term(word, 1);
                    }
                    CHECK(got == expect);
                    int p = n - 1;
                    while (p >= 0 && codes[p] == dim)
                        codes[p--] = 0;
                    if (p < 0)
                        break;
                    ++codes[p];
                }
            }
    }
}

TEST_CASE("matrix of the evaluation map") {
    Ring z = Ring::integers();
    AlgebraElement a = AlgebraElement::unit(z, 2);
    a.add_term(Monomial{{1, 2}}, 3);
    LinearMapMatrix f = matrix_of_theta(a, 2, 2);
    CHECK(f.domain.size() == 9);  // (1+dim)^n slot codes
    CHECK(f.codomain.size() == 7); // words of length <= 2 over 2 letters
    // column (0,0) sees only the unit term
    // column (1,2) sees 3 * e1e2
    auto col_of = [&](const std::vector<int>& code) {
        for (size_t j = 0; j < f.domain.size(); ++j)
            if (f.domain[j] == code)
                return int(j);
        return -1;
    };
    auto row_of = [&](const std::vector<int>& word) {
        for (size_t i = 0; i < f.codomain.size(); ++i)
            if (f.codomain[i] == word)
                return int(i);
        return -1;
    };
    CHECK(f.mat.at(row_of({}), col_of({0, 0})) == 1);
    CHECK(f.mat.at(row_of({1, 2}), col_of({1, 2})) == 3);
    CHECK(f.mat.at(row_of({2, 1}), col_of({2, 1})) == 3);
    CHECK(f.mat.at(row_of({1, 2}), col_of({0, 0})) == 0);
}

TEST_CASE("convolution mirrors multiplication") {
    Ring z = Ring::integers();
    AlgebraElement a = AlgebraElement::unit(z, 2) +
                       AlgebraElement::generator(z, 2, 1, {1}, 2);
    AlgebraElement b = AlgebraElement::unit(z, 2) +
                       AlgebraElement::generator(z, 2, 1, {2}, -1);
    LinearMapMatrix fa = matrix_of_theta(a, 2, 2);
    LinearMapMatrix fb = matrix_of_theta(b, 2, 2);
    CHECK(convolution(fa, fb, 2) == matrix_of_theta(a * b, 2, 2));

    // the unit element is the convolution identity
    LinearMapMatrix unit = matrix_of_theta(AlgebraElement::unit(z, 2), 2, 2);
    CHECK(convolution(fa, unit, 2) == fa);
    CHECK(convolution(unit, fa, 2) == fa);
}

TEST_CASE("shuffle comultiplication") {
    Ring z = Ring::integers();
    TensorElement u(z, 3);
    u.add_term({1, 2}, 1);
    auto cps = tensor_comult(u);
    REQUIRE(cps.size() == 4);
    std::vector<int> empty;
    CHECK(cps[{empty, {1, 2}}] == 1);
    CHECK(cps[{{1}, {2}}] == 1);
    CHECK(cps[{{2}, {1}}] == 1);
    CHECK(cps[{{1, 2}, empty}] == 1);
}

TEST_CASE("group images are coalgebra maps") {
    Ring z = Ring::integers();
    GroupWord w(z, 3, 1);
    w.append({1}, 2);
    w.append({2}, -3);
    w.append({3}, 1);
    w.append({1}, 1);
    CHECK(is_coalgebra_map(rep(w), 2));

    // 1 + y1 + y2 misses the product term a group image would carry
    AlgebraElement bad = AlgebraElement::unit(z, 2) +
                         AlgebraElement::generator(z, 2, 1, {1}) +
                         AlgebraElement::generator(z, 2, 1, {2});
    CHECK_FALSE(is_coalgebra_map(bad, 2));
    // restoring the product term makes it (1+y1)(1+y2), a group image again
    AlgebraElement fixed = bad;
    fixed.add_term(Monomial{{1, 2}}, 1);
    CHECK(is_coalgebra_map(fixed, 2));
}

TEST_CASE("primitive ranks") {
    CHECK(submodule_rank(primitives_basis(Ring::integers(), 2, 0)) == 0);
    CHECK(submodule_rank(primitives_basis(Ring::integers(), 2, 1)) == 2);
    CHECK(submodule_rank(primitives_basis(Ring::integers(), 2, 2)) == 1);
    // mod 2, the squares e_i e_i become primitive as well
    CHECK(submodule_rank(primitives_basis(Ring::modular(2), 2, 2)) == 3);
}

TEST_CASE("bracket span and permutation span") {
    Ring z = Ring::integers();
    for (int n = 2; n <= 4; ++n) {
        long f = 1;
        for (int i = 2; i < n; ++i)
            f *= i;
        CHECK(submodule_rank(lie_submodule(z, n)) == f);
        long nf = f * n;
        CHECK(submodule_rank(gamma_submodule(z, n)) == nf);
    }
    CHECK(lie_equals_gamma_cap_primitives(z, 3));
    CHECK(lie_equals_gamma_cap_primitives(Ring::modular(2), 3));
}

TEST_CASE("evaluation separates basis monomials") {
    CHECK(theta_injective_on_basis(Ring::integers(), 2, 2));
    CHECK(theta_injective_on_basis(Ring::integers(), 2, 3));
    CHECK_THROWS_AS(theta_injective_on_basis(Ring::integers(), 3, 2), precondition_error);
}

TEST_CASE("naturality certificate") {
    NaturalityReport r = naturality_oracle(2);
    CHECK(r.expected_dim == 2);
    CHECK(r.pass());
}
