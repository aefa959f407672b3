#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cohen/algebra.hpp"
#include "cohen/linalg.hpp"

namespace cohen {

// Element of the tensor algebra T(V) over a free module V of rank dim:
// a linear combination of index words over 1..dim (the empty word is 1).
class TensorElement {
  public:
    TensorElement(Ring ring, int dim) : ring_(std::move(ring)), dim_(dim) {
        if (dim < 0)
            throw index_error("negative module rank");
    }

    const Ring& ring() const { return ring_; }
    int dim() const { return dim_; }
    const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const std::vector<int>& word) const;

    void add_term(const std::vector<int>& word, const mpz_class& c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const; // concatenation product
    TensorElement scaled(const mpz_class& c) const;
    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

  private:
    Ring ring_;
    int dim_;
    std::map<std::vector<int>, mpz_class> terms_;
};

// One slot of an input to the evaluator: the formal unit of R (+) V, or a
// coefficient vector in V.
struct CSlot {
    bool unit = true;
    std::vector<mpz_class> vec;

    static CSlot unit_slot() { return CSlot{}; }
    static CSlot vector_slot(std::vector<mpz_class> v) { return CSlot{false, std::move(v)}; }
};

// Pure tensor input z_1 (x) ... (x) z_n with z_p in R (+) V.
struct CInput {
    Ring ring;
    int dim = 0;
    std::vector<CSlot> slots;
};

// Natural evaluation of a on the input: a degree-t monomial (block list)
// contributes exactly when the set of non-unit slots equals its index set,
// and then sends slot vectors to the matching tensor word; the unit of the
// algebra acts as the counit times the empty word.
TensorElement theta_eval(const AlgebraElement& a, const CInput& z);

// Matrix of the evaluation map on the standard basis of (R (+) V)^{(x) n}:
// columns are slot-code words (0 = unit, 1..dim = basis vector), rows are
// tensor words of length <= cap in graded-lex order.
struct LinearMapMatrix {
    Ring ring;
    int dim = 0;
    int nslots = 0;
    int cap = 0;
    std::vector<std::vector<int>> domain;
    std::vector<std::vector<int>> codomain;
    ExactMatrix mat;

    bool operator==(const LinearMapMatrix& o) const;
    bool operator!=(const LinearMapMatrix& o) const { return !(*this == o); }
};

LinearMapMatrix matrix_of_theta(const AlgebraElement& a, int dim, int cap);

// Convolution product mu o (f (x) g) o psi of two evaluation matrices.
// Throws truncation_error if a nonzero coefficient falls beyond cap.
LinearMapMatrix convolution(const LinearMapMatrix& f, const LinearMapMatrix& g, int cap);

// Shuffle comultiplication of a tensor element: word w maps to the sum of
// (w restricted to I) (x) (w restricted to the complement) over all subsets.
std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class>
tensor_comult(const TensorElement& u);

// Does evaluation of a commute with comultiplications and counits?
bool is_coalgebra_map(const AlgebraElement& a, int dim);

// Primitives of degree q in T(V): kernel of the reduced comultiplication
// on words of length q (ambient coordinates: words in lex order).
Submodule primitives_basis(const Ring& ring, int dim, int q);

// Span of the n! permutation words inside V^{(x) n}, dim V = n.
Submodule gamma_submodule(const Ring& ring, int n);

// Span of the n! left-normed bracket expansions [[x_{s(1)},...,x_{s(n)}].
Submodule lie_submodule(const Ring& ring, int n);

// Do the brackets span exactly the multilinear primitives?
bool lie_equals_gamma_cap_primitives(const Ring& ring, int n);

// Full column rank of the evaluation matrix of all degree <= n basis
// monomials on the canonical family of basis-vector inputs (dim >= n).
bool theta_injective_on_basis(const Ring& ring, int n, int dim);

// Certificate that matrices commuting with every substitution f^{(x) n}
// are exactly the integer span of the n! slot permutations, and that no
// nonzero map intertwines tensor powers of different lengths.
struct NaturalityReport {
    int n = 0;
    long expected_dim = 0;  // n!
    long solution_dim = 0;  // nullspace dimension of the sampled constraints
    bool perms_contained = false;
    bool perms_independent = false;
    bool cross_only_zero = false;

    bool pass() const {
        return solution_dim == expected_dim && perms_contained && perms_independent &&
               cross_only_zero;
    }
};

NaturalityReport naturality_oracle(int n);

} // namespace cohen
