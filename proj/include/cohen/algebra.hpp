#pragma once

#include <map>
#include <vector>

#include "cohen/ring.hpp"

namespace cohen {

// Basis word of the square-free tensor-algebra quotient: a flattened sequence
// of generator indices grouped into consecutive blocks of size k. Admissible
// words have pairwise distinct indices; anything else is the zero monomial.
struct Monomial {
    std::vector<int> idx;

    int flat_length() const { return int(idx.size()); }
    int blocks(int k) const { return int(idx.size()) / k; }

    bool operator==(const Monomial& o) const { return idx == o.idx; }

    // graded order: shorter words first, then lexicographic
    bool operator<(const Monomial& o) const {
        if (idx.size() != o.idx.size())
            return idx.size() < o.idx.size();
        return idx < o.idx;
    }
};

bool has_repeated_index(const std::vector<int>& idx);

// Element of A^R(y_1..y_n) (k = 1) or of its block form A_n^R[k]: a finite
// R-linear combination of admissible monomials. Terms are kept canonical:
// nonzero ring-reduced coefficients on admissible monomials whose flat
// length is a multiple of k, in graded-lex order.
class AlgebraElement {
  public:
    AlgebraElement(Ring ring, int n, int k = 1);

    static AlgebraElement zero(const Ring& ring, int n, int k = 1) {
        return AlgebraElement(ring, n, k);
    }
    static AlgebraElement unit(const Ring& ring, int n, int k = 1);
    // y_block scaled by c; a block with an internal repeat gives zero
    static AlgebraElement generator(const Ring& ring, int n, int k, const std::vector<int>& block,
                                    const mpz_class& c = 1);

    const Ring& ring() const { return ring_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const std::map<Monomial, mpz_class>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_unit_element() const; // equals 1
    Scalar augmentation() const;  // coefficient of the empty monomial
    Scalar coefficient(const Monomial& m) const;
    int degree() const; // max block count among terms, -1 for zero

    // accumulate c * m; repeated-index monomials are dropped (they are zero)
    void add_term(const Monomial& m, const mpz_class& c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const mpz_class& c) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  private:
    void check_compatible(const AlgebraElement& o) const;

    Ring ring_;
    int n_;
    int k_;
    std::map<Monomial, mpz_class> terms_;
};

// ab - ba
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

// left-normed [[a_1,...,a_t] = [...[[a_1,a_2],a_3],...,a_t]; t >= 1
AlgebraElement iterated_bracket(const std::vector<AlgebraElement>& xs);

// Signed shuffle expansion of the left-normed bracket of the generators
// y_{blocks[0]},...,y_{blocks[t-1]}: sum over p of (-1)^p times
// (decreasing product over a p-subset of positions 2..t) * (increasing
// product over the rest, which always starts at position 1).
AlgebraElement shuffle_expand(const Ring& ring, int n, int k,
                              const std::vector<std::vector<int>>& blocks);

// Degree-t basis (t blocks of size k): all injective index words of flat
// length k*t over 1..n, in graded-lex order.
std::vector<Monomial> algebra_basis(int n, int k, int t);

// Generator-wise substitution y_i -> y_i (i < j), 0 (i = j), y_{i-1} (i > j);
// for block elements the rule applies to every flat index.
AlgebraElement projection(const AlgebraElement& a, int j);

// Kills the index window j+1..j+l and shifts indices above it down by 1.
// The image for l >= 2 therefore lives on n-1 generators.
AlgebraElement window_projection(const AlgebraElement& a, int j, int l);

// Generator-wise substitution y_i -> y_i (i < j), y_{i+1} (i >= j); n -> n+1.
AlgebraElement section(const AlgebraElement& a, int j);

// Inverse of an element with unit augmentation, via the terminating
// geometric series on the nilpotent augmentation-ideal part.
AlgebraElement unit_inverse(const AlgebraElement& a);

// a^e for integer e (negative e uses unit_inverse)
AlgebraElement unit_power(const AlgebraElement& a, long e);

} // namespace cohen
