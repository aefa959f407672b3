#pragma once

#include <vector>

#include "cohen/algebra.hpp"

namespace cohen {

// One free-product letter: a generator block raised to a ring exponent.
// For k = 1 the block is a single index i and the letter is x_i^r;
// for k > 1 it is {x_{i1}|...|x_{ik}}^r.
struct GroupLetter {
    std::vector<int> block;
    mpz_class exp;
};

// Element of the free product of ring copies (one per generator block),
// kept as the letter sequence it was built from. Equality in the quotient
// group is decided through the unit-group representation.
class GroupWord {
  public:
    GroupWord(Ring ring, int n, int k = 1);

    const Ring& ring() const { return ring_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<GroupLetter>& letters() const { return letters_; }

    // validates arity and index range, reduces the exponent
    void append(const std::vector<int>& block, const mpz_class& exp);

  private:
    Ring ring_;
    int n_;
    int k_;
    std::vector<GroupLetter> letters_;
};

// exp(x_block^r) = 1 + r y_block; letters whose block repeats an index map
// to 1. The word maps to the product of its letter images.
AlgebraElement rep(const GroupWord& w);

// A word together with its cached image in the algebra.
class GroupElement {
  public:
    explicit GroupElement(GroupWord w) : word_(std::move(w)), canon_(rep(word_)) {}

    const GroupWord& word() const { return word_; }
    const AlgebraElement& canonical() const { return canon_; }

    bool operator==(const GroupElement& o) const { return canon_ == o.canon_; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

  private:
    GroupWord word_;
    AlgebraElement canon_;
};

GroupWord word_mul(const GroupWord& a, const GroupWord& b);
GroupWord word_inv(const GroupWord& a);
GroupWord word_pow(const GroupWord& a, long e);

// [a, b] = a^-1 b^-1 a b
GroupWord word_commutator(const GroupWord& a, const GroupWord& b);

// left-normed [[a_1,...,a_t]
GroupWord iterated_word_commutator(const std::vector<GroupWord>& ws);

bool is_identity(const GroupWord& w);

// Equality through the representation. Faithfulness is proven for k = 1
// over every commutative ring, and for Z and Z/p^r at every k; use
// representation_faithfulness_proven to decide whether to caveat.
bool group_equal(const GroupWord& a, const GroupWord& b);
bool representation_faithfulness_proven(const Ring& ring, int k);

// p_j: x_i -> x_i (i < j), 1 (i = j), x_{i-1} (i > j), applied to every
// index of every block; result lives on n-1 generators.
GroupWord project_word(const GroupWord& w, int j);

// s_j: x_i -> x_i (i < j), x_{i+1} (i >= j); result lives on n+1 generators.
GroupWord section_word(const GroupWord& w, int j);

// Window analogue of p_j: kills blocks meeting indices j+1..j+l and shifts
// indices above j+l down by 1, exactly as the defining case table states.
// For l >= 2 the image therefore lives on l*n - 1 generators.
GroupWord window_project_word(const GroupWord& w, int j, int l);

// Equalizer membership: all plain projections agree.
bool is_member_equalizer(const GroupWord& g);

// Window-equalizer membership on l*n generators (any block size k): every
// plain projection kills g and all window projections (offsets 0..n-1) agree.
bool is_member_window_equalizer(const GroupWord& g, int l, int n);

// Common restriction d_n of the projections on equalizer members. Asserts
// membership (all projections agree) instead of silently picking one.
GroupWord equalizer_restrict(const GroupWord& g);

// Lifts alpha in ker(d_from) to an equalizer member at level `to` that
// restricts back to alpha, as the ordered product of section composites
// over ascending index subsets in right-to-left lexicographic order.
GroupWord lift_equalizer(const GroupWord& alpha, int to);

} // namespace cohen
