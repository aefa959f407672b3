#pragma once

#include <vector>

#include "cohen/algebra.hpp"
#include "cohen/linalg.hpp"

namespace cohen {

// All ordered k-index blocks with distinct entries over 1..n, lexicographic.
std::vector<std::vector<int>> index_blocks(int n, int k);

// Admissible block sequences I_1 < ... < I_t (lexicographic block order,
// pairwise disjoint index supports), enumerated lexicographically.
std::vector<std::vector<std::vector<int>>> admissible_sequences(int n, int k, int t);

// Bracket basis of the degree-t layer: block lists
// (I_1, I_{s(2)}, ..., I_{s(t)}) over admissible sequences and permutations
// s of positions 2..t. Each list stands for the left-normed bracket of the
// corresponding generators.
std::vector<std::vector<std::vector<int>>> lcs_basis(int n, int k, int t);

// Expansion of the left-normed bracket of the generators y_{blocks[i]}.
AlgebraElement bracket_expansion(const Ring& ring, int n, int k,
                                 const std::vector<std::vector<int>>& blocks);

// Pairing of bracket basis elements against their dual monomials (the
// concatenations of the same block lists); the pairing is the identity.
ExactMatrix pairing_matrix(const Ring& ring, int n, int k, int t);

// Rank of the span of the bracket expansions inside the degree-t layer.
long lcs_rank(const Ring& ring, int n, int k, int t);

} // namespace cohen
