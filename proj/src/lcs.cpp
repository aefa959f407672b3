#include "cohen/lcs.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cohen {

std::vector<std::vector<int>> index_blocks(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self) -> void {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = 1; i <= n; ++i) {
            if (used[i])
                continue;
            used[i] = true;
            cur.push_back(i);
            self(self);
            cur.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
    return out;
}

std::vector<std::vector<std::vector<int>>> admissible_sequences(int n, int k, int t) {
    const auto blocks = index_blocks(n, k);
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> chosen;
    std::vector<bool> used(n + 1, false);
    auto disjoint = [&](const std::vector<int>& b) {
        for (int i : b)
            if (used[i])
                return false;
        return true;
    };
    auto rec = [&](auto&& self, int next) -> void {
        if (int(chosen.size()) == t) {
            std::vector<std::vector<int>> seq;
            for (int q : chosen)
                seq.push_back(blocks[q]);
            out.push_back(std::move(seq));
            return;
        }
        for (int q = next; q < int(blocks.size()); ++q) {
            if (!disjoint(blocks[q]))
                continue;
            for (int i : blocks[q])
                used[i] = true;
            chosen.push_back(q);
            self(self, q + 1);
            chosen.pop_back();
            for (int i : blocks[q])
                used[i] = false;
        }
    };
    if (t >= 0)
        rec(rec, 0);
    return out;
}

std::vector<std::vector<std::vector<int>>> lcs_basis(int n, int k, int t) {
    std::vector<std::vector<std::vector<int>>> out;
    if (t < 1)
        return out;
    for (const auto& seq : admissible_sequences(n, k, t)) {
        std::vector<int> tail(t - 1);
        std::iota(tail.begin(), tail.end(), 1); // positions 1..t-1 of seq
        do {
            std::vector<std::vector<int>> list;
            list.push_back(seq[0]);
            for (int pos : tail)
                list.push_back(seq[pos]);
            out.push_back(std::move(list));
        } while (std::next_permutation(tail.begin(), tail.end()));
    }
    return out;
}

AlgebraElement bracket_expansion(const Ring& ring, int n, int k,
                                 const std::vector<std::vector<int>>& blocks) {
    std::vector<AlgebraElement> xs;
    for (const auto& b : blocks)
        xs.push_back(AlgebraElement::generator(ring, n, k, b));
    return iterated_bracket(xs);
}

ExactMatrix pairing_matrix(const Ring& ring, int n, int k, int t) {
    const auto basis = lcs_basis(n, k, t);
    ExactMatrix m(ring, int(basis.size()), int(basis.size()));
    std::vector<Monomial> duals;
    for (const auto& list : basis) {
        Monomial d;
        for (const auto& b : list)
            d.idx.insert(d.idx.end(), b.begin(), b.end());
        duals.push_back(std::move(d));
    }
    for (int i = 0; i < int(basis.size()); ++i) {
        AlgebraElement e = bracket_expansion(ring, n, k, basis[i]);
        for (int j = 0; j < int(basis.size()); ++j)
            m.set(i, j, e.coefficient(duals[j]).value());
    }
    return m;
}

long lcs_rank(const Ring& ring, int n, int k, int t) {
    const auto basis = lcs_basis(n, k, t);
    const auto monos = algebra_basis(n, k, t);
    std::map<Monomial, int> col_of;
    for (int c = 0; c < int(monos.size()); ++c)
        col_of[monos[c]] = c;
    ExactMatrix m(ring, int(basis.size()), int(monos.size()));
    for (int i = 0; i < int(basis.size()); ++i) {
        AlgebraElement e = bracket_expansion(ring, n, k, basis[i]);
        for (const auto& [mono, c] : e.terms())
            m.add(i, col_of.at(mono), c);
    }
    return matrix_rank(m);
}

} // namespace cohen
