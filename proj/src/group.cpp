#include "cohen/group.hpp"

#include <algorithm>

namespace cohen {

GroupWord::GroupWord(Ring ring, int n, int k) : ring_(std::move(ring)), n_(n), k_(k) {
    if (n < 0 || k < 1)
        throw index_error("need n >= 0 and k >= 1");
}

void GroupWord::append(const std::vector<int>& block, const mpz_class& exp) {
    if (int(block.size()) != k_)
        throw index_error("letter arity does not match k");
    for (int i : block)
        if (i < 1 || i > n_)
            throw index_error("generator index " + std::to_string(i) + " outside 1.." +
                              std::to_string(n_));
    letters_.push_back(GroupLetter{block, ring_.reduce(exp)});
}

AlgebraElement rep(const GroupWord& w) {
    AlgebraElement acc = AlgebraElement::unit(w.ring(), w.n(), w.k());
    for (const auto& letter : w.letters()) {
        if (has_repeated_index(letter.block) || letter.exp == 0)
            continue; // the letter is the identity
        AlgebraElement f = AlgebraElement::unit(w.ring(), w.n(), w.k());
        f.add_term(Monomial{letter.block}, letter.exp);
        acc = acc * f;
    }
    return acc;
}

GroupWord word_mul(const GroupWord& a, const GroupWord& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.n() != b.n() || a.k() != b.k())
        throw shape_error("words live in different groups");
    GroupWord out = a;
    for (const auto& letter : b.letters())
        out.append(letter.block, letter.exp);
    return out;
}

GroupWord word_inv(const GroupWord& a) {
    GroupWord out(a.ring(), a.n(), a.k());
    for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
        out.append(it->block, -it->exp);
    return out;
}

GroupWord word_pow(const GroupWord& a, long e) {
    GroupWord base = e < 0 ? word_inv(a) : a;
    unsigned long m = e < 0 ? (unsigned long)(-(e + 1)) + 1ul : (unsigned long)e;
    GroupWord out(a.ring(), a.n(), a.k());
    for (unsigned long i = 0; i < m; ++i)
        out = word_mul(out, base);
    return out;
}

GroupWord word_commutator(const GroupWord& a, const GroupWord& b) {
    return word_mul(word_mul(word_inv(a), word_inv(b)), word_mul(a, b));
}

GroupWord iterated_word_commutator(const std::vector<GroupWord>& ws) {
    if (ws.empty())
        throw precondition_error("iterated commutator needs at least one entry");
    GroupWord acc = ws[0];
    for (size_t i = 1; i < ws.size(); ++i)
        acc = word_commutator(acc, ws[i]);
    return acc;
}

bool is_identity(const GroupWord& w) {
    return rep(w).is_unit_element();
}

bool group_equal(const GroupWord& a, const GroupWord& b) {
    return rep(a) == rep(b);
}

bool representation_faithfulness_proven(const Ring& ring, int k) {
    if (k == 1)
        return true;
    return ring.is_integers() || ring.modulus_is_prime_power();
}

namespace {

// letter-wise index substitution; map(i) < 0 drops the whole letter
template <class F>
GroupWord substitute_word(const GroupWord& w, int new_n, F&& map) {
    GroupWord out(w.ring(), new_n, w.k());
    for (const auto& letter : w.letters()) {
        std::vector<int> block;
        block.reserve(letter.block.size());
        bool dead = false;
        for (int i : letter.block) {
            int j = map(i);
            if (j < 0) {
                dead = true;
                break;
            }
            block.push_back(j);
        }
        if (!dead)
            out.append(block, letter.exp);
    }
    return out;
}

} // namespace

GroupWord project_word(const GroupWord& w, int j) {
    if (j < 1 || j > w.n())
        throw index_error("projection index outside 1..n");
    return substitute_word(w, w.n() - 1, [j](int i) { return i < j ? i : (i == j ? -1 : i - 1); });
}

GroupWord section_word(const GroupWord& w, int j) {
    if (j < 1 || j > w.n() + 1)
        throw index_error("section index outside 1..n+1");
    return substitute_word(w, w.n() + 1, [j](int i) { return i < j ? i : i + 1; });
}

GroupWord window_project_word(const GroupWord& w, int j, int l) {
    if (l < 1 || j < 0 || j + l > w.n())
        throw index_error("window outside 1..n");
    return substitute_word(w, w.n() - 1,
                           [j, l](int i) { return i < j + 1 ? i : (i <= j + l ? -1 : i - 1); });
}

bool is_member_equalizer(const GroupWord& g) {
    if (g.n() <= 1)
        return true;
    AlgebraElement first = rep(project_word(g, 1));
    for (int j = 2; j <= g.n(); ++j)
        if (rep(project_word(g, j)) != first)
            return false;
    return true;
}

bool is_member_window_equalizer(const GroupWord& g, int l, int n) {
    if (l < 1 || n < 1 || g.n() != l * n)
        throw shape_error("word does not live on l*n generators");
    for (int m = 1; m <= l * n; ++m)
        if (!is_identity(project_word(g, m)))
            return false;
    if (n == 1)
        return true;
    AlgebraElement first = rep(window_project_word(g, 0, l));
    for (int j = 1; j <= n - 1; ++j)
        if (rep(window_project_word(g, j, l)) != first)
            return false;
    return true;
}

GroupWord equalizer_restrict(const GroupWord& g) {
    if (!is_member_equalizer(g))
        throw precondition_error("restriction needs an equalizer member");
    return project_word(g, 1);
}

GroupWord lift_equalizer(const GroupWord& alpha, int to) {
    const int from = alpha.n();
    if (to < from)
        throw precondition_error("target level below the element's level");
    if (!is_member_equalizer(alpha))
        throw precondition_error("lift input is not an equalizer member");
    if (from >= 1 && !is_identity(project_word(alpha, 1)))
        throw precondition_error("lift input is not in the kernel of the restriction");
    if (to == from)
        return alpha;

    // ascending subsets {i_1 < ... < i_m} of 1..to, m = to - from
    const int m = to - from;
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (int(cur.size()) == m) {
            subsets.push_back(cur);
            return;
        }
        for (int i = next; i <= to; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    // product order: lexicographic read from the right
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        for (size_t q = a.size(); q-- > 0;) {
            if (a[q] != b[q])
                return a[q] < b[q];
        }
        return false;
    });

    GroupWord out(alpha.ring(), to, alpha.k());
    for (const auto& s : subsets) {
        GroupWord factor = alpha;
        for (int i : s)
            factor = section_word(factor, i); // s_{i_1} first, s_{i_m} outermost
        out = word_mul(out, factor);
    }
    return out;
}

} // namespace cohen
