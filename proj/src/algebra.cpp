#include "cohen/algebra.hpp"

#include <algorithm>

namespace cohen {

bool has_repeated_index(const std::vector<int>& idx) {
    std::vector<int> s = idx;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) != s.end();
}

AlgebraElement::AlgebraElement(Ring ring, int n, int k) : ring_(std::move(ring)), n_(n), k_(k) {
    if (n < 0 || k < 1)
        throw index_error("need n >= 0 and k >= 1");
}

AlgebraElement AlgebraElement::unit(const Ring& ring, int n, int k) {
    AlgebraElement a(ring, n, k);
    a.add_term(Monomial{}, 1);
    return a;
}

AlgebraElement AlgebraElement::generator(const Ring& ring, int n, int k,
                                         const std::vector<int>& block, const mpz_class& c) {
    if (int(block.size()) != k)
        throw index_error("block arity does not match k");
    AlgebraElement a(ring, n, k);
    a.add_term(Monomial{block}, c);
    return a;
}

bool AlgebraElement::is_unit_element() const {
    return terms_.size() == 1 && terms_.begin()->first.idx.empty() && terms_.begin()->second == 1;
}

Scalar AlgebraElement::augmentation() const {
    return coefficient(Monomial{});
}

Scalar AlgebraElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return Scalar(ring_, it == terms_.end() ? mpz_class(0) : it->second);
}

int AlgebraElement::degree() const {
    if (terms_.empty())
        return -1;
    return terms_.rbegin()->first.blocks(k_);
}

void AlgebraElement::add_term(const Monomial& m, const mpz_class& c) {
    if (m.flat_length() % k_ != 0)
        throw index_error("monomial length is not a multiple of k");
    for (int i : m.idx)
        if (i < 1 || i > n_)
            throw index_error("generator index " + std::to_string(i) + " outside 1.." +
                              std::to_string(n_));
    if (has_repeated_index(m.idx))
        return;
    mpz_class v = ring_.reduce(c);
    if (v == 0)
        return;
    auto [it, fresh] = terms_.emplace(m, v);
    if (!fresh) {
        it->second = ring_.reduce(it->second + v);
        if (it->second == 0)
            terms_.erase(it);
    }
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
    require_same_ring(ring_, o.ring_);
    if (n_ != o.n_ || k_ != o.k_)
        throw shape_error("elements live in different algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_compatible(o);
    AlgebraElement out = *this;
    for (const auto& [m, c] : o.terms_)
        out.add_term(m, c);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_compatible(o);
    AlgebraElement out = *this;
    for (const auto& [m, c] : o.terms_)
        out.add_term(m, -c);
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_compatible(o);
    AlgebraElement out(ring_, n_, k_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            m.idx.insert(m.idx.end(), mb.idx.begin(), mb.idx.end());
            out.add_term(m, ca * cb);
        }
    return out;
}

AlgebraElement AlgebraElement::operator-() const {
    return scaled(-1);
}

AlgebraElement AlgebraElement::scaled(const mpz_class& c) const {
    AlgebraElement out(ring_, n_, k_);
    for (const auto& [m, v] : terms_)
        out.add_term(m, v * c);
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
    return a * b - b * a;
}

AlgebraElement iterated_bracket(const std::vector<AlgebraElement>& xs) {
    if (xs.empty())
        throw precondition_error("iterated bracket needs at least one entry");
    AlgebraElement acc = xs[0];
    for (size_t i = 1; i < xs.size(); ++i)
        acc = bracket(acc, xs[i]);
    return acc;
}

AlgebraElement shuffle_expand(const Ring& ring, int n, int k,
                              const std::vector<std::vector<int>>& blocks) {
    const int t = int(blocks.size());
    if (t < 1)
        throw precondition_error("shuffle expansion needs at least one block");
    for (const auto& b : blocks)
        if (int(b.size()) != k)
            throw index_error("block arity does not match k");
    AlgebraElement out(ring, n, k);
    // subsets of positions 2..t (position 1 always sits in the increasing part)
    const int tail = t - 1;
    for (unsigned mask = 0; mask < (1u << tail); ++mask) {
        std::vector<int> order; // positions 0-based
        for (int s = tail - 1; s >= 0; --s)
            if (mask & (1u << s))
                order.push_back(s + 1); // decreasing part
        int sign_bits = int(order.size());
        order.push_back(0);
        for (int s = 0; s < tail; ++s)
            if (!(mask & (1u << s)))
                order.push_back(s + 1); // increasing part
        Monomial m;
        for (int pos : order)
            m.idx.insert(m.idx.end(), blocks[pos].begin(), blocks[pos].end());
        out.add_term(m, (sign_bits % 2 == 0) ? mpz_class(1) : mpz_class(-1));
    }
    return out;
}

namespace {

void basis_rec(int n, int len, std::vector<int>& cur, std::vector<bool>& used,
               std::vector<Monomial>& out) {
    if (int(cur.size()) == len) {
        out.push_back(Monomial{cur});
        return;
    }
    for (int i = 1; i <= n; ++i) {
        if (used[i])
            continue;
        used[i] = true;
        cur.push_back(i);
        basis_rec(n, len, cur, used, out);
        cur.pop_back();
        used[i] = false;
    }
}

} // namespace

std::vector<Monomial> algebra_basis(int n, int k, int t) {
    if (n < 0 || k < 1 || t < 0)
        throw index_error("need n >= 0, k >= 1, t >= 0");
    std::vector<Monomial> out;
    if (k * t > n)
        return out;
    if (t == 0) {
        out.push_back(Monomial{});
        return out;
    }
    std::vector<int> cur;
    std::vector<bool> used(n + 1, false);
    basis_rec(n, k * t, cur, used, out);
    return out;
}

namespace {

// shared index-substitution driver: map(i) < 0 kills the term
template <class F>
AlgebraElement substitute(const AlgebraElement& a, int new_n, F&& map) {
    AlgebraElement out(a.ring(), new_n, a.k());
    for (const auto& [m, c] : a.terms()) {
        Monomial im;
        bool dead = false;
        for (int i : m.idx) {
            int j = map(i);
            if (j < 0) {
                dead = true;
                break;
            }
            im.idx.push_back(j);
        }
        if (!dead)
            out.add_term(im, c);
    }
    return out;
}

} // namespace

AlgebraElement projection(const AlgebraElement& a, int j) {
    if (j < 1 || j > a.n())
        throw index_error("projection index outside 1..n");
    return substitute(a, a.n() - 1, [j](int i) { return i < j ? i : (i == j ? -1 : i - 1); });
}

AlgebraElement window_projection(const AlgebraElement& a, int j, int l) {
    if (l < 1 || j < 0 || j + l > a.n())
        throw index_error("window outside 1..n");
    return substitute(a, a.n() - 1,
                      [j, l](int i) { return i < j + 1 ? i : (i <= j + l ? -1 : i - 1); });
}

AlgebraElement section(const AlgebraElement& a, int j) {
    if (j < 1 || j > a.n() + 1)
        throw index_error("section index outside 1..n+1");
    return substitute(a, a.n() + 1, [j](int i) { return i < j ? i : i + 1; });
}

AlgebraElement unit_inverse(const AlgebraElement& a) {
    Scalar u = a.augmentation();
    if (!u.is_unit())
        throw unsupported_ring_error("augmentation " + u.text() + " is not a unit");
    Scalar uinv = u.inverse();
    // a = u(1 + z) with z nilpotent, so a^-1 = u^-1 * sum (-z)^i
    AlgebraElement z = a.scaled(uinv.value()) - AlgebraElement::unit(a.ring(), a.n(), a.k());
    AlgebraElement acc = AlgebraElement::unit(a.ring(), a.n(), a.k());
    AlgebraElement pw = AlgebraElement::unit(a.ring(), a.n(), a.k());
    for (int i = 1; i <= a.n(); ++i) {
        pw = pw * (-z);
        if (pw.is_zero())
            break;
        acc = acc + pw;
    }
    return acc.scaled(uinv.value());
}

AlgebraElement unit_power(const AlgebraElement& a, long e) {
    AlgebraElement base = e < 0 ? unit_inverse(a) : a;
    unsigned long m = e < 0 ? (unsigned long)(-(e + 1)) + 1ul : (unsigned long)e;
    AlgebraElement acc = AlgebraElement::unit(a.ring(), a.n(), a.k());
    AlgebraElement pw = base;
    while (m) {
        if (m & 1ul)
            acc = acc * pw;
        pw = pw * pw;
        m >>= 1;
    }
    return acc;
}

} // namespace cohen
