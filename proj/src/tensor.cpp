#include "cohen/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace cohen {

Scalar TensorElement::coefficient(const std::vector<int>& word) const {
    auto it = terms_.find(word);
    return Scalar(ring_, it == terms_.end() ? mpz_class(0) : it->second);
}

void TensorElement::add_term(const std::vector<int>& word, const mpz_class& c) {
    for (int i : word)
        if (i < 1 || i > dim_)
            throw index_error("basis index outside 1..dim");
    mpz_class v = ring_.reduce(c);
    if (v == 0)
        return;
    auto [it, fresh] = terms_.emplace(word, v);
    if (!fresh) {
        it->second = ring_.reduce(it->second + v);
        if (it->second == 0)
            terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    require_same_ring(ring_, o.ring_);
    if (dim_ != o.dim_)
        throw shape_error("tensor elements over different modules");
    TensorElement out = *this;
    for (const auto& [w, c] : o.terms_)
        out.add_term(w, c);
    return out;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    require_same_ring(ring_, o.ring_);
    if (dim_ != o.dim_)
        throw shape_error("tensor elements over different modules");
    TensorElement out(ring_, dim_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

TensorElement TensorElement::scaled(const mpz_class& c) const {
    TensorElement out(ring_, dim_);
    for (const auto& [w, v] : terms_)
        out.add_term(w, v * c);
    return out;
}

bool TensorElement::operator==(const TensorElement& o) const {
    require_same_ring(ring_, o.ring_);
    if (dim_ != o.dim_)
        throw shape_error("tensor elements over different modules");
    return terms_ == o.terms_;
}

namespace {

void check_input(const AlgebraElement& a, const CInput& z) {
    require_same_ring(a.ring(), z.ring);
    if (int(z.slots.size()) != a.n())
        throw shape_error("input has " + std::to_string(z.slots.size()) + " slots, need " +
                          std::to_string(a.n()));
    for (const auto& s : z.slots)
        if (!s.unit && int(s.vec.size()) != z.dim)
            throw shape_error("slot vector length does not match dim");
}

// expand the product of slot vectors along the monomial's flat indices
void expand_term(const CInput& z, const std::vector<int>& flat, size_t pos, const mpz_class& coef,
                 std::vector<int>& word, TensorElement& out) {
    if (coef == 0)
        return;
    if (pos == flat.size()) {
        out.add_term(word, coef);
        return;
    }
    const auto& v = z.slots[size_t(flat[pos]) - 1].vec;
    for (int i = 0; i < int(v.size()); ++i) {
        if (v[i] == 0)
            continue;
        word.push_back(i + 1);
        expand_term(z, flat, pos + 1, coef * v[i], word, out);
        word.pop_back();
    }
}

} // namespace

TensorElement theta_eval(const AlgebraElement& a, const CInput& z) {
    check_input(a, z);
    std::vector<int> nonunit;
    for (int p = 0; p < int(z.slots.size()); ++p)
        if (!z.slots[p].unit)
            nonunit.push_back(p + 1);
    TensorElement out(a.ring(), z.dim);
    for (const auto& [mono, c] : a.terms()) {
        std::vector<int> sorted_flat = mono.idx;
        std::sort(sorted_flat.begin(), sorted_flat.end());
        if (sorted_flat != nonunit)
            continue;
        std::vector<int> word;
        expand_term(z, mono.idx, 0, c, word, out);
    }
    return out;
}

namespace {

std::vector<std::vector<int>> slot_codes(int dim, int nslots) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nslots, 0);
    for (;;) {
        out.push_back(cur);
        int p = nslots - 1;
        while (p >= 0 && cur[p] == dim)
            cur[p--] = 0;
        if (p < 0)
            break;
        ++cur[p];
    }
    return out;
}

size_t slot_code_index(const std::vector<int>& code, int dim) {
    size_t idx = 0;
    for (int c : code)
        idx = idx * size_t(dim + 1) + size_t(c);
    return idx;
}

std::vector<std::vector<int>> words_up_to(int dim, int cap) {
    std::vector<std::vector<int>> out;
    out.push_back({});
    size_t lo = 0;
    for (int len = 1; len <= cap; ++len) {
        size_t hi = out.size();
        for (size_t q = lo; q < hi; ++q)
            if (int(out[q].size()) == len - 1)
                for (int i = 1; i <= dim; ++i) {
                    auto w = out[q];
                    w.push_back(i);
                    out.push_back(std::move(w));
                }
        lo = hi;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

CInput input_from_code(const Ring& ring, int dim, const std::vector<int>& code) {
    CInput z{ring, dim, {}};
    for (int c : code) {
        if (c == 0) {
            z.slots.push_back(CSlot::unit_slot());
        } else {
            std::vector<mpz_class> v(dim, 0);
            v[c - 1] = 1;
            z.slots.push_back(CSlot::vector_slot(std::move(v)));
        }
    }
    return z;
}

} // namespace

bool LinearMapMatrix::operator==(const LinearMapMatrix& o) const {
    return dim == o.dim && nslots == o.nslots && cap == o.cap && mat == o.mat;
}

LinearMapMatrix matrix_of_theta(const AlgebraElement& a, int dim, int cap) {
    LinearMapMatrix m{a.ring(), dim, a.n(), cap, slot_codes(dim, a.n()), words_up_to(dim, cap),
                      ExactMatrix(a.ring(), 0, 0)};
    m.mat = ExactMatrix(a.ring(), int(m.codomain.size()), int(m.domain.size()));
    std::map<std::vector<int>, int> row_of;
    for (int r = 0; r < int(m.codomain.size()); ++r)
        row_of[m.codomain[r]] = r;
    for (int col = 0; col < int(m.domain.size()); ++col) {
        TensorElement u = theta_eval(a, input_from_code(a.ring(), dim, m.domain[col]));
        for (const auto& [w, c] : u.terms()) {
            auto it = row_of.find(w);
            if (it == row_of.end())
                throw truncation_error("coefficient beyond degree cap " + std::to_string(cap));
            m.mat.add(it->second, col, c);
        }
    }
    return m;
}

LinearMapMatrix convolution(const LinearMapMatrix& f, const LinearMapMatrix& g, int cap) {
    require_same_ring(f.ring, g.ring);
    if (f.dim != g.dim || f.nslots != g.nslots)
        throw shape_error("convolution factors have different shapes");
    LinearMapMatrix m{f.ring, f.dim, f.nslots, cap, f.domain, words_up_to(f.dim, cap),
                      ExactMatrix(f.ring, 0, 0)};
    m.mat = ExactMatrix(f.ring, int(m.codomain.size()), int(m.domain.size()));
    std::map<std::vector<int>, int> row_of;
    for (int r = 0; r < int(m.codomain.size()); ++r)
        row_of[m.codomain[r]] = r;

    for (int col = 0; col < int(m.domain.size()); ++col) {
        const std::vector<int>& code = m.domain[col];
        std::vector<int> nonunit;
        for (int p = 0; p < int(code.size()); ++p)
            if (code[p] != 0)
                nonunit.push_back(p);
        // split the non-unit slots between the two factors
        for (unsigned mask = 0; mask < (1u << nonunit.size()); ++mask) {
            std::vector<int> left(code.size(), 0), right(code.size(), 0);
            for (int q = 0; q < int(nonunit.size()); ++q) {
                int p = nonunit[q];
                if (mask & (1u << q))
                    left[p] = code[p];
                else
                    right[p] = code[p];
            }
            int cl = int(slot_code_index(left, f.dim));
            int cr = int(slot_code_index(right, g.dim));
            for (int u = 0; u < f.mat.rows(); ++u) {
                const mpz_class& cu = f.mat.at(u, cl);
                if (cu == 0)
                    continue;
                for (int v = 0; v < g.mat.rows(); ++v) {
                    const mpz_class& cv = g.mat.at(v, cr);
                    if (cv == 0)
                        continue;
                    std::vector<int> w = f.codomain[u];
                    w.insert(w.end(), g.codomain[v].begin(), g.codomain[v].end());
                    auto it = row_of.find(w);
                    if (it == row_of.end())
                        throw truncation_error("convolution exceeds degree cap " +
                                               std::to_string(cap));
                    m.mat.add(it->second, col, cu * cv);
                }
            }
        }
    }
    return m;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class>
tensor_comult(const TensorElement& u) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class> out;
    const Ring& ring = u.ring();
    for (const auto& [w, c] : u.terms()) {
        const int q = int(w.size());
        for (unsigned mask = 0; mask < (1u << q); ++mask) {
            std::vector<int> a, b;
            for (int p = 0; p < q; ++p)
                (mask & (1u << p) ? a : b).push_back(w[p]);
            auto key = std::make_pair(std::move(a), std::move(b));
            auto [it, fresh] = out.emplace(std::move(key), c);
            if (!fresh) {
                it->second = ring.reduce(it->second + c);
                if (it->second == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

bool is_coalgebra_map(const AlgebraElement& a, int dim) {
    const Ring& ring = a.ring();
    const int n = a.n();
    for (const auto& code : slot_codes(dim, n)) {
        CInput z = input_from_code(ring, dim, code);
        TensorElement u = theta_eval(a, z);

        auto lhs = tensor_comult(u);

        std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class> rhs;
        std::vector<int> nonunit;
        for (int p = 0; p < n; ++p)
            if (code[p] != 0)
                nonunit.push_back(p);
        for (unsigned mask = 0; mask < (1u << nonunit.size()); ++mask) {
            std::vector<int> left(code.size(), 0), right(code.size(), 0);
            for (int q = 0; q < int(nonunit.size()); ++q) {
                int p = nonunit[q];
                if (mask & (1u << q))
                    left[p] = code[p];
                else
                    right[p] = code[p];
            }
            TensorElement ul = theta_eval(a, input_from_code(ring, dim, left));
            TensorElement ur = theta_eval(a, input_from_code(ring, dim, right));
            for (const auto& [w1, c1] : ul.terms())
                for (const auto& [w2, c2] : ur.terms()) {
                    auto key = std::make_pair(w1, w2);
                    mpz_class v = ring.reduce(c1 * c2);
                    auto [it, fresh] = rhs.emplace(key, v);
                    if (!fresh) {
                        it->second = ring.reduce(it->second + v);
                        if (it->second == 0)
                            rhs.erase(it);
                    }
                }
        }
        if (lhs != rhs)
            return false;

        // counits: the empty-word coefficient of the image must match the
        // counit of the input (1 exactly when every slot is the unit)
        mpz_class eps_u = u.coefficient({}).value();
        mpz_class eps_z = nonunit.empty() ? 1 : 0;
        if (eps_u != ring.reduce(eps_z))
            return false;
    }
    return true;
}

namespace {

std::vector<std::vector<int>> words_exact(int dim, int q) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(q, 1);
    if (q == 0) {
        out.push_back({});
        return out;
    }
    for (;;) {
        out.push_back(cur);
        int p = q - 1;
        while (p >= 0 && cur[p] == dim)
            cur[p--] = 1;
        if (p < 0)
            break;
        ++cur[p];
    }
    return out;
}

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

} // namespace

Submodule primitives_basis(const Ring& ring, int dim, int q) {
    if (q == 0) // the counit kills degree-0 primitives
        return Submodule(ring, 1, ExactMatrix(ring, 0, 1));
    const auto cols = words_exact(dim, q);
    std::map<std::vector<int>, int> col_of;
    for (int c = 0; c < int(cols.size()); ++c)
        col_of[cols[c]] = c;

    std::map<std::pair<std::vector<int>, std::vector<int>>, int> row_of;
    std::vector<std::pair<int, int>> entries; // (row, col), each contributing +1
    for (int c = 0; c < int(cols.size()); ++c) {
        const auto& w = cols[c];
        for (unsigned mask = 1; mask + 1 < (1u << q); ++mask) {
            std::vector<int> u, v;
            for (int p = 0; p < q; ++p)
                (mask & (1u << p) ? u : v).push_back(w[p]);
            auto key = std::make_pair(std::move(u), std::move(v));
            auto [it, fresh] = row_of.emplace(std::move(key), int(row_of.size()));
            entries.emplace_back(it->second, c);
        }
    }
    ExactMatrix m(ring, int(row_of.size()), int(cols.size()));
    for (auto [r, c] : entries)
        m.add(r, c, 1);
    return Submodule(ring, int(cols.size()), kernel_basis(m));
}

Submodule gamma_submodule(const Ring& ring, int n) {
    const auto cols = words_exact(n, n);
    std::map<std::vector<int>, int> col_of;
    for (int c = 0; c < int(cols.size()); ++c)
        col_of[cols[c]] = c;
    const auto perms = permutations_of(n);
    ExactMatrix gens(ring, int(perms.size()), int(cols.size()));
    for (int r = 0; r < int(perms.size()); ++r)
        gens.set(r, col_of.at(perms[r]), 1);
    return Submodule(ring, int(cols.size()), gens);
}

Submodule lie_submodule(const Ring& ring, int n) {
    const auto cols = words_exact(n, n);
    std::map<std::vector<int>, int> col_of;
    for (int c = 0; c < int(cols.size()); ++c)
        col_of[cols[c]] = c;
    const auto perms = permutations_of(n);
    ExactMatrix gens(ring, int(perms.size()), int(cols.size()));
    for (int r = 0; r < int(perms.size()); ++r) {
        std::vector<AlgebraElement> xs;
        for (int i : perms[r])
            xs.push_back(AlgebraElement::generator(ring, n, 1, {i}));
        AlgebraElement b = iterated_bracket(xs);
        for (const auto& [mono, c] : b.terms())
            gens.add(r, col_of.at(mono.idx), c);
    }
    return Submodule(ring, int(cols.size()), gens);
}

bool lie_equals_gamma_cap_primitives(const Ring& ring, int n) {
    const auto perms = permutations_of(n);
    const auto cols = words_exact(n, n);
    std::map<std::vector<int>, int> col_of;
    for (int c = 0; c < int(cols.size()); ++c)
        col_of[cols[c]] = c;

    // reduced comultiplication restricted to the multilinear span,
    // in permutation-word coordinates
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> row_of;
    std::vector<std::pair<int, int>> entries;
    for (int c = 0; c < int(perms.size()); ++c) {
        const auto& w = perms[c];
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<int> u, v;
            for (int p = 0; p < n; ++p)
                (mask & (1u << p) ? u : v).push_back(w[p]);
            auto key = std::make_pair(std::move(u), std::move(v));
            auto [it, fresh] = row_of.emplace(std::move(key), int(row_of.size()));
            entries.emplace_back(it->second, c);
        }
    }
    ExactMatrix m(ring, int(row_of.size()), int(perms.size()));
    for (auto [r, c] : entries)
        m.add(r, c, 1);
    ExactMatrix kern = kernel_basis(m);

    // embed the kernel into full word coordinates
    ExactMatrix embedded(ring, kern.rows(), int(cols.size()));
    for (int r = 0; r < kern.rows(); ++r)
        for (int c = 0; c < kern.cols(); ++c)
            if (kern.at(r, c) != 0)
                embedded.set(r, col_of.at(perms[c]), kern.at(r, c));

    Submodule intersection(ring, int(cols.size()), embedded);
    return submodule_equal(intersection, lie_submodule(ring, n));
}

bool theta_injective_on_basis(const Ring& ring, int n, int dim) {
    if (dim < n)
        throw precondition_error("need dim >= n");
    std::vector<Monomial> monos;
    for (int t = 0; t <= n; ++t)
        for (const auto& m : algebra_basis(n, 1, t))
            monos.push_back(m);

    std::map<std::pair<unsigned, std::vector<int>>, int> row_of;
    std::vector<std::tuple<int, int, mpz_class>> entries;
    for (unsigned subset = 0; subset < (1u << n); ++subset) {
        // slots in the subset carry their own basis vector, the rest the unit
        CInput z{ring, dim, {}};
        for (int p = 1; p <= n; ++p) {
            if (subset & (1u << (p - 1))) {
                std::vector<mpz_class> v(dim, 0);
                v[p - 1] = 1;
                z.slots.push_back(CSlot::vector_slot(std::move(v)));
            } else {
                z.slots.push_back(CSlot::unit_slot());
            }
        }
        for (int c = 0; c < int(monos.size()); ++c) {
            AlgebraElement a(ring, n, 1);
            a.add_term(monos[c], 1);
            TensorElement u = theta_eval(a, z);
            for (const auto& [w, coef] : u.terms()) {
                auto key = std::make_pair(subset, w);
                auto [it, fresh] = row_of.emplace(key, int(row_of.size()));
                entries.emplace_back(it->second, c, coef);
            }
        }
    }
    ExactMatrix m(ring, int(row_of.size()), int(monos.size()));
    for (const auto& [r, c, v] : entries)
        m.add(r, c, v);
    return matrix_rank(m) == long(monos.size());
}

namespace {

constexpr uint64_t kCertPrime = (uint64_t(1) << 61) - 1;

// deterministic small-entry test substitutions
std::vector<std::vector<std::vector<long>>> sample_substitutions(int d) {
    std::vector<std::vector<std::vector<long>>> fs;
    for (int m = 0; m < 3; ++m) {
        std::vector<std::vector<long>> f(d, std::vector<long>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                f[i][j] = (i == j ? 1 : 0) + (7 * i + 11 * j + 3 * m + 1) % 5;
        fs.push_back(std::move(f));
    }
    return fs;
}

// q-fold Kronecker power, entries as exact integers
ExactMatrix kron_power(const std::vector<std::vector<long>>& f, int q) {
    const Ring z = Ring::integers();
    const int d = int(f.size());
    ExactMatrix acc = ExactMatrix::identity(z, 1);
    for (int step = 0; step < q; ++step) {
        ExactMatrix next(z, acc.rows() * d, acc.cols() * d);
        for (int i = 0; i < acc.rows(); ++i)
            for (int j = 0; j < acc.cols(); ++j) {
                const mpz_class& a = acc.at(i, j);
                if (a == 0)
                    continue;
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c)
                        if (f[r][c] != 0)
                            next.set(i * d + r, j * d + c, a * f[r][c]);
            }
        acc = std::move(next);
    }
    return acc;
}

// constraint rows of M F_a = F_b M over the flattened unknown M (rows x cols
// = d^b x d^a), appended mod kCertPrime
void append_intertwiner_constraints(std::vector<std::vector<uint64_t>>& rows,
                                    const ExactMatrix& fa, const ExactMatrix& fb) {
    const int ca = fa.rows();  // domain dimension
    const int cb = fb.rows();  // codomain dimension
    auto to_mod = [](const mpz_class& v) {
        mpz_class r = v % mpz_class(kCertPrime);
        if (r < 0)
            r += mpz_class(kCertPrime);
        return r.get_ui();
    };
    for (int i = 0; i < cb; ++i)
        for (int j = 0; j < ca; ++j) {
            std::vector<uint64_t> row(size_t(cb) * ca, 0);
            for (int k = 0; k < ca; ++k) {
                uint64_t v = to_mod(fa.at(k, j));
                row[size_t(i) * ca + k] = (row[size_t(i) * ca + k] + v) % kCertPrime;
            }
            for (int k = 0; k < cb; ++k) {
                uint64_t v = to_mod(fb.at(i, k));
                size_t pos = size_t(k) * ca + j;
                row[pos] = (row[pos] + kCertPrime - v % kCertPrime) % kCertPrime;
            }
            rows.push_back(std::move(row));
        }
}

} // namespace

NaturalityReport naturality_oracle(int n) {
    if (n < 1)
        throw precondition_error("need n >= 1");
    NaturalityReport rep;
    rep.n = n;
    rep.expected_dim = 1;
    for (int i = 2; i <= n; ++i)
        rep.expected_dim *= i;

    const int d = n;
    const auto fs = sample_substitutions(d);
    std::vector<ExactMatrix> fpows;
    for (const auto& f : fs)
        fpows.push_back(kron_power(f, n));
    const int N = fpows[0].rows();

    // permutation operators on the n-fold tensor power
    const Ring z = Ring::integers();
    const auto perms = permutations_of(n);
    const auto words = words_exact(d, n);
    std::map<std::vector<int>, int> word_of;
    for (int c = 0; c < int(words.size()); ++c)
        word_of[words[c]] = c;
    std::vector<ExactMatrix> pmats;
    for (const auto& sigma : perms) {
        ExactMatrix p(z, N, N);
        for (int c = 0; c < N; ++c) {
            std::vector<int> moved(n);
            for (int slot = 0; slot < n; ++slot)
                moved[sigma[slot] - 1] = words[c][slot];
            p.set(word_of.at(moved), c, 1);
        }
        pmats.push_back(std::move(p));
    }

    rep.perms_contained = true;
    for (const auto& p : pmats)
        for (const auto& f : fpows)
            if (p * f != f * p)
                rep.perms_contained = false;

    std::vector<std::vector<uint64_t>> prows;
    for (const auto& p : pmats) {
        std::vector<uint64_t> row;
        row.reserve(size_t(N) * N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                row.push_back(p.at(i, j) == 1 ? 1 : 0);
        prows.push_back(std::move(row));
    }
    rep.perms_independent = modp_rank(prows, kCertPrime) == rep.expected_dim;

    std::vector<std::vector<uint64_t>> rows;
    for (const auto& f : fpows)
        append_intertwiner_constraints(rows, f, f);
    rep.solution_dim = long(size_t(N) * N) - modp_rank(rows, kCertPrime);

    // mismatched tensor lengths must force the zero map
    const int a = n == 1 ? 1 : n;
    const int b = n == 1 ? 2 : n - 1;
    std::vector<std::vector<uint64_t>> cross;
    for (const auto& f : fs)
        append_intertwiner_constraints(cross, kron_power(f, a), kron_power(f, b));
    const size_t cross_unknowns = cross.empty() ? 0 : cross[0].size();
    rep.cross_only_zero = modp_rank(cross, kCertPrime) == long(cross_unknowns);

    return rep;
}

} // namespace cohen
