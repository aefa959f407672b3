#include "cohen/linalg.hpp"

#include <algorithm>
#include <utility>

namespace cohen {

namespace {

using Rows = std::vector<std::vector<mpz_class>>;

void require_elimination_ring(const Ring& r) {
    if (r.is_modular() && !r.modulus_is_prime())
        throw unsupported_ring_error("elimination needs Z or Z/p, got " + r.text());
}

Rows to_rows(const ExactMatrix& a) {
    Rows m(a.rows(), std::vector<mpz_class>(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m[i][j] = a.at(i, j);
    return m;
}

// Column echelon over Z by unimodular column operations, mirrored on an
// identity block so zero columns of the echelon expose a kernel lattice basis.
// Returns the rank; kern receives the kernel basis as rows.
long z_column_echelon(Rows& m, int arows, int cols, Rows* kern) {
    Rows u;
    if (kern) {
        u.assign(cols, std::vector<mpz_class>(cols, 0));
        for (int c = 0; c < cols; ++c)
            u[c][c] = 1;
    }
    auto col_swap = [&](int c1, int c2) {
        for (int i = 0; i < arows; ++i)
            std::swap(m[i][c1], m[i][c2]);
        if (kern)
            for (int i = 0; i < cols; ++i)
                std::swap(u[i][c1], u[i][c2]);
    };
    auto col_negate = [&](int c) {
        for (int i = 0; i < arows; ++i)
            m[i][c] = -m[i][c];
        if (kern)
            for (int i = 0; i < cols; ++i)
                u[i][c] = -u[i][c];
    };
    // (c1, c2) <- (s*c1 + t*c2, x*c1 + y*c2), always with s*y - t*x = +-1
    auto col_combine = [&](int c1, int c2, const mpz_class& s, const mpz_class& t,
                           const mpz_class& x, const mpz_class& y) {
        for (int i = 0; i < arows; ++i) {
            mpz_class a = m[i][c1], b = m[i][c2];
            m[i][c1] = s * a + t * b;
            m[i][c2] = x * a + y * b;
        }
        if (kern)
            for (int i = 0; i < cols; ++i) {
                mpz_class a = u[i][c1], b = u[i][c2];
                u[i][c1] = s * a + t * b;
                u[i][c2] = x * a + y * b;
            }
    };

    long r = 0;
    for (int i = 0; i < arows && r < cols; ++i) {
        int piv = -1;
        for (int c = int(r); c < cols; ++c)
            if (m[i][c] != 0) {
                piv = c;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            col_swap(piv, int(r));
        for (int c = int(r) + 1; c < cols; ++c) {
            if (m[i][c] == 0)
                continue;
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[i][r].get_mpz_t(),
                       m[i][c].get_mpz_t());
            mpz_class x = -m[i][c] / g, y = m[i][r] / g;
            col_combine(int(r), c, s, t, x, y);
        }
        if (m[i][r] < 0)
            col_negate(int(r));
        ++r;
    }
    if (kern) {
        kern->clear();
        for (int c = int(r); c < cols; ++c) {
            std::vector<mpz_class> v(cols);
            for (int i = 0; i < cols; ++i)
                v[i] = u[i][c];
            kern->push_back(std::move(v));
        }
    }
    return r;
}

// Reduced row echelon form over Z/p; returns the rank.
long p_rref(Rows& m, const Ring& ring) {
    const mpz_class& p = ring.modulus();
    const int rows = int(m.size());
    const int cols = rows ? int(m[0].size()) : 0;
    for (auto& row : m)
        for (auto& e : row)
            e = ring.reduce(e);
    long r = 0;
    for (int j = 0; j < cols && r < rows; ++j) {
        int piv = -1;
        for (int i = int(r); i < rows; ++i)
            if (m[i][j] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[r], m[piv]);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), m[r][j].get_mpz_t(), p.get_mpz_t());
        for (int c = j; c < cols; ++c)
            m[r][c] = ring.reduce(m[r][c] * inv);
        for (int i = 0; i < rows; ++i) {
            if (i == int(r) || m[i][j] == 0)
                continue;
            mpz_class f = m[i][j];
            for (int c = j; c < cols; ++c)
                m[i][c] = ring.reduce(m[i][c] - f * m[r][c]);
        }
        ++r;
    }
    return r;
}

// Row-style Hermite normal form over Z; returns the rank.
long z_row_hermite(Rows& m) {
    const int rows = int(m.size());
    const int cols = rows ? int(m[0].size()) : 0;
    auto row_combine = [&](int r1, int r2, const mpz_class& s, const mpz_class& t,
                           const mpz_class& x, const mpz_class& y) {
        for (int c = 0; c < cols; ++c) {
            mpz_class a = m[r1][c], b = m[r2][c];
            m[r1][c] = s * a + t * b;
            m[r2][c] = x * a + y * b;
        }
    };
    long r = 0;
    for (int j = 0; j < cols && r < rows; ++j) {
        int piv = -1;
        for (int i = int(r); i < rows; ++i)
            if (m[i][j] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[r], m[piv]);
        for (int i = int(r) + 1; i < rows; ++i) {
            if (m[i][j] == 0)
                continue;
            mpz_class g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[r][j].get_mpz_t(),
                       m[i][j].get_mpz_t());
            mpz_class x = -m[i][j] / g, y = m[r][j] / g;
            row_combine(int(r), i, s, t, x, y);
        }
        if (m[r][j] < 0)
            for (int c = 0; c < cols; ++c)
                m[r][c] = -m[r][c];
        for (int i = 0; i < int(r); ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][j].get_mpz_t(), m[r][j].get_mpz_t());
            if (q == 0)
                continue;
            for (int c = 0; c < cols; ++c)
                m[i][c] -= q * m[r][c];
        }
        ++r;
    }
    return r;
}

ExactMatrix from_rows(const Ring& ring, const Rows& m, int cols) {
    ExactMatrix out(ring, int(m.size()), cols);
    for (int i = 0; i < int(m.size()); ++i)
        for (int j = 0; j < cols; ++j)
            out.set(i, j, m[i][j]);
    return out;
}

} // namespace

ExactMatrix ExactMatrix::identity(const Ring& ring, int n) {
    ExactMatrix m(ring, n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    require_same_ring(ring_, o.ring_);
    if (cols_ != o.rows_)
        throw shape_error("matrix product shape mismatch");
    ExactMatrix out(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0)
                    out.add(i, j, a * o.at(k, j));
        }
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    require_same_ring(ring_, o.ring_);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw shape_error("matrix difference shape mismatch");
    ExactMatrix out(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.set(i, j, at(i, j) - o.at(i, j));
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    require_same_ring(ring_, o.ring_);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    return data_ == o.data_;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : data_)
        if (e != 0)
            return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

long matrix_rank(const ExactMatrix& a) {
    require_elimination_ring(a.ring());
    Rows m = to_rows(a);
    if (a.ring().is_integers())
        return z_column_echelon(m, a.rows(), a.cols(), nullptr);
    return p_rref(m, a.ring());
}

ExactMatrix kernel_basis(const ExactMatrix& a) {
    require_elimination_ring(a.ring());
    const int cols = a.cols();
    if (a.ring().is_integers()) {
        Rows m = to_rows(a);
        Rows kern;
        z_column_echelon(m, a.rows(), cols, &kern);
        return from_rows(a.ring(), kern, cols);
    }
    Rows m = to_rows(a);
    long r = p_rref(m, a.ring());
    // pivot column of each echelon row
    std::vector<int> pivot_col(r, -1), col_pivot(cols, -1);
    for (long i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j)
            if (m[i][j] != 0) {
                pivot_col[i] = j;
                col_pivot[j] = int(i);
                break;
            }
    Rows kern;
    for (int c = 0; c < cols; ++c) {
        if (col_pivot[c] >= 0)
            continue;
        std::vector<mpz_class> v(cols, 0);
        v[c] = 1;
        for (long i = 0; i < r; ++i)
            v[pivot_col[i]] = a.ring().reduce(-m[i][c]);
        kern.push_back(std::move(v));
    }
    return from_rows(a.ring(), kern, cols);
}

ExactMatrix row_span_canonical(const ExactMatrix& a) {
    require_elimination_ring(a.ring());
    Rows m = to_rows(a);
    long r = a.ring().is_integers() ? z_row_hermite(m) : p_rref(m, a.ring());
    m.resize(size_t(r));
    return from_rows(a.ring(), m, a.cols());
}

long submodule_rank(const Submodule& s) {
    return matrix_rank(s.gens);
}

bool submodule_equal(const Submodule& a, const Submodule& b) {
    require_same_ring(a.ring, b.ring);
    if (a.ambient != b.ambient)
        throw shape_error("submodules live in different ambient modules");
    return row_span_canonical(a.gens) == row_span_canonical(b.gens);
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return uint64_t((unsigned __int128)(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

long modp_rank(std::vector<std::vector<uint64_t>>& rows, uint64_t p) {
    const int nrows = int(rows.size());
    const int cols = nrows ? int(rows[0].size()) : 0;
    long r = 0;
    for (int j = 0; j < cols && r < nrows; ++j) {
        int piv = -1;
        for (int i = int(r); i < nrows; ++i)
            if (rows[i][j] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(rows[r], rows[piv]);
        uint64_t inv = powmod(rows[r][j] % p, p - 2, p);
        for (int c = j; c < cols; ++c)
            rows[r][c] = mulmod(rows[r][c] % p, inv, p);
        for (int i = 0; i < nrows; ++i) {
            if (i == int(r))
                continue;
            uint64_t f = rows[i][j] % p;
            if (f == 0)
                continue;
            for (int c = j; c < cols; ++c) {
                uint64_t sub = mulmod(f, rows[r][c], p);
                rows[i][c] = (rows[i][c] % p + p - sub) % p;
            }
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<uint64_t>> modp_nullspace(std::vector<std::vector<uint64_t>> rows, int cols,
                                                  uint64_t p) {
    long r = modp_rank(rows, p);
    std::vector<int> pivot_col(r, -1), col_pivot(cols, -1);
    for (long i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j)
            if (rows[i][j] != 0) {
                pivot_col[i] = j;
                col_pivot[j] = int(i);
                break;
            }
    std::vector<std::vector<uint64_t>> kern;
    for (int c = 0; c < cols; ++c) {
        if (col_pivot[c] >= 0)
            continue;
        std::vector<uint64_t> v(cols, 0);
        v[c] = 1;
        for (long i = 0; i < r; ++i)
            if (rows[i][c] != 0)
                v[pivot_col[i]] = p - rows[i][c];
        kern.push_back(std::move(v));
    }
    return kern;
}

} // namespace cohen
