#pragma once

#include <cstdint>
#include <vector>

#include "cohen/ring.hpp"

namespace cohen {

// Dense exact matrix over Z or Z/m. Entries are kept ring-canonical.
class ExactMatrix {
  public:
    ExactMatrix(Ring ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(size_t(rows) * size_t(cols)) {
        if (rows < 0 || cols < 0)
            throw shape_error("negative matrix dimension");
    }

    static ExactMatrix identity(const Ring& ring, int n);

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const mpz_class& at(int i, int j) const {
        check(i, j);
        return data_[size_t(i) * cols_ + j];
    }

    void set(int i, int j, const mpz_class& v) {
        check(i, j);
        data_[size_t(i) * cols_ + j] = ring_.reduce(v);
    }

    void add(int i, int j, const mpz_class& v) {
        check(i, j);
        mpz_class& e = data_[size_t(i) * cols_ + j];
        e = ring_.reduce(e + v);
    }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

  private:
    void check(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw shape_error("matrix index out of range");
    }

    Ring ring_;
    int rows_;
    int cols_;
    std::vector<mpz_class> data_;
};

// Rank of the matrix: over Z the rank over Q (fraction-free echelon),
// over Z/p the rank of the field elimination. Composite moduli rejected.
long matrix_rank(const ExactMatrix& a);

// Basis of {x : A x = 0}, returned as rows of the result.
// Over Z this is a basis of the full kernel lattice (hence saturated);
// over Z/p a field nullspace basis. Composite moduli rejected.
ExactMatrix kernel_basis(const ExactMatrix& a);

// Canonical form of the row span: over Z the row-style Hermite normal form
// (positive pivots, entries above a pivot reduced into [0, pivot), zero rows
// dropped); over Z/p the reduced row echelon form. Composite moduli rejected.
ExactMatrix row_span_canonical(const ExactMatrix& a);

// Finitely generated submodule of R^ambient, generators as rows.
struct Submodule {
    Ring ring;
    int ambient = 0;
    ExactMatrix gens;

    Submodule(Ring r, int amb, ExactMatrix g) : ring(std::move(r)), ambient(amb), gens(std::move(g)) {
        if (gens.cols() != ambient)
            throw shape_error("generator width does not match ambient rank");
        require_same_ring(ring, gens.ring());
    }
};

long submodule_rank(const Submodule& s);

// Equality as submodules: over Z lattice equality via identical Hermite
// forms, over Z/p row-space equality via identical reduced echelon forms.
bool submodule_equal(const Submodule& a, const Submodule& b);

// Fast dense elimination mod a word-sized prime; rows are modified in place.
long modp_rank(std::vector<std::vector<uint64_t>>& rows, uint64_t p);

// Nullspace basis of the row system (as vectors of length cols) mod p.
std::vector<std::vector<uint64_t>> modp_nullspace(std::vector<std::vector<uint64_t>> rows, int cols,
                                                  uint64_t p);

} // namespace cohen
