#pragma once

#include "equicover/rational.hpp"

#include <vector>
#include <optional>
#include <cstddef>

namespace equicover {

// Dense matrix over Q, row-major. Sizes here are tiny (a few hundred at most),
// so everything is plain cubic elimination kept exact.
struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Rat(0)) {}

    Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static QMat identity(int n);
    static QMat from_rows(const std::vector<std::vector<Rat>>& rows);

    QMat transpose() const;
    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    bool operator==(const QMat& o) const;
    bool is_zero() const;

    std::vector<Rat> col(int j) const;
    std::vector<Rat> row(int i) const;
    void set_col(int j, const std::vector<Rat>& v);
};

std::vector<Rat> mat_vec(const QMat& m, const std::vector<Rat>& v);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(QMat& m);

int rank(QMat m);

// Basis of the right kernel {x : m x = 0}, one column per basis vector.
QMat kernel(const QMat& m);

Rat determinant(QMat m);

// Unique solution of m x = b for injective m; throws if inconsistent or underdetermined.
std::vector<Rat> solve_unique(const QMat& m, const std::vector<Rat>& b);

// Solves m X = B columnwise (m injective).
QMat solve_unique_mat(const QMat& m, const QMat& B);

std::optional<QMat> inverse(const QMat& m);

// Incremental row-space builder (kept in reduced form); used for algebra and
// module closures.
struct SpanBuilder {
    int dim;
    std::vector<std::vector<Rat>> rows; // reduced, each with a leading pivot
    std::vector<int> pivots;

    explicit SpanBuilder(int d) : dim(d) {}
    int rank() const { return int(rows.size()); }
    // returns true if v enlarged the span
    bool insert(std::vector<Rat> v);
    bool contains(std::vector<Rat> v) const;
};

// ---------------------------------------------------------------------------

struct ZMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    ZMat() = default;
    ZMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Int(0)) {}

    Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static ZMat identity(int n);

    ZMat transpose() const;
    ZMat operator*(const ZMat& o) const;
    ZMat operator+(const ZMat& o) const;
    ZMat operator-(const ZMat& o) const;
    bool operator==(const ZMat& o) const;

    QMat to_q() const;
    static ZMat from_q(const QMat& m); // throws on non-integral entries
};

std::vector<Int> mat_vec(const ZMat& m, const std::vector<Int>& v);

// Smith normal form: U*A*V = S with U,V unimodular, S diagonal with
// s_1 | s_2 | ... | s_r, s_i > 0.
struct SmithResult {
    ZMat U, S, V;
    int rank = 0;
};
SmithResult smith_normal_form(const ZMat& A);

// Basis of the integer kernel lattice of A (columns).
ZMat z_kernel(const ZMat& A);

Int z_determinant(const ZMat& A);

// Inverse of a unimodular integer matrix.
ZMat z_inverse_unimodular(const ZMat& A);

// For skew-symmetric unimodular J, finds unimodular F with F^T J F the
// standard block-diagonal symplectic form; returns nullopt if J is not
// skew unimodular.
std::optional<ZMat> symplectic_standardize(const ZMat& J);

// Dimension of the joint kernel of (M - I) mod p over GF(p) for a list of
// integer matrices.
int joint_fixed_dim_mod_p(const std::vector<ZMat>& mats, long p);

} // namespace equicover
