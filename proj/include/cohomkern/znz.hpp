#pragma once

// Exact dense linear algebra over Z/mZ with composite m allowed.
//
// Row convention throughout: module elements are row vectors, maps act on the
// right (x -> x*M), spans are row spans.  The Howell normal form is the
// canonical row form for submodules of (Z/m)^n; unlike plain echelon form it
// represents row spans faithfully when m is composite.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace cohomkern::znz {

// Barrett reducer for a fixed modulus m in [2, 2^31).
struct Reducer {
    uint32_t m = 0;
    uint64_t magic = 0;

    Reducer() = default;
    explicit Reducer(uint32_t mod);

    uint32_t reduce(uint64_t a) const {
        uint64_t q = static_cast<uint64_t>((static_cast<__uint128_t>(a) * magic) >> 64);
        uint64_t r = a - q * m;
        while (r >= m) r -= m;
        return static_cast<uint32_t>(r);
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : m - a; }
};

uint32_t gcd_u32(uint32_t a, uint32_t b);
// g = gcd(a,b) together with x,y such that x*a + y*b = g (over Z).
int64_t egcd(int64_t a, int64_t b, int64_t& x, int64_t& y);
// Multiplicative inverse of a modulo m; a must be a unit.
uint32_t inv_mod(uint32_t a, uint32_t m);
// A unit u mod m with u*a = gcd(a,m) (mod m).
uint32_t unit_for(uint32_t a, uint32_t m);

using Row = std::vector<uint32_t>;

struct MatrixZn {
    uint32_t rows = 0;
    uint32_t cols = 0;
    uint32_t mod = 0;
    std::vector<uint32_t> a;  // row-major, entries in [0, mod)

    MatrixZn() = default;
    MatrixZn(uint32_t r, uint32_t c, uint32_t m) : rows(r), cols(c), mod(m), a(size_t(r) * c, 0) {}

    static MatrixZn identity(uint32_t n, uint32_t m);
    static MatrixZn from_rows(const std::vector<Row>& rs, uint32_t c, uint32_t m);

    uint32_t& at(uint32_t r, uint32_t c) { return a[size_t(r) * cols + c]; }
    uint32_t at(uint32_t r, uint32_t c) const { return a[size_t(r) * cols + c]; }
    uint32_t* row_ptr(uint32_t r) { return a.data() + size_t(r) * cols; }
    const uint32_t* row_ptr(uint32_t r) const { return a.data() + size_t(r) * cols; }
    Row row(uint32_t r) const { return Row(row_ptr(r), row_ptr(r) + cols); }
    void set_row(uint32_t r, const Row& v);

    bool is_zero() const;
    bool operator==(const MatrixZn& o) const { return rows == o.rows && cols == o.cols && mod == o.mod && a == o.a; }
};

MatrixZn mat_mul(const MatrixZn& A, const MatrixZn& B);
MatrixZn mat_add(const MatrixZn& A, const MatrixZn& B);
MatrixZn mat_sub(const MatrixZn& A, const MatrixZn& B);
MatrixZn mat_scale(const MatrixZn& A, uint32_t c);
// Entrywise reduction into a new modulus (newmod must divide mod).
MatrixZn reduce_mod(const MatrixZn& A, uint32_t newmod);
MatrixZn vstack(const MatrixZn& A, const MatrixZn& B);
Row row_mat(const Row& x, const MatrixZn& M);  // x * M

struct HowellForm {
    // basis is the Howell normal form of the input's row span: pivot columns
    // strictly increase, each pivot divides the modulus, entries above a pivot
    // are reduced mod that pivot, and the span is Howell-saturated.
    MatrixZn basis;
    MatrixZn transform;  // transform * input = basis (when requested)
    MatrixZn kernel;     // Howell basis of { x : x * input = 0 } (when requested)
    std::vector<uint32_t> pivot_col;
    std::vector<uint32_t> pivot;

    bool is_free() const;  // all pivots are units
    uint32_t rank() const { return basis.rows; }
};

// want_aux = false skips the transform/kernel (cheaper; basis only).
HowellForm howell(const MatrixZn& M, bool want_aux = true);
MatrixZn howell_basis(const MatrixZn& M);
MatrixZn kernel(const MatrixZn& M);

// Canonical coordinates of b w.r.t. the Howell basis rows (reduce in row order).
std::optional<Row> coords_in_basis(const HowellForm& hf, const Row& b);
bool in_span(const HowellForm& hf, const Row& b);
// Canonical x with x * M = b, or nullopt.  Requires hf built with want_aux.
std::optional<Row> solve(const HowellForm& hf, const Row& b);
std::optional<Row> solve(const MatrixZn& M, const Row& b);
bool same_span(const MatrixZn& A, const MatrixZn& B);

// Smith normal form over Z/m.  Returns the diagonal (d1 | d2 | ... , each a
// divisor of m, padded with m for relation-free coordinates up to `width`).
// If gen_rows is non-null it receives, for each diagonal position, the row
// vector of the original ambient (Z/m)^width generating that cyclic factor.
std::vector<uint32_t> smith_diagonal(MatrixZn R, uint32_t width, std::vector<Row>* gen_rows = nullptr);

struct Subquotient {
    uint32_t ambient_rank = 0;
    MatrixZn numerator;    // Howell basis
    MatrixZn denominator;  // Howell basis
    std::vector<uint32_t> invariant_factors;  // nontrivial factors, dividing chain
    MatrixZn generators;   // ambient rows generating each cyclic factor
};

// Presents span(num)/span(den); throws ZnError(NotContained) if den is not
// inside span(num).
Subquotient subquotient(const MatrixZn& num, const MatrixZn& den);

// Debug matrix file format: first line "rows cols modulus", then row-major
// entries, whitespace separated.
MatrixZn read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const MatrixZn& M);

struct ZnError {
    enum Kind { NotContained, BadModulus, Mismatch } kind;
    const char* what;
};

// Serial reference implementations, kept for testing the parallel kernels.
namespace ref {
MatrixZn mat_mul(const MatrixZn& A, const MatrixZn& B);
MatrixZn howell_basis(const MatrixZn& M);
MatrixZn kernel(const MatrixZn& M);
}  // namespace ref

}  // namespace cohomkern::znz
