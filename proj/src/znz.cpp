#include "cohomkern/znz.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cohomkern::znz {

Reducer::Reducer(uint32_t mod) : m(mod) {
    if (mod < 2) throw ZnError{ZnError::BadModulus, "modulus must be >= 2"};
    magic = static_cast<uint64_t>((static_cast<__uint128_t>(1) << 64) / mod);
}

uint32_t gcd_u32(uint32_t a, uint32_t b) {
    while (b) {
        uint32_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t egcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    int64_t x1, y1;
    int64_t g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

uint32_t inv_mod(uint32_t a, uint32_t m) {
    int64_t x, y;
    int64_t g = egcd(int64_t(a % m), int64_t(m), x, y);
    if (g != 1) throw ZnError{ZnError::BadModulus, "inv_mod of a non-unit"};
    int64_t r = x % int64_t(m);
    if (r < 0) r += m;
    return uint32_t(r);
}

uint32_t unit_for(uint32_t a, uint32_t m) {
    a %= m;
    if (a == 0) return 1;
    uint32_t g = gcd_u32(a, m);
    uint32_t a1 = a / g, m1 = m / g;
    // u = inv(a1) mod m1 satisfies u*a = g (mod m) for any lift; bump by m1
    // until the lift is a unit mod m.
    uint32_t u = (m1 == 1) ? 1 : inv_mod(a1 % m1, m1);
    while (gcd_u32(u, m) != 1) u += m1;
    return u % m;
}

MatrixZn MatrixZn::identity(uint32_t n, uint32_t m) {
    MatrixZn I(n, n, m);
    for (uint32_t i = 0; i < n; ++i) I.at(i, i) = 1 % m;
    return I;
}

MatrixZn MatrixZn::from_rows(const std::vector<Row>& rs, uint32_t c, uint32_t m) {
    MatrixZn M(uint32_t(rs.size()), c, m);
    for (uint32_t i = 0; i < rs.size(); ++i) M.set_row(i, rs[i]);
    return M;
}

void MatrixZn::set_row(uint32_t r, const Row& v) {
    assert(v.size() == cols);
    std::copy(v.begin(), v.end(), row_ptr(r));
}

bool MatrixZn::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](uint32_t x) { return x == 0; });
}

namespace {

// y += q*x over n entries
void axpy(uint32_t* y, const uint32_t* x, size_t n, uint32_t q, const Reducer& rd) {
    if (q == 0) return;
    for (size_t i = 0; i < n; ++i)
        y[i] = rd.reduce(uint64_t(y[i]) + uint64_t(q) * x[i]);
}

void scale_row(uint32_t* y, size_t n, uint32_t u, const Reducer& rd) {
    if (u == 1) return;
    for (size_t i = 0; i < n; ++i) y[i] = rd.reduce(uint64_t(u) * y[i]);
}

size_t leading(const Row& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) return i;
    return v.size();
}

// Replace (r1, r2) by (s*r1 + t*r2, (b/g)*r1 - (a/g)*r2) where a = r1[c],
// b = r2[c], g = gcd(a,b).  The transform is unimodular, the new r1 has
// entry g at column c and the new r2 has entry 0 there.
void gcd_combine(Row& r1, Row& r2, size_t c, const Reducer& rd) {
    int64_t s, t;
    int64_t g = egcd(int64_t(r1[c]), int64_t(r2[c]), s, t);
    uint32_t us = uint32_t(((s % rd.m) + rd.m) % rd.m);
    uint32_t ut = uint32_t(((t % rd.m) + rd.m) % rd.m);
    uint32_t p = uint32_t(uint64_t(r1[c]) / uint64_t(g));
    uint32_t q = uint32_t(uint64_t(r2[c]) / uint64_t(g));
    size_t n = r1.size();
    Row n1(n), n2(n);
    for (size_t i = 0; i < n; ++i) {
        n1[i] = rd.reduce(uint64_t(us) * r1[i] + uint64_t(ut) * r2[i]);
        n2[i] = rd.reduce(uint64_t(q) * r1[i] + uint64_t(rd.neg(p)) * r2[i]);
    }
    r1 = std::move(n1);
    r2 = std::move(n2);
}

// Core Howell elimination.  Rows are consumed from `active`; the returned
// rows form the Howell normal form (sorted by pivot column, back-reduced).
std::vector<Row> howell_rows(std::vector<Row> active, size_t cols, uint32_t m) {
    Reducer rd(m);
    std::vector<Row> out;
    std::vector<size_t> out_pivot;

    // Invariant: every row in `active` is zero in all columns < c.
    for (size_t c = 0; c < cols; ++c) {
        // gather rows with a nonzero entry at column c
        std::vector<size_t> bucket;
        for (size_t i = 0; i < active.size(); ++i)
            if (active[i][c]) bucket.push_back(i);
        if (bucket.empty()) continue;

        // aggregate the column gcd into one pivot row (rarely loops when the
        // modulus is prime: the first entry is already a unit)
        Row piv = std::move(active[bucket[0]]);
        std::vector<size_t> defer;
        for (size_t k = 1; k < bucket.size(); ++k) {
            size_t i = bucket[k];
            uint32_t pg = gcd_u32(piv[c], m);
            if (active[i][c] % pg == 0) {
                defer.push_back(i);
            } else {
                gcd_combine(piv, active[i], c, rd);
            }
        }
        uint32_t u = unit_for(piv[c], m);
        scale_row(piv.data() + c, cols - c, u, rd);
        uint32_t p = piv[c];  // now a divisor of m

        // eliminate column c from the deferred rows (independent row ops)
        bool big = defer.size() * (cols - c) > (1u << 14);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (big)
#endif
        for (long k = 0; k < long(defer.size()); ++k) {
            Row& r = active[defer[k]];
            uint32_t q = rd.neg(rd.reduce(uint64_t(r[c]) / p));
            axpy(r.data() + c, piv.data() + c, cols - c, q, rd);
        }
        (void)big;

        // Howell saturation: the annihilator multiple of a non-unit pivot row
        // has leading column > c and must stay in the span explicitly.
        if (p != 1) {
            Row ann(cols, 0);
            uint32_t q = m / p;
            for (size_t i = c; i < cols; ++i) ann[i] = rd.reduce(uint64_t(q) * piv[i]);
            if (leading(ann) < cols) active.push_back(std::move(ann));
        }

        out_pivot.push_back(c);
        out.push_back(std::move(piv));

        // drop rows that became zero
        std::vector<Row> next;
        next.reserve(active.size());
        for (auto& r : active) {
            if (!r.empty() && leading(r) < cols) next.push_back(std::move(r));
        }
        active = std::move(next);
    }

    // back-reduction: entries above each pivot land in [0, pivot)
    for (size_t k = 0; k < out.size(); ++k) {
        size_t c = out_pivot[k];
        uint32_t p = out[k][c];
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (k > 0 && out.size() * (cols - c) > (1u << 14))
#endif
        for (long j = 0; j < long(k); ++j) {
            uint32_t q = rd.neg(rd.reduce(uint64_t(out[j][c]) / p));
            axpy(out[j].data() + c, out[k].data() + c, cols - c, q, rd);
        }
    }
    return out;
}

}  // namespace

MatrixZn mat_mul(const MatrixZn& A, const MatrixZn& B) {
    if (A.cols != B.rows || A.mod != B.mod) throw ZnError{ZnError::Mismatch, "mat_mul shape/modulus"};
    MatrixZn C(A.rows, B.cols, A.mod);
    Reducer rd(A.mod);
    // accumulate a full output row in 64 bits and reduce once; safe while
    // cols * mod^2 stays below 2^63 (mod <= 2^16 and cols in the millions)
#ifdef _OPENMP
#pragma omp parallel if (size_t(A.rows) * B.cols * A.cols > (1u << 16))
#endif
    {
        std::vector<uint64_t> acc(B.cols);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long i = 0; i < long(A.rows); ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (uint32_t k = 0; k < A.cols; ++k) {
                uint64_t v = A.at(uint32_t(i), k);
                if (!v) continue;
                const uint32_t* brow = B.row_ptr(k);
                for (uint32_t j = 0; j < B.cols; ++j) acc[j] += v * brow[j];
            }
            uint32_t* crow = C.row_ptr(uint32_t(i));
            for (uint32_t j = 0; j < B.cols; ++j) crow[j] = rd.reduce(acc[j]);
        }
    }
    return C;
}

MatrixZn mat_add(const MatrixZn& A, const MatrixZn& B) {
    if (A.rows != B.rows || A.cols != B.cols || A.mod != B.mod)
        throw ZnError{ZnError::Mismatch, "mat_add shape/modulus"};
    MatrixZn C(A.rows, A.cols, A.mod);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = (A.a[i] + B.a[i]) % A.mod;
    return C;
}

MatrixZn mat_sub(const MatrixZn& A, const MatrixZn& B) {
    if (A.rows != B.rows || A.cols != B.cols || A.mod != B.mod)
        throw ZnError{ZnError::Mismatch, "mat_sub shape/modulus"};
    MatrixZn C(A.rows, A.cols, A.mod);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = (A.a[i] + A.mod - B.a[i]) % A.mod;
    return C;
}

MatrixZn mat_scale(const MatrixZn& A, uint32_t c) {
    MatrixZn C(A.rows, A.cols, A.mod);
    Reducer rd(A.mod);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = rd.reduce(uint64_t(c % A.mod) * A.a[i]);
    return C;
}

MatrixZn reduce_mod(const MatrixZn& A, uint32_t newmod) {
    if (newmod < 2 || A.mod % newmod != 0) throw ZnError{ZnError::BadModulus, "reduce_mod"};
    MatrixZn C(A.rows, A.cols, newmod);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] % newmod;
    return C;
}

MatrixZn vstack(const MatrixZn& A, const MatrixZn& B) {
    if (A.cols != B.cols || A.mod != B.mod) throw ZnError{ZnError::Mismatch, "vstack"};
    MatrixZn C(A.rows + B.rows, A.cols, A.mod);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
    return C;
}

Row row_mat(const Row& x, const MatrixZn& M) {
    if (x.size() != M.rows) throw ZnError{ZnError::Mismatch, "row_mat"};
    Reducer rd(M.mod);
    Row out(M.cols, 0);
    for (uint32_t k = 0; k < M.rows; ++k) {
        uint64_t v = x[k];
        if (!v) continue;
        const uint32_t* mrow = M.row_ptr(k);
        for (uint32_t j = 0; j < M.cols; ++j) out[j] = rd.reduce(out[j] + v * mrow[j]);
    }
    return out;
}

bool HowellForm::is_free() const {
    return std::all_of(pivot.begin(), pivot.end(), [](uint32_t p) { return p == 1; });
}

HowellForm howell(const MatrixZn& M, bool want_aux) {
    HowellForm hf;
    uint32_t m = M.mod;
    size_t width = want_aux ? size_t(M.cols) + M.rows : M.cols;
    std::vector<Row> rows;
    rows.reserve(M.rows);
    for (uint32_t i = 0; i < M.rows; ++i) {
        Row r(width, 0);
        std::copy(M.row_ptr(i), M.row_ptr(i) + M.cols, r.begin());
        if (want_aux) r[M.cols + i] = 1 % m;
        if (leading(r) < width) rows.push_back(std::move(r));
    }
    std::vector<Row> out = howell_rows(std::move(rows), width, m);

    std::vector<Row> basis, transform, ker;
    for (auto& r : out) {
        size_t lead = leading(r);
        if (lead < M.cols) {
            basis.emplace_back(r.begin(), r.begin() + M.cols);
            if (want_aux) transform.emplace_back(r.begin() + M.cols, r.end());
            hf.pivot_col.push_back(uint32_t(lead));
            hf.pivot.push_back(r[lead]);
        } else if (want_aux) {
            ker.emplace_back(r.begin() + M.cols, r.end());
        }
    }
    hf.basis = MatrixZn::from_rows(basis, M.cols, m);
    if (want_aux) {
        hf.transform = MatrixZn::from_rows(transform, M.rows, m);
        hf.kernel = MatrixZn::from_rows(ker, M.rows, m);
    }
    return hf;
}

MatrixZn howell_basis(const MatrixZn& M) { return howell(M, false).basis; }

MatrixZn kernel(const MatrixZn& M) { return howell(M, true).kernel; }

std::optional<Row> coords_in_basis(const HowellForm& hf, const Row& b) {
    const MatrixZn& H = hf.basis;
    if (b.size() != H.cols) throw ZnError{ZnError::Mismatch, "coords_in_basis"};
    Reducer rd(H.mod);
    Row r = b;
    Row w(H.rows, 0);
    for (uint32_t k = 0; k < H.rows; ++k) {
        uint32_t c = hf.pivot_col[k];
        uint32_t p = hf.pivot[k];
        uint32_t q = r[c] / p;
        if (r[c] % p != 0) return std::nullopt;
        w[k] = q;
        axpy(r.data() + c, H.row_ptr(k) + c, H.cols - c, rd.neg(q), rd);
    }
    if (leading(r) < r.size()) return std::nullopt;
    return w;
}

bool in_span(const HowellForm& hf, const Row& b) { return coords_in_basis(hf, b).has_value(); }

std::optional<Row> solve(const HowellForm& hf, const Row& b) {
    auto w = coords_in_basis(hf, b);
    if (!w) return std::nullopt;
    if (hf.transform.rows != hf.basis.rows) throw ZnError{ZnError::Mismatch, "solve needs transform"};
    return row_mat(*w, hf.transform);
}

std::optional<Row> solve(const MatrixZn& M, const Row& b) { return solve(howell(M, true), b); }

bool same_span(const MatrixZn& A, const MatrixZn& B) {
    return howell_basis(A) == howell_basis(B);
}

std::vector<uint32_t> smith_diagonal(MatrixZn R, uint32_t width, std::vector<Row>* gen_rows) {
    if (R.cols != width) throw ZnError{ZnError::Mismatch, "smith width"};
    uint32_t m = R.mod;
    Reducer rd(m);
    // S tracks the inverse of the accumulated column transform: row i of S is
    // the ambient coordinate vector of the i-th transformed basis vector.
    // Row operations on R leave its row span (hence the quotient) unchanged
    // and need no tracking.
    MatrixZn S = MatrixZn::identity(width, m);

    auto col_op = [&](uint32_t dst, uint32_t src, uint32_t q) {  // col dst += q*col src
        if (!q) return;
        for (uint32_t i = 0; i < R.rows; ++i)
            R.at(i, dst) = rd.reduce(uint64_t(R.at(i, dst)) + uint64_t(q) * R.at(i, src));
        // inverse transform: row src of S -= q * row dst
        axpy(S.row_ptr(src), S.row_ptr(dst), S.cols, rd.neg(q), rd);
    };
    auto col_swap = [&](uint32_t c1, uint32_t c2) {
        if (c1 == c2) return;
        for (uint32_t i = 0; i < R.rows; ++i) std::swap(R.at(i, c1), R.at(i, c2));
        for (uint32_t j = 0; j < S.cols; ++j) std::swap(S.at(c1, j), S.at(c2, j));
    };
    auto row_swap = [&](uint32_t r1, uint32_t r2) {
        if (r1 == r2) return;
        for (uint32_t j = 0; j < R.cols; ++j) std::swap(R.at(r1, j), R.at(r2, j));
    };
    // 2x2 unimodular column combine producing gcd at (pos, c1), zero at (pos, c2)
    auto col_gcd_combine = [&](uint32_t pos, uint32_t c1, uint32_t c2) {
        uint32_t a = R.at(pos, c1), b = R.at(pos, c2);
        int64_t x, y;
        int64_t g = egcd(int64_t(a), int64_t(b), x, y);
        uint32_t us = uint32_t(((x % m) + m) % m), ut = uint32_t(((y % m) + m) % m);
        uint32_t ag = uint32_t(a / g), bg = uint32_t(b / g);
        for (uint32_t i = 0; i < R.rows; ++i) {
            uint32_t v1 = R.at(i, c1), v2 = R.at(i, c2);
            R.at(i, c1) = rd.reduce(uint64_t(us) * v1 + uint64_t(ut) * v2);
            R.at(i, c2) = rd.reduce(uint64_t(bg) * v1 + uint64_t(rd.neg(ag)) * v2);
        }
        Row s1 = S.row(c1), s2 = S.row(c2);
        for (uint32_t j = 0; j < width; ++j) {
            S.at(c1, j) = rd.reduce(uint64_t(ag) * s1[j] + uint64_t(bg) * s2[j]);
            S.at(c2, j) = rd.reduce(uint64_t(ut) * s1[j] + uint64_t(rd.neg(us)) * s2[j]);
        }
    };

    uint32_t n = std::min(R.rows, R.cols);
    uint32_t pos = 0;
    for (; pos < n; ++pos) {
        // pick the entry with the smallest gcd with m
        uint32_t bi = 0, bj = 0, bg = 0;
        for (uint32_t i = pos; i < R.rows; ++i)
            for (uint32_t j = pos; j < R.cols; ++j) {
                uint32_t v = R.at(i, j);
                if (!v) continue;
                uint32_t g = gcd_u32(v, m);
                if (bg == 0 || g < bg) {
                    bg = g;
                    bi = i;
                    bj = j;
                }
            }
        if (bg == 0) break;
        row_swap(pos, bi);
        col_swap(pos, bj);

        for (;;) {
            // normalize pivot to its gcd with m
            uint32_t u = unit_for(R.at(pos, pos), m);
            scale_row(R.row_ptr(pos), R.cols, u, rd);
            uint32_t p = R.at(pos, pos);
            bool dirty = false;
            for (uint32_t i = pos + 1; i < R.rows; ++i) {
                uint32_t v = R.at(i, pos);
                if (!v) continue;
                if (v % p == 0) {
                    axpy(R.row_ptr(i), R.row_ptr(pos), R.cols, rd.neg(v / p), rd);
                } else {
                    Row r1 = R.row(pos), r2 = R.row(i);
                    gcd_combine(r1, r2, pos, rd);
                    R.set_row(pos, r1);
                    R.set_row(i, r2);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (uint32_t j = pos + 1; j < R.cols; ++j) {
                uint32_t v = R.at(pos, j);
                if (!v) continue;
                if (v % p == 0) {
                    col_op(j, pos, rd.neg(v / p));
                } else {
                    col_gcd_combine(pos, pos, j);
                    dirty = true;
                    break;
                }
            }
            if (dirty) continue;
            // pivot must divide every remaining entry, or the divisibility
            // chain d_i | d_{i+1} would fail: absorb an offender and retry
            bool offender = false;
            for (uint32_t i = pos + 1; i < R.rows && !offender; ++i)
                for (uint32_t j = pos + 1; j < R.cols && !offender; ++j)
                    if (R.at(i, j) % p != 0) {
                        axpy(R.row_ptr(pos), R.row_ptr(i), R.cols, 1, rd);
                        offender = true;
                    }
            if (!offender) break;
        }
    }

    std::vector<uint32_t> diag;
    for (uint32_t i = 0; i < width; ++i) {
        uint32_t v = (i < pos && R.at(i, i) != 0) ? gcd_u32(R.at(i, i), m) : m;
        diag.push_back(v);
        if (gen_rows) gen_rows->push_back(S.row(i));
    }
    return diag;
}

Subquotient subquotient(const MatrixZn& num, const MatrixZn& den) {
    if (num.mod != den.mod || num.cols != den.cols) throw ZnError{ZnError::Mismatch, "subquotient"};
    HowellForm hn = howell(num, false);
    uint32_t k = hn.basis.rows;
    uint32_t m = num.mod;

    std::vector<Row> rel;
    for (uint32_t i = 0; i < den.rows; ++i) {
        auto w = coords_in_basis(hn, den.row(i));
        if (!w) throw ZnError{ZnError::NotContained, "denominator not inside numerator span"};
        rel.push_back(*w);
    }
    // relations among the Howell basis rows themselves
    MatrixZn selfker = kernel(hn.basis);
    for (uint32_t i = 0; i < selfker.rows; ++i) rel.push_back(selfker.row(i));

    Subquotient sq;
    sq.ambient_rank = num.cols;
    sq.numerator = hn.basis;
    sq.denominator = howell_basis(den);

    std::vector<Row> gens;
    auto diag = smith_diagonal(MatrixZn::from_rows(rel, k, m), k, &gens);
    std::vector<Row> keep;
    for (uint32_t i = 0; i < diag.size(); ++i) {
        if (diag[i] == 1) continue;
        sq.invariant_factors.push_back(diag[i]);
        keep.push_back(row_mat(gens[i], hn.basis));
    }
    sq.generators = MatrixZn::from_rows(keep, num.cols, m);
    return sq;
}

MatrixZn read_matrix(std::istream& in) {
    uint32_t r, c, m;
    if (!(in >> r >> c >> m)) throw ZnError{ZnError::Mismatch, "matrix header"};
    MatrixZn M(r, c, m);
    for (size_t i = 0; i < M.a.size(); ++i) {
        int64_t v;
        if (!(in >> v)) throw ZnError{ZnError::Mismatch, "matrix entries"};
        M.a[i] = uint32_t(((v % m) + m) % m);
    }
    return M;
}

void write_matrix(std::ostream& out, const MatrixZn& M) {
    out << M.rows << ' ' << M.cols << ' ' << M.mod << '\n';
    for (uint32_t i = 0; i < M.rows; ++i) {
        for (uint32_t j = 0; j < M.cols; ++j) out << M.at(i, j) << (j + 1 == M.cols ? '\n' : ' ');
    }
}

namespace ref {

MatrixZn mat_mul(const MatrixZn& A, const MatrixZn& B) {
    if (A.cols != B.rows || A.mod != B.mod) throw ZnError{ZnError::Mismatch, "ref::mat_mul"};
    MatrixZn C(A.rows, B.cols, A.mod);
    for (uint32_t i = 0; i < A.rows; ++i)
        for (uint32_t j = 0; j < B.cols; ++j) {
            uint64_t acc = 0;
            for (uint32_t k = 0; k < A.cols; ++k) acc += uint64_t(A.at(i, k)) * B.at(k, j);
            C.at(i, j) = uint32_t(acc % A.mod);
        }
    return C;
}

// Insertion-based Howell form; one row at a time, annihilators re-inserted.
MatrixZn howell_basis(const MatrixZn& M) {
    uint32_t m = M.mod;
    uint32_t cols = M.cols;
    Reducer rd(m);
    std::vector<Row> out(cols);  // at most one row per pivot column

    auto insert = [&](Row v, auto&& self) -> void {
        for (;;) {
            size_t c = leading(v);
            if (c >= cols) return;
            if (out[c].empty()) {
                uint32_t u = unit_for(v[c], m);
                scale_row(v.data(), cols, u, rd);
                uint32_t p = v[c];
                out[c] = v;
                if (p != 1) {
                    Row ann(cols);
                    for (size_t i = 0; i < cols; ++i) ann[i] = rd.reduce(uint64_t(m / p) * v[i]);
                    self(std::move(ann), self);
                }
                return;
            }
            uint32_t p = out[c][c];
            if (v[c] % p == 0) {
                axpy(v.data(), out[c].data(), cols, rd.neg(v[c] / p), rd);
            } else {
                Row piv = out[c];
                gcd_combine(piv, v, c, rd);
                uint32_t u = unit_for(piv[c], m);
                scale_row(piv.data(), cols, u, rd);
                uint32_t np = piv[c];
                out[c] = piv;
                if (np != 1) {
                    Row ann(cols);
                    for (size_t i = 0; i < cols; ++i) ann[i] = rd.reduce(uint64_t(m / np) * piv[i]);
                    self(std::move(ann), self);
                }
            }
        }
    };
    for (uint32_t i = 0; i < M.rows; ++i) insert(M.row(i), insert);

    std::vector<Row> rows;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < cols; ++c)
        if (!out[c].empty()) {
            rows.push_back(out[c]);
            pivots.push_back(c);
        }
    // back-reduction
    for (size_t k = 0; k < rows.size(); ++k) {
        size_t c = pivots[k];
        uint32_t p = rows[k][c];
        for (size_t j = 0; j < k; ++j) {
            uint32_t q = rows[j][c] / p;
            axpy(rows[j].data(), rows[k].data(), cols, rd.neg(q), rd);
        }
    }
    return MatrixZn::from_rows(rows, cols, m);
}

MatrixZn kernel(const MatrixZn& M) {
    // brute force on top of the parallel-free reference Howell of [M | I]
    MatrixZn aug(M.rows, M.cols + M.rows, M.mod);
    for (uint32_t i = 0; i < M.rows; ++i) {
        std::copy(M.row_ptr(i), M.row_ptr(i) + M.cols, aug.row_ptr(i));
        aug.at(i, M.cols + i) = 1 % M.mod;
    }
    MatrixZn h = ref::howell_basis(aug);
    std::vector<Row> ker;
    for (uint32_t i = 0; i < h.rows; ++i) {
        Row r = h.row(i);
        if (leading(r) >= M.cols) ker.emplace_back(r.begin() + M.cols, r.end());
    }
    return MatrixZn::from_rows(ker, M.rows, M.mod);
}

}  // namespace ref

}  // namespace cohomkern::znz
