#include "cohomkern/cohomology.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cohomkern {

using znz::MatrixZn;
using znz::Row;

std::shared_ptr<const GroupTable> table_of(const MetacyclicGroup& G) {
    return std::make_shared<const GroupTable>(GroupTable::of_group(G));
}

std::shared_ptr<const GroupTable> table_of(const MetacyclicGroup& G, const Subgroup& S) {
    return std::make_shared<const GroupTable>(GroupTable::of_subgroup(G, S));
}

GModule gmodule_of(const FreeModuleBasis& M, std::shared_ptr<const GroupTable> T, uint32_t mod,
                   std::string name) {
    GModule m;
    m.name = name.empty() ? M.name : std::move(name);
    m.T = std::move(T);
    m.mod = mod;
    m.rank = M.rank();
    m.act.reserve(m.T->n);
    for (uint32_t g = 0; g < m.T->n; ++g)
        m.act.push_back(znz::reduce_mod(M.action_matrix(m.T->elems[g]), mod));
    return m;
}

GModule trivial_module(std::shared_ptr<const GroupTable> T, uint32_t mod, std::string name) {
    GModule m;
    m.name = std::move(name);
    m.T = std::move(T);
    m.mod = mod;
    m.rank = 1;
    m.act.assign(m.T->n, MatrixZn::identity(1, mod));
    return m;
}

GModule direct_sum(const GModule& A, const GModule& B) {
    if (A.T != B.T || A.mod != B.mod)
        throw Error(Errc::ModulusMismatch, "direct_sum over different groups/moduli");
    GModule m;
    m.name = A.name + "+" + B.name;
    m.T = A.T;
    m.mod = A.mod;
    m.rank = A.rank + B.rank;
    for (uint32_t g = 0; g < m.T->n; ++g) {
        MatrixZn M(m.rank, m.rank, m.mod);
        for (uint32_t i = 0; i < A.rank; ++i)
            for (uint32_t j = 0; j < A.rank; ++j) M.at(i, j) = A.act[g].at(i, j);
        for (uint32_t i = 0; i < B.rank; ++i)
            for (uint32_t j = 0; j < B.rank; ++j) M.at(A.rank + i, A.rank + j) = B.act[g].at(i, j);
        m.act.push_back(std::move(M));
    }
    return m;
}

GModule restrict_module(const GModule& M, std::shared_ptr<const GroupTable> sub,
                        const std::vector<uint32_t>& embed) {
    GModule m;
    m.name = M.name;
    m.T = std::move(sub);
    m.mod = M.mod;
    m.rank = M.rank;
    for (uint32_t g = 0; g < m.T->n; ++g) m.act.push_back(M.act[embed[g]]);
    return m;
}

namespace {
size_t ipow(size_t b, uint32_t e) {
    size_t r = 1;
    while (e--) r *= b;
    return r;
}

// row * act[g] restricted to one rank-slice
void act_row(const GModule& M, uint32_t g, const uint32_t* in, uint32_t* out) {
    const MatrixZn& A = M.act[g];
    for (uint32_t j = 0; j < M.rank; ++j) {
        uint64_t acc = 0;
        for (uint32_t k = 0; k < M.rank; ++k) acc += uint64_t(in[k]) * A.at(k, j);
        out[j] = uint32_t(acc % M.mod);
    }
}
}  // namespace

Cochain::Cochain(const GModule& m, uint32_t n) : M(&m), degree(n) {
    v.assign(ipow(m.T->n, n) * m.rank, 0);
}

size_t Cochain::tuples() const { return ipow(M->T->n, degree); }

bool Cochain::is_zero() const {
    return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

namespace {
bool same_shape(const Cochain& a, const Cochain& b) {
    return a.degree == b.degree && a.M->rank == b.M->rank && a.M->mod == b.M->mod &&
           a.M->T->n == b.M->T->n;
}
}  // namespace

Cochain cochain_add(const Cochain& a, const Cochain& b) {
    if (!same_shape(a, b)) throw Error(Errc::ModulusMismatch, "cochain_add");
    Cochain r = a;
    for (size_t i = 0; i < r.v.size(); ++i) r.v[i] = (a.v[i] + b.v[i]) % a.M->mod;
    return r;
}

Cochain cochain_sub(const Cochain& a, const Cochain& b) {
    if (!same_shape(a, b)) throw Error(Errc::ModulusMismatch, "cochain_sub");
    Cochain r = a;
    for (size_t i = 0; i < r.v.size(); ++i) r.v[i] = (a.v[i] + a.M->mod - b.v[i]) % a.M->mod;
    return r;
}

Cochain cochain_neg(const Cochain& a) {
    Cochain r = a;
    for (auto& x : r.v) x = x ? a.M->mod - x : 0;
    return r;
}

Cochain coboundary(const Cochain& c) {
    const GModule& M = *c.M;
    const uint32_t N = M.T->n, r = M.rank, mod = M.mod;
    const uint32_t n = c.degree;
    Cochain out(M, n + 1);
    const size_t out_tuples = out.tuples();
    std::vector<size_t> pw(n + 2);
    pw[0] = 1;
    for (uint32_t k = 1; k <= n + 1; ++k) pw[k] = pw[k - 1] * N;

#ifdef _OPENMP
#pragma omp parallel if (out_tuples * r > (1u << 14))
#endif
    {
        std::vector<uint32_t> g(n + 1), tmp(r);
        std::vector<size_t> digits(n + 1);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long t = 0; t < long(out_tuples); ++t) {
            size_t rem = size_t(t);
            for (uint32_t k = 0; k <= n; ++k) {
                g[k] = uint32_t(rem / pw[n - k]);
                rem %= pw[n - k];
            }
            uint32_t* dst = out.at(size_t(t));
            // g[0] * c(g[1..n])
            size_t src0 = 0;
            for (uint32_t k = 1; k <= n; ++k) src0 = src0 * N + g[k];
            act_row(M, g[0], c.at(src0), tmp.data());
            for (uint32_t l = 0; l < r; ++l) dst[l] = tmp[l];
            // middle terms with alternating signs
            for (uint32_t i = 1; i <= n; ++i) {
                size_t src = 0;
                for (uint32_t k = 0; k <= n; ++k) {
                    if (k == i) continue;
                    uint32_t dig = (k == i - 1) ? M.T->times(g[i - 1], g[i]) : g[k];
                    src = src * N + dig;
                }
                const uint32_t* row = c.at(src);
                if (i % 2 == 1)
                    for (uint32_t l = 0; l < r; ++l) dst[l] = (dst[l] + mod - row[l]) % mod;
                else
                    for (uint32_t l = 0; l < r; ++l) dst[l] = (dst[l] + row[l]) % mod;
            }
            // (-1)^(n+1) c(g[0..n-1])
            size_t srcl = 0;
            for (uint32_t k = 0; k < n; ++k) srcl = srcl * N + g[k];
            const uint32_t* row = c.at(srcl);
            if ((n + 1) % 2 == 1)
                for (uint32_t l = 0; l < r; ++l) dst[l] = (dst[l] + mod - row[l]) % mod;
            else
                for (uint32_t l = 0; l < r; ++l) dst[l] = (dst[l] + row[l]) % mod;
        }
    }
    return out;
}

bool is_cocycle(const Cochain& c) { return coboundary(c).is_zero(); }

znz::MatrixZn coboundary_matrix(const GModule& M, uint32_t n) {
    const uint32_t N = M.T->n, r = M.rank, mod = M.mod;
    const size_t src_tuples = ipow(N, n), dst_tuples = ipow(N, n + 1);
    const size_t rows = src_tuples * r, cols = dst_tuples * r;
    MatrixZn D(uint32_t(rows), uint32_t(cols), mod);
    std::vector<size_t> pw(n + 2);
    pw[0] = 1;
    for (uint32_t k = 1; k <= n + 1; ++k) pw[k] = pw[k - 1] * N;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (rows * cols > (1u << 18))
#endif
    for (long t = 0; t < long(dst_tuples); ++t) {
        std::vector<uint32_t> g(n + 1);
        size_t rem = size_t(t);
        for (uint32_t k = 0; k <= n; ++k) {
            g[k] = uint32_t(rem / pw[n - k]);
            rem %= pw[n - k];
        }
        size_t col0 = size_t(t) * r;
        size_t src0 = 0;
        for (uint32_t k = 1; k <= n; ++k) src0 = src0 * N + g[k];
        const MatrixZn& A = M.act[g[0]];
        for (uint32_t k = 0; k < r; ++k)
            for (uint32_t l = 0; l < r; ++l) {
                uint32_t& e = D.at(uint32_t(src0 * r + k), uint32_t(col0 + l));
                e = (e + A.at(k, l)) % mod;
            }
        for (uint32_t i = 1; i <= n; ++i) {
            size_t src = 0;
            for (uint32_t k = 0; k <= n; ++k) {
                if (k == i) continue;
                uint32_t dig = (k == i - 1) ? M.T->times(g[i - 1], g[i]) : g[k];
                src = src * N + dig;
            }
            uint32_t add = (i % 2 == 1) ? mod - 1 : 1;
            for (uint32_t k = 0; k < r; ++k) {
                uint32_t& e = D.at(uint32_t(src * r + k), uint32_t(col0 + k));
                e = (e + add) % mod;
            }
        }
        size_t srcl = 0;
        for (uint32_t k = 0; k < n; ++k) srcl = srcl * N + g[k];
        uint32_t add = ((n + 1) % 2 == 1) ? mod - 1 : 1;
        for (uint32_t k = 0; k < r; ++k) {
            uint32_t& e = D.at(uint32_t(srcl * r + k), uint32_t(col0 + k));
            e = (e + add) % mod;
        }
    }
    return D;
}

Cochain apply_module_map(const Cochain& c, const MatrixZn& F, const GModule& target) {
    if (F.rows != c.M->rank || F.cols != target.rank || F.mod != target.mod)
        throw Error(Errc::ModulusMismatch, "apply_module_map shape");
    Cochain out(target, c.degree);
    const size_t nt = c.tuples();
    const uint32_t rin = c.M->rank, rout = target.rank, mod = target.mod;
    for (size_t t = 0; t < nt; ++t) {
        const uint32_t* in = c.at(t);
        uint32_t* o = out.at(t);
        for (uint32_t j = 0; j < rout; ++j) {
            uint64_t acc = 0;
            for (uint32_t k = 0; k < rin; ++k) acc += uint64_t(in[k]) * F.at(k, j);
            o[j] = uint32_t(acc % mod);
        }
    }
    return out;
}

static void check_degree(const GModule& M, uint32_t n, const CohomologyLimits& lim) {
    bool ok = n <= lim.degree_bound || (n == 3 && M.T->n <= lim.degree3_order_cap);
    if (!ok) {
        std::ostringstream os;
        os << "degree " << n << " above the configured bound for |G| = " << M.T->n;
        throw Error(Errc::DegreeTooLarge, os.str());
    }
    size_t rows = ipow(M.T->n, n) * M.rank;
    size_t cols = ipow(M.T->n, n + 1) * M.rank;
    if (rows * cols > lim.max_matrix_entries)
        throw Error(Errc::DegreeTooLarge, "coboundary matrix exceeds the size cap");
}

CohomologyGroup cohomology_group(const GModule& M, uint32_t n, const CohomologyLimits& lim) {
    check_degree(M, n, lim);
    CohomologyGroup H;
    H.M = &M;
    H.degree = n;

    MatrixZn dn = coboundary_matrix(M, n);
    MatrixZn Zb = znz::kernel(dn);
    H.Z = znz::howell(Zb, false);

    if (n == 0) {
        H.B = MatrixZn(0, uint32_t(ipow(M.T->n, n) * M.rank), M.mod);
    } else {
        H.B = znz::howell_basis(coboundary_matrix(M, n - 1));
    }

    std::vector<Row> rel;
    for (uint32_t i = 0; i < H.B.rows; ++i) {
        auto w = znz::coords_in_basis(H.Z, H.B.row(i));
        if (!w) throw Error(Errc::ConstructionFailure, "coboundary outside the cocycle span");
        rel.push_back(*w);
    }
    MatrixZn ann = znz::kernel(H.Z.basis);
    for (uint32_t i = 0; i < ann.rows; ++i) rel.push_back(ann.row(i));
    H.rel = MatrixZn::from_rows(rel, H.class_dim(), M.mod);
    H.relH = znz::howell(H.rel, false);

    std::vector<Row> gens;
    auto diag = znz::smith_diagonal(H.rel, H.class_dim(), &gens);
    for (uint32_t i = 0; i < diag.size(); ++i) {
        if (diag[i] == 1) continue;
        H.invariant_factors.push_back(diag[i]);
        Cochain g(M, n);
        g.v = znz::row_mat(gens[i], H.Z.basis);
        H.generators.push_back(std::move(g));
    }
    return H;
}

Row CohomologyGroup::class_coords(const Cochain& z) const {
    auto w = znz::coords_in_basis(Z, z.v);
    if (!w) throw Error(Errc::NotACocycle, "cochain is not a cocycle of " + M->name);
    return *w;
}

bool CohomologyGroup::class_vector_trivial(const Row& w) const { return znz::in_span(relH, w); }

bool CohomologyGroup::is_coboundary(const Cochain& z) const {
    return class_vector_trivial(class_coords(z));
}

bool CohomologyGroup::cohomologous(const Cochain& a, const Cochain& b) const {
    return is_coboundary(cochain_sub(a, b));
}

Cochain cup1(const Cochain& chi, const Cochain& c, const GModule* target) {
    if (chi.degree != 1 || chi.M->rank != 1)
        throw Error(Errc::UnsupportedDegree, "cup product implemented for degree-1 characters");
    const GModule& M = *c.M;
    const GModule& Tgt = target ? *target : M;
    if (Tgt.rank != M.rank || Tgt.mod != M.mod)
        throw Error(Errc::ModulusMismatch, "cup target shape");
    const uint32_t N = M.T->n;
    Cochain out(Tgt, c.degree + 1);
    const size_t inner = c.tuples();
    for (uint32_t g1 = 0; g1 < N; ++g1) {
        uint64_t s = chi.v[g1];
        for (size_t t = 0; t < inner; ++t) {
            const uint32_t* in = c.at(t);
            uint32_t* o = out.at(size_t(g1) * inner + t);
            for (uint32_t l = 0; l < M.rank; ++l) o[l] = uint32_t(s * in[l] % M.mod);
        }
    }
    return out;
}

SubgroupContext subgroup_context(const MetacyclicGroup& G, const Subgroup& S) {
    SubgroupContext ctx;
    ctx.big = table_of(G);
    ctx.sub = table_of(G, S);
    const uint32_t N = ctx.big->n, k = ctx.sub->n;
    ctx.embed.resize(k);
    for (uint32_t i = 0; i < k; ++i) ctx.embed[i] = G.index_of(ctx.sub->elems[i]);

    // left transversal: G = disjoint union r*S
    std::vector<bool> seen(N, false);
    for (uint32_t g = 0; g < N; ++g) {
        if (seen[g]) continue;
        ctx.left_rep.push_back(g);
        for (uint32_t s = 0; s < k; ++s) seen[ctx.big->times(g, ctx.embed[s])] = true;
    }
    // right cosets S*t: q(x) = x * t(x)^-1
    ctx.q_of.assign(N, UINT32_MAX);
    for (uint32_t g = 0; g < N; ++g) {
        if (ctx.q_of[g] != UINT32_MAX) continue;
        for (uint32_t s = 0; s < k; ++s) ctx.q_of[ctx.big->times(ctx.embed[s], g)] = s;
    }
    return ctx;
}

Cochain restriction(const Cochain& c, const SubgroupContext& ctx, const GModule& subM) {
    const uint32_t n = c.degree, K = ctx.sub->n, N = ctx.big->n;
    if (subM.rank != c.M->rank) throw Error(Errc::ModulusMismatch, "restriction rank");
    Cochain out(subM, n);
    const size_t nt = out.tuples();
    for (size_t t = 0; t < nt; ++t) {
        size_t rem = t, big = 0;
        std::vector<uint32_t> dig(n);
        for (uint32_t k = 0; k < n; ++k) {
            dig[k] = uint32_t(rem / ipow(K, n - 1 - k));
            rem %= ipow(K, n - 1 - k);
        }
        for (uint32_t k = 0; k < n; ++k) big = big * N + ctx.embed[dig[k]];
        std::copy(c.at(big), c.at(big) + c.M->rank, out.at(t));
    }
    return out;
}

Cochain corestriction(const Cochain& f, const SubgroupContext& ctx, const GModule& bigM) {
    const uint32_t n = f.degree, N = ctx.big->n, K = ctx.sub->n;
    if (bigM.rank != f.M->rank) throw Error(Errc::ModulusMismatch, "corestriction rank");
    const GroupTable& T = *ctx.big;
    const GroupTable& Ts = *ctx.sub;
    Cochain out(bigM, n);
    const size_t nt = out.tuples();
    std::vector<uint32_t> g(n), x(n + 1), s(n + 1), args(n);
    std::vector<uint32_t> tmp(bigM.rank);
    for (size_t t = 0; t < nt; ++t) {
        size_t rem = t;
        for (uint32_t k = 0; k < n; ++k) {
            g[k] = uint32_t(rem / ipow(N, n - 1 - k));
            rem %= ipow(N, n - 1 - k);
        }
        // homogeneous points 1, g1, g1g2, ...
        x[0] = 0;
        for (uint32_t k = 1; k <= n; ++k) x[k] = T.times(x[k - 1], g[k - 1]);
        uint32_t* dst = out.at(t);
        for (uint32_t r : ctx.left_rep) {
            uint32_t rinv = T.inv[r];
            for (uint32_t k = 0; k <= n; ++k) s[k] = ctx.q_of[T.times(rinv, x[k])];
            for (uint32_t k = 0; k < n; ++k) args[k] = Ts.times(Ts.inv[s[k]], s[k + 1]);
            size_t src = 0;
            for (uint32_t k = 0; k < n; ++k) src = src * K + args[k];
            // the summand is r * q(y_0) * f(args)
            act_row(bigM, T.times(r, ctx.embed[s[0]]), f.at(src), tmp.data());
            for (uint32_t l = 0; l < bigM.rank; ++l) dst[l] = (dst[l] + tmp[l]) % bigM.mod;
        }
    }
    return out;
}

Cochain bockstein_cochain(const GModule& Mbar, const GModule& Msq, const Cochain& zbar) {
    const uint32_t d = Mbar.mod;
    if (Msq.mod != d * d || Msq.rank != Mbar.rank)
        throw Error(Errc::ModulusMismatch, "bockstein modules");
    Cochain lift(Msq, zbar.degree);
    lift.v = zbar.v;  // canonical lift of representatives
    Cochain dz = coboundary(lift);
    Cochain out(Mbar, zbar.degree + 1);
    for (size_t i = 0; i < dz.v.size(); ++i) {
        if (dz.v[i] % d != 0)
            throw Error(Errc::LiftFailure, "coboundary of the lift is not divisible by d");
        out.v[i] = dz.v[i] / d;
    }
    return out;
}

znz::MatrixZn bockstein_matrix(const GModule& Mbar, const GModule& Msq,
                               const CohomologyGroup& Hn, const CohomologyGroup& Hn1) {
    MatrixZn out(Hn.class_dim(), Hn1.class_dim(), Mbar.mod);
    for (uint32_t i = 0; i < Hn.class_dim(); ++i) {
        Cochain c(Mbar, Hn.degree);
        c.v = Hn.Z.basis.row(i);
        out.set_row(i, Hn1.class_coords(bockstein_cochain(Mbar, Msq, c)));
    }
    return out;
}

SnakeContext snake_context(const ShortSequence& s) {
    SnakeContext ctx;
    auto T = table_of(*s.G);
    ctx.sub = gmodule_of(s.sub, T, s.mod);
    ctx.mid = gmodule_of(s.mid, T, s.mod);
    ctx.quot = gmodule_of(s.quot, T, s.mod);
    ctx.inj = s.inj;
    ctx.proj = s.proj;
    ctx.section = s.section;
    ctx.injH = znz::howell(s.inj, true);
    return ctx;
}

Cochain snake_connecting(const SnakeContext& ctx, const Cochain& z_quot) {
    return snake_connecting(ctx, z_quot, ctx.section);
}

Cochain snake_connecting(const SnakeContext& ctx, const Cochain& z_quot,
                         const MatrixZn& section) {
    if (!is_cocycle(z_quot)) throw Error(Errc::NotACocycle, "snake input");
    Cochain lifted = apply_module_map(z_quot, section, ctx.mid);
    Cochain dl = coboundary(lifted);
    Cochain out(ctx.sub, z_quot.degree + 1);
    const size_t nt = dl.tuples();
    for (size_t t = 0; t < nt; ++t) {
        Row b(dl.at(t), dl.at(t) + ctx.mid.rank);
        auto x = znz::solve(ctx.injH, b);
        if (!x) throw Error(Errc::SectionFailure, "snake image not inside the submodule");
        std::copy(x->begin(), x->end(), out.at(t));
    }
    return out;
}

SequenceCohomology make_sequence_cohomology(const FourTermSequence& seq) {
    const MetacyclicGroup& G = *seq.G;
    const uint32_t d = G.d();
    SequenceCohomology sc;
    sc.seq = seq;
    sc.table = table_of(G);
    sc.M1bar = gmodule_of(seq.M1, sc.table, d, "M1bar");
    sc.M2bar = gmodule_of(seq.M2, sc.table, d, "M2bar");
    sc.M3bar = gmodule_of(seq.M3, sc.table, d, "M3bar");
    sc.M4bar = gmodule_of(seq.M4, sc.table, d, "M4bar");
    sc.M1sq = gmodule_of(seq.M1, sc.table, d * d, "M1");
    sc.M2sq = gmodule_of(seq.M2, sc.table, d * d, "M2");
    sc.M3sq = gmodule_of(seq.M3, sc.table, d * d, "M3");
    sc.M4sq = gmodule_of(seq.M4, sc.table, d * d, "M4");
    sc.d1d = znz::reduce_mod(seq.d1, d);
    sc.d2d = znz::reduce_mod(seq.d2, d);
    sc.d3d = znz::reduce_mod(seq.d3, d);
    sc.h1d = znz::reduce_mod(seq.h1, d);
    sc.h2d = znz::reduce_mod(seq.h2, d);
    sc.h3d = znz::reduce_mod(seq.h3, d);
    sc.lifting = seq.lifting;
    sc.d1H = znz::howell(sc.d1d, true);

    FreeModuleBasis M3p_d = make_module(G, ModuleName::M3prime, d);
    FreeModuleBasis M3_d = make_module(G, ModuleName::M3, d);
    FreeModuleBasis M2_d = make_module(G, ModuleName::M2, d);
    FreeModuleBasis M3p_sq = make_module(G, ModuleName::M3prime, d * d);
    sc.Delta = gmodule_of(M3p_d, sc.table, d, "Delta");
    sc.DeltaSq = gmodule_of(M3p_sq, sc.table, d * d, "Delta2");
    sc.delta_incl = M3p_d.map_matrix_to(M3_d, M3p_d.basis);
    sc.delta_inclH = znz::howell(sc.delta_incl, true);
    {
        RingElement omt = ring_sub(RingElement::one(G, d), RingElement::of(G, d, G.tau()));
        sc.d2_into_delta = M2_d.right_mul_matrix(M3p_d, omt);
    }
    // htilde2 = d1^{-1} h2 on Delta, mod d
    {
        MatrixZn m(sc.Delta.rank, sc.M1bar.rank, d);
        for (uint32_t k = 0; k < sc.Delta.rank; ++k) {
            Row in_m3 = sc.delta_incl.row(k);
            Row in_m2 = znz::row_mat(in_m3, sc.h2d);
            auto x = znz::solve(sc.d1H, in_m2);
            if (!x)
                throw Error(Errc::ConstructionFailure, "h2(Delta) is not inside the image of d1");
            m.set_row(k, *x);
        }
        sc.htilde2 = m;
    }
    // htilde3 = h3 into Delta, mod d
    {
        MatrixZn m(sc.M4bar.rank, sc.Delta.rank, d);
        for (uint32_t k = 0; k < sc.M4bar.rank; ++k) {
            auto x = znz::solve(sc.delta_inclH, sc.h3d.row(k));
            if (!x)
                throw Error(Errc::ConstructionFailure, "h3 mod d is not inside Delta");
            m.set_row(k, *x);
        }
        sc.htilde3 = m;
    }
    // torsion-level versions: d * (map) lands in the image over d^2; the
    // preimage is divisible by d and identifies with a mod-d matrix
    sc.delta_incl_sq = M3p_sq.map_matrix_to(seq.M3, M3p_sq.basis);
    {
        auto d1H_sq = znz::howell(seq.d1, true);
        MatrixZn m(sc.Delta.rank, sc.M1bar.rank, d);
        for (uint32_t k = 0; k < sc.Delta.rank; ++k) {
            Row y = znz::row_mat(sc.delta_incl_sq.row(k), seq.h2);
            for (auto& v : y) v = uint32_t(uint64_t(v) * d % (d * d));
            auto w = znz::solve(d1H_sq, y);
            if (!w) throw Error(Errc::LiftFailure, "d*h2(Delta) outside im(d1) over d^2");
            Row out(w->size());
            for (size_t i = 0; i < w->size(); ++i) {
                if ((*w)[i] % d != 0) throw Error(Errc::LiftFailure, "torsion h2 not divisible");
                out[i] = (*w)[i] / d;
            }
            m.set_row(k, out);
        }
        sc.htilde2_tor = m;
    }
    {
        auto inclH_sq = znz::howell(sc.delta_incl_sq, true);
        MatrixZn m(sc.M4bar.rank, sc.Delta.rank, d);
        for (uint32_t k = 0; k < sc.M4bar.rank; ++k) {
            Row y = seq.h3.row(k);
            for (auto& v : y) v = uint32_t(uint64_t(v) * d % (d * d));
            auto w = znz::solve(inclH_sq, y);
            if (!w) throw Error(Errc::LiftFailure, "d*h3 outside Delta over d^2");
            Row out(w->size());
            for (size_t i = 0; i < w->size(); ++i) {
                if ((*w)[i] % d != 0) throw Error(Errc::LiftFailure, "torsion h3 not divisible");
                out[i] = (*w)[i] / d;
            }
            m.set_row(k, out);
        }
        sc.htilde3_tor = m;
    }
    return sc;
}

Cochain eta_generic(const SequenceCohomology& sc, const Cochain& c) {
    if (c.M->rank != sc.M4bar.rank || c.M->mod != sc.M4bar.mod)
        throw Error(Errc::ModulusMismatch, "eta input must live in M4 mod d");
    if (!is_cocycle(c)) throw Error(Errc::NotACocycle, "eta input");
    Cochain lc = apply_module_map(c, sc.lifting, sc.M3bar);
    Cochain dlc = coboundary(lc);
    Cochain h2dlc = apply_module_map(dlc, sc.h2d, sc.M2bar);
    Cochain out(sc.M1bar, c.degree + 1);
    const size_t nt = h2dlc.tuples();
    for (size_t t = 0; t < nt; ++t) {
        Row b(h2dlc.at(t), h2dlc.at(t) + sc.M2bar.rank);
        auto x = znz::solve(sc.d1H, b);
        if (!x) throw Error(Errc::OutsideImage, "h2 delta ell(c) is not inside the image of d1");
        std::copy(x->begin(), x->end(), out.at(t));
    }
    return sc.seq.eta_sign < 0 ? cochain_neg(out) : out;
}

Cochain eta_closed(const SequenceCohomology& sc, const Cochain& c) {
    const MetacyclicGroup& G = *sc.seq.G;
    const uint32_t d = G.d(), s = G.s(), N = G.order();
    const uint32_t n = c.degree;
    Cochain out(sc.M1bar, n + 1);
    const size_t inner = c.tuples();

    // tau-exponent of g1 in the family's preferred coset decomposition
    auto tau_exponent = [&](GroupElement e) -> uint32_t {
        switch (sc.seq.family) {
            case Family::Cyclic:
            case Family::Arason:
                return e.i;
            case Family::DihedralClassic: {
                // g = (sigma tau)^j tau^i
                if (e.j == 0) return e.i;
                uint32_t tinv = znz::inv_mod(G.t(), d);
                return uint32_t((uint64_t(tinv) * e.i + d - 1) % d);
            }
            case Family::Semidirect: {
                // g = sigma^j tau^i with i = t^{-j} * (tau-exponent)
                return uint32_t(uint64_t(G.theta(-(int64_t)e.j)) * e.i % d);
            }
        }
        return 0;
    };

    for (uint32_t g1 = 0; g1 < N; ++g1) {
        GroupElement e = G.element(g1);
        uint32_t i = tau_exponent(e);
        for (size_t t = 0; t < inner; ++t) {
            const uint32_t* cm = c.at(t);
            uint64_t val = 0;
            if (sc.seq.family == Family::Semidirect) {
                for (uint32_t m = 0; m < s / 2; ++m)
                    val += uint64_t(cm[m]) * G.theta(-(int64_t)m);
            } else {
                val = cm[0];
            }
            val = uint64_t(i) * (val % d) % d;
            out.at(size_t(g1) * inner + t)[0] = val ? d - uint32_t(val) : 0;  // the -i factor
        }
    }
    return out;
}

std::vector<Cochain> sample_cocycles(const CohomologyGroup& H, size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Cochain> out;
    out.reserve(count);
    const uint32_t k = H.class_dim(), mod = H.M->mod;
    for (size_t i = 0; i < count; ++i) {
        Row w(k);
        for (uint32_t j = 0; j < k; ++j) w[j] = uint32_t(rng() % mod);
        Cochain c(*H.M, H.degree);
        c.v = znz::row_mat(w, H.Z.basis);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// class-level image rows of a module map applied to the Z-basis of src
MatrixZn class_map(const CohomologyGroup& src, const CohomologyGroup& tgt, const GModule& tgtM,
                   const MatrixZn& F) {
    MatrixZn out(src.class_dim(), tgt.class_dim(), src.M->mod);
    for (uint32_t i = 0; i < src.class_dim(); ++i) {
        Cochain c(*src.M, src.degree);
        c.v = src.Z.basis.row(i);
        out.set_row(i, tgt.class_coords(apply_module_map(c, F, tgtM)));
    }
    return out;
}

bool exact_at(const MatrixZn& incoming, const CohomologyGroup& mid, const MatrixZn& outgoing,
              const MatrixZn& next_rel) {
    MatrixZn im = znz::vstack(incoming, mid.rel);
    MatrixZn st = znz::vstack(outgoing, next_rel);
    MatrixZn ker_full = znz::kernel(st);
    MatrixZn ker(ker_full.rows, mid.class_dim(), mid.M->mod);
    for (uint32_t i = 0; i < ker_full.rows; ++i)
        for (uint32_t j = 0; j < mid.class_dim(); ++j) ker.at(i, j) = ker_full.at(i, j);
    return znz::same_span(im, znz::vstack(ker, mid.rel));
}

MatrixZn blockdiag(const MatrixZn& A, const MatrixZn& B) {
    MatrixZn C(A.rows + B.rows, A.cols + B.cols, A.mod);
    for (uint32_t i = 0; i < A.rows; ++i)
        for (uint32_t j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (uint32_t i = 0; i < B.rows; ++i)
        for (uint32_t j = 0; j < B.cols; ++j) C.at(A.rows + i, A.cols + j) = B.at(i, j);
    return C;
}

std::string factors_str(const std::vector<uint32_t>& f) {
    if (f.empty()) return "trivial";
    std::ostringstream os;
    for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    return os.str();
}

}  // namespace

VerificationReport six_term_verify(const SequenceCohomology& sc, uint32_t n,
                                   const CohomologyLimits& lim) {
    VerificationReport rep;
    std::string pre = "sixterm.n" + std::to_string(n) + ".";

    CohomologyGroup HA_n = cohomology_group(sc.M1bar, n, lim);
    CohomologyGroup HB_n = cohomology_group(sc.M2bar, n, lim);
    CohomologyGroup HC_n = cohomology_group(sc.M3bar, n, lim);
    CohomologyGroup HD_n = cohomology_group(sc.M4bar, n, lim);
    CohomologyGroup HA_n1 = cohomology_group(sc.M1bar, n + 1, lim);
    CohomologyGroup HB_n1 = cohomology_group(sc.M2bar, n + 1, lim);
    CohomologyGroup HC_n1 = cohomology_group(sc.M3bar, n + 1, lim);
    CohomologyGroup HD_n1 = cohomology_group(sc.M4bar, n + 1, lim);
    CohomologyGroup HDel_n1 = cohomology_group(sc.Delta, n + 1, lim);

    // Bockstein prerequisites; M4's own Bockstein is recorded, only the
    // composite htilde3 * B_D enters the hypotheses
    auto bockstein_vanishes = [&](const GModule& bar, const GModule& sq, const CohomologyGroup& Hn,
                                  const CohomologyGroup& Hn1) {
        for (uint32_t i = 0; i < Hn.class_dim(); ++i) {
            Cochain c(bar, n);
            c.v = Hn.Z.basis.row(i);
            if (!Hn1.is_coboundary(bockstein_cochain(bar, sq, c))) return false;
        }
        return true;
    };
    bool bA = bockstein_vanishes(sc.M1bar, sc.M1sq, HA_n, HA_n1);
    bool bB = bockstein_vanishes(sc.M2bar, sc.M2sq, HB_n, HB_n1);
    bool bC = bockstein_vanishes(sc.M3bar, sc.M3sq, HC_n, HC_n1);
    bool bD = bockstein_vanishes(sc.M4bar, sc.M4sq, HD_n, HD_n1);
    bool comp = true;
    for (uint32_t i = 0; i < HD_n.class_dim(); ++i) {
        Cochain c(sc.M4bar, n);
        c.v = HD_n.Z.basis.row(i);
        Cochain b = bockstein_cochain(sc.M4bar, sc.M4sq, c);
        Cochain hb = apply_module_map(b, sc.htilde3, sc.Delta);
        if (!HDel_n1.is_coboundary(hb)) {
            comp = false;
            break;
        }
    }
    // hypothesis records; in the finite model the degree >= 1 Bocksteins can
    // be honestly nonzero, and Remark-2.5-style tabulation decides which
    // exactness positions the theorem still asserts
    rep.add(pre + "bockstein.M1", true, bA ? "zero" : "nonzero");
    rep.add(pre + "bockstein.M2", true, bB ? "zero" : "nonzero");
    rep.add(pre + "bockstein.M3", true, bC ? "zero" : "nonzero");
    rep.add(pre + "bockstein.M4", true, bD ? "zero" : "nonzero; only the composite is required");
    rep.add(pre + "bockstein.h3composite", true, comp ? "zero" : "nonzero");

    // maps on class presentations
    MatrixZn m1 = znz::vstack(class_map(HB_n, HC_n, sc.M3bar, sc.d2d),
                              class_map(HD_n, HC_n, sc.M3bar, sc.h3d));
    MatrixZn m2 = class_map(HC_n, HD_n, sc.M4bar, sc.d3d);
    MatrixZn m3(HD_n.class_dim(), HA_n1.class_dim(), sc.M4bar.mod);
    for (uint32_t i = 0; i < HD_n.class_dim(); ++i) {
        Cochain c(sc.M4bar, n);
        c.v = HD_n.Z.basis.row(i);
        m3.set_row(i, HA_n1.class_coords(eta_generic(sc, c)));
    }
    MatrixZn m4 = class_map(HA_n1, HB_n1, sc.M2bar, sc.d1d);
    MatrixZn m5 = MatrixZn(HB_n1.class_dim(), HA_n1.class_dim() + HC_n1.class_dim(), sc.M1bar.mod);
    {
        MatrixZn toA = class_map(HB_n1, HA_n1, sc.M1bar, sc.h1d);
        MatrixZn toC = class_map(HB_n1, HC_n1, sc.M3bar, sc.d2d);
        for (uint32_t i = 0; i < m5.rows; ++i) {
            for (uint32_t j = 0; j < toA.cols; ++j) m5.at(i, j) = toA.at(i, j);
            for (uint32_t j = 0; j < toC.cols; ++j) m5.at(i, toA.cols + j) = toC.at(i, j);
        }
    }

    // exactness is asserted exactly at the positions the verified hypotheses
    // imply; elsewhere the observed outcome is recorded without failing
    auto position = [&](const std::string& id, bool implied, bool observed) {
        if (implied)
            rep.add(id, observed);
        else
            rep.add(id, true, std::string("hypotheses not satisfied; observed ") +
                                  (observed ? "exact" : "inexact"));
    };
    bool positions_ac = bA && bC, position_d = comp, position_b = comp && bB;
    position(pre + "exact.C", positions_ac, exact_at(m1, HC_n, m2, HD_n.rel));
    position(pre + "exact.D", position_d, exact_at(m2, HD_n, m3, HA_n1.rel));
    position(pre + "exact.A", positions_ac, exact_at(m3, HA_n1, m4, HB_n1.rel));
    position(pre + "exact.B", position_b,
             exact_at(m4, HB_n1, m5, blockdiag(HA_n1.rel, HC_n1.rel)));

    // the kernel quotient H^n(M4)/im(d3*) is carried isomorphically by eta;
    // this is a consequence of exactness at the eta position
    {
        auto q_factors = [&](const MatrixZn& rel_plus) {
            std::vector<uint32_t> fs;
            for (auto f : znz::smith_diagonal(rel_plus, HD_n.class_dim(), nullptr))
                if (f != 1) fs.push_back(f);
            return fs;
        };
        std::vector<uint32_t> lhs = q_factors(znz::vstack(m2, HD_n.rel));
        znz::Subquotient rhs = znz::subquotient(znz::vstack(m3, HA_n1.rel), HA_n1.rel);
        bool ok = lhs == rhs.invariant_factors;
        std::string detail = "H^n(M4)/im(d3*) = " + factors_str(lhs) + ", im(eta) = " +
                             factors_str(rhs.invariant_factors);
        if (position_d)
            rep.add(pre + "kernel_iso", ok, detail);
        else
            rep.add(pre + "kernel_iso", true, "hypotheses not satisfied; " + detail);
    }
    return rep;
}

VerificationReport shapiro_check(const MetacyclicGroup& G, SubgroupKind kind, uint32_t n,
                                 const CohomologyLimits& lim) {
    VerificationReport rep;
    const uint32_t d = G.d();
    Subgroup S = make_subgroup(G, kind);
    FreeModuleBasis ind = induced_module(G, S, d);
    GModule indM = gmodule_of(ind, table_of(G), d);
    CohomologyGroup HG = cohomology_group(indM, n, lim);
    GModule triv = trivial_module(table_of(G, S), d);
    CohomologyGroup HS = cohomology_group(triv, n, lim);
    bool ok = HG.invariant_factors == HS.invariant_factors;
    std::ostringstream os;
    os << "H^" << n << "(G," << ind.name << ") = " << factors_str(HG.invariant_factors)
       << " vs H^" << n << "(S,Z/" << d << ") = " << factors_str(HS.invariant_factors);
    rep.add("shapiro." + std::string(ind.name) + ".n" + std::to_string(n), ok, os.str());
    return rep;
}

VerificationReport cor_res_check(const MetacyclicGroup& G, SubgroupKind kind, const GModule& M,
                                 uint32_t n, const CohomologyLimits& lim) {
    VerificationReport rep;
    Subgroup S = make_subgroup(G, kind);
    SubgroupContext ctx = subgroup_context(G, S);
    GModule subM = restrict_module(M, ctx.sub, ctx.embed);
    CohomologyGroup H = cohomology_group(M, n, lim);
    bool ok = true;
    for (uint32_t i = 0; i < H.class_dim() && ok; ++i) {
        Cochain c(M, n);
        c.v = H.Z.basis.row(i);
        Cochain back = corestriction(restriction(c, ctx, subM), ctx, M);
        Cochain scaled = c;
        for (auto& x : scaled.v) x = uint32_t(uint64_t(x) * ctx.index() % M.mod);
        ok = H.cohomologous(back, scaled);
    }
    rep.add("corres." + M.name + ".n" + std::to_string(n), ok);
    return rep;
}

}  // namespace cohomkern
