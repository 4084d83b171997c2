#include "cohomkern/group_ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cohomkern {

using znz::MatrixZn;
using znz::Row;

RingElement RingElement::one(const MetacyclicGroup& g, uint32_t m) {
    RingElement r(g, m);
    r.c[0] = 1 % m;
    return r;
}

RingElement RingElement::of(const MetacyclicGroup& g, uint32_t m, GroupElement e, uint32_t coef) {
    RingElement r(g, m);
    r.c[g.index_of(e)] = coef % m;
    return r;
}

bool RingElement::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](uint32_t x) { return x == 0; });
}

namespace {
void check_same(const RingElement& a, const RingElement& b) {
    if (a.G != b.G || a.mod != b.mod)
        throw Error(Errc::ModulusMismatch, "ring elements over different rings");
}
}  // namespace

RingElement ring_add(const RingElement& a, const RingElement& b) {
    check_same(a, b);
    RingElement r(*a.G, a.mod);
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = (a.c[k] + b.c[k]) % a.mod;
    return r;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
    check_same(a, b);
    RingElement r(*a.G, a.mod);
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = (a.c[k] + a.mod - b.c[k]) % a.mod;
    return r;
}

RingElement ring_neg(const RingElement& a) {
    RingElement r(*a.G, a.mod);
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.c[k] ? a.mod - a.c[k] : 0;
    return r;
}

RingElement ring_scale(const RingElement& a, uint32_t k) {
    RingElement r(*a.G, a.mod);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = uint32_t(uint64_t(k % a.mod) * a.c[i] % a.mod);
    return r;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    check_same(a, b);
    const MetacyclicGroup& G = *a.G;
    RingElement r(G, a.mod);
    uint32_t n = G.order();
    for (uint32_t x = 0; x < n; ++x) {
        if (!a.c[x]) continue;
        GroupElement gx = G.element(x);
        for (uint32_t y = 0; y < n; ++y) {
            if (!b.c[y]) continue;
            uint32_t z = G.index_of(G.mul(gx, G.element(y)));
            r.c[z] = uint32_t((r.c[z] + uint64_t(a.c[x]) * b.c[y]) % a.mod);
        }
    }
    return r;
}

RingElement ring_pow(const RingElement& a, uint32_t e) {
    RingElement r = RingElement::one(*a.G, a.mod);
    RingElement base = a;
    while (e) {
        if (e & 1) r = ring_mul(r, base);
        base = ring_mul(base, base);
        e >>= 1;
    }
    return r;
}

std::string ring_to_string(const RingElement& a) {
    const MetacyclicGroup& G = *a.G;
    std::ostringstream os;
    bool first = true;
    for (uint32_t idx = 0; idx < G.order(); ++idx) {
        uint32_t c = a.c[idx];
        if (!c) continue;
        GroupElement e = G.element(idx);
        if (!first) os << " + ";
        first = false;
        bool trivial_mon = (e.i == 0 && e.j == 0);
        if (c != 1 || trivial_mon) {
            os << c;
            if (!trivial_mon) os << "·";
        }
        if (e.i > 0) {
            os << 't';
            if (e.i > 1) os << '^' << e.i;
            if (e.j > 0) os << ' ';
        }
        if (e.j > 0) {
            os << 's';
            if (e.j > 1) os << '^' << e.j;
        }
    }
    if (first) os << '0';
    return os.str();
}

RingElement ring_parse(const MetacyclicGroup& G, uint32_t mod, const std::string& text) {
    RingElement r(G, mod);
    size_t p = 0;
    auto skip_ws = [&] { while (p < text.size() && std::isspace(uint8_t(text[p]))) ++p; };
    auto parse_int = [&]() -> uint64_t {
        uint64_t v = 0;
        size_t start = p;
        while (p < text.size() && std::isdigit(uint8_t(text[p]))) v = v * 10 + (text[p++] - '0');
        if (p == start) throw Error(Errc::ParseError, "expected integer in '" + text + "'");
        return v;
    };
    skip_ws();
    bool any = false;
    while (p < text.size()) {
        uint32_t sign = 1;
        if (text[p] == '+' || text[p] == '-') {
            if (text[p] == '-') sign = mod - 1;
            ++p;
            skip_ws();
        } else if (any) {
            throw Error(Errc::ParseError, "expected '+' or '-' in '" + text + "'");
        }
        uint64_t coef = 1;
        bool saw_coef = false;
        if (p < text.size() && std::isdigit(uint8_t(text[p]))) {
            coef = parse_int();
            saw_coef = true;
            skip_ws();
            if (p < text.size() && (text[p] == '*' || text.compare(p, 2, "·") == 0)) {
                p += (text[p] == '*') ? 1 : 2;
                skip_ws();
            }
        }
        uint32_t ei = 0, ej = 0;
        bool saw_mon = false;
        if (p < text.size() && text[p] == 't') {
            ++p;
            saw_mon = true;
            ei = 1;
            if (p < text.size() && text[p] == '^') {
                ++p;
                ei = uint32_t(parse_int() % G.d());
            }
            skip_ws();
        }
        if (p < text.size() && text[p] == 's') {
            ++p;
            saw_mon = true;
            ej = 1;
            if (p < text.size() && text[p] == '^') {
                ++p;
                ej = uint32_t(parse_int() % G.s());
            }
            skip_ws();
        }
        if (!saw_coef && !saw_mon)
            throw Error(Errc::ParseError, "empty term in '" + text + "'");
        uint32_t idx = G.index_of({ei % G.d(), ej % G.s()});
        r.c[idx] = uint32_t((r.c[idx] + uint64_t(sign) * (coef % mod)) % mod);
        any = true;
        skip_ws();
    }
    return r;
}

RingElement special_element(const MetacyclicGroup& G, SpecialKind kind, uint32_t mod, uint32_t i) {
    switch (kind) {
        case SpecialKind::T_tau: {
            RingElement r(G, mod);
            for (uint32_t k = 0; k < G.d(); ++k) r.c[G.index_of({k, 0})] = 1 % mod;
            return r;
        }
        case SpecialKind::T_sigma: {
            RingElement r(G, mod);
            for (uint32_t j = 0; j < G.s(); ++j) r.c[G.index_of({0, j})] = 1 % mod;
            return r;
        }
        case SpecialKind::C: {
            if (G.s() % 2 != 0 || G.d() % 2 == 0)
                throw Error(Errc::FamilyMismatch, "C_i needs s even and d odd");
            RingElement taui = RingElement::of(G, mod, {i % G.d(), 0});
            RingElement one_minus_tau =
                ring_sub(RingElement::one(G, mod), RingElement::of(G, mod, G.tau()));
            return ring_mul(ring_mul(taui, special_element(G, SpecialKind::T_sigma, mod)),
                            one_minus_tau);
        }
        case SpecialKind::B: {
            if (G.family() == Family::Cyclic || G.family() == Family::Arason)
                return RingElement::one(G, mod);
            if (G.s() % 2 != 0 || G.d() % 2 == 0)
                throw Error(Errc::FamilyMismatch, "B needs s even and d odd");
            if (G.family() == Family::DihedralClassic) {
                // 1 - sigma*tau
                RingElement st = RingElement::of(G, mod, G.mul(G.sigma(), G.tau()));
                return ring_sub(RingElement::one(G, mod), st);
            }
            // (1 - sigma^(s/2)) tau^((d+1)/2) sum_j (sum_{i<theta_j} tau^i) sigma^j
            RingElement acc(G, mod);
            for (uint32_t j = 0; j < G.s() / 2; ++j) {
                uint32_t th = G.theta(j);
                RingElement inner(G, mod);
                for (uint32_t k = 0; k < th; ++k) inner.c[G.index_of({k, 0})] = 1 % mod;
                acc = ring_add(acc, ring_mul(inner, RingElement::of(G, mod, {0, j})));
            }
            RingElement head = ring_sub(RingElement::one(G, mod),
                                        RingElement::of(G, mod, {0, G.s() / 2}));
            RingElement shift = RingElement::of(G, mod, {(G.d() + 1) / 2, 0});
            return ring_mul(ring_mul(head, shift), acc);
        }
    }
    throw Error(Errc::FamilyMismatch, "unknown special element");
}

VecZ ring_mul_int(const MetacyclicGroup& G, const VecZ& a, const VecZ& b) {
    VecZ r(G.order(), 0);
    for (uint32_t x = 0; x < G.order(); ++x) {
        if (!a[x]) continue;
        GroupElement gx = G.element(x);
        for (uint32_t y = 0; y < G.order(); ++y) {
            if (!b[y]) continue;
            r[G.index_of(G.mul(gx, G.element(y)))] += a[x] * b[y];
        }
    }
    return r;
}

VecZ act_int(const MetacyclicGroup& G, GroupElement g, const VecZ& a) {
    VecZ r(G.order(), 0);
    for (uint32_t idx = 0; idx < G.order(); ++idx) {
        if (!a[idx]) continue;
        r[G.index_of(G.mul(g, G.element(idx)))] = a[idx];
    }
    return r;
}

namespace {

// auxiliary prime for exact integer coordinate solving
constexpr uint32_t kAuxPrime = 2147483647u;

VecZ lift_sym(const Row& c, uint32_t m) {
    VecZ v(c.size());
    for (size_t i = 0; i < c.size(); ++i)
        v[i] = (c[i] > m / 2) ? int64_t(c[i]) - int64_t(m) : int64_t(c[i]);
    return v;
}

Row residues_of(const VecZ& v, uint32_t m) {
    Row r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = uint32_t(((v[i] % m) + m) % m);
    return r;
}

}  // namespace

VecZ special_element_int(const MetacyclicGroup& G, SpecialKind kind, uint32_t i) {
    return lift_sym(special_element(G, kind, kAuxPrime, i).c, kAuxPrime);
}

std::optional<Row> FreeModuleBasis::coords(const RingElement& x) const {
    if (x.G != G || x.mod != mod) throw Error(Errc::ModulusMismatch, "coords over wrong ring");
    if (faithful) {
        auto w = coords_in_basis(solver, x.c);
        if (!w) return std::nullopt;
        // coords against the Howell rows, converted to coordinates against
        // the declared basis through the recorded transform
        return znz::row_mat(*w, solver.transform);
    }
    // integer decode through the canonical small lift; only meaningful for
    // elements whose true coefficients fit below mod/2
    auto wi = coords_int(lift_sym(x.c, mod));
    if (!wi) return std::nullopt;
    return residues_of(*wi, mod);
}

std::optional<VecZ> FreeModuleBasis::coords_int(const VecZ& x) const {
    if (basis_int.empty()) throw Error(Errc::ConstructionFailure, name + ": no integer basis");
    auto w = znz::solve(solver_int, residues_of(x, kAuxPrime));
    if (!w) return std::nullopt;
    VecZ wi = lift_sym(*w, kAuxPrime);
    // exact verification over the integers
    for (uint32_t c = 0; c < G->order(); ++c) {
        __int128 acc = 0;
        for (uint32_t k = 0; k < rank(); ++k) acc += __int128(wi[k]) * basis_int[k][c];
        if (acc != x[c]) return std::nullopt;
    }
    return wi;
}

RingElement FreeModuleBasis::from_coords(const Row& w) const {
    RingElement r(*G, mod);
    r.c = znz::row_mat(w, basis_matrix);
    return r;
}

znz::MatrixZn FreeModuleBasis::action_matrix(GroupElement g) const {
    MatrixZn A(rank(), rank(), mod);
    for (uint32_t k = 0; k < rank(); ++k) {
        if (faithful) {
            // left multiplication by g permutes coefficients
            RingElement gb(*G, mod);
            for (uint32_t idx = 0; idx < G->order(); ++idx) {
                if (!basis[k].c[idx]) continue;
                gb.c[G->index_of(G->mul(g, G->element(idx)))] = basis[k].c[idx];
            }
            auto w = coords(gb);
            if (!w)
                throw Error(Errc::NotStable, name + " is not stable under the action of " +
                                                 ring_to_string(RingElement::of(*G, mod, g)));
            A.set_row(k, *w);
        } else {
            auto wi = coords_int(act_int(*G, g, basis_int[k]));
            if (!wi)
                throw Error(Errc::NotStable, name + " is not stable under the action of " +
                                                 ring_to_string(RingElement::of(*G, mod, g)));
            A.set_row(k, residues_of(*wi, mod));
        }
    }
    return A;
}

znz::MatrixZn FreeModuleBasis::map_matrix_to(const FreeModuleBasis& target,
                                             const std::vector<RingElement>& images) const {
    MatrixZn M(rank(), target.rank(), mod);
    for (uint32_t k = 0; k < rank(); ++k) {
        auto w = target.coords(images[k]);
        if (!w) throw Error(Errc::NoSolution, "image of " + name + " basis not inside " + target.name);
        M.set_row(k, *w);
    }
    return M;
}

znz::MatrixZn FreeModuleBasis::map_matrix_to_int(const FreeModuleBasis& target,
                                                 const std::vector<VecZ>& images) const {
    MatrixZn M(rank(), target.rank(), mod);
    for (uint32_t k = 0; k < rank(); ++k) {
        auto w = target.coords_int(images[k]);
        if (!w) throw Error(Errc::NoSolution, "image of " + name + " basis not inside " + target.name);
        M.set_row(k, residues_of(*w, mod));
    }
    return M;
}

znz::MatrixZn FreeModuleBasis::right_mul_matrix(const FreeModuleBasis& target,
                                                const RingElement& r) const {
    if (target.faithful) {
        std::vector<RingElement> images;
        images.reserve(rank());
        for (const auto& b : basis) images.push_back(ring_mul(b, r));
        return map_matrix_to(target, images);
    }
    // exact lattice route; needs honest integer lifts on both sides
    if (basis_int.empty())
        throw Error(Errc::ConstructionFailure, name + ": no integer lift for mapping into " + target.name);
    VecZ r_int = lift_sym(r.c, mod);
    std::vector<VecZ> images;
    images.reserve(rank());
    for (const auto& b : basis_int) images.push_back(ring_mul_int(*G, b, r_int));
    return map_matrix_to_int(target, images);
}

const char* module_name_str(ModuleName n) {
    switch (n) {
        case ModuleName::M1: return "M1";
        case ModuleName::M2: return "M2";
        case ModuleName::M3: return "M3";
        case ModuleName::M3prime: return "M3prime";
        case ModuleName::MB: return "MB";
        case ModuleName::M4: return "M4";
        case ModuleName::K: return "K";
        case ModuleName::Kprime: return "Kprime";
        case ModuleName::IndJ: return "IndJ";
        case ModuleName::IndJprime: return "IndJprime";
        case ModuleName::IndHprime: return "IndHprime";
        case ModuleName::FullRing: return "ring";
    }
    return "?";
}

namespace {

// basis given over the auxiliary prime (honest integer coefficients); the
// mod-m realization plus the integer lattice data are derived from it
FreeModuleBasis finish_module(std::string name, const MetacyclicGroup& G, uint32_t mod,
                              std::vector<RingElement> big_basis, bool check_stable = true,
                              bool allow_unfaithful = false) {
    FreeModuleBasis M;
    M.name = std::move(name);
    M.G = &G;
    M.mod = mod;
    std::vector<Row> rows, big_rows;
    for (const auto& b : big_basis) {
        M.basis_int.push_back(lift_sym(b.c, kAuxPrime));
        big_rows.push_back(b.c);
        RingElement red(G, mod);
        for (uint32_t i = 0; i < G.order(); ++i)
            red.c[i] = uint32_t(((M.basis_int.back()[i] % mod) + mod) % mod);
        rows.push_back(red.c);
        M.basis.push_back(std::move(red));
    }
    M.basis_matrix = MatrixZn::from_rows(rows, G.order(), mod);
    M.solver = znz::howell(M.basis_matrix, true);
    M.solver_int = znz::howell(MatrixZn::from_rows(big_rows, G.order(), kAuxPrime), true);
    if (M.solver_int.rank() != M.basis.size() || !M.solver_int.is_free())
        throw Error(Errc::ConstructionFailure, M.name + ": generators are not Z-independent");
    M.faithful = M.solver.rank() == M.basis.size() && M.solver.is_free();
    if (!M.faithful && !allow_unfaithful)
        throw Error(Errc::ConstructionFailure, M.name + ": basis is not Z/m-free");
    if (check_stable) {
        (void)M.action_matrix(G.tau());
        if (G.s() > 1) (void)M.action_matrix(G.sigma());
    }
    return M;
}

// basis rows intrinsic to Z/m (kernel computations); must be faithful
FreeModuleBasis finish_module_modm(std::string name, const MetacyclicGroup& G, uint32_t mod,
                                   std::vector<RingElement> basis) {
    FreeModuleBasis M;
    M.name = std::move(name);
    M.G = &G;
    M.mod = mod;
    M.basis = std::move(basis);
    std::vector<Row> rows;
    rows.reserve(M.basis.size());
    for (const auto& b : M.basis) rows.push_back(b.c);
    M.basis_matrix = MatrixZn::from_rows(rows, G.order(), mod);
    M.solver = znz::howell(M.basis_matrix, true);
    if (M.solver.rank() != M.basis.size() || !M.solver.is_free())
        throw Error(Errc::ConstructionFailure, M.name + ": basis is not Z/m-free");
    return M;
}

std::vector<RingElement> kernel_elements(const MetacyclicGroup& G, uint32_t mod,
                                         const std::vector<RingElement>& domain_basis,
                                         const RingElement& rmul) {
    // kernel of x -> x * rmul restricted to the span of domain_basis,
    // returned as ambient ring elements with a Howell-canonical basis
    std::vector<Row> img_rows;
    img_rows.reserve(domain_basis.size());
    for (const auto& b : domain_basis) img_rows.push_back(ring_mul(b, rmul).c);
    MatrixZn img = MatrixZn::from_rows(img_rows, G.order(), mod);
    MatrixZn ker = znz::kernel(img);
    std::vector<Row> dom_rows;
    for (const auto& b : domain_basis) dom_rows.push_back(b.c);
    MatrixZn dom = MatrixZn::from_rows(dom_rows, G.order(), mod);
    MatrixZn ambient = znz::howell_basis(znz::mat_mul(ker, dom));
    std::vector<RingElement> out;
    for (uint32_t i = 0; i < ambient.rows; ++i) {
        RingElement r(G, mod);
        r.c = ambient.row(i);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

FreeModuleBasis induced_module(const MetacyclicGroup& G, const Subgroup& S, uint32_t mod) {
    RingElement trace(G, kAuxPrime);
    for (auto e : S.elements) trace.c[G.index_of(e)] = 1;
    std::vector<bool> seen(G.order(), false);
    std::vector<RingElement> basis;
    for (uint32_t idx = 0; idx < G.order(); ++idx) {
        if (seen[idx]) continue;
        GroupElement rep = G.element(idx);
        for (auto e : S.elements) seen[G.index_of(G.mul(rep, e))] = true;
        basis.push_back(ring_mul(RingElement::of(G, kAuxPrime, rep), trace));
    }
    const char* nm = "Ind";
    switch (S.kind) {
        case SubgroupKind::J: nm = "IndJ"; break;
        case SubgroupKind::Jprime: nm = "IndJprime"; break;
        case SubgroupKind::Hprime: nm = "IndHprime"; break;
        case SubgroupKind::H: nm = "IndH"; break;
        case SubgroupKind::Trivial: nm = "ring"; break;
        case SubgroupKind::Full: nm = "M1"; break;
    }
    return finish_module(nm, G, mod, std::move(basis));
}

FreeModuleBasis make_module(const MetacyclicGroup& G, ModuleName name, uint32_t mod) {
    const uint32_t d = G.d(), s = G.s();
    const uint32_t P = kAuxPrime;
    auto tau_pow = [&](uint32_t i) { return RingElement::of(G, P, {i % d, 0}); };
    auto sigma_pow = [&](uint32_t j) { return RingElement::of(G, P, {0, j % s}); };
    const bool seven = (s % 2 == 0);

    switch (name) {
        case ModuleName::FullRing: {
            std::vector<RingElement> basis;
            for (uint32_t idx = 0; idx < G.order(); ++idx)
                basis.push_back(RingElement::of(G, P, G.element(idx)));
            return finish_module("ring", G, mod, std::move(basis));
        }
        case ModuleName::M1: {
            RingElement z = ring_mul(special_element(G, SpecialKind::T_sigma, P),
                                     special_element(G, SpecialKind::T_tau, P));
            return finish_module("M1", G, mod, {z});
        }
        case ModuleName::M2: {
            RingElement ts = special_element(G, SpecialKind::T_sigma, P);
            std::vector<RingElement> basis;
            for (uint32_t i = 0; i < d; ++i) basis.push_back(ring_mul(tau_pow(i), ts));
            return finish_module("M2", G, mod, std::move(basis));
        }
        case ModuleName::M3: {
            std::vector<RingElement> basis;
            if (!seven) {
                for (uint32_t idx = 0; idx < G.order(); ++idx)
                    basis.push_back(RingElement::of(G, P, G.element(idx)));
                return finish_module("M3", G, mod, std::move(basis));
            }
            for (uint32_t i = 0; i + 1 < d; ++i)
                basis.push_back(special_element(G, SpecialKind::C, P, i));
            RingElement B = special_element(G, SpecialKind::B, P);
            for (uint32_t j = 0; j < s / 2; ++j) basis.push_back(ring_mul(sigma_pow(j), B));
            return finish_module("M3", G, mod, std::move(basis));
        }
        case ModuleName::M3prime: {
            std::vector<RingElement> basis;
            RingElement ts = special_element(G, SpecialKind::T_sigma, P);
            RingElement omt = ring_sub(RingElement::one(G, P), RingElement::of(G, P, G.tau()));
            for (uint32_t i = 0; i + 1 < d; ++i)
                basis.push_back(ring_mul(ring_mul(tau_pow(i), ts), omt));
            return finish_module("M3prime", G, mod, std::move(basis));
        }
        case ModuleName::MB: {
            RingElement B = special_element(G, SpecialKind::B, P);
            std::vector<RingElement> basis;
            for (uint32_t j = 0; j < (seven ? s / 2 : 1u); ++j)
                basis.push_back(ring_mul(sigma_pow(j), B));
            // not G-stable on its own: a direct summand of M3 over Z/m only
            return finish_module("MB", G, mod, std::move(basis), false);
        }
        case ModuleName::M4: {
            RingElement Bt = ring_mul(special_element(G, SpecialKind::B, P),
                                      special_element(G, SpecialKind::T_tau, P));
            std::vector<RingElement> basis;
            for (uint32_t j = 0; j < (seven ? s / 2 : 1u); ++j)
                basis.push_back(ring_mul(sigma_pow(j), Bt));
            // the generators are Z-independent but their rows can collapse
            // mod m when s >= 4; the integer lattice then carries the module
            return finish_module("M4", G, mod, std::move(basis), true, true);
        }
        case ModuleName::K: {
            auto full = make_module(G, ModuleName::FullRing, mod);
            auto ker = kernel_elements(G, mod, full.basis, special_element(G, SpecialKind::B, mod));
            return finish_module_modm("K", G, mod, std::move(ker));
        }
        case ModuleName::Kprime: {
            // domain Z[G](1-tau)
            RingElement omt = ring_sub(RingElement::one(G, mod), RingElement::of(G, mod, G.tau()));
            std::vector<Row> rows;
            for (uint32_t idx = 0; idx < G.order(); ++idx)
                rows.push_back(ring_mul(RingElement::of(G, mod, G.element(idx)), omt).c);
            MatrixZn W = znz::howell_basis(MatrixZn::from_rows(rows, G.order(), mod));
            std::vector<RingElement> dom;
            for (uint32_t i = 0; i < W.rows; ++i) {
                RingElement r(G, mod);
                r.c = W.row(i);
                dom.push_back(std::move(r));
            }
            auto ker = kernel_elements(G, mod, dom, special_element(G, SpecialKind::B, mod));
            return finish_module_modm("Kprime", G, mod, std::move(ker));
        }
        case ModuleName::IndJ:
            return induced_module(G, make_subgroup(G, SubgroupKind::J), mod);
        case ModuleName::IndJprime:
            return induced_module(G, make_subgroup(G, SubgroupKind::Jprime), mod);
        case ModuleName::IndHprime:
            return induced_module(G, make_subgroup(G, SubgroupKind::Hprime), mod);
    }
    throw Error(Errc::ConstructionFailure, "unknown module name");
}

}  // namespace cohomkern
