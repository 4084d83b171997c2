#pragma once

// Arithmetic in Z/m[G] and the submodules the four-term sequences live in.
// Ring elements are dense coefficient rows indexed by the canonical element
// order of the group ((j,i) lexicographic, sigma-exponent major).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohomkern/groups.hpp"
#include "cohomkern/znz.hpp"

namespace cohomkern {

struct RingElement {
    const MetacyclicGroup* G = nullptr;
    uint32_t mod = 0;
    znz::Row c;  // length |G|

    RingElement() = default;
    RingElement(const MetacyclicGroup& g, uint32_t m) : G(&g), mod(m), c(g.order(), 0) {}

    static RingElement zero(const MetacyclicGroup& g, uint32_t m) { return RingElement(g, m); }
    static RingElement one(const MetacyclicGroup& g, uint32_t m);
    static RingElement of(const MetacyclicGroup& g, uint32_t m, GroupElement e, uint32_t coef = 1);

    bool is_zero() const;
    bool operator==(const RingElement&) const = default;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_scale(const RingElement& a, uint32_t k);
// convolution product of Z/m[G]; throws ModulusMismatch on mixed operands
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_pow(const RingElement& a, uint32_t e);

// formal-sum printing "c·t^i s^j + ..." with zero terms suppressed, and the
// matching parser (also accepts '*' for the product dot)
std::string ring_to_string(const RingElement& a);
RingElement ring_parse(const MetacyclicGroup& G, uint32_t mod, const std::string& text);

enum class SpecialKind { T_tau, T_sigma, C, B };

// T_tau, T_sigma, C_i = tau^i T_sigma (1-tau), and the family element B:
//   cyclic      B = 1
//   dihedral    B = 1 - sigma*tau
//   semidirect  B = (1-sigma^(s/2)) tau^((d+1)/2) sum_j (sum_{i<theta_j} tau^i) sigma^j
// C and B require s even and d odd except in the cyclic/arason families.
RingElement special_element(const MetacyclicGroup& G, SpecialKind kind, uint32_t mod, uint32_t i = 0);

// integer coefficient vectors over the group basis, for exact lattice work
using VecZ = std::vector<int64_t>;

VecZ ring_mul_int(const MetacyclicGroup& G, const VecZ& a, const VecZ& b);
VecZ act_int(const MetacyclicGroup& G, GroupElement g, const VecZ& a);
VecZ special_element_int(const MetacyclicGroup& G, SpecialKind kind, uint32_t i = 0);

// A free module on the listed generators together with its realization in
// Z/m[G].  For most modules the realization is faithful (the coefficient
// rows stay independent mod m) and coordinates are solved mod m.  The
// exception is M4 in the semidirect family with s >= 4: the lattice spanned
// by sigma^j B T_tau inside Z[G] is not saturated at primes dividing d, so
// the mod-m rows become dependent; there the structure is computed from the
// exact integer lattice instead (basis_int), which is what the abstract
// free module requires.
struct FreeModuleBasis {
    std::string name;
    const MetacyclicGroup* G = nullptr;
    uint32_t mod = 0;
    std::vector<RingElement> basis;
    znz::MatrixZn basis_matrix;  // |basis| x |G|
    znz::HowellForm solver;      // for membership / coordinates
    bool faithful = true;
    std::vector<VecZ> basis_int;  // exact integer lifts (make_module-built only)
    znz::HowellForm solver_int;   // over an auxiliary prime, for integer decode

    uint32_t rank() const { return uint32_t(basis.size()); }

    // coordinates of x in this basis, or nullopt if x is outside the span
    std::optional<znz::Row> coords(const RingElement& x) const;
    RingElement from_coords(const znz::Row& w) const;
    // exact integer coordinates against basis_int, verified by integer
    // re-multiplication
    std::optional<VecZ> coords_int(const VecZ& x) const;

    // right-action matrix of g on coordinate rows: row k holds the
    // coordinates of g * basis[k]; throws NotStable if the span is not
    // preserved.  These matrices compose as A(g)A(h) = A(hg).
    znz::MatrixZn action_matrix(GroupElement g) const;

    // matrix of a map determined by explicit images of the basis elements
    znz::MatrixZn map_matrix_to(const FreeModuleBasis& target,
                                const std::vector<RingElement>& images) const;
    znz::MatrixZn map_matrix_to_int(const FreeModuleBasis& target,
                                    const std::vector<VecZ>& images) const;
    // matrix of right multiplication by r (r must have small true
    // coefficients when the target realization is not faithful)
    znz::MatrixZn right_mul_matrix(const FreeModuleBasis& target, const RingElement& r) const;
};

enum class ModuleName {
    M1, M2, M3, M3prime, MB, M4, K, Kprime, IndJ, IndJprime, IndHprime, FullRing
};

const char* module_name_str(ModuleName n);

// Builds the named module with its fixed basis over Z/mod (family-aware
// through G).  Verifies independence of the basis (unit pivots under
// Howell) and left-G-stability of the span.
FreeModuleBasis make_module(const MetacyclicGroup& G, ModuleName name, uint32_t mod);

// Ind_S^G(Z/m) realised as Z/m[G]·(sum of S), with the coset-representative
// basis {r·T_S}.
FreeModuleBasis induced_module(const MetacyclicGroup& G, const Subgroup& S, uint32_t mod);

}  // namespace cohomkern
