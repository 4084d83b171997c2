#pragma once

// Bar-resolution cohomology of the finite group (and its subgroups) with
// coefficients in the mod-d modules: cochain tables, coboundaries, cup
// products, restriction/corestriction, Bockstein and snake connecting maps,
// the connecting map eta with its closed forms, and the six-term sequence
// verification.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohomkern/sequences.hpp"

namespace cohomkern {

// A module with a right-matrix action of a group table on coordinate rows.
struct GModule {
    std::string name;
    std::shared_ptr<const GroupTable> T;
    uint32_t mod = 0;
    uint32_t rank = 0;
    std::vector<znz::MatrixZn> act;  // indexed by table element

    uint32_t order() const { return T->n; }
};

std::shared_ptr<const GroupTable> table_of(const MetacyclicGroup& G);
std::shared_ptr<const GroupTable> table_of(const MetacyclicGroup& G, const Subgroup& S);

// mod must divide M.mod; actions are reduced entrywise.
GModule gmodule_of(const FreeModuleBasis& M, std::shared_ptr<const GroupTable> T, uint32_t mod,
                   std::string name = "");
GModule trivial_module(std::shared_ptr<const GroupTable> T, uint32_t mod, std::string name = "Z");
GModule direct_sum(const GModule& A, const GModule& B);
// same coefficients, action restricted along embed (sub index -> big index)
GModule restrict_module(const GModule& M, std::shared_ptr<const GroupTable> sub,
                        const std::vector<uint32_t>& embed);

// Dense inhomogeneous cochain: a table over |G|^degree tuples of coordinate
// rows, flattened tuple-major.
struct Cochain {
    const GModule* M = nullptr;
    uint32_t degree = 0;
    znz::Row v;

    Cochain() = default;
    Cochain(const GModule& m, uint32_t n);

    size_t tuples() const;
    uint32_t* at(size_t tuple) { return v.data() + tuple * M->rank; }
    const uint32_t* at(size_t tuple) const { return v.data() + tuple * M->rank; }
    bool is_zero() const;
    bool operator==(const Cochain& o) const { return degree == o.degree && v == o.v; }
};

Cochain cochain_add(const Cochain& a, const Cochain& b);
Cochain cochain_sub(const Cochain& a, const Cochain& b);
Cochain cochain_neg(const Cochain& a);

// (delta c)(g1,...,gn+1) = g1*c(g2,...) + sum (-1)^i c(..., g_i g_{i+1}, ...)
//                        + (-1)^{n+1} c(g1,...,gn)
Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);
// matrix of the coboundary on coordinate rows, (|G|^n r) x (|G|^{n+1} r)
znz::MatrixZn coboundary_matrix(const GModule& M, uint32_t n);
// entrywise application of a module-map matrix
Cochain apply_module_map(const Cochain& c, const znz::MatrixZn& F, const GModule& target);

struct CohomologyLimits {
    uint32_t degree_bound = 2;      // max n for presentations
    uint32_t degree3_order_cap = 12;  // n = 3 allowed when |G| <= this
    size_t max_matrix_entries = 250'000'000;
};

struct CohomologyGroup {
    const GModule* M = nullptr;
    uint32_t degree = 0;
    znz::HowellForm Z;    // Howell form of the cocycles Z^n
    znz::MatrixZn B;      // Howell basis of the coboundaries B^n
    znz::MatrixZn rel;    // relations in Z-basis coordinates
    znz::HowellForm relH;
    std::vector<uint32_t> invariant_factors;  // nontrivial, dividing chain
    std::vector<Cochain> generators;          // one cocycle per invariant factor

    uint32_t class_dim() const { return Z.rank(); }
    bool trivial() const { return invariant_factors.empty(); }
    // canonical coordinates of a cocycle against the Z^n Howell basis
    znz::Row class_coords(const Cochain& z) const;
    bool is_coboundary(const Cochain& z) const;
    bool cohomologous(const Cochain& a, const Cochain& b) const;
    bool class_vector_trivial(const znz::Row& w) const;
};

CohomologyGroup cohomology_group(const GModule& M, uint32_t n, const CohomologyLimits& lim = {});

// chi is a degree-1 cochain with values in the rank-1 trivial module;
// (chi ~ c)(g1,...,g_{q+1}) = chi(g1) * c(g2,...,g_{q+1}), scaled into the
// target module (same rank and modulus as c's; defaults to c's own)
Cochain cup1(const Cochain& chi, const Cochain& c, const GModule* target = nullptr);

// subgroup/transversal data for restriction and corestriction
struct SubgroupContext {
    std::shared_ptr<const GroupTable> big;
    std::shared_ptr<const GroupTable> sub;
    std::vector<uint32_t> embed;     // sub index -> big index
    std::vector<uint32_t> left_rep;  // big indices r with G = disjoint union r*S
    std::vector<uint32_t> q_of;      // g -> sub index of g * t(g)^-1  (right cosets S*t)
    uint32_t index() const { return uint32_t(left_rep.size()); }
};

SubgroupContext subgroup_context(const MetacyclicGroup& G, const Subgroup& S);

Cochain restriction(const Cochain& c, const SubgroupContext& ctx, const GModule& subM);
Cochain corestriction(const Cochain& f, const SubgroupContext& ctx, const GModule& bigM);

// Bockstein lift-delta-divide for the d-torsion sequence of a free mod-d^2
// module; Msq carries the mod-d^2 actions over the same basis as Mbar.
Cochain bockstein_cochain(const GModule& Mbar, const GModule& Msq, const Cochain& zbar);
// the induced map on class presentations H^n -> H^{n+1} (rows over the
// Z-basis of Hn); zero rows mean the map vanishes on cohomology
znz::MatrixZn bockstein_matrix(const GModule& Mbar, const GModule& Msq,
                               const CohomologyGroup& Hn, const CohomologyGroup& Hn1);

// snake connecting map data for a mod-d short exact sequence
struct SnakeContext {
    GModule sub, mid, quot;
    znz::MatrixZn inj, proj, section;
    znz::HowellForm injH;
};
SnakeContext snake_context(const ShortSequence& s);
// lift through the section, apply delta, pull back through the injection
Cochain snake_connecting(const SnakeContext& ctx, const Cochain& z_quot);
Cochain snake_connecting(const SnakeContext& ctx, const Cochain& z_quot,
                         const znz::MatrixZn& section);

// everything mod d a sequence needs for cohomology-level work
struct SequenceCohomology {
    FourTermSequence seq;
    std::shared_ptr<const GroupTable> table;
    GModule M1bar, M2bar, M3bar, M4bar;
    GModule M1sq, M2sq, M3sq, M4sq;  // mod d^2 actions for the Bocksteins
    znz::MatrixZn d1d, d2d, d3d, h1d, h2d, h3d, lifting;
    znz::HowellForm d1H;
    // Delta = im(d2) = M3' with its C_i basis
    GModule Delta, DeltaSq;
    znz::MatrixZn delta_incl;      // Delta -> M3bar coordinates
    znz::HowellForm delta_inclH;
    znz::MatrixZn delta_incl_sq;   // Delta -> M3 coordinates over d^2
    znz::MatrixZn d2_into_delta;   // M2bar -> Delta coordinates
    znz::MatrixZn htilde2;         // Delta -> M1bar, d1^{-1} h2 mod d
    znz::MatrixZn htilde3;         // M4bar -> Delta, h3 into Delta mod d
    // the same maps on the d-torsion submodules (x = d*x' identified with
    // x' mod d): d1^{-1} h2 and iota^{-1} h3 computed over d^2, divided by d
    znz::MatrixZn htilde2_tor;
    znz::MatrixZn htilde3_tor;
};

SequenceCohomology make_sequence_cohomology(const FourTermSequence& seq);

// connecting map: sign * d1^{-1} h2 delta ell, cochain level
Cochain eta_generic(const SequenceCohomology& sc, const Cochain& c);
// family closed forms (cyclic: -chi ~ c; dihedral/semidirect: the indexed
// coset formulas), cochain level
Cochain eta_closed(const SequenceCohomology& sc, const Cochain& c);

// deterministic cocycle sampling: random combinations of the Z^n Howell basis
std::vector<Cochain> sample_cocycles(const CohomologyGroup& H, size_t count, uint64_t seed);

VerificationReport six_term_verify(const SequenceCohomology& sc, uint32_t n,
                                   const CohomologyLimits& lim = {});

// invariant factors of H^n(G, Ind_S^G) equal those of H^n(S, Z/d)
VerificationReport shapiro_check(const MetacyclicGroup& G, SubgroupKind kind, uint32_t n,
                                 const CohomologyLimits& lim = {});

// cor o res = [G:S] * id as an exact matrix identity on class presentations
VerificationReport cor_res_check(const MetacyclicGroup& G, SubgroupKind kind, const GModule& M,
                                 uint32_t n, const CohomologyLimits& lim = {});

}  // namespace cohomkern
