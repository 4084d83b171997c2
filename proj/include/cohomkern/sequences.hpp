#pragma once

// The four-term exact sequences 0 -> M1 -> M2 -> M3 -> M4 -> 0 of group-ring
// modules over Z/d^2 with their homotopies, one construction per family, and
// the module-level verifiers (exactness, prism identities, equivariance,
// the B identities, and the structural diagrams).
//
// Sequences keep a pointer to the caller-owned group; the group must outlive
// every object built from it.

#include "cohomkern/group_ring.hpp"
#include "cohomkern/report.hpp"

namespace cohomkern {

struct FourTermSequence {
    Family family;
    const MetacyclicGroup* G = nullptr;
    uint32_t mod = 0;  // d^2
    FreeModuleBasis M1, M2, M3, M4;
    // maps act on coordinate rows (x -> x*M); prism condition:
    //   d1*h1 = d*id, h1*d1 + d2*h2 = d*id, h2*d2 + d3*h3 = d*id, h3*d3 = d*id
    // in application order (matrix product = composition left to right).
    znz::MatrixZn d1, d2, d3, h1, h2, h3;
    znz::MatrixZn lifting;  // section of d3 mod d (not equivariant)
    int eta_sign = -1;      // sign making the closed connecting-map forms match
};

// Throws ConstructionFailure (wrapping NotStable/NoSolution) on internal
// errors; family data comes from the group.
FourTermSequence build_sequence(const MetacyclicGroup& G);

VerificationReport verify_four_term(const FourTermSequence& seq);

// sigma^(s/2) B = -B  and  (1-tau) B = C_((d+1)/2), exactly over Z/d^2.
VerificationReport verify_b_identities(const MetacyclicGroup& G);

// 0 -> Ind_J' -> Ind_J -> M4 -> 0 with sigma^j T_J |-> sigma^j B T_tau.
VerificationReport verify_m4_structure(const MetacyclicGroup& G);

// The 3x3 commuting diagram with rows  K' -> K -> Ind_J',
// Z[G](1-tau) -> Z[G] -> Z[G]T_tau,  M3' -> M3 -> M4  and columns given by
// inclusion followed by right multiplication with B; checks commutativity,
// exactness of all rows and columns, and the rank table.
VerificationReport verify_kernel_diagram(const MetacyclicGroup& G);

// s = 2 only: the two exact sequences through multiplication by (1 +- sigma tau).
VerificationReport verify_oldlemma14(const MetacyclicGroup& G);

// 0 -> sub -> mid -> quot -> 0 of mod-d modules, with a stored section of
// the projection (a plain Z/d-linear section, not equivariant).
struct ShortSequence {
    const MetacyclicGroup* G = nullptr;
    uint32_t mod = 0;  // d
    FreeModuleBasis sub, mid, quot;
    znz::MatrixZn inj, proj, section;
};

// 0 -> M1 -> M2 -> Delta -> 0 and 0 -> Delta -> M3 -> M4 -> 0 mod d,
// where Delta = im(d2) = M3' with its C_i basis.
ShortSequence sub_short_sequence(const FourTermSequence& seq);
ShortSequence quot_short_sequence(const FourTermSequence& seq);

// The diagonal/trace sequence 0 -> Z/2 -> Z/2[G] -> Z/2 -> 0 for the order-2
// group, with the section 1 |-> 1_G.
const MetacyclicGroup& arason_group();
ShortSequence build_arason();

VerificationReport verify_short_exact(const ShortSequence& s);

}  // namespace cohomkern
