#pragma once

// The metacyclic group G = <tau, sigma | tau^d = sigma^s = 1,
// sigma tau sigma^-1 = tau^t> with exact element arithmetic, its
// distinguished subgroups, and Cayley tables for cochain indexing.

#include <cstdint>
#include <string>
#include <vector>

#include "cohomkern/error.hpp"

namespace cohomkern {

enum class Family { Cyclic, DihedralClassic, Semidirect, Arason };

const char* family_name(Family f);
Family family_from_string(const std::string& s);

// tau^i sigma^j, 0 <= i < d, 0 <= j < s; every element has exactly one
// such representation.
struct GroupElement {
    uint32_t i = 0;
    uint32_t j = 0;
    bool operator==(const GroupElement&) const = default;
};

class MetacyclicGroup {
  public:
    // Validates the presentation: ord(t mod d) must be exactly s, and the
    // family constraints must hold (dihedral: s = 2, t = -1, d odd;
    // semidirect: s even, t^(s/2) = -1, d odd; cyclic/arason: s = 1, t = 1).
    static MetacyclicGroup make(uint32_t d, uint32_t s, uint32_t t, Family family);

    uint32_t d() const { return d_; }
    uint32_t s() const { return s_; }
    uint32_t t() const { return t_; }
    Family family() const { return family_; }
    uint32_t order() const { return d_ * s_; }

    // t^j mod d, always in (0, d)
    uint32_t theta(int64_t j) const;

    GroupElement mul(GroupElement a, GroupElement b) const;
    GroupElement inv(GroupElement a) const;
    GroupElement identity() const { return {0, 0}; }
    GroupElement tau() const { return {1 % d_, 0}; }
    GroupElement sigma() const { return {0, s_ > 1 ? 1u : 0u}; }
    GroupElement pow(GroupElement a, int64_t e) const;

    // canonical element order: lexicographic on (j, i), sigma-exponent major
    uint32_t index_of(GroupElement a) const { return a.j * d_ + a.i; }
    GroupElement element(uint32_t idx) const { return {idx % d_, idx / d_}; }

    std::string describe() const;  // "metacyclic:d,s,t"

  private:
    MetacyclicGroup(uint32_t d, uint32_t s, uint32_t t, Family f);
    uint32_t d_, s_, t_;
    Family family_;
    std::vector<uint32_t> theta_;  // theta_[j] = t^j mod d, j in [0, s)
};

enum class SubgroupKind { Trivial, Full, J, H, Jprime, Hprime };

// A subgroup given by its explicit element list (closed under the group
// operations; order as expected for its kind).
struct Subgroup {
    SubgroupKind kind;
    std::vector<GroupElement> elements;
};

Subgroup make_subgroup(const MetacyclicGroup& G, SubgroupKind kind);

// Dense multiplication table over an element list; the bar resolution and
// the transfer maps only ever need this view of a group.
struct GroupTable {
    uint32_t n = 0;
    std::vector<uint32_t> mul;        // n*n, mul[a*n+b]
    std::vector<uint32_t> inv;        // n
    std::vector<GroupElement> elems;  // table index -> ambient element

    static GroupTable of_group(const MetacyclicGroup& G);
    static GroupTable of_subgroup(const MetacyclicGroup& G, const Subgroup& S);

    uint32_t times(uint32_t a, uint32_t b) const { return mul[size_t(a) * n + b]; }
};

}  // namespace cohomkern
