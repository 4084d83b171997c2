#include "cohomkern/groups.hpp"

#include <algorithm>
#include <sstream>

namespace cohomkern {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::InvalidOrder: return "InvalidOrder";
        case Errc::FamilyMismatch: return "FamilyMismatch";
        case Errc::EvenD: return "EvenD";
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::NotStable: return "NotStable";
        case Errc::NoSolution: return "NoSolution";
        case Errc::NotContained: return "NotContained";
        case Errc::DegreeTooLarge: return "DegreeTooLarge";
        case Errc::ConstructionFailure: return "ConstructionFailure";
        case Errc::LiftFailure: return "LiftFailure";
        case Errc::SectionFailure: return "SectionFailure";
        case Errc::OutsideImage: return "OutsideImage";
        case Errc::NotACocycle: return "NotACocycle";
        case Errc::UnsupportedDegree: return "UnsupportedDegree";
        case Errc::ParseError: return "ParseError";
        case Errc::ConfigError: return "ConfigError";
    }
    return "Error";
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Cyclic: return "cyclic";
        case Family::DihedralClassic: return "dihedral-classic";
        case Family::Semidirect: return "semidirect";
        case Family::Arason: return "arason";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "cyclic") return Family::Cyclic;
    if (s == "dihedral" || s == "dihedral-classic") return Family::DihedralClassic;
    if (s == "semidirect") return Family::Semidirect;
    if (s == "arason") return Family::Arason;
    throw Error(Errc::ConfigError, "unknown family '" + s + "'");
}

namespace {
uint32_t gcd_u(uint32_t a, uint32_t b) {
    while (b) {
        uint32_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}
uint32_t powmod(uint64_t a, uint64_t e, uint32_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return uint32_t(r);
}
}  // namespace

MetacyclicGroup::MetacyclicGroup(uint32_t d, uint32_t s, uint32_t t, Family f)
    : d_(d), s_(s), t_(t), family_(f) {
    theta_.resize(s_);
    for (uint32_t j = 0; j < s_; ++j) theta_[j] = powmod(t_, j, d_);
}

MetacyclicGroup MetacyclicGroup::make(uint32_t d, uint32_t s, uint32_t t, Family family) {
    if (d < 2) throw Error(Errc::InvalidOrder, "d must be >= 2");
    if (s < 1) throw Error(Errc::InvalidOrder, "s must be >= 1");
    if (t < 1 || t >= d) throw Error(Errc::InvalidOrder, "t must satisfy 1 <= t < d");
    if (gcd_u(t, d) != 1) throw Error(Errc::InvalidOrder, "t must be a unit mod d");

    // the conjugation action must be faithful: ord(t mod d) = s exactly
    uint32_t ord = 1, p = t % d;
    while (p != 1 % d) {
        p = uint32_t(uint64_t(p) * t % d);
        ++ord;
        if (ord > s) break;
    }
    if (ord != s) {
        std::ostringstream os;
        os << "multiplicative order of " << t << " mod " << d << " is not " << s;
        throw Error(Errc::InvalidOrder, os.str());
    }

    switch (family) {
        case Family::Cyclic:
            if (s != 1) throw Error(Errc::FamilyMismatch, "cyclic family needs s = 1");
            break;
        case Family::Arason:
            if (d != 2 || s != 1) throw Error(Errc::FamilyMismatch, "arason family needs d = 2, s = 1");
            break;
        case Family::DihedralClassic:
            if (d % 2 == 0) throw Error(Errc::EvenD, "dihedral family needs d odd");
            if (s != 2) throw Error(Errc::FamilyMismatch, "dihedral family needs s = 2");
            if (t != d - 1) throw Error(Errc::FamilyMismatch, "dihedral family needs t = -1 mod d");
            break;
        case Family::Semidirect: {
            if (d % 2 == 0) throw Error(Errc::EvenD, "semidirect family needs d odd");
            if (s % 2 != 0) throw Error(Errc::FamilyMismatch, "semidirect family needs s even");
            // validated rather than derived: t^(s/2) = -1 mod d
            if (powmod(t, s / 2, d) != d - 1)
                throw Error(Errc::FamilyMismatch, "semidirect family needs t^(s/2) = -1 mod d");
            break;
        }
    }
    return MetacyclicGroup(d, s, t, family);
}

uint32_t MetacyclicGroup::theta(int64_t j) const {
    int64_t r = j % int64_t(s_);
    if (r < 0) r += s_;
    return theta_[size_t(r)];
}

GroupElement MetacyclicGroup::mul(GroupElement a, GroupElement b) const {
    // (tau^i sigma^j)(tau^k sigma^l) = tau^(i + t^j k) sigma^(j + l)
    uint32_t i = uint32_t((uint64_t(a.i) + uint64_t(theta_[a.j]) * b.i) % d_);
    uint32_t j = (a.j + b.j) % s_;
    return {i, j};
}

GroupElement MetacyclicGroup::inv(GroupElement a) const {
    // (tau^i sigma^j)^-1 = tau^(-t^(s-j) i) sigma^(-j)
    uint32_t jr = (s_ - a.j) % s_;
    uint32_t i = uint32_t((d_ - uint64_t(theta_[jr]) * a.i % d_) % d_);
    return {i, jr};
}

GroupElement MetacyclicGroup::pow(GroupElement a, int64_t e) const {
    GroupElement r = identity();
    GroupElement base = e < 0 ? inv(a) : a;
    uint64_t n = uint64_t(e < 0 ? -e : e);
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

std::string MetacyclicGroup::describe() const {
    std::ostringstream os;
    os << "metacyclic:" << d_ << ',' << s_ << ',' << t_;
    return os.str();
}

Subgroup make_subgroup(const MetacyclicGroup& G, SubgroupKind kind) {
    Subgroup S{kind, {}};
    switch (kind) {
        case SubgroupKind::Trivial:
            S.elements.push_back(G.identity());
            break;
        case SubgroupKind::Full:
            for (uint32_t idx = 0; idx < G.order(); ++idx) S.elements.push_back(G.element(idx));
            break;
        case SubgroupKind::J:
            for (uint32_t i = 0; i < G.d(); ++i) S.elements.push_back({i, 0});
            break;
        case SubgroupKind::H:
            for (uint32_t j = 0; j < G.s(); ++j) S.elements.push_back({0, j});
            break;
        case SubgroupKind::Jprime: {
            if (G.s() % 2 != 0) throw Error(Errc::FamilyMismatch, "J' needs s even");
            for (uint32_t i = 0; i < G.d(); ++i) S.elements.push_back({i, 0});
            for (uint32_t i = 0; i < G.d(); ++i) S.elements.push_back({i, G.s() / 2});
            break;
        }
        case SubgroupKind::Hprime: {
            if (G.s() != 2) throw Error(Errc::FamilyMismatch, "H' needs s = 2");
            S.elements.push_back(G.identity());
            S.elements.push_back(G.mul(G.sigma(), G.tau()));  // sigma tau, order 2
            break;
        }
    }
    return S;
}

GroupTable GroupTable::of_group(const MetacyclicGroup& G) {
    return of_subgroup(G, make_subgroup(G, SubgroupKind::Full));
}

GroupTable GroupTable::of_subgroup(const MetacyclicGroup& G, const Subgroup& S) {
    GroupTable T;
    T.n = uint32_t(S.elements.size());
    T.elems = S.elements;
    std::vector<int64_t> where(G.order(), -1);
    for (uint32_t k = 0; k < T.n; ++k) where[G.index_of(S.elements[k])] = k;
    T.mul.assign(size_t(T.n) * T.n, 0);
    T.inv.assign(T.n, 0);
    for (uint32_t a = 0; a < T.n; ++a) {
        for (uint32_t b = 0; b < T.n; ++b) {
            int64_t w = where[G.index_of(G.mul(S.elements[a], S.elements[b]))];
            if (w < 0) throw Error(Errc::ConstructionFailure, "subgroup not closed under multiplication");
            T.mul[size_t(a) * T.n + b] = uint32_t(w);
        }
        int64_t w = where[G.index_of(G.inv(S.elements[a]))];
        if (w < 0) throw Error(Errc::ConstructionFailure, "subgroup not closed under inverse");
        T.inv[a] = uint32_t(w);
    }
    return T;
}

}  // namespace cohomkern
