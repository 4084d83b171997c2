#include <doctest.h>

#include "cohomkern/group_ring.hpp"

using namespace cohomkern;
using znz::MatrixZn;

namespace {
const MetacyclicGroup& S3() {
    static auto G = MetacyclicGroup::make(3, 2, 2, Family::DihedralClassic);
    return G;
}
const MetacyclicGroup& G542() {
    static auto G = MetacyclicGroup::make(5, 4, 2, Family::Semidirect);
    return G;
}
}  // namespace

TEST_CASE("T_tau * T_tau = d T_tau, 1 * a = a") {
    for (const MetacyclicGroup* Gp : {&S3(), &G542()}) {
        const auto& G = *Gp;
        uint32_t mod = G.d() * G.d();
        RingElement T = special_element(G, SpecialKind::T_tau, mod);
        CHECK(ring_mul(T, T) == ring_scale(T, G.d()));
        RingElement a = ring_add(T, RingElement::of(G, mod, {1, G.s() - 1}, 3));
        CHECK(ring_mul(RingElement::one(G, mod), a) == a);
        CHECK(ring_mul(a, RingElement::one(G, mod)) == a);
    }
}

TEST_CASE("B for d=3, s=2 expands to t^2 - t s") {
    // direct convolution of the defining product, independent of the
    // special-element construction
    const auto& G = S3();
    uint32_t mod = 9;
    // semidirect-form B on the same data: (1 - sigma) tau^2 * (sum_{i<theta_0} tau^i) sigma^0
    RingElement head = ring_sub(RingElement::one(G, mod), RingElement::of(G, mod, {0, 1}));
    RingElement expected = ring_mul(head, RingElement::of(G, mod, {2, 0}));
    // t^2 - t s: s*t^2 = t^(theta(2)) s = t s
    RingElement manual(G, mod);
    manual.c[G.index_of({2, 0})] = 1;
    manual.c[G.index_of({1, 1})] = mod - 1;
    CHECK(expected == manual);

    // the dihedral-classic family element is 1 - s t = 1 - t^2 s
    RingElement B = special_element(G, SpecialKind::B, mod);
    RingElement manual2(G, mod);
    manual2.c[0] = 1;
    manual2.c[G.index_of({2, 1})] = mod - 1;
    CHECK(B == manual2);
}

TEST_CASE("ring multiplication is associative and group-like on coefficients") {
    const auto& G = G542();
    uint32_t mod = 25;
    RingElement a = ring_add(special_element(G, SpecialKind::T_sigma, mod),
                             RingElement::of(G, mod, {2, 1}, 7));
    RingElement b = ring_sub(RingElement::of(G, mod, {1, 2}, 3), RingElement::one(G, mod));
    RingElement c = ring_add(RingElement::of(G, mod, {4, 3}, 11),
                             special_element(G, SpecialKind::T_tau, mod));
    CHECK(ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c)));
}

TEST_CASE("print/parse round trip") {
    const auto& G = G542();
    uint32_t mod = 25;
    RingElement a(G, mod);
    a.c[G.index_of({0, 0})] = 5;
    a.c[G.index_of({2, 0})] = 1;
    a.c[G.index_of({1, 3})] = 24;
    std::string s = ring_to_string(a);
    CHECK(ring_parse(G, mod, s) == a);
    CHECK(ring_parse(G, mod, "2*t^2 s + t - 1") ==
          ring_parse(G, mod, "2·t^2 s + t + 24"));
    CHECK(ring_to_string(RingElement::zero(G, mod)) == "0");
    CHECK_THROWS_AS(ring_parse(G, mod, "t^2 q"), Error);
}

TEST_CASE("module bases have the stated ranks and free bases") {
    struct Case {
        const MetacyclicGroup* G;
        uint32_t m1, m2, m3, m4;
    };
    for (auto [Gp, m1, m2, m3, m4] : {Case{&S3(), 1, 3, 3, 1}, Case{&G542(), 1, 5, 6, 2}}) {
        const auto& G = *Gp;
        uint32_t mod = G.d() * G.d();
        CHECK(make_module(G, ModuleName::M1, mod).rank() == m1);
        CHECK(make_module(G, ModuleName::M2, mod).rank() == m2);
        CHECK(make_module(G, ModuleName::M3, mod).rank() == m3);
        CHECK(make_module(G, ModuleName::M4, mod).rank() == m4);
    }
    // kernel ranks: |K| = sd - s/2 - (d-1), |K'| = (s-1)(d-1)
    CHECK(make_module(G542(), ModuleName::K, 25).rank() == 20 - 2 - 4);
    CHECK(make_module(G542(), ModuleName::Kprime, 25).rank() == 3 * 4);
    CHECK(make_module(S3(), ModuleName::K, 9).rank() == 6 - 1 - 2);
    CHECK(make_module(S3(), ModuleName::Kprime, 9).rank() == 2);
}

TEST_CASE("M3 decomposes as M3' + MB over Z/m") {
    for (const MetacyclicGroup* Gp : {&S3(), &G542()}) {
        const auto& G = *Gp;
        uint32_t mod = G.d() * G.d();
        auto M3 = make_module(G, ModuleName::M3, mod);
        auto M3p = make_module(G, ModuleName::M3prime, mod);
        auto MB = make_module(G, ModuleName::MB, mod);
        CHECK(M3.rank() == M3p.rank() + MB.rank());
        // the concatenated bases span M3 and are independent
        MatrixZn cat = znz::vstack(M3p.basis_matrix, MB.basis_matrix);
        CHECK(znz::same_span(cat, M3.basis_matrix));
        CHECK(znz::howell(cat, false).rank() == M3.rank());
    }
}

TEST_CASE("action matrices: trivial on M1, minus one for sigma^(s/2) on M4") {
    const auto& G = G542();
    uint32_t mod = 25;
    auto M1 = make_module(G, ModuleName::M1, mod);
    for (uint32_t idx = 0; idx < G.order(); ++idx)
        CHECK(M1.action_matrix(G.element(idx)) == MatrixZn::identity(1, mod));

    auto M4 = make_module(G, ModuleName::M4, mod);
    MatrixZn A = M4.action_matrix({0, G.s() / 2});
    CHECK(A == znz::mat_scale(MatrixZn::identity(M4.rank(), mod), mod - 1));

    // tau cycles the basis of M2
    auto M2 = make_module(G, ModuleName::M2, mod);
    MatrixZn At = M2.action_matrix(G.tau());
    for (uint32_t i = 0; i < M2.rank(); ++i)
        for (uint32_t j = 0; j < M2.rank(); ++j)
            CHECK(At.at(i, j) == (j == (i + 1) % G.d() ? 1u : 0u));
}

TEST_CASE("action matrices respect relations and are invertible") {
    for (const MetacyclicGroup* Gp : {&S3(), &G542()}) {
        const auto& G = *Gp;
        uint32_t mod = G.d() * G.d();
        for (auto name : {ModuleName::M1, ModuleName::M2, ModuleName::M3, ModuleName::M4}) {
            auto M = make_module(G, name, mod);
            MatrixZn I = MatrixZn::identity(M.rank(), mod);
            MatrixZn At = M.action_matrix(G.tau());
            MatrixZn As = M.action_matrix(G.sigma());
            MatrixZn p = I;
            for (uint32_t k = 0; k < G.d(); ++k) p = znz::mat_mul(p, At);
            CHECK(p == I);
            p = I;
            for (uint32_t k = 0; k < G.s(); ++k) p = znz::mat_mul(p, As);
            CHECK(p == I);
            CHECK(znz::mat_mul(At, M.action_matrix(G.inv(G.tau()))) == I);
            CHECK(znz::mat_mul(As, M.action_matrix(G.inv(G.sigma()))) == I);
            // with right-acting matrices, A(g)A(h) = A(hg): check sigma tau = tau^t sigma
            MatrixZn Att = I;
            for (uint32_t k = 0; k < G.t(); ++k) Att = znz::mat_mul(Att, At);
            CHECK(znz::mat_mul(At, As) == znz::mat_mul(As, Att));
        }
    }
}

TEST_CASE("action_matrix reports unstable spans") {
    const auto& G = G542();
    // MB alone is not closed under tau
    auto MB = make_module(G, ModuleName::MB, 25);
    CHECK_THROWS_WITH_AS(MB.action_matrix(G.tau()), doctest::Contains("NotStable"), Error);
}

TEST_CASE("induced module bases") {
    const auto& G = G542();
    auto indJ = make_module(G, ModuleName::IndJ, 25);
    CHECK(indJ.rank() == 4);
    auto indJp = make_module(G, ModuleName::IndJprime, 25);
    CHECK(indJp.rank() == 2);
    const auto& S3g = S3();
    auto indHp = make_module(S3g, ModuleName::IndHprime, 9);
    CHECK(indHp.rank() == 3);
}

TEST_CASE("special element preconditions") {
    auto C5 = MetacyclicGroup::make(5, 1, 1, Family::Cyclic);
    CHECK(special_element(C5, SpecialKind::B, 25) == RingElement::one(C5, 25));
    CHECK_THROWS_AS(special_element(C5, SpecialKind::C, 25, 1), Error);
    CHECK(special_element(C5, SpecialKind::T_sigma, 25) == RingElement::one(C5, 25));
}

TEST_CASE("coords round trip through module bases") {
    const auto& G = G542();
    auto M3 = make_module(G, ModuleName::M3, 25);
    znz::Row w(M3.rank());
    for (uint32_t i = 0; i < M3.rank(); ++i) w[i] = (3 * i + 1) % 25;
    RingElement x = M3.from_coords(w);
    auto back = M3.coords(x);
    REQUIRE(back.has_value());
    CHECK(*back == w);
    CHECK(!M3.coords(RingElement::one(G, 25)).has_value());  // 1 is not in M3
}
