#include <doctest.h>

#include "cthopf/group.hpp"

using namespace cthopf;

namespace {
const Field Q = Field::rational();

bool entry_failed(const Report& r, const std::string& axiom) {
    for (const auto& e : r.entries())
        if (e.axiom == axiom && e.status == CheckStatus::Fail) return true;
    return false;
}
}  // namespace

TEST_CASE("group algebras and the Sweedler fixture pass every Hopf axiom") {
    for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3"}) {
        FiniteDimHopfAlgebra h = group_algebra(builtin_group(name));
        Report r = verify_hopf_axioms(h);
        INFO(name);
        CHECK(r.passed());
        // S² = id for group algebras
        CHECK(h.antipode.compose(h.antipode).is_identity());
    }
    Report rs = verify_hopf_axioms(sweedler_fixture());
    CHECK(rs.passed());
}

TEST_CASE("Sweedler fixture: S² ≠ id is reported as informational") {
    FiniteDimHopfAlgebra h = sweedler_fixture();
    CHECK_FALSE(h.antipode.compose(h.antipode).is_identity());
    Report r = verify_hopf_axioms(h);
    bool saw_info = false;
    for (const auto& e : r.entries())
        if (e.axiom == "hopf.antipode_order" && e.status == CheckStatus::Info) saw_info = true;
    CHECK(saw_info);
    // S²(x) = −x on the fixture
    Vec x = basis_vec(4, 2, Q);
    CHECK(h.antipode.compose(h.antipode).apply(x) == vec_scale(-Scalar::one(Q), x));
    // ε(x)=0, ε(g)=1
    CHECK(h.counit[2].is_zero());
    CHECK(h.counit[1].is_one());
}

TEST_CASE("deliberate corruptions fail with a witness naming the axiom") {
    // Z4 with the antipode replaced by the identity: antipode axiom fails at g
    FiniteDimHopfAlgebra h = group_algebra(builtin_group("Z4"));
    h.antipode = LinMap::identity(4, Q);
    h = finalize_hopf(std::move(h));
    Report r = verify_hopf_axioms(h);
    CHECK_FALSE(r.passed());
    CHECK(entry_failed(r, "hopf.antipode"));
    bool witness_at_g = false;
    for (const auto& e : r.entries())
        if (e.axiom == "hopf.antipode" && e.witness.find("g") != std::string::npos) witness_at_g = true;
    CHECK(witness_at_g);

    // Z2 with a corrupted comultiplication: counit law fails
    FiniteDimHopfAlgebra h2 = group_algebra(builtin_group("Z2"));
    h2.comult = Tensor1to2(2, 2, 2, Q);
    h2.comult.add(0, 0, 0, Scalar::one(Q));
    h2.comult.add(1, 1, 0, Scalar::one(Q));  // Δ(g) = g⊗e
    h2 = finalize_hopf(std::move(h2));
    CHECK(entry_failed(verify_hopf_axioms(h2), "hopf.counit"));

    // Z2xZ2 with a corrupted counit: counit law fails
    FiniteDimHopfAlgebra h3 = group_algebra(builtin_group("Z2xZ2"));
    h3.counit[1] = Scalar::zero(Q);
    h3 = finalize_hopf(std::move(h3));
    CHECK(entry_failed(verify_hopf_axioms(h3), "hopf.counit"));

    // Sweedler with identity antipode
    FiniteDimHopfAlgebra h4 = sweedler_fixture();
    h4.antipode = LinMap::identity(4, Q);
    h4 = finalize_hopf(std::move(h4));
    CHECK(entry_failed(verify_hopf_axioms(h4), "hopf.antipode"));

    // Z3 with broken associativity
    FiniteDimHopfAlgebra h5 = group_algebra(builtin_group("Z3"));
    h5.mult.slot(1, 1)[0] = Scalar::one(Q);  // g·g = e + g²
    h5 = finalize_hopf(std::move(h5));
    CHECK_FALSE(verify_hopf_axioms(h5).passed());
}

TEST_CASE("dual of k(Z3) is the function algebra with pointwise products") {
    FiniteDimHopfAlgebra h = group_algebra(builtin_group("Z3"));
    FiniteDimHopfAlgebra d = dual_hopf(h);
    CHECK(verify_hopf_axioms(d).passed());
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            Vec expect = zero_vec(3, Q);
            if (a == b) expect[a] = Scalar::one(Q);
            CHECK(d.mult.slot(a, b) == expect);  // p_a p_b = δ_{a,b} p_a
        }
    // counit of H*: ε(p)=p(1): 1 on p_e, 0 elsewhere
    CHECK(d.counit[0].is_one());
    CHECK(d.counit[1].is_zero());
    CHECK(d.counit[2].is_zero());
}

TEST_CASE("dual of the Sweedler fixture passes all Hopf axioms") {
    CHECK(verify_hopf_axioms(dual_hopf(sweedler_fixture())).passed());
}

TEST_CASE("double dual is literally the original structure") {
    for (const char* name : {"Z3", "S3"}) {
        FiniteDimHopfAlgebra h = group_algebra(builtin_group(name));
        FiniteDimHopfAlgebra dd = dual_hopf(dual_hopf(h));
        CHECK(dd.mult == h.mult);
        CHECK(dd.comult == h.comult);
        CHECK(dd.unit == h.unit);
        CHECK(dd.counit == h.counit);
        CHECK(dd.antipode == h.antipode);
    }
    FiniteDimHopfAlgebra s = sweedler_fixture();
    FiniteDimHopfAlgebra dd = dual_hopf(dual_hopf(s));
    CHECK(dd.mult == s.mult);
    CHECK(dd.comult == s.comult);
    CHECK(dd.antipode == s.antipode);
}

TEST_CASE("opposite algebra transposes the multiplication inputs") {
    FiniteDimHopfAlgebra d3 = dual_hopf(group_algebra(builtin_group("Z3")));
    FiniteDimHopfAlgebra op = opposite_algebra(d3);
    CHECK(op.mult == d3.mult);  // commutative dual: opposite equals itself
    FiniteDimHopfAlgebra ds = dual_hopf(sweedler_fixture());
    FiniteDimHopfAlgebra ops = opposite_algebra(ds);
    CHECK_FALSE(ops.mult == ds.mult);  // H* of Sweedler is noncommutative
    CHECK(opposite_algebra(ops).mult == ds.mult);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(ops.mult.slot(i, j) == ds.mult.slot(j, i));
}

TEST_CASE("dual basis pairing is the identity in coordinates") {
    DualBasisPairing p = dual_basis_pairing(group_algebra(builtin_group("Z4")));
    CHECK(p.pairing.is_identity());
    CHECK(p.dim == 4);
}

TEST_CASE("is_hopf_automorphism accepts and rejects correctly") {
    FiniteDimHopfAlgebra h = group_algebra(builtin_group("Z3"));
    CHECK(is_hopf_automorphism(h, LinMap::identity(3, Q)).ok);
    // inversion τ(g)=g²
    FiniteGroup z3 = builtin_group("Z3");
    LinMap tau = automorphism_matrix(z3, enumerate_automorphisms(z3)[1], Q);
    CHECK(is_hopf_automorphism(h, tau).ok);
    // swap e↔g on k(Z2) violates f(1)=1
    FiniteDimHopfAlgebra h2 = group_algebra(builtin_group("Z2"));
    LinMap swap(2, 2, Q);
    swap.at(0, 1) = swap.at(1, 0) = Scalar::one(Q);
    auto c = is_hopf_automorphism(h2, swap);
    CHECK_FALSE(c.ok);
    bool unit_failed = false;
    for (const auto& e : c.report.entries())
        if (e.axiom == "aut.unit" && e.status == CheckStatus::Fail) unit_failed = true;
    CHECK(unit_failed);
    // Sweedler scaling φ₂
    FiniteDimHopfAlgebra s = sweedler_fixture();
    CHECK(is_hopf_automorphism(s, sweedler_scaling(s, Scalar::of_int(2, Q))).ok);
    // every accepted map commutes with S (guard runs inside the checker)
    LinMap phi = sweedler_scaling(s, Scalar::of_int(2, Q));
    CHECK(phi.compose(s.antipode) == s.antipode.compose(phi));
}

TEST_CASE("GPair group law on k(Z3): unit, products, inverses") {
    FiniteGroup z3 = builtin_group("Z3");
    FiniteDimHopfAlgebra h = group_algebra(z3);
    LinMap tau = automorphism_matrix(z3, enumerate_automorphisms(z3)[1], Q);
    GPair e = g_unit(h);
    GPair t_id = make_gpair(h, tau, LinMap::identity(3, Q));
    GPair t_t = make_gpair(h, tau, tau);
    // (id,id)*(γ,δ) = (γ,δ)
    CHECK(g_mul(e, t_t) == t_t);
    CHECK(g_mul(t_t, e) == t_t);
    // (τ,id)*(τ,id) = (τ²,id) = (id,id)
    CHECK(g_mul(t_id, t_id) == e);
    // g_inv((τ,τ)) = (τ⁻¹τ⁻¹τ, τ⁻¹) = (τ,τ)
    CHECK(g_inv(t_t) == t_t);
    CHECK(g_mul(t_t, g_inv(t_t)) == e);
    CHECK_THROWS_AS(make_gpair(h, LinMap::identity(3, Q).scale(Scalar::of_int(2, Q)), tau),
                    std::invalid_argument);
}

TEST_CASE("GPair associativity holds exhaustively over Aut(S3)^2") {
    FiniteGroup s3 = builtin_group("S3");
    FiniteDimHopfAlgebra h = group_algebra(s3);
    auto mats = hopf_automorphism_matrices(s3, h);
    REQUIRE(mats.size() == 6);
    std::vector<GPair> pairs;
    for (const auto& a : mats)
        for (const auto& b : mats) pairs.push_back(make_gpair_unchecked(h, a, b));
    REQUIRE(pairs.size() == 36);
    GPair e = g_unit(h);
    for (const auto& p : pairs) {
        CHECK(g_mul(p, g_inv(p)) == e);
        CHECK(g_mul(g_inv(p), p) == e);
    }
    std::size_t bad = 0;
    for (const auto& a : pairs)
        for (const auto& b : pairs)
            for (const auto& c : pairs)
                if (!(g_mul(g_mul(a, b), c) == g_mul(a, g_mul(b, c)))) ++bad;
    CHECK(bad == 0);
}
