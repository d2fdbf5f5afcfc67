#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cthopf/report.hpp"
#include "cthopf/sweep.hpp"
#include "cthopf/tensor.hpp"

namespace cthopf {

struct TripleTerm {
    std::uint32_t a, b, c;
    Scalar coeff;
};

/// Finite-dimensional Hopf algebra given by structure constants.
/// finalize_hopf() computes the cached antipode inverse and the sparse
/// convolution indexes; after that the value is treated as immutable and
/// is safe to share across sweep workers.
struct FiniteDimHopfAlgebra {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Tensor2to1 mult;     // dim,dim -> dim
    Vec unit;            // coordinates of 1
    Tensor1to2 comult;   // dim -> dim⊗dim
    Vec counit;          // functional coordinates
    LinMap antipode;     // column j = S(e_j)
    LinMap antipode_inv; // cached by finalize_hopf

    // caches (derived, built by finalize_hopf)
    std::vector<std::vector<TripleTerm>> delta2;  // (Δ⊗id)Δ per basis element
    std::vector<SparseVec> conv_index;            // slot a*dim+b: {(w,c)} with c = coeff of h_a⊗h_b in Δ(h_w)

    const std::string& name(std::size_t i) const { return basis[i]; }

    Vec mul(const Vec& u, const Vec& v) const { return mult.contract(u, v); }
    Scalar eval_counit(const Vec& v) const;
    Scalar eval_functional(const Vec& p, const Vec& v) const;  // p(v)

    /// Convolution product on functionals, (p q)(h) = p(h1) q(h2).
    Vec convolve(const Vec& p, const Vec& q) const;
    Vec convolve3(const Vec& p, const Vec& q, const Vec& r) const;
};

/// Validates shapes, computes caches. Throws DimMismatch / SingularMatrix
/// (non-bijective antipode).
FiniteDimHopfAlgebra finalize_hopf(FiniteDimHopfAlgebra h);

/// Checks every Hopf axiom basis-exhaustively; failures become report
/// entries with the first violating tuple and both sides' coordinates.
/// S² ≠ id is reported as informational.
Report verify_hopf_axioms(const FiniteDimHopfAlgebra& h,
                          sweep::Mode mode = sweep::default_mode());

/// Dual Hopf algebra H*: convolution product, coproduct dual to mult,
/// counit p ↦ p(1), antipode the transpose of S.
FiniteDimHopfAlgebra dual_hopf(const FiniteDimHopfAlgebra& h);

/// Reverses the multiplication; coalgebra data (and the stored antipode
/// matrix) are left untouched.
FiniteDimHopfAlgebra opposite_algebra(const FiniteDimHopfAlgebra& h);

/// Canonical pairing data between H and H*: h^i(h_j) = δ_ij.
struct DualBasisPairing {
    std::size_t dim = 0;
    LinMap pairing;  // identity in coordinates by construction
};
DualBasisPairing dual_basis_pairing(const FiniteDimHopfAlgebra& h);

struct AutomorphismCheck {
    bool ok = false;
    Report report;
};
/// f must be invertible, an algebra map, a coalgebra map; f∘S = S∘f is
/// asserted as a consistency guard.
AutomorphismCheck is_hopf_automorphism(const FiniteDimHopfAlgebra& h, const LinMap& f);

/// Pair of verified Hopf automorphisms with the twisted group law
/// (α,β)*(γ,δ) = (δαδ⁻¹γ, δβ).
struct GPair {
    const FiniteDimHopfAlgebra* algebra = nullptr;
    LinMap alpha, beta;
    LinMap alpha_inv, beta_inv;

    bool operator==(const GPair& o) const { return alpha == o.alpha && beta == o.beta; }
    std::string key() const;  // canonical serialization for component keying
};

/// Verifies both maps via is_hopf_automorphism; throws std::invalid_argument
/// when either fails.
GPair make_gpair(const FiniteDimHopfAlgebra& h, LinMap alpha, LinMap beta);
/// Trusted constructor for compositions of already-verified pairs.
GPair make_gpair_unchecked(const FiniteDimHopfAlgebra& h, LinMap alpha, LinMap beta);
GPair g_unit(const FiniteDimHopfAlgebra& h);
GPair g_mul(const GPair& p, const GPair& q);
GPair g_inv(const GPair& p);
GPair g_conj(const GPair& p, const GPair& q);  // p*q*p⁻¹

}  // namespace cthopf
