#pragma once

#include "cthopf/crossed.hpp"

namespace cthopf {

/// (α,β)-Yetter-Drinfel'd module: left H-module, right H-comodule,
/// compatibility h₁·m₀ ⊗ β(h₂)m₁ = (h₂·m)₀ ⊗ (h₂·m)₁α(h₁).
struct YDModule {
    const FiniteDimHopfAlgebra* algebra = nullptr;
    GPair label;          // (α,β)
    std::size_t dim = 0;
    Tensor2to1 action;    // H⊗M → M
    Tensor1to2 coaction;  // M → M⊗H
};

Report verify_yd(const YDModule& m, sweep::Mode mode = sweep::default_mode());

YDModule trivial_yd(const FiniteDimHopfAlgebra& h);

/// H_{α,β}: regular left action, ρ(h) = h₂ ⊗ β(h₃)S⁻¹α(h₁).
YDModule canonical_yd(const FiniteDimHopfAlgebra& h, const GPair& g);

/// M⊗N with h·(m⊗n) = h₂·m⊗h₁·n and H-leg δ(m₁)·δαδ⁻¹(n₁);
/// label (α,β)*(γ,δ). Index ordering is M-major.
YDModule tensor_yd(const YDModule& m, const YDModule& n);

/// ^{(α,β)}N: h⇀n = α⁻¹β(h)·n, H-leg twisted by β⁻¹δαδ⁻¹;
/// label (α,β)*(γ,δ)*(α,β)⁻¹.
YDModule conjugate_yd(const GPair& g, const YDModule& n);

/// c_{M,N}: M⊗N → ^MN⊗M, m⊗n ↦ α⁻¹(m₁)·n ⊗ m₀.
LinMap braiding(const YDModule& m, const YDModule& n);
/// c⁻¹(n⊗m) = m₀ ⊗ α⁻¹S(m₁)·n.
LinMap braiding_inverse(const YDModule& m, const YDModule& n);

/// Matrix of h · (-) on the module.
LinMap action_matrix(const YDModule& m, std::size_t h_index);
/// Matrix of the coaction M → M⊗H (H minor).
LinMap coaction_matrix(const YDModule& m);

/// Invertibility, H-linearity, H-colinearity of c_{M,N}.
Report verify_braiding(const YDModule& m, const YDModule& n, sweep::Mode mode = sweep::default_mode());
/// Both hexagon identities on the triple.
Report verify_hexagons(const YDModule& m, const YDModule& n, const YDModule& p);
/// c_{^PM,^PN} = c_{M,N} as matrices.
Report verify_braiding_conjugation_invariance(const GPair& p, const YDModule& m, const YDModule& n);

/// M* with (h·f)(m) = f(S⁻¹(h)·m), f₀(m)f₁ = f(m₀)β⁻¹α⁻¹S(m₁);
/// label (α,β)⁻¹.
YDModule left_dual(const YDModule& m);
/// *M with S and S⁻¹ swapped.
YDModule right_dual(const YDModule& m);

struct RigidityMaps {
    Vec coeval;  // b_M: 1 ↦ Σ mᵢ⊗mⁱ, coordinates in M⊗M*
    Vec eval;    // d_M: f⊗m ↦ f(m), functional coordinates on M*⊗M
};
RigidityMaps rigidity_maps(const YDModule& m);

/// H-(co)linearity of b_M/d_M, both zigzags, and the right-dual analogues.
Report verify_rigidity(const YDModule& m, sweep::Mode mode = sweep::default_mode());

/// Right comodule over a plain coalgebra.
struct Comodule {
    Coalgebra over;
    std::size_t dim = 0;
    Tensor1to2 coaction;  // M → M⊗D
};

Report verify_comodule(const Comodule& x, sweep::Mode mode = sweep::default_mode());

/// M ∈ YD(α,β) as a comodule over H^{*op}⋈H(α,β):
/// m ↦ Σᵢ hᵢ·m₀ ⊗ (h^i ⋈ m₁).
Comodule to_comodule(const YDModule& m);
Comodule to_comodule(const YDModule& m, const Coalgebra& component);

/// Inverse correspondence; the component label must be supplied.
YDModule from_comodule(const FiniteDimHopfAlgebra& h, const GPair& g, const Comodule& x);

}  // namespace cthopf
