#pragma once

#include "cthopf/hopf.hpp"

namespace cthopf {

/// Plain coalgebra given by structure constants.
struct Coalgebra {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Tensor1to2 comult;
    Vec counit;

    Scalar eval_counit(const Vec& v) const;
};

Report verify_coalgebra_axioms(const Coalgebra& c, sweep::Mode mode = sweep::default_mode());

/// Coalgebra with commuting left/right H-actions that are coalgebra maps.
struct BimoduleCoalgebra {
    const FiniteDimHopfAlgebra* algebra = nullptr;  // the acting H
    Coalgebra co;
    Tensor2to1 left_action;   // H⊗C → C
    Tensor2to1 right_action;  // C⊗H → C
};

Report verify_bimodule_coalgebra(const FiniteDimHopfAlgebra& h, const BimoduleCoalgebra& c,
                                 sweep::Mode mode = sweep::default_mode());

/// C = H with multiplication actions.
BimoduleCoalgebra regular_bimodule(const FiniteDimHopfAlgebra& h);
/// C = k with ε-actions.
BimoduleCoalgebra trivial_bimodule(const FiniteDimHopfAlgebra& h);
/// H(α,β): H as coalgebra, h·c = β(h)c, c·h = cα(h).
BimoduleCoalgebra h_alpha_beta(const FiniteDimHopfAlgebra& h, const GPair& g);

/// Diagonal crossed coproduct H^{*op}⋈C on H*⊗C, basis H*-major:
/// index = i·dim(C) + j. Δ̄(p⋈c) = Σ p₁ ⋈ h_j·c₁·S⁻¹(h_i) ⊗ h^i p₂ h^j ⋈ c₂,
/// ε̄(p⋈c) = p(1)ε(c). The middle product is convolution in the written
/// order: (h^i p₂ h^j)(h) = h^i(h₁)p₂(h₂)h^j(h₃).
Coalgebra diagonal_crossed_coproduct(const FiniteDimHopfAlgebra& h, const BimoduleCoalgebra& c);

/// The codouble: C = H with multiplication actions.
Coalgebra drinfeld_codouble(const FiniteDimHopfAlgebra& h);

/// Algebra structure on the codouble's underlying space H*⊗H making the
/// Prop-2.3 actions module actions: the tensor algebra of H^{*op} and H,
/// (p⊗h)(q⊗k) = qp ⊗ hk with qp the convolution q-then-p.
Tensor2to1 codouble_algebra(const FiniteDimHopfAlgebra& h);
Vec codouble_unit(const FiniteDimHopfAlgebra& h);
Vec codouble_counit(const FiniteDimHopfAlgebra& h);  // ε̄ functional coordinates

struct CodoubleActions {
    Tensor2to1 left;   // D̂(H) ⊗ (H*⋈C) → H*⋈C : (p⊗h)▷(q⋈c) = qp⋈h·c
    Tensor2to1 right;  // (H*⋈C) ⊗ D̂(H) → H*⋈C : (q⋈c)◁(p⊗h) = pq⋈c·h
};
CodoubleActions codouble_actions(const FiniteDimHopfAlgebra& h, const BimoduleCoalgebra& c);

/// Mechanical check that H*⋈C is a codouble bimodule coalgebra:
/// module axioms over codouble_algebra,
/// bimodule commutation, and both actions being coalgebra maps.
Report verify_codouble_actions(const FiniteDimHopfAlgebra& h, const BimoduleCoalgebra& c,
                               sweep::Mode mode = sweep::default_mode());

/// Left H-module + right C-comodule data for the YD-datum check.
struct ModuleComoduleData {
    std::size_t dim = 0;
    Tensor2to1 action;    // H⊗M → M
    Tensor1to2 coaction;  // M → M⊗C
};

/// General (H,C,H)-compatibility: checks module and comodule axioms, then
/// both displayed forms of the condition, and that the forms agree.
Report verify_ydc_compat(const FiniteDimHopfAlgebra& h, const BimoduleCoalgebra& c,
                         const ModuleComoduleData& m, sweep::Mode mode = sweep::default_mode());

}  // namespace cthopf
