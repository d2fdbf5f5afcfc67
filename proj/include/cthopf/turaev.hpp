#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "cthopf/yd.hpp"

namespace cthopf {

/// One graded component CT(H)_{α,β} = H^{*op}⋈H(α,β); basis H*-major,
/// shared with the crossed-coproduct module.
struct TuraevComponent {
    GPair label;
    Coalgebra coalgebra;  // dim n²
};

/// Lazy map from canonical GPair keys to components; each component is
/// built at most once behind a single-writer guard. Reads of built
/// components are lock-free and parallel-safe.
class TuraevFamily {
  public:
    explicit TuraevFamily(const FiniteDimHopfAlgebra& h) : h_(&h) {}
    TuraevFamily(const TuraevFamily&) = delete;

    const FiniteDimHopfAlgebra& algebra() const { return *h_; }
    const TuraevComponent& component(const GPair& g);
    bool built(const std::string& key) const;
    std::size_t component_dim() const { return h_->dim * h_->dim; }

  private:
    const FiniteDimHopfAlgebra* h_;
    std::map<std::string, std::unique_ptr<TuraevComponent>> comps_;
    mutable std::mutex guard_;
};

/// Coordinate vector in one component.
struct CTElement {
    GPair label;
    Vec coords;
};

// Basis-level kernels (x, y index the H*-major component basis).
/// Graded product: (p⋈h)(q⋈h') = qp ⋈ δ(h)·δαδ⁻¹(h'), labels (α,β) and (γ,δ).
SparseVec ct_mul_basis(const FiniteDimHopfAlgebra& h, const GPair& g1, const GPair& g2, std::uint32_t x,
                       std::uint32_t y);
/// S_{(α,β)}(p⋈h) = Σ h^i S⁻¹*(p) S⁻¹*(h^j) ⋈ β⁻¹(h_j) β⁻¹α⁻¹S(h) β⁻¹α⁻¹β(h_i).
SparseVec ct_antipode_basis(const FiniteDimHopfAlgebra& h, const GPair& g, std::uint32_t x);
/// ψ_{(α,β)}(p⋈h) = p∘α⁻¹β ⋈ β⁻¹δαδ⁻¹(h), source component (γ,δ).
SparseVec ct_psi_basis(const FiniteDimHopfAlgebra& h, const GPair& conj, const GPair& src, std::uint32_t x);
/// σ((p⋈h),(q⋈h')) = p(δ⁻¹(h')) q(1) ε(h), second argument in (γ,δ).
Scalar ct_sigma_basis(const FiniteDimHopfAlgebra& h, const GPair& g1, const GPair& g2, std::uint32_t x,
                      std::uint32_t y);

// Element-level operations (bilinear/linear extensions of the kernels).
CTElement ct_multiply(TuraevFamily& fam, const CTElement& x, const CTElement& y);
CTElement ct_unit(TuraevFamily& fam);
CTElement ct_antipode(TuraevFamily& fam, const CTElement& x);
CTElement ct_crossing(TuraevFamily& fam, const GPair& conj, const CTElement& x);
Scalar ct_sigma(TuraevFamily& fam, const CTElement& x, const CTElement& y);
Scalar ct_counit(TuraevFamily& fam, const CTElement& x);

/// σ⁻¹ as a bilinear form, found by solving the convolution system over
/// the component pair's basis.
struct SigmaInverseResult {
    bool ok = false;
    LinMap form;          // entry (i,j) = σ⁻¹(e_i, e_j)
    std::size_t defect = 0;  // kernel dimension of the convolution system
};
SigmaInverseResult sigma_inverse(TuraevFamily& fam, const GPair& g1, const GPair& g2);

struct TuraevCheckOptions {
    double tct_sample = 1.0;  // fraction of label triples for TCT1/2/4
    std::uint64_t seed = 0;
    sweep::Mode mode = sweep::default_mode();
    /// Replaces the crossing in every check that uses it (corruption tests).
    std::function<SparseVec(const FiniteDimHopfAlgebra&, const GPair&, const GPair&, std::uint32_t)>
        psi_override;
};

/// Full machine check of the crossed coquasitriangular Turaev G-algebra
/// axioms over the given pair set: G-algebra associativity/unit, coalgebra-
/// map multiplication, antipode law, crossing (i)-(iv), TCT1-TCT4,
/// σ-invertibility, and the unit-component CQT Hopf algebra check.
Report verify_turaev_axioms(TuraevFamily& fam, const std::vector<GPair>& pair_set,
                            const TuraevCheckOptions& opt = {});

/// Closes a generator set under g_mul/g_inv up to `cap` elements.
/// truncated is set when the cap was hit.
std::vector<GPair> close_pair_set(const std::vector<GPair>& generators, std::size_t cap, bool& truncated);

/// The unit component (id,id) assembled as a Hopf algebra: codouble
/// coalgebra + the graded product at (id,id) + S_{(id,id)}.
FiniteDimHopfAlgebra unit_component_hopf(TuraevFamily& fam);

/// Corepresentation conjugation: coaction composed with id⊗ψ_g.
Comodule conjugate_comodule(TuraevFamily& fam, const GPair& g, const Comodule& x, const GPair& src_label);

/// Braiding induced by σ on corepresentations:
/// c(m⊗n) = n_[0] ⊗ m_[0] · σ_{g1*g2*g1⁻¹, g1}(ψ_{g1}(n_[1]), m_[1]).
LinMap sigma_braiding(TuraevFamily& fam, const Comodule& xm, const GPair& g1, const Comodule& xn,
                      const GPair& g2);

}  // namespace cthopf
