#pragma once

#include "cthopf/group.hpp"
#include "cthopf/yd.hpp"

namespace cthopf {

/// Closed-form CT(k(π)) operations as pure index arithmetic on the group
/// table — no tensor machinery, so they stand as an independent oracle for
/// the generic constructions. Component basis index = dual·|π| + grp,
/// matching the engine's H*-major ordering. All coefficients are 0/1.
class OracleCT {
  public:
    explicit OracleCT(const FiniteGroup& pi) : pi_(&pi) {}

    std::uint32_t n() const { return static_cast<std::uint32_t>(pi_->order); }
    std::uint32_t idx(std::uint32_t dual, std::uint32_t grp) const { return dual * n() + grp; }

    /// Δ̄(p_c⋈d) = Σ_{ab=c} p_a⋈β(b)dα(b⁻¹) ⊗ p_b⋈d.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> delta_bar(const GroupAutomorphism& alpha,
                                                                   const GroupAutomorphism& beta,
                                                                   std::uint32_t x) const;
    /// (p_c⋈a)(p_d⋈b) = δ_{c,d} p_c⋈δ(a)δαδ⁻¹(b); empty when c≠d.
    std::optional<std::uint32_t> multiply(const GroupAutomorphism& alpha, const GroupAutomorphism& beta,
                                          const GroupAutomorphism& gamma, const GroupAutomorphism& delta,
                                          std::uint32_t x, std::uint32_t y) const;
    /// 1 = Σ_a p_a⊗1.
    std::vector<std::uint32_t> unit() const;
    /// ψ_{(α,β)}(p_c⋈d) = p_{β⁻¹α(c)} ⊗ β⁻¹δαδ⁻¹(d), source (γ,δ).
    std::uint32_t psi(const GroupAutomorphism& alpha, const GroupAutomorphism& beta,
                      const GroupAutomorphism& gamma, const GroupAutomorphism& delta, std::uint32_t x) const;
    /// S_{(α,β)}(p_c⋈a) = p_{c⁻¹}⋈β⁻¹(c)β⁻¹α⁻¹(a⁻¹)β⁻¹α⁻¹β(c⁻¹).
    std::uint32_t antipode(const GroupAutomorphism& alpha, const GroupAutomorphism& beta,
                           std::uint32_t x) const;
    /// σ((p_c⋈a),(p_d⋈b)) = δ_{b,δ(c)} δ_{1,d}.
    bool sigma(const GroupAutomorphism& alpha, const GroupAutomorphism& beta, const GroupAutomorphism& gamma,
               const GroupAutomorphism& delta, std::uint32_t x, std::uint32_t y) const;
    /// Candidate inverse σ⁻¹((p_c⋈a),(p_d⋈b)) = δ_{b,δ(c)⁻¹} δ_{1,d}.
    bool sigma_inv(const GroupAutomorphism& alpha, const GroupAutomorphism& beta,
                   const GroupAutomorphism& gamma, const GroupAutomorphism& delta, std::uint32_t x,
                   std::uint32_t y) const;

  private:
    const FiniteGroup* pi_;
};

/// Homogeneous decomposition M = ⊕ M_a of a module over k(π); components
/// are recovered from the projector family T_a of the coaction.
struct GradedDecomposition {
    std::vector<std::vector<Vec>> component_basis;  // per group element
    std::size_t total_dim() const;
};

struct NotGroupGraded : std::runtime_error {
    explicit NotGroupGraded(const std::string& what) : std::runtime_error(what) {}
};

/// Throws NotGroupGraded when the coaction is not diagonalizable over the
/// group-likes (non-comodule input).
GradedDecomposition yd_grading(const FiniteGroup& pi, const YDModule& m);

/// Grading laws of tensor/conjugate/dual/braiding constructions against
/// the generic engine. `autos` must be Aut(π) in enumeration order and the
/// labels of m and n must be automorphism matrices over k(π).
Report verify_grading_laws(const FiniteGroup& pi, const GroupAutomorphism& alpha,
                           const GroupAutomorphism& beta, const GroupAutomorphism& gamma,
                           const GroupAutomorphism& delta, const YDModule& m, const YDModule& n);

}  // namespace cthopf
