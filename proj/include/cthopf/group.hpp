#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cthopf/hopf.hpp"

namespace cthopf {

/// Finite group as a multiplication table. Identity is index 0 for every
/// builtin; table files may place it elsewhere.
struct FiniteGroup {
    std::size_t order = 0;
    std::vector<std::uint32_t> table;  // row-major: table[a*order+b] = a∘b
    std::vector<std::uint32_t> inverse;
    std::uint32_t identity = 0;
    std::vector<std::string> names;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a * order + b]; }
    std::uint32_t inv(std::uint32_t a) const { return inverse[a]; }
    const std::string& name(std::uint32_t a) const { return names[a]; }
};

/// Validates the table (Latin square, associativity, two-sided identity,
/// inverses) and fills the derived fields. Throws std::invalid_argument.
FiniteGroup group_from_table(std::size_t order, std::vector<std::uint32_t> table,
                             std::vector<std::string> names = {});

/// Z2, Z3, Z4, Z2xZ2, S3.
FiniteGroup builtin_group(const std::string& name);
bool is_builtin_group(const std::string& name);

struct GroupAutomorphism {
    std::vector<std::uint32_t> image;  // image[a] = f(a)
    std::uint32_t operator()(std::uint32_t a) const { return image[a]; }
};

GroupAutomorphism compose(const FiniteGroup& g, const GroupAutomorphism& f1, const GroupAutomorphism& f2);
GroupAutomorphism invert(const FiniteGroup& g, const GroupAutomorphism& f);

/// Complete list, deterministic order (lexicographic in the image tuple,
/// identity first). Throws std::invalid_argument above the cap.
std::vector<GroupAutomorphism> enumerate_automorphisms(const FiniteGroup& g, std::size_t cap = 24);

/// k(π): Δ(g)=g⊗g, ε(g)=1, S(g)=g⁻¹.
FiniteDimHopfAlgebra group_algebra(const FiniteGroup& g, const Field& f = Field::rational());

/// Permutation matrix of a group automorphism, ready for GPair use.
LinMap automorphism_matrix(const FiniteGroup& g, const GroupAutomorphism& a, const Field& f);

/// All of Aut(π) as verified GPair-ready matrices over k(π).
std::vector<LinMap> hopf_automorphism_matrices(const FiniteGroup& g, const FiniteDimHopfAlgebra& kpi);

/// 4-dimensional non-cocommutative stress fixture {1, g, x, gx}:
/// g²=1, x²=0, xg=−gx, Δx = x⊗1 + g⊗x, S(x) = −gx. Needs char ≠ 2.
FiniteDimHopfAlgebra sweedler_fixture(const Field& f = Field::rational());

/// The scaling automorphism g↦g, x↦λx of the Sweedler fixture.
LinMap sweedler_scaling(const FiniteDimHopfAlgebra& h, const Scalar& lambda);

}  // namespace cthopf
