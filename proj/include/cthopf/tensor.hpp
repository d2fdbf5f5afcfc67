#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cthopf/scalar.hpp"

namespace cthopf {

struct DimMismatch : std::runtime_error {
    explicit DimMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Coordinate vector. Length is the dimension.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const Field& f);
Vec basis_vec(std::size_t n, std::size_t i, const Field& f);
bool is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
/// a += c * b, skipping when c or entries vanish.
void vec_axpy(Vec& a, const Scalar& c, const Vec& b);
std::string vec_str(const Vec& v);

/// Sparse coordinate vector: sorted by index, no explicit zeros.
struct SparseTerm {
    std::uint32_t idx;
    Scalar coeff;
};
using SparseVec = std::vector<SparseTerm>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, std::size_t n, const Field& f);
/// Sorts by index, merges duplicates, drops zeros.
void normalize(SparseVec& s);
SparseVec sparse_scale(const Scalar& c, const SparseVec& s);
bool sparse_equal(const SparseVec& a, const SparseVec& b);  // expects normalized inputs
std::string sparse_str(const SparseVec& s);

/// Accumulator keyed by packed index tuples; used to compare the two sides
/// of an identity without materializing dense tensors.
class TermMap {
  public:
    void add(std::uint64_t key, const Scalar& c);
    void clear() { m_.clear(); }
    /// Drops zero entries, then compares exactly.
    bool equals(const TermMap& other) const;
    /// First key where the two maps differ (for witnesses); 0 terms each.
    std::pair<std::uint64_t, std::pair<Scalar, Scalar>> first_difference(const TermMap& other, const Field& f) const;
    const std::map<std::uint64_t, Scalar>& raw() const { return m_; }

  private:
    std::map<std::uint64_t, Scalar> m_;
};

constexpr std::uint64_t pack2(std::uint32_t a, std::uint32_t b) {
    return (std::uint64_t(a) << 32) | b;
}
constexpr std::uint64_t pack3(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return (std::uint64_t(a) << 42) | (std::uint64_t(b) << 21) | c;  // each index < 2^21
}
constexpr std::uint32_t unpack2_hi(std::uint64_t k) { return std::uint32_t(k >> 32); }
constexpr std::uint32_t unpack2_lo(std::uint64_t k) { return std::uint32_t(k & 0xffffffffu); }
constexpr std::uint32_t unpack3_a(std::uint64_t k) { return std::uint32_t(k >> 42); }
constexpr std::uint32_t unpack3_b(std::uint64_t k) { return std::uint32_t((k >> 21) & 0x1fffffu); }
constexpr std::uint32_t unpack3_c(std::uint64_t k) { return std::uint32_t(k & 0x1fffffu); }

struct SingularMatrix : std::runtime_error {
    SingularMatrix(std::string what, Vec kernel_witness)
        : std::runtime_error(std::move(what)), kernel(std::move(kernel_witness)) {}
    Vec kernel;  // nonzero vector in the kernel
};

/// Dense linear map. Column j is the image of the j-th source basis vector.
class LinMap {
  public:
    LinMap() = default;
    LinMap(std::size_t dst, std::size_t src, const Field& f);
    static LinMap identity(std::size_t n, const Field& f);

    std::size_t dst() const { return dst_; }
    std::size_t src() const { return src_; }
    const Field& field() const { return f_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * src_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return e_[i * src_ + j]; }

    Vec apply(const Vec& v) const;
    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;  // coordinates of the pulled-back functional e^i ∘ f

    LinMap compose(const LinMap& g) const;  // (*this) ∘ g
    LinMap kron(const LinMap& g) const;     // first factor major
    LinMap transpose() const;
    LinMap inverse() const;  // throws SingularMatrix with a kernel witness
    LinMap add(const LinMap& g) const;
    LinMap scale(const Scalar& c) const;

    bool operator==(const LinMap& o) const;
    bool is_identity() const;
    std::string str() const;

  private:
    std::size_t dst_ = 0, src_ = 0;
    Field f_;
    std::vector<Scalar> e_;
};

/// map_tensor of the two maps (Kronecker product), first factor major.
LinMap map_tensor(const LinMap& f, const LinMap& g);

/// Solves A x = b exactly. Throws SingularMatrix when the system is
/// singular/inconsistent; the witness is a kernel vector when one exists.
Vec solve_linear(const LinMap& A, const Vec& b);

/// Bilinear structure tensor: e_i ⊗ e_j ↦ Σ_k t[i][j][k] e_k.
/// Slots are dense output vectors (dimensions in scope are small).
class Tensor2to1 {
  public:
    Tensor2to1() = default;
    Tensor2to1(std::size_t left, std::size_t right, std::size_t out, const Field& f);

    std::size_t left() const { return l_; }
    std::size_t right() const { return r_; }
    std::size_t out() const { return o_; }
    const Field& field() const { return f_; }

    const Vec& slot(std::size_t i, std::size_t j) const { return s_[i * r_ + j]; }
    Vec& slot(std::size_t i, std::size_t j) { return s_[i * r_ + j]; }

    /// Bilinear evaluation.
    Vec contract(const Vec& u, const Vec& v) const;
    /// Transposes the two input slots (opposite multiplication).
    Tensor2to1 swap_inputs() const;

    bool operator==(const Tensor2to1& o) const;

  private:
    std::size_t l_ = 0, r_ = 0, o_ = 0;
    Field f_;
    std::vector<Vec> s_;
};

struct PairTerm {
    std::uint32_t a, b;
    Scalar coeff;
};

/// Sparse splitting tensor: e_i ↦ Σ coeff · e_a ⊗ e_b.
class Tensor1to2 {
  public:
    Tensor1to2() = default;
    Tensor1to2(std::size_t src, std::size_t left, std::size_t right, const Field& f);

    std::size_t src() const { return src_; }
    std::size_t left() const { return l_; }
    std::size_t right() const { return r_; }
    const Field& field() const { return f_; }

    void add(std::size_t i, std::uint32_t a, std::uint32_t b, Scalar c);
    /// Sorts by (a,b), merges, drops zeros. Call once after building.
    void normalize_terms();

    const std::vector<PairTerm>& terms(std::size_t i) const { return t_[i]; }
    /// Linear evaluation on a coordinate vector; result normalized.
    std::vector<PairTerm> cocontract(const Vec& u) const;
    /// Dense n_left×n_right coordinates of the image of e_i.
    Vec dense_row(std::size_t i) const;

    bool operator==(const Tensor1to2& o) const;

  private:
    std::size_t src_ = 0, l_ = 0, r_ = 0;
    Field f_;
    std::vector<std::vector<PairTerm>> t_;
};

}  // namespace cthopf
