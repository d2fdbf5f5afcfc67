#include "cthopf/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace cthopf {

Vec zero_vec(std::size_t n, const Field& f) { return Vec(n, Scalar::zero(f)); }

Vec basis_vec(std::size_t n, std::size_t i, const Field& f) {
    Vec v = zero_vec(n, f);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimMismatch("vec_add: dims differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimMismatch("vec_sub: dims differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

void vec_axpy(Vec& a, const Scalar& c, const Vec& b) {
    if (c.is_zero()) return;
    if (a.size() != b.size()) throw DimMismatch("vec_axpy: dims differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += c * b[i];
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
    os << ")";
    return os.str();
}

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.push_back({static_cast<std::uint32_t>(i), v[i]});
    return s;
}

Vec to_dense(const SparseVec& s, std::size_t n, const Field& f) {
    Vec v = zero_vec(n, f);
    for (const auto& t : s) v[t.idx] += t.coeff;
    return v;
}

void normalize(SparseVec& s) {
    std::sort(s.begin(), s.end(), [](const SparseTerm& a, const SparseTerm& b) { return a.idx < b.idx; });
    SparseVec out;
    out.reserve(s.size());
    for (auto& t : s) {
        if (!out.empty() && out.back().idx == t.idx)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const SparseTerm& t) { return t.coeff.is_zero(); }),
              out.end());
    s = std::move(out);
}

SparseVec sparse_scale(const Scalar& c, const SparseVec& s) {
    SparseVec r;
    if (c.is_zero()) return r;
    r.reserve(s.size());
    for (const auto& t : s) r.push_back({t.idx, c * t.coeff});
    return r;
}

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].idx != b[i].idx || a[i].coeff != b[i].coeff) return false;
    return true;
}

std::string sparse_str(const SparseVec& s) {
    std::ostringstream os;
    if (s.empty()) return "0";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << " + ";
        os << s[i].coeff.str() << "*e" << s[i].idx;
    }
    return os.str();
}

void TermMap::add(std::uint64_t key, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = m_.find(key);
    if (it == m_.end()) {
        m_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m_.erase(it);
    }
}

bool TermMap::equals(const TermMap& other) const { return m_ == other.m_; }

std::pair<std::uint64_t, std::pair<Scalar, Scalar>> TermMap::first_difference(const TermMap& other,
                                                                              const Field& f) const {
    auto a = m_.begin();
    auto b = other.m_.begin();
    while (a != m_.end() || b != other.m_.end()) {
        if (b == other.m_.end() || (a != m_.end() && a->first < b->first))
            return {a->first, {a->second, Scalar::zero(f)}};
        if (a == m_.end() || b->first < a->first) return {b->first, {Scalar::zero(f), b->second}};
        if (a->second != b->second) return {a->first, {a->second, b->second}};
        ++a;
        ++b;
    }
    return {0, {Scalar::zero(f), Scalar::zero(f)}};
}

LinMap::LinMap(std::size_t dst, std::size_t src, const Field& f)
    : dst_(dst), src_(src), f_(f), e_(dst * src, Scalar::zero(f)) {}

LinMap LinMap::identity(std::size_t n, const Field& f) {
    LinMap m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Vec LinMap::apply(const Vec& v) const {
    if (v.size() != src_) throw DimMismatch("LinMap::apply: dim mismatch");
    Vec r = zero_vec(dst_, f_);
    for (std::size_t j = 0; j < src_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < dst_; ++i) {
            const Scalar& a = at(i, j);
            if (!a.is_zero()) r[i] += a * v[j];
        }
    }
    return r;
}

Vec LinMap::column(std::size_t j) const {
    Vec r = zero_vec(dst_, f_);
    for (std::size_t i = 0; i < dst_; ++i) r[i] = at(i, j);
    return r;
}

Vec LinMap::row(std::size_t i) const {
    Vec r = zero_vec(src_, f_);
    for (std::size_t j = 0; j < src_; ++j) r[j] = at(i, j);
    return r;
}

LinMap LinMap::compose(const LinMap& g) const {
    if (src_ != g.dst_) throw DimMismatch("LinMap::compose: dim mismatch");
    LinMap r(dst_, g.src_, f_);
    for (std::size_t k = 0; k < src_; ++k)
        for (std::size_t j = 0; j < g.src_; ++j) {
            const Scalar& b = g.at(k, j);
            if (b.is_zero()) continue;
            for (std::size_t i = 0; i < dst_; ++i) {
                const Scalar& a = at(i, k);
                if (!a.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

LinMap LinMap::kron(const LinMap& g) const {
    LinMap r(dst_ * g.dst_, src_ * g.src_, f_);
    for (std::size_t i = 0; i < dst_; ++i)
        for (std::size_t j = 0; j < src_; ++j) {
            const Scalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < g.dst_; ++k)
                for (std::size_t l = 0; l < g.src_; ++l) {
                    const Scalar& b = g.at(k, l);
                    if (!b.is_zero()) r.at(i * g.dst_ + k, j * g.src_ + l) = a * b;
                }
        }
    return r;
}

LinMap LinMap::transpose() const {
    LinMap r(src_, dst_, f_);
    for (std::size_t i = 0; i < dst_; ++i)
        for (std::size_t j = 0; j < src_; ++j) r.at(j, i) = at(i, j);
    return r;
}

LinMap LinMap::add(const LinMap& g) const {
    if (dst_ != g.dst_ || src_ != g.src_) throw DimMismatch("LinMap::add: shape mismatch");
    LinMap r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += g.e_[i];
    return r;
}

LinMap LinMap::scale(const Scalar& c) const {
    LinMap r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

namespace {

// Gauss-Jordan over the exact field; returns reduced matrix, the pivot
// column list and the transformed right block.
struct Elim {
    LinMap a;      // reduced left block
    LinMap b;      // right block transformed the same way
    std::vector<std::size_t> pivot_col;
};

Elim eliminate(LinMap a, LinMap b) {
    const std::size_t rows = a.dst(), cols = a.src();
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        if (sel != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(sel, j), a.at(r, j));
            for (std::size_t j = 0; j < b.src(); ++j) std::swap(b.at(sel, j), b.at(r, j));
        }
        Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = 0; j < cols; ++j) a.at(r, j) *= inv;
        for (std::size_t j = 0; j < b.src(); ++j) b.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Scalar factor = a.at(i, c);
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= factor * a.at(r, j);
            for (std::size_t j = 0; j < b.src(); ++j) b.at(i, j) -= factor * b.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(b), std::move(pivots)};
}

Vec kernel_witness(const Elim& e, std::size_t cols, const Field& f) {
    // first non-pivot column gives the witness
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_col) is_pivot[c] = true;
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    Vec w = zero_vec(cols, f);
    if (free_col == cols) return w;  // no kernel (inconsistent system case)
    w[free_col] = Scalar::one(f);
    for (std::size_t r = 0; r < e.pivot_col.size(); ++r) w[e.pivot_col[r]] = -e.a.at(r, free_col);
    return w;
}

}  // namespace

LinMap LinMap::inverse() const {
    if (dst_ != src_) throw DimMismatch("LinMap::inverse: not square");
    Elim e = eliminate(*this, LinMap::identity(dst_, f_));
    if (e.pivot_col.size() != src_) {
        Vec w = kernel_witness(e, src_, f_);
        throw SingularMatrix("singular matrix; kernel witness " + vec_str(w), std::move(w));
    }
    return e.b;
}

bool LinMap::operator==(const LinMap& o) const {
    return dst_ == o.dst_ && src_ == o.src_ && e_ == o.e_;
}

bool LinMap::is_identity() const {
    if (dst_ != src_) return false;
    return *this == LinMap::identity(dst_, f_);
}

std::string LinMap::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < dst_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < src_; ++j) os << (j ? "," : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

LinMap map_tensor(const LinMap& f, const LinMap& g) { return f.kron(g); }

Vec solve_linear(const LinMap& A, const Vec& b) {
    if (b.size() != A.dst()) throw DimMismatch("solve_linear: rhs dim mismatch");
    LinMap rhs(A.dst(), 1, A.field());
    for (std::size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
    Elim e = eliminate(A, rhs);
    const std::size_t rank = e.pivot_col.size();
    // consistency: transformed rhs must vanish below the rank
    for (std::size_t i = rank; i < A.dst(); ++i)
        if (!e.b.at(i, 0).is_zero()) {
            Vec w = kernel_witness(e, A.src(), A.field());
            throw SingularMatrix("inconsistent linear system", std::move(w));
        }
    if (rank != A.src()) {
        Vec w = kernel_witness(e, A.src(), A.field());
        throw SingularMatrix("underdetermined linear system; kernel witness " + vec_str(w), std::move(w));
    }
    Vec x = zero_vec(A.src(), A.field());
    for (std::size_t r = 0; r < rank; ++r) x[e.pivot_col[r]] = e.b.at(r, 0);
    return x;
}

Tensor2to1::Tensor2to1(std::size_t left, std::size_t right, std::size_t out, const Field& f)
    : l_(left), r_(right), o_(out), f_(f), s_(left * right, zero_vec(out, f)) {}

Vec Tensor2to1::contract(const Vec& u, const Vec& v) const {
    if (u.size() != l_ || v.size() != r_) throw DimMismatch("Tensor2to1::contract: dim mismatch");
    Vec out = zero_vec(o_, f_);
    for (std::size_t i = 0; i < l_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < r_; ++j) {
            if (v[j].is_zero()) continue;
            vec_axpy(out, u[i] * v[j], slot(i, j));
        }
    }
    return out;
}

Tensor2to1 Tensor2to1::swap_inputs() const {
    Tensor2to1 t(r_, l_, o_, f_);
    for (std::size_t i = 0; i < l_; ++i)
        for (std::size_t j = 0; j < r_; ++j) t.slot(j, i) = slot(i, j);
    return t;
}

bool Tensor2to1::operator==(const Tensor2to1& o) const {
    return l_ == o.l_ && r_ == o.r_ && o_ == o.o_ && s_ == o.s_;
}

Tensor1to2::Tensor1to2(std::size_t src, std::size_t left, std::size_t right, const Field& f)
    : src_(src), l_(left), r_(right), f_(f), t_(src) {}

void Tensor1to2::add(std::size_t i, std::uint32_t a, std::uint32_t b, Scalar c) {
    if (i >= src_ || a >= l_ || b >= r_) throw DimMismatch("Tensor1to2::add: index out of range");
    if (c.is_zero()) return;
    t_[i].push_back({a, b, std::move(c)});
}

void Tensor1to2::normalize_terms() {
    for (auto& row : t_) {
        std::sort(row.begin(), row.end(), [](const PairTerm& x, const PairTerm& y) {
            return x.a != y.a ? x.a < y.a : x.b < y.b;
        });
        std::vector<PairTerm> out;
        out.reserve(row.size());
        for (auto& t : row) {
            if (!out.empty() && out.back().a == t.a && out.back().b == t.b)
                out.back().coeff += t.coeff;
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const PairTerm& t) { return t.coeff.is_zero(); }),
                  out.end());
        row = std::move(out);
    }
}

std::vector<PairTerm> Tensor1to2::cocontract(const Vec& u) const {
    if (u.size() != src_) throw DimMismatch("Tensor1to2::cocontract: dim mismatch");
    std::vector<PairTerm> acc;
    for (std::size_t i = 0; i < src_; ++i) {
        if (u[i].is_zero()) continue;
        for (const auto& t : t_[i]) acc.push_back({t.a, t.b, u[i] * t.coeff});
    }
    std::sort(acc.begin(), acc.end(),
              [](const PairTerm& x, const PairTerm& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
    std::vector<PairTerm> out;
    for (auto& t : acc) {
        if (!out.empty() && out.back().a == t.a && out.back().b == t.b)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const PairTerm& t) { return t.coeff.is_zero(); }),
              out.end());
    return out;
}

Vec Tensor1to2::dense_row(std::size_t i) const {
    Vec v = zero_vec(l_ * r_, f_);
    for (const auto& t : t_[i]) v[t.a * r_ + t.b] += t.coeff;
    return v;
}

bool Tensor1to2::operator==(const Tensor1to2& o) const {
    if (src_ != o.src_ || l_ != o.l_ || r_ != o.r_) return false;
    for (std::size_t i = 0; i < src_; ++i) {
        const auto& x = t_[i];
        const auto& y = o.t_[i];
        if (x.size() != y.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k].a != y[k].a || x[k].b != y[k].b || x[k].coeff != y[k].coeff) return false;
    }
    return true;
}

}  // namespace cthopf
