#include "cthopf/hopf.hpp"

#include <sstream>

namespace cthopf {

namespace {

std::string tuple_str(const FiniteDimHopfAlgebra& h, std::initializer_list<std::size_t> idx) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) os << ",";
        os << h.name(i);
        first = false;
    }
    os << ")";
    return os.str();
}

std::string term_map_str(const TermMap& m) {
    std::ostringstream os;
    if (m.raw().empty()) return "0";
    bool first = true;
    for (const auto& [k, c] : m.raw()) {
        if (!first) os << " + ";
        os << c.str() << "*[" << k << "]";
        first = false;
    }
    return os.str();
}

}  // namespace

Scalar FiniteDimHopfAlgebra::eval_counit(const Vec& v) const { return eval_functional(counit, v); }

Scalar FiniteDimHopfAlgebra::eval_functional(const Vec& p, const Vec& v) const {
    if (p.size() != v.size()) throw DimMismatch("eval_functional: dim mismatch");
    Scalar s = Scalar::zero(field);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero() && !v[i].is_zero()) s += p[i] * v[i];
    return s;
}

Vec FiniteDimHopfAlgebra::convolve(const Vec& p, const Vec& q) const {
    Vec out = zero_vec(dim, field);
    for (std::size_t w = 0; w < dim; ++w) {
        Scalar s = Scalar::zero(field);
        for (const auto& t : comult.terms(w)) {
            if (p[t.a].is_zero() || q[t.b].is_zero()) continue;
            s += t.coeff * p[t.a] * q[t.b];
        }
        out[w] = s;
    }
    return out;
}

Vec FiniteDimHopfAlgebra::convolve3(const Vec& p, const Vec& q, const Vec& r) const {
    Vec out = zero_vec(dim, field);
    for (std::size_t w = 0; w < dim; ++w) {
        Scalar s = Scalar::zero(field);
        for (const auto& t : delta2[w]) {
            if (p[t.a].is_zero() || q[t.b].is_zero() || r[t.c].is_zero()) continue;
            s += t.coeff * p[t.a] * q[t.b] * r[t.c];
        }
        out[w] = s;
    }
    return out;
}

FiniteDimHopfAlgebra finalize_hopf(FiniteDimHopfAlgebra h) {
    const std::size_t n = h.dim;
    if (h.basis.size() != n) {
        h.basis.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            if (h.basis[i].empty()) h.basis[i] = "e" + std::to_string(i);
    }
    if (h.mult.left() != n || h.mult.right() != n || h.mult.out() != n)
        throw DimMismatch("hopf: mult tensor shape");
    if (h.unit.size() != n || h.counit.size() != n) throw DimMismatch("hopf: unit/counit length");
    if (h.comult.src() != n || h.comult.left() != n || h.comult.right() != n)
        throw DimMismatch("hopf: comult shape");
    if (h.antipode.dst() != n || h.antipode.src() != n) throw DimMismatch("hopf: antipode shape");

    h.comult.normalize_terms();
    h.antipode_inv = h.antipode.inverse();

    h.delta2.assign(n, {});
    for (std::size_t w = 0; w < n; ++w) {
        for (const auto& t : h.comult.terms(w))
            for (const auto& u : h.comult.terms(t.a))
                h.delta2[w].push_back({u.a, u.b, t.b, t.coeff * u.coeff});
    }
    h.conv_index.assign(n * n, {});
    for (std::size_t w = 0; w < n; ++w)
        for (const auto& t : h.comult.terms(w))
            h.conv_index[t.a * n + t.b].push_back({static_cast<std::uint32_t>(w), t.coeff});
    for (auto& s : h.conv_index) normalize(s);
    return h;
}

Report verify_hopf_axioms(const FiniteDimHopfAlgebra& h, sweep::Mode mode) {
    Report rep("hopf axioms");
    const std::size_t n = h.dim;
    std::vector<Vec> E;
    for (std::size_t i = 0; i < n; ++i) E.push_back(basis_vec(n, i, h.field));

    // associativity m(m⊗id) = m(id⊗m)
    {
        auto lhs_rhs = [&](std::size_t t) {
            std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
            Vec lhs = h.mult.contract(h.mult.slot(i, j), E[k]);
            Vec rhs = h.mult.contract(E[i], h.mult.slot(j, k));
            return std::make_pair(lhs, rhs);
        };
        auto bad = sweep::first_failure(n * n * n, [&](std::size_t t) {
            auto [l, r] = lhs_rhs(t);
            return l == r;
        }, mode);
        if (bad) {
            auto [l, r] = lhs_rhs(*bad);
            rep.fail("hopf.associativity", "", n * n * n,
                     tuple_str(h, {*bad / (n * n), (*bad / n) % n, *bad % n}), vec_str(l), vec_str(r));
        } else {
            rep.pass("hopf.associativity", "", n * n * n);
        }
    }

    // unit laws
    {
        auto bad = sweep::first_failure(n, [&](std::size_t i) {
            return h.mul(h.unit, E[i]) == E[i] && h.mul(E[i], h.unit) == E[i];
        }, mode);
        if (bad)
            rep.fail("hopf.unit", "", n, tuple_str(h, {*bad}));
        else
            rep.pass("hopf.unit", "", n);
    }

    // coassociativity
    {
        auto sides = [&](std::size_t i) {
            TermMap lhs, rhs;
            for (const auto& t : h.comult.terms(i))
                for (const auto& u : h.comult.terms(t.a)) lhs.add(pack3(u.a, u.b, t.b), t.coeff * u.coeff);
            for (const auto& t : h.comult.terms(i))
                for (const auto& u : h.comult.terms(t.b)) rhs.add(pack3(t.a, u.a, u.b), t.coeff * u.coeff);
            return std::make_pair(lhs, rhs);
        };
        auto bad = sweep::first_failure(n, [&](std::size_t i) {
            auto [l, r] = sides(i);
            return l.equals(r);
        }, mode);
        if (bad) {
            auto [l, r] = sides(*bad);
            rep.fail("hopf.coassociativity", "", n, tuple_str(h, {*bad}), term_map_str(l), term_map_str(r));
        } else {
            rep.pass("hopf.coassociativity", "", n);
        }
    }

    // counit laws
    {
        auto bad = sweep::first_failure(n, [&](std::size_t i) {
            Vec left = zero_vec(n, h.field), right = zero_vec(n, h.field);
            for (const auto& t : h.comult.terms(i)) {
                left[t.b] += t.coeff * h.counit[t.a];
                right[t.a] += t.coeff * h.counit[t.b];
            }
            return left == E[i] && right == E[i];
        }, mode);
        if (bad)
            rep.fail("hopf.counit", "", n, tuple_str(h, {*bad}));
        else
            rep.pass("hopf.counit", "", n);
    }

    // Δ is an algebra map; ε is an algebra map
    {
        auto sides = [&](std::size_t t) {
            std::size_t i = t / n, j = t % n;
            TermMap lhs, rhs;
            for (const auto& pt : h.comult.cocontract(h.mult.slot(i, j))) lhs.add(pack2(pt.a, pt.b), pt.coeff);
            for (const auto& a : h.comult.terms(i))
                for (const auto& b : h.comult.terms(j)) {
                    const Vec& first = h.mult.slot(a.a, b.a);
                    const Vec& second = h.mult.slot(a.b, b.b);
                    Scalar c = a.coeff * b.coeff;
                    for (std::size_t x = 0; x < n; ++x) {
                        if (first[x].is_zero()) continue;
                        for (std::size_t y = 0; y < n; ++y)
                            if (!second[y].is_zero())
                                rhs.add(pack2(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)),
                                        c * first[x] * second[y]);
                    }
                }
            return std::make_pair(lhs, rhs);
        };
        auto bad = sweep::first_failure(n * n, [&](std::size_t t) {
            auto [l, r] = sides(t);
            if (!l.equals(r)) return false;
            std::size_t i = t / n, j = t % n;
            return h.eval_counit(h.mult.slot(i, j)) == h.counit[i] * h.counit[j];
        }, mode);
        if (bad) {
            auto [l, r] = sides(*bad);
            rep.fail("hopf.bialgebra", "", n * n, tuple_str(h, {*bad / n, *bad % n}), term_map_str(l),
                     term_map_str(r));
        } else {
            TermMap du, uu;
            for (const auto& pt : h.comult.cocontract(h.unit)) du.add(pack2(pt.a, pt.b), pt.coeff);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!h.unit[a].is_zero() && !h.unit[b].is_zero())
                        uu.add(pack2(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)),
                               h.unit[a] * h.unit[b]);
            bool unit_ok = du.equals(uu) && h.eval_counit(h.unit) == Scalar::one(h.field);
            if (unit_ok)
                rep.pass("hopf.bialgebra", "", n * n + 1);
            else
                rep.fail("hopf.bialgebra", "", n * n + 1, "(unit)", term_map_str(du), term_map_str(uu));
        }
    }

    // antipode law m(S⊗id)Δ = ηε = m(id⊗S)Δ
    {
        auto sides = [&](std::size_t i) {
            Vec left = zero_vec(n, h.field), right = zero_vec(n, h.field);
            for (const auto& t : h.comult.terms(i)) {
                vec_axpy(left, t.coeff, h.mul(h.antipode.column(t.a), E[t.b]));
                vec_axpy(right, t.coeff, h.mul(E[t.a], h.antipode.column(t.b)));
            }
            Vec expect = vec_scale(h.counit[i], h.unit);
            return std::make_tuple(left, right, expect);
        };
        auto bad = sweep::first_failure(n, [&](std::size_t i) {
            auto [l, r, e] = sides(i);
            return l == e && r == e;
        }, mode);
        if (bad) {
            auto [l, r, e] = sides(*bad);
            rep.fail("hopf.antipode", "", n, tuple_str(h, {*bad}),
                     vec_str(l) + " / " + vec_str(r), vec_str(e));
        } else {
            rep.pass("hopf.antipode", "", n);
        }
    }

    // antipode bijectivity
    {
        bool ok = h.antipode_inv.dst() == n && h.antipode_inv.compose(h.antipode).is_identity() &&
                  h.antipode.compose(h.antipode_inv).is_identity();
        if (ok)
            rep.pass("hopf.antipode_bijective", "", 1);
        else
            rep.fail("hopf.antipode_bijective", "", 1, "S_inv*S != id");
    }

    if (!h.antipode.compose(h.antipode).is_identity())
        rep.info("hopf.antipode_order", "", "S^2 != id");

    return rep;
}

FiniteDimHopfAlgebra dual_hopf(const FiniteDimHopfAlgebra& h) {
    const std::size_t n = h.dim;
    FiniteDimHopfAlgebra d;
    d.field = h.field;
    d.dim = n;
    d.basis.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.basis[i] = "p_" + h.basis[i];
    d.mult = Tensor2to1(n, n, n, h.field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : h.conv_index[i * n + j]) d.mult.slot(i, j)[t.idx] += t.coeff;
    d.unit = h.counit;
    d.comult = Tensor1to2(n, n, n, h.field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& s = h.mult.slot(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!s[k].is_zero())
                    d.comult.add(k, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), s[k]);
        }
    d.counit = h.unit;
    d.antipode = h.antipode.transpose();
    return finalize_hopf(std::move(d));
}

FiniteDimHopfAlgebra opposite_algebra(const FiniteDimHopfAlgebra& h) {
    FiniteDimHopfAlgebra o = h;
    o.mult = h.mult.swap_inputs();
    return finalize_hopf(std::move(o));
}

DualBasisPairing dual_basis_pairing(const FiniteDimHopfAlgebra& h) {
    return DualBasisPairing{h.dim, LinMap::identity(h.dim, h.field)};
}

AutomorphismCheck is_hopf_automorphism(const FiniteDimHopfAlgebra& h, const LinMap& f) {
    const std::size_t n = h.dim;
    if (f.dst() != n || f.src() != n) throw DimMismatch("is_hopf_automorphism: map shape");
    AutomorphismCheck out;
    out.report = Report("hopf automorphism");
    Report& rep = out.report;

    bool invertible = true;
    try {
        (void)f.inverse();
    } catch (const SingularMatrix&) {
        invertible = false;
    }
    if (invertible)
        rep.pass("aut.invertible", "", 1);
    else
        rep.fail("aut.invertible", "", 1, "singular matrix");

    bool alg = true;
    for (std::size_t i = 0; i < n && alg; ++i)
        for (std::size_t j = 0; j < n && alg; ++j) {
            Vec lhs = f.apply(h.mult.slot(i, j));
            Vec rhs = h.mul(f.column(i), f.column(j));
            if (!(lhs == rhs)) {
                rep.fail("aut.algebra_map", "", n * n, tuple_str(h, {i, j}), vec_str(lhs), vec_str(rhs));
                alg = false;
            }
        }
    if (alg) rep.pass("aut.algebra_map", "", n * n);

    bool unit_ok = f.apply(h.unit) == h.unit;
    if (unit_ok)
        rep.pass("aut.unit", "", 1);
    else
        rep.fail("aut.unit", "", 1, "f(1) != 1", vec_str(f.apply(h.unit)), vec_str(h.unit));

    bool coalg = true;
    for (std::size_t j = 0; j < n && coalg; ++j) {
        TermMap lhs, rhs;
        for (const auto& pt : h.comult.cocontract(f.column(j))) lhs.add(pack2(pt.a, pt.b), pt.coeff);
        for (const auto& t : h.comult.terms(j)) {
            Vec fa = f.column(t.a), fb = f.column(t.b);
            for (std::size_t x = 0; x < n; ++x) {
                if (fa[x].is_zero()) continue;
                for (std::size_t y = 0; y < n; ++y)
                    if (!fb[y].is_zero())
                        rhs.add(pack2(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)),
                                t.coeff * fa[x] * fb[y]);
            }
        }
        if (!lhs.equals(rhs)) {
            rep.fail("aut.coalgebra_map", "", n, tuple_str(h, {j}), term_map_str(lhs), term_map_str(rhs));
            coalg = false;
        }
    }
    if (coalg) rep.pass("aut.coalgebra_map", "", n);

    bool counit_ok = true;
    for (std::size_t j = 0; j < n; ++j)
        if (!(h.eval_counit(f.column(j)) == h.counit[j])) {
            rep.fail("aut.counit", "", n, tuple_str(h, {j}));
            counit_ok = false;
            break;
        }
    if (counit_ok) rep.pass("aut.counit", "", n);

    out.ok = invertible && alg && unit_ok && coalg && counit_ok;

    // must follow from the above; checked as a consistency guard
    if (out.ok) {
        bool commutes = f.compose(h.antipode) == h.antipode.compose(f);
        if (commutes)
            rep.pass("aut.antipode_commutes", "", 1);
        else {
            rep.fail("aut.antipode_commutes", "", 1, "f∘S != S∘f");
            out.ok = false;
        }
    }
    return out;
}

std::string GPair::key() const { return alpha.str() + "||" + beta.str(); }

GPair make_gpair_unchecked(const FiniteDimHopfAlgebra& h, LinMap alpha, LinMap beta) {
    GPair g;
    g.algebra = &h;
    g.alpha_inv = alpha.inverse();
    g.beta_inv = beta.inverse();
    g.alpha = std::move(alpha);
    g.beta = std::move(beta);
    return g;
}

GPair make_gpair(const FiniteDimHopfAlgebra& h, LinMap alpha, LinMap beta) {
    auto ca = is_hopf_automorphism(h, alpha);
    if (!ca.ok) throw std::invalid_argument("alpha is not a Hopf automorphism");
    auto cb = is_hopf_automorphism(h, beta);
    if (!cb.ok) throw std::invalid_argument("beta is not a Hopf automorphism");
    return make_gpair_unchecked(h, std::move(alpha), std::move(beta));
}

GPair g_unit(const FiniteDimHopfAlgebra& h) {
    LinMap id = LinMap::identity(h.dim, h.field);
    return make_gpair_unchecked(h, id, id);
}

static void require_same_algebra(const GPair& p, const GPair& q) {
    if (p.algebra != q.algebra)
        throw std::invalid_argument("GPair operation mixes automorphisms of different algebras");
}

GPair g_mul(const GPair& p, const GPair& q) {
    require_same_algebra(p, q);
    GPair r;
    r.algebra = p.algebra;
    // (α,β)*(γ,δ) = (δαδ⁻¹γ, δβ)
    r.alpha = q.beta.compose(p.alpha).compose(q.beta_inv).compose(q.alpha);
    r.beta = q.beta.compose(p.beta);
    r.alpha_inv = q.alpha_inv.compose(q.beta).compose(p.alpha_inv).compose(q.beta_inv);
    r.beta_inv = p.beta_inv.compose(q.beta_inv);
    return r;
}

GPair g_inv(const GPair& p) {
    GPair r;
    r.algebra = p.algebra;
    // (α,β)⁻¹ = (β⁻¹α⁻¹β, β⁻¹)
    r.alpha = p.beta_inv.compose(p.alpha_inv).compose(p.beta);
    r.beta = p.beta_inv;
    r.alpha_inv = p.beta_inv.compose(p.alpha).compose(p.beta);
    r.beta_inv = p.beta;
    return r;
}

GPair g_conj(const GPair& p, const GPair& q) { return g_mul(g_mul(p, q), g_inv(p)); }

}  // namespace cthopf
