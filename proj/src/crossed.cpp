#include "cthopf/crossed.hpp"

#include <sstream>

namespace cthopf {

namespace {

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

Scalar Coalgebra::eval_counit(const Vec& v) const {
    Scalar s = Scalar::zero(field);
    for (std::size_t i = 0; i < dim; ++i)
        if (!counit[i].is_zero() && !v[i].is_zero()) s += counit[i] * v[i];
    return s;
}

Report verify_coalgebra_axioms(const Coalgebra& c, sweep::Mode mode) {
    Report rep("coalgebra axioms");
    const std::size_t n = c.dim;
    {
        auto sides = [&](std::size_t i) {
            TermMap lhs, rhs;
            for (const auto& t : c.comult.terms(i))
                for (const auto& u : c.comult.terms(t.a)) lhs.add(pack3(u.a, u.b, t.b), t.coeff * u.coeff);
            for (const auto& t : c.comult.terms(i))
                for (const auto& u : c.comult.terms(t.b)) rhs.add(pack3(t.a, u.a, u.b), t.coeff * u.coeff);
            return std::make_pair(lhs, rhs);
        };
        auto bad = sweep::first_failure(n, [&](std::size_t i) {
            auto [l, r] = sides(i);
            return l.equals(r);
        }, mode);
        if (bad) {
            auto [l, r] = sides(*bad);
            rep.fail("coalgebra.coassociativity", "", n, c.basis.empty() ? std::to_string(*bad) : c.basis[*bad],
                     term_map_str(l), term_map_str(r));
        } else {
            rep.pass("coalgebra.coassociativity", "", n);
        }
    }
    {
        auto bad = sweep::first_failure(n, [&](std::size_t i) {
            Vec left = zero_vec(n, c.field), right = zero_vec(n, c.field);
            for (const auto& t : c.comult.terms(i)) {
                left[t.b] += t.coeff * c.counit[t.a];
                right[t.a] += t.coeff * c.counit[t.b];
            }
            Vec e = basis_vec(n, i, c.field);
            return left == e && right == e;
        }, mode);
        if (bad)
            rep.fail("coalgebra.counit", "", n, c.basis.empty() ? std::to_string(*bad) : c.basis[*bad]);
        else
            rep.pass("coalgebra.counit", "", n);
    }
    return rep;
}

Report verify_bimodule_coalgebra(const FiniteDimHopfAlgebra& h, const BimoduleCoalgebra& c,
                                 sweep::Mode mode) {
    Report rep("bimodule coalgebra");
    rep.merge(verify_coalgebra_axioms(c.co, mode));
    const std::size_t n = h.dim, m = c.co.dim;
    std::vector<Vec> EC;
    for (std::size_t j = 0; j < m; ++j) EC.push_back(basis_vec(m, j, c.co.field));

    // left/right module axioms
    {
        auto bad = sweep::first_failure(m, [&](std::size_t j) {
            return c.left_action.contract(h.unit, EC[j]) == EC[j] &&
                   c.right_action.contract(EC[j], h.unit) == EC[j];
        }, mode);
        if (bad)
            rep.fail("bimodule.unit_acts_trivially", "", m, std::to_string(*bad));
        else
            rep.pass("bimodule.unit_acts_trivially", "", m);
    }
    {
        auto bad = sweep::first_failure(n * n * m, [&](std::size_t t) {
            std::size_t i = t / (n * m), j = (t / m) % n, k = t % m;
            Vec lhs = c.left_action.contract(h.mult.slot(i, j), EC[k]);
            Vec rhs = c.left_action.contract(basis_vec(n, i, h.field), c.left_action.slot(j, k));
            if (!(lhs == rhs)) return false;
            Vec lhs2 = c.right_action.contract(EC[k], h.mult.slot(i, j));
            Vec rhs2 = c.right_action.contract(c.right_action.slot(k, i), basis_vec(n, j, h.field));
            return lhs2 == rhs2;
        }, mode);
        if (bad)
            rep.fail("bimodule.module_axioms", "", n * n * m, "tuple " + std::to_string(*bad));
        else
            rep.pass("bimodule.module_axioms", "", n * n * m);
    }
    // actions commute
    {
        auto bad = sweep::first_failure(n * m * n, [&](std::size_t t) {
            std::size_t i = t / (m * n), j = (t / n) % m, k = t % n;
            Vec lhs = c.right_action.contract(c.left_action.slot(i, j), basis_vec(n, k, h.field));
            Vec rhs = c.left_action.contract(basis_vec(n, i, h.field), c.right_action.slot(j, k));
            return lhs == rhs;
        }, mode);
        if (bad)
            rep.fail("bimodule.actions_commute", "", n * m * n, "tuple " + std::to_string(*bad));
        else
            rep.pass("bimodule.actions_commute", "", n * m * n);
    }
    // both actions are coalgebra maps
    {
        auto sides = [&](bool left, std::size_t hi, std::size_t cj) {
            TermMap lhs, rhs;
            const Vec& image = left ? c.left_action.slot(hi, cj) : c.right_action.slot(cj, hi);
            for (const auto& t : c.co.comult.cocontract(image)) lhs.add(pack2(t.a, t.b), t.coeff);
            for (const auto& ht : h.comult.terms(hi))
                for (const auto& ct : c.co.comult.terms(cj)) {
                    const Vec& first = left ? c.left_action.slot(ht.a, ct.a) : c.right_action.slot(ct.a, ht.a);
                    const Vec& second = left ? c.left_action.slot(ht.b, ct.b) : c.right_action.slot(ct.b, ht.b);
                    Scalar cf = ht.coeff * ct.coeff;
                    for (std::size_t x = 0; x < m; ++x) {
                        if (first[x].is_zero()) continue;
                        for (std::size_t y = 0; y < m; ++y)
                            if (!second[y].is_zero())
                                rhs.add(pack2(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)),
                                        cf * first[x] * second[y]);
                    }
                }
            return std::make_pair(lhs, rhs);
        };
        for (bool left : {true, false}) {
            const char* axiom = left ? "bimodule.left_action_coalgebra_map" : "bimodule.right_action_coalgebra_map";
            auto bad = sweep::first_failure(n * m, [&](std::size_t t) {
                auto [l, r] = sides(left, t / m, t % m);
                if (!l.equals(r)) return false;
                std::size_t hi = t / m, cj = t % m;
                const Vec& image = left ? c.left_action.slot(hi, cj) : c.right_action.slot(cj, hi);
                return c.co.eval_counit(image) == h.counit[hi] * c.co.counit[cj];
            }, mode);
            if (bad) {
                auto [l, r] = sides(left, *bad / m, *bad % m);
                rep.fail(axiom, "", n * m, "tuple " + std::to_string(*bad), term_map_str(l), term_map_str(r));
            } else {
                rep.pass(axiom, "", n * m);
            }
        }
    }
    return rep;
}

BimoduleCoalgebra regular_bimodule(const FiniteDimHopfAlgebra& h) {
    BimoduleCoalgebra c;
    c.algebra = &h;
    c.co = Coalgebra{h.field, h.dim, h.basis, h.comult, h.counit};
    c.left_action = h.mult;
    c.right_action = h.mult;
    return c;
}

BimoduleCoalgebra trivial_bimodule(const FiniteDimHopfAlgebra& h) {
    BimoduleCoalgebra c;
    c.algebra = &h;
    Tensor1to2 cm(1, 1, 1, h.field);
    cm.add(0, 0, 0, Scalar::one(h.field));
    cm.normalize_terms();
    c.co = Coalgebra{h.field, 1, {"1"}, cm, {Scalar::one(h.field)}};
    c.left_action = Tensor2to1(h.dim, 1, 1, h.field);
    c.right_action = Tensor2to1(1, h.dim, 1, h.field);
    for (std::size_t i = 0; i < h.dim; ++i) {
        c.left_action.slot(i, 0)[0] = h.counit[i];
        c.right_action.slot(0, i)[0] = h.counit[i];
    }
    return c;
}

BimoduleCoalgebra h_alpha_beta(const FiniteDimHopfAlgebra& h, const GPair& g) {
    BimoduleCoalgebra c;
    c.algebra = &h;
    c.co = Coalgebra{h.field, h.dim, h.basis, h.comult, h.counit};
    const std::size_t n = h.dim;
    c.left_action = Tensor2to1(n, n, n, h.field);
    c.right_action = Tensor2to1(n, n, n, h.field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            c.left_action.slot(i, j) = h.mul(g.beta.column(i), basis_vec(n, j, h.field));
            c.right_action.slot(j, i) = h.mul(basis_vec(n, j, h.field), g.alpha.column(i));
        }
    return c;
}

Coalgebra diagonal_crossed_coproduct(const FiniteDimHopfAlgebra& h, const BimoduleCoalgebra& c) {
    const std::size_t n = h.dim, m = c.co.dim;
    Coalgebra d;
    d.field = h.field;
    d.dim = n * m;
    d.basis.resize(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            d.basis[i * m + j] = "p_" + h.basis[i] + "⋈" + (c.co.basis.empty() ? std::to_string(j) : c.co.basis[j]);
    d.comult = Tensor1to2(n * m, n * m, n * m, h.field);
    d.counit = zero_vec(n * m, h.field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) d.counit[i * m + j] = h.unit[i] * c.co.counit[j];

    // Δ*(h^r): dual coproduct term (u,v) has coefficient mult[u][v][r]
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < m; ++s) {
            const std::size_t src = r * m + s;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) {
                    const Scalar& pc = h.mult.slot(u, v)[r];
                    if (pc.is_zero()) continue;
                    for (const auto& ct : c.co.comult.terms(s)) {
                        const Scalar base = pc * ct.coeff;
                        for (std::size_t i = 0; i < n; ++i) {
                            Vec sinv_i = h.antipode_inv.column(i);
                            for (std::size_t j = 0; j < n; ++j) {
                                // C-part: h_j · c₁ · S⁻¹(h_i)
                                Vec cpart = c.right_action.contract(c.left_action.slot(j, ct.a), sinv_i);
                                if (is_zero(cpart)) continue;
                                // H*-part: h^i h^v h^j in written-order convolution
                                Vec conv = h.convolve3(basis_vec(n, i, h.field), basis_vec(n, v, h.field),
                                                       basis_vec(n, j, h.field));
                                for (std::size_t z = 0; z < m; ++z) {
                                    if (cpart[z].is_zero()) continue;
                                    for (std::size_t w = 0; w < n; ++w) {
                                        if (conv[w].is_zero()) continue;
                                        d.comult.add(src, static_cast<std::uint32_t>(u * m + z),
                                                     static_cast<std::uint32_t>(w * m + ct.b),
                                                     base * cpart[z] * conv[w]);
                                    }
                                }
                            }
                        }
                    }
                }
        }
    }
    d.comult.normalize_terms();
    return d;
}

Coalgebra drinfeld_codouble(const FiniteDimHopfAlgebra& h) {
    return diagonal_crossed_coproduct(h, regular_bimodule(h));
}

Tensor2to1 codouble_algebra(const FiniteDimHopfAlgebra& h) {
    const std::size_t n = h.dim;
    Tensor2to1 t(n * n, n * n, n * n, h.field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) {
                    // (h^i⊗h_j)(h^u⊗h_v) = (h^u h^i) ⊗ h_j h_v
                    Vec& out = t.slot(i * n + j, u * n + v);
                    const Vec& hp = h.mult.slot(j, v);
                    for (const auto& cw : h.conv_index[u * n + i])
                        for (std::size_t z = 0; z < n; ++z)
                            if (!hp[z].is_zero()) out[cw.idx * n + z] += cw.coeff * hp[z];
                }
    return t;
}

Vec codouble_unit(const FiniteDimHopfAlgebra& h) {
    const std::size_t n = h.dim;
    Vec u = zero_vec(n * n, h.field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u[i * n + j] = h.counit[i] * h.unit[j];
    return u;
}

Vec codouble_counit(const FiniteDimHopfAlgebra& h) {
    const std::size_t n = h.dim;
    Vec e = zero_vec(n * n, h.field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = h.unit[i] * h.counit[j];
    return e;
}

CodoubleActions codouble_actions(const FiniteDimHopfAlgebra& h, const BimoduleCoalgebra& c) {
    const std::size_t n = h.dim, m = c.co.dim;
    CodoubleActions a;
    a.left = Tensor2to1(n * n, n * m, n * m, h.field);
    a.right = Tensor2to1(n * m, n * n, n * m, h.field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < m; ++v) {
                    {
                        // (h^i⊗h_j) ▷ (h^u⋈c_v) = (h^u h^i) ⋈ h_j·c_v
                        Vec& out = a.left.slot(i * n + j, u * m + v);
                        const Vec& cp = c.left_action.slot(j, v);
                        for (const auto& cw : h.conv_index[u * n + i])
                            for (std::size_t z = 0; z < m; ++z)
                                if (!cp[z].is_zero()) out[cw.idx * m + z] += cw.coeff * cp[z];
                    }
                    {
                        // (h^u⋈c_v) ◁ (h^i⊗h_j) = (h^i h^u) ⋈ c_v·h_j
                        Vec& out = a.right.slot(u * m + v, i * n + j);
                        const Vec& cp = c.right_action.slot(v, j);
                        for (const auto& cw : h.conv_index[i * n + u])
                            for (std::size_t z = 0; z < m; ++z)
                                if (!cp[z].is_zero()) out[cw.idx * m + z] += cw.coeff * cp[z];
                    }
                }
    return a;
}

Report verify_codouble_actions(const FiniteDimHopfAlgebra& h, const BimoduleCoalgebra& c, sweep::Mode mode) {
    Report rep("codouble bimodule coalgebra");
    const std::size_t n = h.dim, m = c.co.dim;
    const std::size_t nd = n * n, nx = n * m;
    Tensor2to1 alg = codouble_algebra(h);
    Vec unitD = codouble_unit(h);
    Vec counitD = codouble_counit(h);
    CodoubleActions act = codouble_actions(h, c);
    Coalgebra X = diagonal_crossed_coproduct(h, c);
    Coalgebra D = drinfeld_codouble(h);

    std::vector<Vec> EX;
    for (std::size_t x = 0; x < nx; ++x) EX.push_back(basis_vec(nx, x, h.field));

    {
        auto bad = sweep::first_failure(nx, [&](std::size_t x) {
            return act.left.contract(unitD, EX[x]) == EX[x] && act.right.contract(EX[x], unitD) == EX[x];
        }, mode);
        if (bad)
            rep.fail("codouble.unit_acts_trivially", "", nx, X.basis[*bad]);
        else
            rep.pass("codouble.unit_acts_trivially", "", nx);
    }
    {
        auto bad = sweep::first_failure(nd * nd * nx, [&](std::size_t t) {
            std::size_t d1 = t / (nd * nx), d2 = (t / nx) % nd, x = t % nx;
            Vec lhs = act.left.contract(alg.slot(d1, d2), EX[x]);
            Vec rhs = act.left.contract(basis_vec(nd, d1, h.field), act.left.slot(d2, x));
            return lhs == rhs;
        }, mode);
        if (bad)
            rep.fail("codouble.left_module", "", nd * nd * nx, "tuple " + std::to_string(*bad));
        else
            rep.pass("codouble.left_module", "", nd * nd * nx);
    }
    {
        auto bad = sweep::first_failure(nx * nd * nd, [&](std::size_t t) {
            std::size_t x = t / (nd * nd), d1 = (t / nd) % nd, d2 = t % nd;
            Vec lhs = act.right.contract(act.right.slot(x, d1), basis_vec(nd, d2, h.field));
            Vec rhs = act.right.contract(EX[x], alg.slot(d1, d2));
            return lhs == rhs;
        }, mode);
        if (bad)
            rep.fail("codouble.right_module", "", nx * nd * nd, "tuple " + std::to_string(*bad));
        else
            rep.pass("codouble.right_module", "", nx * nd * nd);
    }
    {
        auto bad = sweep::first_failure(nd * nx * nd, [&](std::size_t t) {
            std::size_t d1 = t / (nx * nd), x = (t / nd) % nx, d2 = t % nd;
            Vec lhs = act.right.contract(act.left.slot(d1, x), basis_vec(nd, d2, h.field));
            Vec rhs = act.left.contract(basis_vec(nd, d1, h.field), act.right.slot(x, d2));
            return lhs == rhs;
        }, mode);
        if (bad)
            rep.fail("codouble.bimodule_commute", "", nd * nx * nd, "tuple " + std::to_string(*bad));
        else
            rep.pass("codouble.bimodule_commute", "", nd * nx * nd);
    }
    // both actions are coalgebra maps:  Δ̄_X(d ▷ x) = (d₁▷x₁)⊗(d₂▷x₂), ε̄_X(d▷x) = ε̄_D(d)ε̄_X(x)
    for (bool left : {true, false}) {
        const char* axiom = left ? "codouble.left_action_coalgebra_map" : "codouble.right_action_coalgebra_map";
        auto sides = [&](std::size_t t) {
            std::size_t d = t / nx, x = t % nx;
            TermMap lhs, rhs;
            const Vec& image = left ? act.left.slot(d, x) : act.right.slot(x, d);
            for (const auto& pt : X.comult.cocontract(image)) lhs.add(pack2(pt.a, pt.b), pt.coeff);
            for (const auto& dt : D.comult.terms(d))
                for (const auto& xt : X.comult.terms(x)) {
                    const Vec& first = left ? act.left.slot(dt.a, xt.a) : act.right.slot(xt.a, dt.a);
                    const Vec& second = left ? act.left.slot(dt.b, xt.b) : act.right.slot(xt.b, dt.b);
                    Scalar cf = dt.coeff * xt.coeff;
                    for (std::size_t p = 0; p < nx; ++p) {
                        if (first[p].is_zero()) continue;
                        for (std::size_t q = 0; q < nx; ++q)
                            if (!second[q].is_zero())
                                rhs.add(pack2(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)),
                                        cf * first[p] * second[q]);
                    }
                }
            return std::make_pair(lhs, rhs);
        };
        auto bad = sweep::first_failure(nd * nx, [&](std::size_t t) {
            auto [l, r] = sides(t);
            if (!l.equals(r)) return false;
            std::size_t d = t / nx, x = t % nx;
            const Vec& image = left ? act.left.slot(d, x) : act.right.slot(x, d);
            return X.eval_counit(image) == counitD[d] * X.counit[x];
        }, mode);
        if (bad) {
            auto [l, r] = sides(*bad);
            rep.fail(axiom, "", nd * nx, "tuple " + std::to_string(*bad), term_map_str(l), term_map_str(r));
        } else {
            rep.pass(axiom, "", nd * nx);
        }
    }
    return rep;
}

Report verify_ydc_compat(const FiniteDimHopfAlgebra& h, const BimoduleCoalgebra& c,
                         const ModuleComoduleData& m, sweep::Mode mode) {
    Report rep("YD datum compatibility");
    const std::size_t n = h.dim, dm = m.dim, dc = c.co.dim;
    std::vector<Vec> EM;
    for (std::size_t i = 0; i < dm; ++i) EM.push_back(basis_vec(dm, i, h.field));

    // left H-module
    {
        auto bad = sweep::first_failure(dm + n * n * dm, [&](std::size_t t) {
            if (t < dm) return m.action.contract(h.unit, EM[t]) == EM[t];
            std::size_t s = t - dm;
            std::size_t i = s / (n * dm), j = (s / dm) % n, k = s % dm;
            return m.action.contract(h.mult.slot(i, j), EM[k]) ==
                   m.action.contract(basis_vec(n, i, h.field), m.action.slot(j, k));
        }, mode);
        if (bad)
            rep.fail("ydc.module", "", dm + n * n * dm, "tuple " + std::to_string(*bad));
        else
            rep.pass("ydc.module", "", dm + n * n * dm);
    }
    // right C-comodule
    {
        auto bad = sweep::first_failure(dm, [&](std::size_t i) {
            TermMap lhs, rhs;
            for (const auto& t : m.coaction.terms(i))
                for (const auto& u : m.coaction.terms(t.a)) lhs.add(pack3(u.a, u.b, t.b), t.coeff * u.coeff);
            for (const auto& t : m.coaction.terms(i))
                for (const auto& u : c.co.comult.terms(t.b)) rhs.add(pack3(t.a, u.a, u.b), t.coeff * u.coeff);
            if (!lhs.equals(rhs)) return false;
            Vec v = zero_vec(dm, h.field);
            for (const auto& t : m.coaction.terms(i)) v[t.a] += t.coeff * c.co.counit[t.b];
            return v == EM[i];
        }, mode);
        if (bad)
            rep.fail("ydc.comodule", "", dm, "basis " + std::to_string(*bad));
        else
            rep.pass("ydc.comodule", "", dm);
    }

    // form 1: h₁·m₀ ⊗ h₂·m₁  =  (h₂·m)₀ ⊗ (h₂·m)₁·h₁
    auto form1 = [&](std::size_t hi, std::size_t mi) {
        TermMap lhs, rhs;
        for (const auto& ht : h.comult.terms(hi)) {
            for (const auto& mt : m.coaction.terms(mi)) {
                const Vec& mm = m.action.slot(ht.a, mt.a);
                const Vec& cc = c.left_action.slot(ht.b, mt.b);
                Scalar cf = ht.coeff * mt.coeff;
                for (std::size_t x = 0; x < dm; ++x) {
                    if (mm[x].is_zero()) continue;
                    for (std::size_t y = 0; y < dc; ++y)
                        if (!cc[y].is_zero())
                            lhs.add(pack2(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)),
                                    cf * mm[x] * cc[y]);
                }
            }
            const Vec& hm = m.action.slot(ht.b, mi);
            for (std::size_t x = 0; x < dm; ++x) {
                if (hm[x].is_zero()) continue;
                for (const auto& mt : m.coaction.terms(x)) {
                    const Vec& cc = c.right_action.slot(mt.b, ht.a);
                    Scalar cf = ht.coeff * hm[x] * mt.coeff;
                    for (std::size_t y = 0; y < dc; ++y)
                        if (!cc[y].is_zero())
                            rhs.add(pack2(mt.a, static_cast<std::uint32_t>(y)), cf * cc[y]);
                }
            }
        }
        return std::make_pair(lhs, rhs);
    };
    // form 2: (h·m)₀ ⊗ (h·m)₁  =  h₂·m₀ ⊗ h₃·m₁·S⁻¹(h₁)
    auto form2 = [&](std::size_t hi, std::size_t mi) {
        TermMap lhs, rhs;
        const Vec& hm = m.action.slot(hi, mi);
        for (std::size_t x = 0; x < dm; ++x) {
            if (hm[x].is_zero()) continue;
            for (const auto& mt : m.coaction.terms(x)) lhs.add(pack2(mt.a, mt.b), hm[x] * mt.coeff);
        }
        for (const auto& tt : h.delta2[hi]) {
            for (const auto& mt : m.coaction.terms(mi)) {
                const Vec& mm = m.action.slot(tt.b, mt.a);
                Vec cpart = c.left_action.contract(
                    basis_vec(n, tt.c, h.field),
                    c.right_action.contract(basis_vec(dc, mt.b, h.field), h.antipode_inv.column(tt.a)));
                Scalar cf = tt.coeff * mt.coeff;
                for (std::size_t x = 0; x < dm; ++x) {
                    if (mm[x].is_zero()) continue;
                    for (std::size_t y = 0; y < dc; ++y)
                        if (!cpart[y].is_zero())
                            rhs.add(pack2(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)),
                                    cf * mm[x] * cpart[y]);
                }
            }
        }
        return std::make_pair(lhs, rhs);
    };

    bool pass1, pass2;
    {
        auto bad = sweep::first_failure(n * dm, [&](std::size_t t) {
            auto [l, r] = form1(t / dm, t % dm);
            return l.equals(r);
        }, mode);
        pass1 = !bad;
        if (bad) {
            auto [l, r] = form1(*bad / dm, *bad % dm);
            rep.fail("ydc.compat_form1", "", n * dm, "(h,m) tuple " + std::to_string(*bad), term_map_str(l),
                     term_map_str(r));
        } else {
            rep.pass("ydc.compat_form1", "", n * dm);
        }
    }
    {
        auto bad = sweep::first_failure(n * dm, [&](std::size_t t) {
            auto [l, r] = form2(t / dm, t % dm);
            return l.equals(r);
        }, mode);
        pass2 = !bad;
        if (bad) {
            auto [l, r] = form2(*bad / dm, *bad % dm);
            rep.fail("ydc.compat_form2", "", n * dm, "(h,m) tuple " + std::to_string(*bad), term_map_str(l),
                     term_map_str(r));
        } else {
            rep.pass("ydc.compat_form2", "", n * dm);
        }
    }
    if (pass1 == pass2)
        rep.pass("ydc.forms_agree", "", 1);
    else
        rep.fail("ydc.forms_agree", "", 1,
                 std::string("form1 ") + (pass1 ? "holds" : "fails") + " but form2 " + (pass2 ? "holds" : "fails"));
    return rep;
}

}  // namespace cthopf
