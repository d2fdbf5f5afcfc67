#include "cthopf/group.hpp"

#include <algorithm>
#include <array>

namespace cthopf {

FiniteGroup group_from_table(std::size_t order, std::vector<std::uint32_t> table,
                             std::vector<std::string> names) {
    if (order == 0 || table.size() != order * order)
        throw std::invalid_argument("group table has wrong size");
    for (auto v : table)
        if (v >= order) throw std::invalid_argument("group table entry out of range");

    FiniteGroup g;
    g.order = order;
    g.table = std::move(table);

    // Latin square
    for (std::size_t a = 0; a < order; ++a) {
        std::vector<bool> seen_row(order, false), seen_col(order, false);
        for (std::size_t b = 0; b < order; ++b) {
            if (seen_row[g.table[a * order + b]])
                throw std::invalid_argument("group table row " + std::to_string(a) + " repeats an entry");
            seen_row[g.table[a * order + b]] = true;
            if (seen_col[g.table[b * order + a]])
                throw std::invalid_argument("group table column " + std::to_string(a) + " repeats an entry");
            seen_col[g.table[b * order + a]] = true;
        }
    }
    // two-sided identity
    std::uint32_t id = order;
    for (std::uint32_t e = 0; e < order; ++e) {
        bool ok = true;
        for (std::uint32_t a = 0; a < order && ok; ++a)
            ok = g.table[e * order + a] == a && g.table[a * order + e] == a;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id == order) throw std::invalid_argument("group table has no identity");
    g.identity = id;
    // associativity, O(order^3)
    for (std::uint32_t a = 0; a < order; ++a)
        for (std::uint32_t b = 0; b < order; ++b)
            for (std::uint32_t c = 0; c < order; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw std::invalid_argument("group table is not associative");
    g.inverse.assign(order, 0);
    for (std::uint32_t a = 0; a < order; ++a) {
        bool found = false;
        for (std::uint32_t b = 0; b < order; ++b)
            if (g.mul(a, b) == id && g.mul(b, a) == id) {
                g.inverse[a] = b;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("group table element without inverse");
    }
    if (names.size() == order)
        g.names = std::move(names);
    else {
        g.names.resize(order);
        for (std::size_t i = 0; i < order; ++i) g.names[i] = "g" + std::to_string(i);
    }
    return g;
}

namespace {

FiniteGroup cyclic(std::size_t n) {
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
    std::vector<std::string> names(n);
    names[0] = "e";
    for (std::size_t i = 1; i < n; ++i) names[i] = i == 1 ? "g" : "g" + std::to_string(i);
    return group_from_table(n, std::move(t), std::move(names));
}

FiniteGroup klein_four() {
    // (a,b) in Z2×Z2, index a*2+b
    std::vector<std::uint32_t> t(16);
    for (std::uint32_t x = 0; x < 4; ++x)
        for (std::uint32_t y = 0; y < 4; ++y)
            t[x * 4 + y] = (((x >> 1) ^ (y >> 1)) << 1) | ((x ^ y) & 1);
    return group_from_table(4, std::move(t), {"e", "b", "a", "ab"});
}

FiniteGroup sym3() {
    // elements = permutations of {0,1,2} in one-line notation, identity first,
    // remainder lexicographic
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto idx_of = [&](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<std::uint32_t>(i);
        return std::uint32_t(6);
    };
    std::vector<std::uint32_t> t(36);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // (a∘b)(i)
            t[a * 6 + b] = idx_of(c);
        }
    std::vector<std::string> names;
    for (const auto& p : perms)
        names.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    return group_from_table(6, std::move(t), std::move(names));
}

}  // namespace

bool is_builtin_group(const std::string& name) {
    return name == "Z2" || name == "Z3" || name == "Z4" || name == "Z2xZ2" || name == "Z2x2" || name == "S3";
}

FiniteGroup builtin_group(const std::string& name) {
    if (name == "Z2") return cyclic(2);
    if (name == "Z3") return cyclic(3);
    if (name == "Z4") return cyclic(4);
    if (name == "Z2xZ2" || name == "Z2x2") return klein_four();
    if (name == "S3") return sym3();
    throw std::invalid_argument("unknown builtin group '" + name + "'");
}

GroupAutomorphism compose(const FiniteGroup& g, const GroupAutomorphism& f1, const GroupAutomorphism& f2) {
    GroupAutomorphism r;
    r.image.resize(g.order);
    for (std::uint32_t a = 0; a < g.order; ++a) r.image[a] = f1.image[f2.image[a]];
    return r;
}

GroupAutomorphism invert(const FiniteGroup& g, const GroupAutomorphism& f) {
    GroupAutomorphism r;
    r.image.resize(g.order);
    for (std::uint32_t a = 0; a < g.order; ++a) r.image[f.image[a]] = a;
    return r;
}

namespace {

// backtracking over images; partial map must stay a homomorphism
bool extend(const FiniteGroup& g, std::vector<std::uint32_t>& img, std::vector<bool>& used,
            std::vector<GroupAutomorphism>& out) {
    std::uint32_t a = g.order;
    for (std::uint32_t i = 0; i < g.order; ++i)
        if (img[i] == g.order) {
            a = i;
            break;
        }
    if (a == g.order) {
        out.push_back(GroupAutomorphism{img});
        return false;
    }
    for (std::uint32_t v = 0; v < g.order; ++v) {
        if (used[v]) continue;
        img[a] = v;
        used[v] = true;
        bool consistent = true;
        for (std::uint32_t x = 0; x < g.order && consistent; ++x) {
            if (img[x] == g.order) continue;
            for (std::uint32_t y = 0; y < g.order && consistent; ++y) {
                if (img[y] == g.order) continue;
                std::uint32_t z = g.mul(x, y);
                if (img[z] != g.order && g.mul(img[x], img[y]) != img[z]) consistent = false;
            }
        }
        if (consistent) extend(g, img, used, out);
        img[a] = g.order;
        used[v] = false;
    }
    return false;
}

}  // namespace

std::vector<GroupAutomorphism> enumerate_automorphisms(const FiniteGroup& g, std::size_t cap) {
    if (g.order > cap)
        throw std::invalid_argument("automorphism enumeration capped at order " + std::to_string(cap));
    std::vector<std::uint32_t> img(g.order, static_cast<std::uint32_t>(g.order));
    std::vector<bool> used(g.order, false);
    img[g.identity] = g.identity;
    used[g.identity] = true;
    std::vector<GroupAutomorphism> out;
    extend(g, img, used, out);
    std::sort(out.begin(), out.end(),
              [](const GroupAutomorphism& x, const GroupAutomorphism& y) { return x.image < y.image; });
    // homomorphism + bijection were enforced during the search, but the
    // consistency scan above only covers pairs with both images known;
    // re-verify on the full table.
    std::vector<GroupAutomorphism> verified;
    for (const auto& f : out) {
        bool ok = true;
        for (std::uint32_t x = 0; x < g.order && ok; ++x)
            for (std::uint32_t y = 0; y < g.order && ok; ++y)
                ok = f.image[g.mul(x, y)] == g.mul(f.image[x], f.image[y]);
        if (ok) verified.push_back(f);
    }
    return verified;
}

FiniteDimHopfAlgebra group_algebra(const FiniteGroup& g, const Field& f) {
    const std::size_t n = g.order;
    FiniteDimHopfAlgebra h;
    h.field = f;
    h.dim = n;
    h.basis = g.names;
    h.mult = Tensor2to1(n, n, n, f);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            h.mult.slot(a, b)[g.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))] =
                Scalar::one(f);
    h.unit = basis_vec(n, g.identity, f);
    h.comult = Tensor1to2(n, n, n, f);
    for (std::size_t a = 0; a < n; ++a)
        h.comult.add(a, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a), Scalar::one(f));
    h.counit = Vec(n, Scalar::one(f));
    h.antipode = LinMap(n, n, f);
    for (std::size_t a = 0; a < n; ++a) h.antipode.at(g.inv(static_cast<std::uint32_t>(a)), a) = Scalar::one(f);
    return finalize_hopf(std::move(h));
}

LinMap automorphism_matrix(const FiniteGroup& g, const GroupAutomorphism& a, const Field& f) {
    LinMap m(g.order, g.order, f);
    for (std::uint32_t x = 0; x < g.order; ++x) m.at(a.image[x], x) = Scalar::one(f);
    return m;
}

std::vector<LinMap> hopf_automorphism_matrices(const FiniteGroup& g, const FiniteDimHopfAlgebra& kpi) {
    std::vector<LinMap> out;
    for (const auto& a : enumerate_automorphisms(g)) out.push_back(automorphism_matrix(g, a, kpi.field));
    return out;
}

FiniteDimHopfAlgebra sweedler_fixture(const Field& f) {
    if (f.kind == FieldKind::Prime && f.p == 2)
        throw std::invalid_argument("Sweedler fixture needs characteristic != 2");
    // basis 0:1  1:g  2:x  3:gx
    FiniteDimHopfAlgebra h;
    h.field = f;
    h.dim = 4;
    h.basis = {"1", "g", "x", "gx"};
    const Scalar one = Scalar::one(f), neg = -Scalar::one(f);
    h.mult = Tensor2to1(4, 4, 4, f);
    auto set = [&](std::size_t a, std::size_t b, std::size_t out, const Scalar& c) {
        h.mult.slot(a, b)[out] = c;
    };
    for (std::size_t a = 0; a < 4; ++a) {
        set(0, a, a, one);
        if (a) set(a, 0, a, one);
    }
    set(1, 1, 0, one);   // g·g = 1
    set(1, 2, 3, one);   // g·x = gx
    set(1, 3, 2, one);   // g·gx = x
    set(2, 1, 3, neg);   // x·g = -gx
    set(3, 1, 2, neg);   // gx·g = -x
    // x·x = x·gx = gx·x = gx·gx = 0
    h.unit = basis_vec(4, 0, f);
    h.comult = Tensor1to2(4, 4, 4, f);
    h.comult.add(0, 0, 0, one);            // Δ1 = 1⊗1
    h.comult.add(1, 1, 1, one);            // Δg = g⊗g
    h.comult.add(2, 2, 0, one);            // Δx = x⊗1 + g⊗x
    h.comult.add(2, 1, 2, one);
    h.comult.add(3, 3, 1, one);            // Δgx = gx⊗g + 1⊗gx
    h.comult.add(3, 0, 3, one);
    h.counit = {one, one, Scalar::zero(f), Scalar::zero(f)};
    h.antipode = LinMap(4, 4, f);
    h.antipode.at(0, 0) = one;
    h.antipode.at(1, 1) = one;
    h.antipode.at(3, 2) = neg;  // S(x) = -gx
    h.antipode.at(2, 3) = one;  // S(gx) = x
    return finalize_hopf(std::move(h));
}

LinMap sweedler_scaling(const FiniteDimHopfAlgebra& h, const Scalar& lambda) {
    LinMap m(4, 4, h.field);
    m.at(0, 0) = Scalar::one(h.field);
    m.at(1, 1) = Scalar::one(h.field);
    m.at(2, 2) = lambda;
    m.at(3, 3) = lambda;
    return m;
}

}  // namespace cthopf
