// Command-line front end: load fixtures and user files, run the
// construction/verification pipelines, emit reports and built objects.
//
// Exit codes: 0 = all checks pass, 1 = at least one identity violated,
// 2 = malformed input or usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "cthopf/io.hpp"
#include "cthopf/oracle.hpp"
#include "cthopf/turaev.hpp"

using namespace cthopf;

namespace {

struct Input {
    FiniteDimHopfAlgebra hopf;
    std::optional<FiniteGroup> group;  // set when the algebra is k(π)
};

Input load_input(const std::string& group_arg, const std::string& hopf_arg) {
    Input in;
    if (!group_arg.empty() && !hopf_arg.empty())
        throw std::invalid_argument("give either --group or --hopf, not both");
    if (!group_arg.empty()) {
        FiniteGroup g = is_builtin_group(group_arg) ? builtin_group(group_arg)
                                                    : group_from_json(load_json_file(group_arg));
        in.hopf = group_algebra(g);
        in.group = std::move(g);
    } else if (!hopf_arg.empty()) {
        in.hopf = hopf_from_json(load_json_file(hopf_arg));
    } else {
        throw std::invalid_argument("one of --group or --hopf is required");
    }
    return in;
}

// pair-set spec: "all" (group algebras only) or comma-separated "a:b"
// automorphism index pairs; file-based algebras use --gen alpha.json:beta.json
std::vector<GPair> resolve_pairs(const Input& in, const std::string& pairs_arg,
                                 const std::vector<std::string>& gen_files, std::size_t cap, bool& truncated,
                                 Report& rep) {
    truncated = false;
    std::vector<GPair> out;
    if (!gen_files.empty()) {
        std::vector<GPair> gens;
        for (const auto& spec : gen_files) {
            auto colon = spec.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("--gen expects alpha.json:beta.json");
            LinMap a = automorphism_from_json(load_json_file(spec.substr(0, colon)), in.hopf.field);
            LinMap b = automorphism_from_json(load_json_file(spec.substr(colon + 1)), in.hopf.field);
            gens.push_back(make_gpair(in.hopf, std::move(a), std::move(b)));
        }
        out = close_pair_set(gens, cap, truncated);
        if (truncated)
            rep.warn("cli.pair_set", "", "generator closure truncated at cap " + std::to_string(cap));
        return out;
    }
    if (!in.group) throw std::invalid_argument("--pairs needs a group algebra (use --gen for Hopf files)");
    auto auts = enumerate_automorphisms(*in.group);
    auto pair_of = [&](std::size_t a, std::size_t b) {
        if (a >= auts.size() || b >= auts.size()) throw std::invalid_argument("automorphism index out of range");
        return make_gpair_unchecked(in.hopf, automorphism_matrix(*in.group, auts[a], in.hopf.field),
                                    automorphism_matrix(*in.group, auts[b], in.hopf.field));
    };
    if (pairs_arg == "all" || pairs_arg.empty()) {
        for (std::size_t a = 0; a < auts.size(); ++a)
            for (std::size_t b = 0; b < auts.size(); ++b) out.push_back(pair_of(a, b));
        return out;
    }
    std::stringstream ss(pairs_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("--pairs expects all or a0:b0,a1:b1,...");
        out.push_back(pair_of(std::stoul(tok.substr(0, colon)), std::stoul(tok.substr(colon + 1))));
    }
    return out;
}

int emit(const Report& rep, const std::string& format) {
    if (format == "jsonl")
        rep.write_jsonl(std::cout);
    else
        rep.write_human(std::cout);
    return rep.passed() ? 0 : 1;
}

GPair single_pair(const Input& in, const std::string& pairs_arg, const std::string& alpha_file,
                  const std::string& beta_file) {
    if (!alpha_file.empty() || !beta_file.empty()) {
        if (alpha_file.empty() || beta_file.empty())
            throw std::invalid_argument("--alpha-file and --beta-file go together");
        return make_gpair(in.hopf, automorphism_from_json(load_json_file(alpha_file), in.hopf.field),
                          automorphism_from_json(load_json_file(beta_file), in.hopf.field));
    }
    if (!in.group) throw std::invalid_argument("automorphism indices need a group algebra");
    auto auts = enumerate_automorphisms(*in.group);
    std::size_t a = 0, b = 0;
    if (!pairs_arg.empty()) {
        auto colon = pairs_arg.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("--pair expects a:b");
        a = std::stoul(pairs_arg.substr(0, colon));
        b = std::stoul(pairs_arg.substr(colon + 1));
    }
    if (a >= auts.size() || b >= auts.size()) throw std::invalid_argument("automorphism index out of range");
    return make_gpair_unchecked(in.hopf, automorphism_matrix(*in.group, auts[a], in.hopf.field),
                                automorphism_matrix(*in.group, auts[b], in.hopf.field));
}

Report check_oracle_equivalence(const FiniteGroup& pi) {
    Report rep("oracle equivalence on k(π)");
    FiniteDimHopfAlgebra h = group_algebra(pi);
    OracleCT oracle(pi);
    auto auts = enumerate_automorphisms(pi);
    const std::uint32_t d = static_cast<std::uint32_t>(pi.order * pi.order);
    std::vector<GPair> pairs;
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t a = 0; a < auts.size(); ++a)
        for (std::size_t b = 0; b < auts.size(); ++b) {
            pairs.push_back(make_gpair_unchecked(h, automorphism_matrix(pi, auts[a], h.field),
                                                 automorphism_matrix(pi, auts[b], h.field)));
            idx.push_back({a, b});
        }
    TuraevFamily fam(h);
    std::size_t checked = 0;
    std::string witness;
    // unit
    {
        Vec u = ct_unit(fam).coords;
        Vec w = zero_vec(d, h.field);
        for (auto i : oracle.unit()) w[i] = Scalar::one(h.field);
        if (u == w)
            rep.pass("oracle.unit", "", 1);
        else
            rep.fail("oracle.unit", "", 1, "unit differs", vec_str(u), vec_str(w));
    }
    auto single = [&](const SparseVec& got, std::uint32_t want) {
        return got.size() == 1 && got[0].idx == want && got[0].coeff.is_one();
    };
    bool dok = true, sok = true, mok = true, pok = true, gok = true;
    for (std::size_t p1 = 0; p1 < pairs.size(); ++p1) {
        auto [a1, b1] = idx[p1];
        const Coalgebra& comp = fam.component(pairs[p1]).coalgebra;
        for (std::uint32_t x = 0; x < d; ++x) {
            TermMap got, want;
            for (const auto& t : comp.comult.terms(x)) got.add(pack2(t.a, t.b), t.coeff);
            for (auto [l, r] : oracle.delta_bar(auts[a1], auts[b1], x))
                want.add(pack2(l, r), Scalar::one(h.field));
            if (!got.equals(want)) dok = false;
            if (!single(ct_antipode_basis(h, pairs[p1], x), oracle.antipode(auts[a1], auts[b1], x)))
                sok = false;
            ++checked;
        }
        for (std::size_t p2 = 0; p2 < pairs.size(); ++p2) {
            auto [a2, b2] = idx[p2];
            for (std::uint32_t x = 0; x < d; ++x) {
                if (!single(ct_psi_basis(h, pairs[p1], pairs[p2], x),
                            oracle.psi(auts[a1], auts[b1], auts[a2], auts[b2], x)))
                    pok = false;
                for (std::uint32_t y = 0; y < d; ++y) {
                    SparseVec got = ct_mul_basis(h, pairs[p1], pairs[p2], x, y);
                    auto want = oracle.multiply(auts[a1], auts[b1], auts[a2], auts[b2], x, y);
                    if (want ? !single(got, *want) : !got.empty()) mok = false;
                    Scalar s = ct_sigma_basis(h, pairs[p1], pairs[p2], x, y);
                    bool sw = oracle.sigma(auts[a1], auts[b1], auts[a2], auts[b2], x, y);
                    if (!(s == (sw ? Scalar::one(h.field) : Scalar::zero(h.field)))) gok = false;
                    checked += 2;
                }
                ++checked;
            }
        }
    }
    auto entry = [&](const char* name, bool ok) {
        if (ok)
            rep.pass(name, "", checked);
        else
            rep.fail(name, "", checked, witness);
    };
    entry("oracle.comultiplication", dok);
    entry("oracle.multiplication", mok);
    entry("oracle.antipode", sok);
    entry("oracle.crossing", pok);
    entry("oracle.sigma", gok);
    return rep;
}

int run(int argc, char** argv) {
    CLI::App app{"exact structure-constant engine for crossed Turaev group algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "human";
    int jobs = 0;
    bool serial = false;
    app.add_option("--format", format, "report format: human | jsonl")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for the sweeps (0 = default)");
    app.add_flag("--serial", serial, "run sweeps on the serial reference path");

    // verify-hopf
    auto* vh = app.add_subcommand("verify-hopf", "check every Hopf axiom of a structure-constant file");
    std::string vh_path;
    vh->add_option("file", vh_path)->required();

    // verify-coalgebra
    auto* vc = app.add_subcommand("verify-coalgebra", "check coassociativity/counit of a coalgebra file");
    std::string vc_path;
    vc->add_option("file", vc_path)->required();

    // oracle-group
    auto* og = app.add_subcommand("oracle-group", "emit k(π) and its automorphisms as JSON files");
    std::string og_name, og_out = ".";
    og->add_option("group", og_name, "builtin name or table file")->required();
    og->add_option("-o,--out", og_out, "output directory");

    // build
    auto* bd = app.add_subcommand("build", "construct codouble | crossed-coproduct | ct-component");
    std::string bd_kind, bd_group, bd_hopf, bd_pair, bd_alpha_file, bd_beta_file, bd_out;
    bd->add_option("kind", bd_kind, "codouble | crossed-coproduct | ct-component")->required();
    bd->add_option("--group", bd_group, "builtin group name or table file");
    bd->add_option("--hopf", bd_hopf, "Hopf structure-constant file");
    bd->add_option("--pair", bd_pair, "automorphism index pair a:b (group algebras)");
    bd->add_option("--alpha-file", bd_alpha_file, "automorphism matrix file");
    bd->add_option("--beta-file", bd_beta_file, "automorphism matrix file");
    bd->add_option("-o,--out", bd_out, "output file");

    // check
    auto* ck = app.add_subcommand("check", "yd | braiding | rigidity | correspondence | turaev | tct | oracle");
    std::string ck_kind, ck_group, ck_hopf, ck_pairs = "all";
    std::vector<std::string> ck_gens;
    double ck_sample = 1.0;
    std::uint64_t ck_seed = 0;
    std::size_t ck_cap = 64;
    ck->add_option("kind", ck_kind)->required();
    ck->add_option("--group", ck_group, "builtin group name or table file");
    ck->add_option("--hopf", ck_hopf, "Hopf structure-constant file");
    ck->add_option("--pairs", ck_pairs, "all or a0:b0,a1:b1,... automorphism index pairs");
    ck->add_option("--gen", ck_gens, "alpha.json:beta.json generator pairs (Hopf files)");
    ck->add_option("--sample", ck_sample,
                   "TCT label-tuple coverage: fraction in (0,1] or an absolute tuple count");
    ck->add_option("--seed", ck_seed, "sampling seed (recorded in the report)");
    ck->add_option("--cap", ck_cap, "pair-set closure cap for --gen")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    sweep::set_jobs(jobs);
    sweep::default_mode() = serial ? sweep::Mode::Serial : sweep::Mode::Parallel;

    if (vh->parsed()) {
        FiniteDimHopfAlgebra h = hopf_from_json(load_json_file(vh_path));
        return emit(verify_hopf_axioms(h), format);
    }
    if (vc->parsed()) {
        Coalgebra c = coalgebra_from_json(load_json_file(vc_path));
        return emit(verify_coalgebra_axioms(c), format);
    }
    if (og->parsed()) {
        FiniteGroup g = is_builtin_group(og_name) ? builtin_group(og_name)
                                                  : group_from_json(load_json_file(og_name));
        std::filesystem::create_directories(og_out);
        std::string stem = is_builtin_group(og_name) ? og_name : "group";
        write_json_file(og_out + "/" + stem + "_group.json", group_to_json(g));
        FiniteDimHopfAlgebra h = group_algebra(g);
        write_json_file(og_out + "/" + stem + "_hopf.json", hopf_to_json(h));
        auto auts = enumerate_automorphisms(g);
        for (std::size_t i = 0; i < auts.size(); ++i)
            write_json_file(og_out + "/" + stem + "_aut" + std::to_string(i) + ".json",
                            automorphism_to_json(automorphism_matrix(g, auts[i], h.field)));
        std::cout << "wrote " << stem << "_hopf.json and " << auts.size() << " automorphisms to " << og_out
                  << "\n";
        return 0;
    }
    if (bd->parsed()) {
        Input in = load_input(bd_group, bd_hopf);
        Coalgebra built;
        json meta;
        meta["ordering"] = "H*-major: index = dual*dim(C) + c";
        meta["hopf_dim"] = in.hopf.dim;
        if (bd_kind == "codouble") {
            built = drinfeld_codouble(in.hopf);
            meta["construction"] = "codouble";
        } else if (bd_kind == "crossed-coproduct" || bd_kind == "ct-component") {
            GPair g = single_pair(in, bd_pair, bd_alpha_file, bd_beta_file);
            built = diagonal_crossed_coproduct(in.hopf, h_alpha_beta(in.hopf, g));
            meta["construction"] = bd_kind;
        } else {
            throw std::invalid_argument("unknown build kind '" + bd_kind + "'");
        }
        Report rep = verify_coalgebra_axioms(built);
        if (!bd_out.empty()) write_json_file(bd_out, coalgebra_to_json(built, meta));
        return emit(rep, format);
    }
    if (ck->parsed()) {
        if (ck_kind == "oracle") {
            if (ck_group.empty()) throw std::invalid_argument("check oracle needs --group");
            FiniteGroup g = is_builtin_group(ck_group) ? builtin_group(ck_group)
                                                       : group_from_json(load_json_file(ck_group));
            return emit(check_oracle_equivalence(g), format);
        }
        Input in = load_input(ck_group, ck_hopf);
        Report rep("check " + ck_kind);
        bool truncated = false;
        std::vector<GPair> pairs = resolve_pairs(in, ck_pairs, ck_gens, ck_cap, truncated, rep);
        if (ck_kind == "yd") {
            rep.merge(verify_yd(trivial_yd(in.hopf)));
            for (const auto& g : pairs) rep.merge(verify_yd(canonical_yd(in.hopf, g)));
        } else if (ck_kind == "braiding") {
            std::vector<YDModule> mods;
            for (const auto& g : pairs) mods.push_back(canonical_yd(in.hopf, g));
            for (const auto& m : mods)
                for (const auto& n : mods) {
                    rep.merge(verify_braiding(m, n));
                    rep.merge(verify_braiding_conjugation_invariance(mods.front().label, m, n));
                }
            for (const auto& m : mods) rep.merge(verify_hexagons(m, mods.front(), mods.back()));
        } else if (ck_kind == "rigidity") {
            for (const auto& g : pairs) rep.merge(verify_rigidity(canonical_yd(in.hopf, g)));
        } else if (ck_kind == "correspondence") {
            for (const auto& g : pairs) {
                YDModule m = canonical_yd(in.hopf, g);
                Comodule x = to_comodule(m);
                rep.merge(verify_comodule(x));
                YDModule back = from_comodule(in.hopf, g, x);
                bool round = back.action == m.action && back.coaction == m.coaction;
                if (round)
                    rep.pass("correspondence.round_trip", "", 1);
                else
                    rep.fail("correspondence.round_trip", "", 1, "round trip is not the identity");
            }
        } else if (ck_kind == "turaev" || ck_kind == "tct") {
            TuraevFamily fam(in.hopf);
            TuraevCheckOptions opt;
            if (ck_sample > 1.0) {
                std::size_t total = pairs.size() * pairs.size() * pairs.size();
                opt.tct_sample = std::min(1.0, ck_sample / static_cast<double>(total));
            } else {
                opt.tct_sample = ck_sample;
            }
            opt.seed = ck_seed;
            opt.mode = sweep::default_mode();
            Report full = verify_turaev_axioms(fam, pairs, opt);
            if (ck_kind == "turaev") {
                rep.merge(full);
            } else {
                for (const auto& n : full.notes()) rep.note(n);
                for (const auto& e : full.entries())
                    if (e.axiom.rfind("turaev.tct", 0) == 0 || e.axiom == "turaev.sigma_invertible")
                        rep.add(e);
            }
        } else {
            throw std::invalid_argument("unknown check kind '" + ck_kind + "'");
        }
        return emit(rep, format);
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
