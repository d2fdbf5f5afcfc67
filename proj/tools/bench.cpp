// Benchmark comparing the serial reference sweeps against the OpenMP
// kernels on the heavy identity checks.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "cthopf/oracle.hpp"
#include "cthopf/turaev.hpp"

using namespace cthopf;
using clock_type = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<void()>& fn) {
    auto t0 = clock_type::now();
    fn();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Kernel {
    std::string name;
    std::function<void(sweep::Mode)> body;
};

}  // namespace

int main(int argc, char** argv) {
    int repeat = 3;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--repeat" && i + 1 < argc)
            repeat = std::stoi(argv[++i]);
        else if (a == "--kernel" && i + 1 < argc)
            only = argv[++i];
        else if (a == "--help") {
            std::cout << "usage: cthopf-bench [--repeat N] [--kernel NAME]\n"
                         "kernels: gpair-assoc, crossed-coassoc, turaev-z3, hexagons-s3\n";
            return 0;
        }
    }

    const Field Q = Field::rational();
    FiniteGroup s3 = builtin_group("S3");
    FiniteDimHopfAlgebra hs3 = group_algebra(s3);
    auto mats = hopf_automorphism_matrices(s3, hs3);
    std::vector<GPair> s3_pairs;
    for (const auto& a : mats)
        for (const auto& b : mats) s3_pairs.push_back(make_gpair_unchecked(hs3, a, b));

    FiniteGroup z3 = builtin_group("Z3");
    FiniteDimHopfAlgebra hz3 = group_algebra(z3);
    auto zmats = hopf_automorphism_matrices(z3, hz3);
    std::vector<GPair> z3_pairs;
    for (const auto& a : zmats)
        for (const auto& b : zmats) z3_pairs.push_back(make_gpair_unchecked(hz3, a, b));

    std::vector<Kernel> kernels;

    kernels.push_back({"gpair-assoc", [&](sweep::Mode mode) {
                           // associativity of G over all 36³ triples of Aut(S3)²
                           const std::size_t n = s3_pairs.size();
                           auto bad = sweep::first_failure(n * n * n, [&](std::size_t t) {
                               const GPair& a = s3_pairs[t / (n * n)];
                               const GPair& b = s3_pairs[(t / n) % n];
                               const GPair& c = s3_pairs[t % n];
                               return g_mul(g_mul(a, b), c) == g_mul(a, g_mul(b, c));
                           }, mode);
                           if (bad) std::cerr << "unexpected failure\n";
                       }});

    // components built once; the kernel times the verification sweeps only
    std::vector<Coalgebra> s3_components;
    for (const auto& g : s3_pairs)
        s3_components.push_back(diagonal_crossed_coproduct(hs3, h_alpha_beta(hs3, g)));
    kernels.push_back({"crossed-coassoc", [&](sweep::Mode mode) {
                           // crossed-coproduct coassociativity across all 36 S3 components
                           for (const auto& c : s3_components)
                               if (!verify_coalgebra_axioms(c, mode).passed()) std::cerr << "unexpected failure\n";
                       }});

    kernels.push_back({"turaev-z3", [&](sweep::Mode mode) {
                           TuraevFamily fam(hz3);
                           TuraevCheckOptions opt;
                           opt.mode = mode;
                           if (!verify_turaev_axioms(fam, z3_pairs, opt).passed())
                               std::cerr << "unexpected failure\n";
                       }});

    kernels.push_back({"yd-verify-s3", [&](sweep::Mode mode) {
                           // module/comodule/compatibility sweeps on dim-36 tensor modules
                           std::vector<YDModule> mods;
                           for (std::size_t i = 0; i < 6; ++i)
                               mods.push_back(canonical_yd(hs3, s3_pairs[i * 7 % s3_pairs.size()]));
                           for (const auto& m : mods)
                               for (const auto& n : mods)
                                   if (!verify_yd(tensor_yd(m, n), mode).passed())
                                       std::cerr << "unexpected failure\n";
                       }});

    std::cout << "kernel              serial[ms]  parallel[ms]  speedup\n";
    for (const auto& k : kernels) {
        if (!only.empty() && only != k.name) continue;
        double best_s = 1e300, best_p = 1e300;
        for (int r = 0; r < repeat; ++r) {
            best_s = std::min(best_s, run_ms([&] { k.body(sweep::Mode::Serial); }));
            best_p = std::min(best_p, run_ms([&] { k.body(sweep::Mode::Parallel); }));
        }
        std::printf("%-18s %11.1f %13.1f %8.2fx\n", k.name.c_str(), best_s, best_p, best_s / best_p);
    }
    return 0;
}
