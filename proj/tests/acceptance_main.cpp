// Acceptance suite: one hard gate per criterion, always on, exit 1 on the
// first structural failure. Runs standalone (no framework) and prints one
// PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "efflab/enumerate.hpp"
#include "efflab/laws.hpp"
#include "efflab/product_backend.hpp"
#include "efflab/tensor.hpp"

using namespace efflab;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Collects the worst residual of the named laws and checks they all pass.
struct SuiteGate {
    double worst = 0;
    std::vector<std::string> missing;
    std::vector<std::string> failed;

    void feed(const std::vector<LawReport>& reports, const std::set<std::string>& wanted) {
        std::set<std::string> seen;
        for (const auto& r : reports) {
            if (!wanted.count(r.law)) continue;
            seen.insert(r.law);
            worst = std::max(worst, r.residual);
            if (!r.pass) failed.push_back(r.law + ": " + r.counterexample.value_or(""));
        }
        for (const auto& w : wanted)
            if (!seen.count(w)) missing.push_back(w);
    }
    bool ok(double bound) const {
        return failed.empty() && missing.empty() && worst <= bound;
    }
    std::string detail() const {
        std::string d;
        for (const auto& m : missing) d += " missing=" + m;
        for (const auto& f : failed) d += " failed=" + f;
        return d;
    }
};

char fmt_buf[64];
const char* fmt(double x) {
    std::snprintf(fmt_buf, sizeof fmt_buf, "%.2e", x);
    return fmt_buf;
}

// -------------------------------------------------------------------------
// 1. Finite effect-monoid classification at size <= 5.
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    EnumerationResult res;
    try {
        res = enumerate_effect_monoids(5);
    } catch (const std::exception& e) {
        report(1, false, std::string("enumeration threw: ") + e.what());
        return;
    }
    const double secs = seconds_since(t0);

    bool ok = secs < 60.0;
    std::string detail = "enumerate --max-size 5 in " + std::to_string(secs) + " s; ";
    const std::map<int, int> expect = {{1, 1}, {2, 1}, {3, 0}, {4, 1}, {5, 0}};
    for (const auto& [size, count] : expect) {
        const auto it = res.count_by_size.find(size);
        const int got = it == res.count_by_size.end() ? -1 : it->second;
        if (got != count) {
            ok = false;
            detail += "size " + std::to_string(size) + " count " + std::to_string(got) +
                      " (want " + std::to_string(count) + "); ";
        }
    }
    int booleans = 0;
    for (const auto& s : res.structures) {
        if (!check_effect_monoid(s.table).pass) ok = false;
        if (s.boolean) ++booleans;
    }
    if (booleans != int(res.structures.size())) {
        ok = false;
        detail += "non-boolean structure found; ";
    }
    detail += "sizes {1,2,4}, all boolean";
    report(1, ok, detail);
}

// -------------------------------------------------------------------------
// 2. Orthoalgebra sequential tables collapse to boolean meets.
void criterion2() {
    EnumerationResult res;
    try {
        res = enumerate_sea_tables(5);
    } catch (const std::exception& e) {
        report(2, false, std::string("sea enumeration threw: ") + e.what());
        return;
    }
    int ortho = 0, exceptions = 0;
    for (const auto& s : res.structures) {
        if (!check_orthoalgebra(s.table).pass) continue;
        ++ortho;
        bool good = boolean_verdict(s.table);
        for (int x = 0; x < s.table.size() && good; ++x)
            for (int y = 0; y < s.table.size() && good; ++y) {
                const auto m = s.table.meet(x, y);
                if (!m || s.table.prod(x, y) != *m) good = false;
            }
        if (!good) ++exceptions;
    }
    const bool ok = ortho >= 3 && exceptions == 0;
    report(2, ok,
           "sequential tables size<=5: " + std::to_string(ortho) +
               " orthoalgebra instances, product=meet and boolean with " +
               std::to_string(exceptions) + " exceptions");
}

// -------------------------------------------------------------------------
// 3. Jordan / sequential-product suite on [2] and [2,3].
void criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::set<std::string> wanted = {
        "def2.57.a", "def2.57.b", "def2.57.c", "def2.57.d", "def2.57.e",
        "def2.41.identity", "def2.41.square", "sec2.5.q_aba",
        "prop3.4.a", "prop3.4.b", "prop3.4.c", "prop3.4.d", "prop3.4.e", "prop3.4.f",
        "def2.61", "cor5.14",
    };
    SuiteGate gate;
    for (const auto& dims : {std::vector<int>{2}, std::vector<int>{2, 3}})
        gate.feed(run_jordan_laws(BlockSignature{dims}, 200, 20260810, 1e-8), wanted);
    const double secs = seconds_since(t0);
    const bool ok = gate.ok(1e-8) && secs <= 120.0;
    report(3, ok,
           "jordan/sea suite dims [2] and [2,3], 200 trials: max residual " +
               std::string(fmt(gate.worst)) + ", " + std::to_string(secs) + " s" +
               gate.detail());
}

// -------------------------------------------------------------------------
// 4. Diamond suite on [2], [3], [2,2].
void criterion4() {
    const std::set<std::string> wanted = {
        "prop3.7.a", "prop3.7.b", "prop3.7.c", "prop3.7.d",
        "prop3.7.e", "prop3.7.f", "prop3.7.g", "prop3.7.h",
        "lem3.13.a", "lem3.13.b", "lem5.7", "prop5.9", "lem5.12", "prop3.22",
    };
    SuiteGate gate;
    double worst59 = 0, worst512 = 0;
    for (const auto& dims :
         {std::vector<int>{2}, std::vector<int>{3}, std::vector<int>{2, 2}}) {
        const auto reports = run_diamond_laws(BlockSignature{dims}, 100, 20260811, 1e-8);
        gate.feed(reports, wanted);
        for (const auto& r : reports) {
            if (r.law == "prop5.9") worst59 = std::max(worst59, r.residual);
            if (r.law == "lem5.12") worst512 = std::max(worst512, r.residual);
        }
    }
    const bool ok = gate.ok(1e-8) && worst59 <= 1e-9 && worst512 <= 1e-8;
    report(4, ok,
           "diamond suite dims [2],[3],[2,2], 100 trials: max residual " +
               std::string(fmt(gate.worst)) + ", dagger-of-comprehension residual " +
               std::string(fmt(worst59)) + gate.detail());
}

// -------------------------------------------------------------------------
// 5. Order-derivation exponentials preserve the cone.
void criterion5() {
    const BlockSignature sig{{2, 3}};
    Rng rng(20260812);
    double worst = 0;
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 20 && ok; ++k) {
        const Projection p = random_projection(sig, rng);
        const SuperOp d = derivation_operator(p);
        const LawReport rep = check_order_derivation(
            d, {0.5, -0.5, 1.0, -1.0, 5.0, -5.0, 10.0, -10.0}, 50, 20260813 + k);
        worst = std::max(worst, rep.residual);
        if (!rep.pass || rep.residual > 1e-8) {
            ok = false;
            detail = " " + rep.counterexample.value_or("residual above 1e-8");
        }
    }
    report(5, ok,
           "20 sharp p on [2,3], t in {+-0.5,+-1,+-5,+-10}, 50 psd inputs: worst cone "
           "violation " + std::string(fmt(worst)) + detail);
}

// -------------------------------------------------------------------------
// 6. Tensor suite on [2](x)[2] and [2](x)[3].
void criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::set<std::string> wanted = {"prop6.2", "prop6.6", "prop6.8", "lem6.12"};
    SuiteGate gate;
    gate.feed(run_tensor_laws(BlockSignature{{2}}, BlockSignature{{2}}, 100, 20260814,
                              1e-8),
              wanted);
    gate.feed(run_tensor_laws(BlockSignature{{2}}, BlockSignature{{3}}, 100, 20260815,
                              1e-8),
              wanted);
    const double secs = seconds_since(t0);
    const bool ok = gate.ok(1e-8) && secs <= 120.0;
    report(6, ok,
           "tensor suite [2]x[2] and [2]x[3], 100 trials: max residual " +
               std::string(fmt(gate.worst)) + ", " + std::to_string(secs) + " s" +
               gate.detail());
}

// -------------------------------------------------------------------------
// 7. Splitting of the product backend and its predicate decomposition.
void criterion7() {
    SplitReport split;
    try {
        split = split_by_scalar({true, 0.0}, 13, 20260816);
    } catch (const std::exception& e) {
        report(7, false, std::string("split threw: ") + e.what());
        return;
    }
    bool ok = split.pass && split.sampled_morphisms >= 50 &&
              split.roundtrip_residual <= 1e-9 && split.left_factor == "set" &&
              split.right_factor == "matrix";
    const DecomposeReport dec =
        decompose_pred_space(ProdObject{{2}, BlockSignature{{2}}}, 100, 20260817);
    ok = ok && dec.pass;
    report(7, ok,
           "split at s=(1,0): factors (" + split.left_factor + ", " + split.right_factor +
               "), " + std::to_string(split.sampled_morphisms) +
               " morphisms, round-trip residual " +
               std::string(fmt(split.roundtrip_residual)) +
               "; predicates boolean (+) convex: " + (dec.pass ? "yes" : "no"));
}

// -------------------------------------------------------------------------
// 8. Mutant detection: broken ceiling and broken sequential product.
void criterion8() {
    LawOptions ceil_mutant;
    ceil_mutant.ceil = LawOptions::Ceil::threshold_half;
    const auto ceil_reports =
        run_jordan_laws(BlockSignature{{2}}, 100, 20260818, 1e-8, ceil_mutant);
    int ceil_flags = 0;
    bool ceil_with_ce = false;
    bool ceil_d_flagged = false;
    for (const auto& r : ceil_reports)
        if (!r.pass) {
            ++ceil_flags;
            if (r.counterexample) ceil_with_ce = true;
            if (r.law == "prop3.4.d") ceil_d_flagged = true;
        }

    LawOptions seq_mutant;
    seq_mutant.seq = LawOptions::Seq::no_sqrt;
    const auto seq_reports =
        run_jordan_laws(BlockSignature{{2}}, 100, 20260819, 1e-8, seq_mutant);
    int seq_flags = 0;
    bool seq_with_ce = false;
    for (const auto& r : seq_reports)
        if (!r.pass) {
            ++seq_flags;
            if (r.counterexample) seq_with_ce = true;
        }

    const bool ok = ceil_flags >= 1 && ceil_with_ce && ceil_d_flagged && seq_flags >= 1 &&
                    seq_with_ce;
    report(8, ok,
           "threshold-0.5 ceiling flagged by " + std::to_string(ceil_flags) +
               " laws (prop3.4.d among them: " + (ceil_d_flagged ? "yes" : "no") +
               "), pqp sequential product flagged by " + std::to_string(seq_flags) +
               " laws, counterexamples attached");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures > 0) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all 8 criteria passed\n");
    return 0;
}
