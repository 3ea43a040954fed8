#ifndef EFFLAB_LAWS_HPP
#define EFFLAB_LAWS_HPP

#include <vector>

#include "efflab/diamond.hpp"
#include "efflab/superop.hpp"

namespace efflab {

// Law suites support deliberately broken primitives so that suite
// sensitivity can be demonstrated: a ceiling that thresholds at 1/2
// instead of taking the support, and a sequential product conjugating by p
// instead of sqrt(p).
struct LawOptions {
    enum class Ceil { standard, threshold_half };
    enum class Seq { standard, no_sqrt };
    Ceil ceil = Ceil::standard;
    Seq seq = Seq::standard;
};

Projection ceil_impl(const MatrixEffect& p, const LawOptions& opts);
MatrixEffect seq_impl(const MatrixEffect& p, const MatrixEffect& q, const LawOptions& opts);
PureMap asrt_impl(const MatrixEffect& p, const LawOptions& opts);

// Runs `tasks` over a worker pool sized by the EFFECTUS_LAB_THREADS
// environment variable (hardware concurrency by default). Order of results
// is the order of tasks; each task must be self-contained.
std::vector<LawReport> run_law_tasks(
    std::vector<std::pair<std::string, std::function<LawReport()>>> tasks);

// Jordan / sequential-product laws on one matrix object.
std::vector<LawReport> run_jordan_laws(const BlockSignature& sig, int trials,
                                       uint64_t seed, double tol_law,
                                       const LawOptions& opts = {});

// Filter / comprehension / assert / possibilistic-transformer laws.
std::vector<LawReport> run_diamond_laws(const BlockSignature& sig, int trials,
                                        uint64_t seed, double tol_law,
                                        const LawOptions& opts = {});

// Category-level laws of the matrix backend (partial sums, coproducts,
// predicate functor, separation-flavoured axioms).
std::vector<LawReport> run_effectus_laws(const BlockSignature& sig, int trials,
                                         uint64_t seed, double tol_law);

// Orthomodular-lattice checks on SPred of one object.
LawReport check_oml(const BlockSignature& sig, int trials, uint64_t seed, double tol_law);

// One-line statement for a law id (empty when unknown).
std::string law_statement(const std::string& id);

}  // namespace efflab

#endif  // EFFLAB_LAWS_HPP
