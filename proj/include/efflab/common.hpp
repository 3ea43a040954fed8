#ifndef EFFLAB_COMMON_HPP
#define EFFLAB_COMMON_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace efflab {

using cplx = std::complex<double>;

// Numeric tolerances used across the library. Defaults are tuned for
// double precision at block dimensions <= 6 (tensor products <= 36).
struct Tolerances {
    double herm = 1e-10;     // Hermiticity of inputs
    double psd = 1e-9;       // eigenvalue range slack for effects / PSD cones
    double idem = 1e-9;      // projection idempotency
    double sharp = 1e-7;     // eigenvalue threshold separating 0 / 1 clusters
    double cluster = 1e-8;   // eigenvalue clustering width
    double law = 1e-8;       // default residual bound for law suites
};

inline const Tolerances& tol() {
    static const Tolerances t;
    return t;
}

// Jacobi eigensolver knobs.
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffTarget = 1e-13;

// Enumeration budget for finite-structure search.
inline constexpr int kEnumerationMaxSize = 6;

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error("parse-error", msg), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_ = 0;
    int col_ = 0;
};

// Outcome of checking one law on one instance.
struct LawReport {
    std::string law;       // catalog id, e.g. "prop3.7.c"
    std::string instance;  // human-readable instance description
    bool pass = false;
    double residual = 0.0;  // worst residual observed (1.0 for discrete fails)
    std::optional<std::string> counterexample;
};

inline LawReport law_pass(std::string law, std::string instance, double residual) {
    return LawReport{std::move(law), std::move(instance), true, residual, std::nullopt};
}

inline LawReport law_fail(std::string law, std::string instance, double residual,
                          std::string counterexample) {
    return LawReport{std::move(law), std::move(instance), false, residual,
                     std::move(counterexample)};
}

}  // namespace efflab

#endif  // EFFLAB_COMMON_HPP
