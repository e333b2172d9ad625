#pragma once

#include <memory>
#include <optional>
#include <string>

#include "rmt/rng.hpp"

namespace rmt {

/// Entry truncation threshold rule delta_n * sqrt(n).
struct TruncationRule {
    enum class Kind { InvLogSq, InvLogPow };
    Kind kind = Kind::InvLogSq;
    double u = 2.0;  // exponent for InvLogPow

    /// delta_n: (log n)^-2 or (log n)^-u. Rejects n < 3.
    double delta(unsigned n) const;
    /// delta_n * sqrt(n)
    double threshold(unsigned n) const;

    /// "invlogsq" or "invlogpow:<u>"
    static TruncationRule parse(const std::string& text);
    std::string to_string() const;
};

/// The entry distributions of the simulation study. All are symmetric about 0.
/// StudentT and SymmetrizedPareto with tail index > 2 are standardized to unit
/// variance; SymmetrizedPareto with index <= 2 keeps Pareto scale 1 (infinite
/// variance, and every statistic computed from it here is self-normalized).
struct EntryDistribution {
    enum class Kind {
        StandardNormal,
        StudentT,            // param1 = df > 2
        SymmetrizedPareto,   // param1 = alpha > 0; X = sign * Pareto(alpha)
        GammaSquare,         // X^2 ~ Gamma(param1, param2), random sign
        LogCorrectedQuartic, // param1 = u > 4, param2 = s in (4/u, 1)
        Truncated,           // inner distribution + rule, applied at generation
    };

    Kind kind = Kind::StandardNormal;
    double param1 = 0.0;
    double param2 = 0.0;
    std::shared_ptr<EntryDistribution> inner;
    std::optional<TruncationRule> rule;

    static EntryDistribution standard_normal();
    static EntryDistribution student_t(double df);
    static EntryDistribution symmetrized_pareto(double alpha);
    static EntryDistribution gamma_square(double alpha, double beta);
    static EntryDistribution log_corrected_quartic(double u, double s);
    static EntryDistribution truncated(EntryDistribution inner, TruncationRule rule);

    /// Mini-grammar: normal | t:<df> | sympareto:<alpha> | gammasq:<a>,<b> |
    /// logquartic:<u>,<s> | trunc(<inner>;<rule>)
    static EntryDistribution parse(const std::string& spec);
    std::string to_string() const;

    /// One variate. Draws as many stream values as it needs.
    double sample(RngStream& rng) const;

    /// E[X^2] when finite.
    std::optional<double> second_moment() const;

    /// Lower bound on |X| for distributions bounded away from zero.
    std::optional<double> min_abs_support() const;

    bool is_truncated() const { return kind == Kind::Truncated; }
};

/// Standard normal via Box-Muller (two uniforms, no rejection).
double sample_standard_normal(RngStream& rng);

/// Gamma(shape, 1) via Marsaglia-Tsang, with the shape < 1 boost.
double sample_gamma(RngStream& rng, double shape);

}  // namespace rmt
