#include "rmt/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "rmt/quadrature.hpp"

namespace rmt {

MomentSignature MomentSignature::create(std::vector<unsigned> exponents, unsigned n) {
    if (exponents.empty()) throw std::invalid_argument("moment signature: no exponents");
    for (unsigned m : exponents) {
        if (m == 0) throw std::invalid_argument("moment signature: exponents must be positive");
    }
    if (n < exponents.size()) {
        throw std::invalid_argument("moment signature: need n >= number of parts");
    }
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
    return MomentSignature{std::move(exponents), n};
}

unsigned MomentSignature::total() const {
    unsigned ell = 0;
    for (unsigned m : exponents) ell += m;
    return ell;
}

std::string MomentSignature::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i != 0) out += ",";
        out += std::to_string(exponents[i]);
    }
    out += ");n=" + std::to_string(n);
    return out;
}

Rat gaussian_moment(const MomentSignature& sig) {
    const unsigned ell = sig.total();
    Int numerator = 1;
    for (unsigned m : sig.exponents) numerator *= odd_double_factorial(m);
    Int denominator = 1;
    for (unsigned j = 0; j < ell; ++j) denominator *= Int(sig.n) + 2 * j;
    return Rat(numerator, denominator);
}

Rat gamma_moment(const MomentSignature& sig, const Rat& alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("gamma moment: alpha must be positive");
    const unsigned ell = sig.total();
    Rat numerator = 1;
    for (unsigned m : sig.exponents) numerator *= rising_factorial(alpha, m);
    const Rat denominator = rising_factorial(alpha * sig.n, ell);
    return numerator / denominator;
}

namespace {

// E[e^{-lambda X^2}] and E[X^{2m} e^{-lambda X^2}] for one entry distribution.
class LaplaceExpectations {
  public:
    explicit LaplaceExpectations(const EntryDistribution& dist) : dist_(dist) {
        switch (dist.kind) {
            case EntryDistribution::Kind::StandardNormal:
            case EntryDistribution::Kind::GammaSquare:
                closed_form_ = true;
                break;
            case EntryDistribution::Kind::Truncated:
                throw std::invalid_argument(
                    "quadrature_moment: truncated entries can zero a whole row, "
                    "leaving the self-normalized moment undefined");
            default:
                closed_form_ = false;
                break;
        }
    }

    double base(double lambda) const {
        switch (dist_.kind) {
            case EntryDistribution::Kind::StandardNormal:
                return std::pow(1.0 + 2.0 * lambda, -0.5);
            case EntryDistribution::Kind::GammaSquare:
                return std::pow(1.0 + lambda / dist_.param2, -dist_.param1);
            default:
                return density_integral(0, lambda);
        }
    }

    double weighted(unsigned m, double lambda) const {
        switch (dist_.kind) {
            case EntryDistribution::Kind::StandardNormal: {
                double dfact = 1.0;
                for (unsigned j = 1; j <= m; ++j) dfact *= 2.0 * j - 1.0;
                return dfact * std::pow(1.0 + 2.0 * lambda, -0.5 - static_cast<double>(m));
            }
            case EntryDistribution::Kind::GammaSquare: {
                const double alpha = dist_.param1;
                const double beta = dist_.param2;
                double rising = 1.0;
                for (unsigned j = 0; j < m; ++j) rising *= alpha + j;
                return rising * std::pow(beta, -static_cast<double>(m)) *
                       std::pow(1.0 + lambda / beta, -alpha - static_cast<double>(m));
            }
            default:
                return density_integral(m, lambda);
        }
    }

  private:
    // Density of |X| and the lower edge of its support.
    double abs_density(double x) const {
        switch (dist_.kind) {
            case EntryDistribution::Kind::StudentT: {
                const double df = dist_.param1;
                const double c = std::sqrt((df - 2.0) / df);  // X = c T
                const double t = x / c;
                const double logpdf = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                                      0.5 * std::log(df * std::numbers::pi) -
                                      0.5 * (df + 1.0) * std::log1p(t * t / df);
                return 2.0 * std::exp(logpdf) / c;
            }
            case EntryDistribution::Kind::SymmetrizedPareto: {
                const double alpha = dist_.param1;
                double scale = 1.0;
                if (alpha > 2.0) scale = 1.0 / std::sqrt(alpha / (alpha - 2.0));
                if (x < scale) return 0.0;
                // |X| = scale * Pareto(alpha)
                return alpha / scale * std::pow(x / scale, -alpha - 1.0);
            }
            case EntryDistribution::Kind::LogCorrectedQuartic: {
                const double s = dist_.param2;
                const double x0 = *dist_.min_abs_support();
                if (x < x0) return 0.0;
                const double lx = std::log(x);
                return std::pow(x, -5.0) * std::pow(lx, -s) * (4.0 + s / lx);
            }
            default:
                throw std::logic_error("abs_density: closed-form distribution");
        }
    }

    double support_low() const {
        if (auto lo = dist_.min_abs_support()) return *lo;
        return 0.0;
    }

    // 2m-weighted Laplace integral against the |X| density, mapped to [0,1)
    // via x = lo + t/(1-t).
    double density_integral(unsigned m, double lambda) const {
        const double lo = support_low();
        auto integrand = [&](double t) {
            const double omt = 1.0 - t;
            const double x = lo + t / omt;
            const double jac = 1.0 / (omt * omt);
            double w = std::exp(-lambda * x * x);
            if (w == 0.0) return 0.0;
            if (m > 0) w *= std::pow(x * x, static_cast<double>(m));
            return abs_density(x) * w * jac;
        };
        return integrate_adaptive(integrand, 0.0, 1.0, 1e-11, 1e-300).value;
    }

    const EntryDistribution& dist_;
    bool closed_form_ = true;
};

}  // namespace

double quadrature_moment(const EntryDistribution& dist, const MomentSignature& sig,
                         double rel_tol) {
    const LaplaceExpectations laplace(dist);
    const unsigned ell = sig.total();
    const unsigned r = sig.parts();
    const unsigned n = sig.n;

    double log_factorial = 0.0;
    for (unsigned j = 2; j < ell; ++j) log_factorial += std::log(static_cast<double>(j));
    const double inv_factorial = std::exp(-log_factorial);

    auto outer = [&](double lambda) {
        double value = inv_factorial * std::pow(lambda, static_cast<double>(ell - 1)) *
                       std::pow(laplace.base(lambda), static_cast<double>(n - r));
        if (value == 0.0) return 0.0;
        for (unsigned m : sig.exponents) value *= laplace.weighted(m, lambda);
        return value;
    };

    // Split at the integrand's peak scale ell/n and map each side onto [0,1].
    const double split = static_cast<double>(ell) / static_cast<double>(n);
    auto left = integrate_adaptive([&](double t) { return split * outer(split * t); }, 0.0, 1.0,
                                   rel_tol, 1e-300);
    auto right = integrate_adaptive(
        [&](double t) { return split / (t * t) * outer(split / t); }, 0.0, 1.0, rel_tol, 1e-300);
    if (!left.converged || !right.converged) {
        throw std::runtime_error("quadrature_moment: integral did not converge; error estimate " +
                                 std::to_string(left.error_estimate + right.error_estimate));
    }
    return left.value + right.value;
}

McMomentResult mc_mixed_moment(const EntryDistribution& dist, const MomentSignature& sig,
                               long reps, std::uint64_t seed) {
    if (reps < 100) throw std::invalid_argument("mc_mixed_moment: need reps >= 100");
    const unsigned n = sig.n;
    const unsigned r = sig.parts();
    const bool truncated = dist.is_truncated();
    double threshold = 0.0;
    const EntryDistribution* base = &dist;
    if (truncated) {
        threshold = dist.rule->threshold(n);
        base = dist.inner.get();
    }

    std::vector<double> row(n);
    double sum = 0.0;
    double sumsq = 0.0;
    long resamples = 0;

    for (long rep = 0; rep < reps; ++rep) {
        RngStream rng(mix_seed(seed, static_cast<std::uint64_t>(rep)));
        double d = 0.0;
        for (;;) {
            d = 0.0;
            for (unsigned t = 0; t < n; ++t) {
                double x = base->sample(rng);
                if (truncated && std::abs(x) > threshold) x = 0.0;
                row[t] = x;
                d += x * x;
            }
            if (d > 0.0) break;
            ++resamples;
        }
        double value = 0.0;
        if (r == 1) {
            const unsigned m = sig.exponents[0];
            for (unsigned t = 0; t < n; ++t) {
                value += std::pow(row[t] * row[t] / d, static_cast<double>(m));
            }
        } else {
            // Average over the n cyclic r-tuples; unbiased by exchangeability.
            for (unsigned t = 0; t < n; ++t) {
                double prod = 1.0;
                for (unsigned j = 0; j < r; ++j) {
                    const double y2 = row[(t + j) % n] * row[(t + j) % n] / d;
                    prod *= std::pow(y2, static_cast<double>(sig.exponents[j]));
                }
                value += prod;
            }
        }
        value /= n;
        sum += value;
        sumsq += value * value;
    }

    const double mean = sum / static_cast<double>(reps);
    const double var = std::max(0.0, sumsq / static_cast<double>(reps) - mean * mean);
    const double se = std::sqrt(var / static_cast<double>(reps));
    return McMomentResult{mean, se, resamples};
}

namespace {

// All partitions of ell into at most max_parts descending positive parts.
void enumerate_partitions(unsigned ell, unsigned max_parts, unsigned max_value,
                          std::vector<unsigned>& current,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (ell == 0) {
        if (!current.empty()) visit(current);
        return;
    }
    if (current.size() == max_parts) return;
    for (unsigned v = std::min(ell, max_value); v >= 1; --v) {
        current.push_back(v);
        enumerate_partitions(ell - v, max_parts, v, current, visit);
        current.pop_back();
        if (v == 1) break;
    }
}

template <class Value, class Moment>
struct CqScan {
    Value worst;
    bool any = false;
    MomentSignature witness;
    unsigned witness_part = 0;

    void run(unsigned n, unsigned k, const Moment& moment) {
        if (k < 2) throw std::invalid_argument("cq check: need k >= 2");
        if (k > 12) throw std::invalid_argument("cq check: combinatorial cap k <= 12");
        for (unsigned ell = 2; ell <= k; ++ell) {
            std::vector<unsigned> parts;
            enumerate_partitions(
                ell, std::min(ell - 1, n), ell, parts,
                [&](const std::vector<unsigned>& partition) {
                    const auto sig = MomentSignature::create(partition, n);
                    const Value numer = moment(sig);
                    unsigned previous = 0;
                    for (std::size_t i = 0; i < partition.size(); ++i) {
                        const unsigned m = partition[i];
                        if (m == previous) continue;  // same ratio for equal parts
                        previous = m;
                        std::vector<unsigned> reduced = partition;
                        if (m == 1) {
                            reduced.erase(reduced.begin() + static_cast<long>(i));
                        } else {
                            reduced[i] = m - 1;
                        }
                        Value denom;
                        if (reduced.empty()) {
                            denom = Value(1);
                        } else {
                            denom = moment(MomentSignature::create(reduced, n));
                        }
                        const Value ratio = numer / denom;
                        if (!any || ratio > worst) {
                            any = true;
                            worst = ratio;
                            witness = sig;
                            witness_part = m;
                        }
                    }
                });
        }
    }
};

}  // namespace

CqReport cq_check(const MomentOracle& oracle, unsigned n, unsigned k, const Rat& q) {
    CqScan<Rat, std::function<Rat(const MomentSignature&)>> scan;
    scan.run(n, k, [&](const MomentSignature& sig) { return oracle.mixed_even_moment(sig); });
    CqReport report;
    report.n = n;
    report.k = k;
    report.q = q;
    report.worst_ratio = scan.worst;
    report.pass = scan.worst <= q / n;
    report.witness = scan.witness;
    report.witness_part = scan.witness_part;
    return report;
}

CqNumericReport cq_check_numeric(const EntryDistribution& dist, unsigned n, unsigned k,
                                 double q) {
    CqScan<double, std::function<double(const MomentSignature&)>> scan;
    scan.run(n, k, [&](const MomentSignature& sig) { return quadrature_moment(dist, sig); });
    CqNumericReport report;
    report.n = n;
    report.k = k;
    report.q = q;
    report.worst_ratio = scan.worst;
    report.pass = scan.worst <= q / n;
    report.witness = scan.witness;
    report.witness_part = scan.witness_part;
    return report;
}

std::vector<CondXRow> condx_check(const EntryDistribution& dist,
                                  const std::vector<unsigned>& n_grid, long reps,
                                  std::uint64_t seed) {
    std::vector<CondXRow> rows;
    rows.reserve(n_grid.size());
    for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
        const unsigned n = n_grid[gi];
        if (n < 2) throw std::invalid_argument("condx_check: n must be >= 2");
        std::vector<double> x(n);
        double sum_a = 0.0, sumsq_a = 0.0;  // n^2 E[Y1 Y2] per row
        double sum_b = 0.0, sumsq_b = 0.0;  // n E[Y1^4] per row
        const std::uint64_t grid_seed = mix_seed(seed, 1000003ull * gi);
        for (long rep = 0; rep < reps; ++rep) {
            RngStream rng(mix_seed(grid_seed, static_cast<std::uint64_t>(rep)));
            double d = 0.0;
            double s1 = 0.0;
            double s4 = 0.0;
            for (unsigned t = 0; t < n; ++t) {
                x[t] = dist.sample(rng);
                d += x[t] * x[t];
            }
            for (unsigned t = 0; t < n; ++t) {
                const double y = x[t] / std::sqrt(d);
                s1 += y;
                s4 += y * y * y * y;
            }
            // E[(sum Y)^2] = 1 + n(n-1) E[Y1 Y2], so per row:
            const double a = static_cast<double>(n) * (s1 * s1 - 1.0) / (n - 1.0);
            const double b = s4;
            sum_a += a;
            sumsq_a += a * a;
            sum_b += b;
            sumsq_b += b * b;
        }
        const double inv = 1.0 / static_cast<double>(reps);
        CondXRow row;
        row.n = n;
        row.n2_cross = sum_a * inv;
        row.se_cross = std::sqrt(std::max(0.0, sumsq_a * inv - row.n2_cross * row.n2_cross) * inv);
        row.n_fourth = sum_b * inv;
        row.se_fourth =
            std::sqrt(std::max(0.0, sumsq_b * inv - row.n_fourth * row.n_fourth) * inv);
        row.symmetric_zero_ok = std::abs(row.n2_cross) <= 3.0 * row.se_cross;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rmt
