#include "rmt/distributions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmt {

double TruncationRule::delta(unsigned n) const {
    if (n < 3) throw std::domain_error("truncation rule: n must be >= 3");
    const double logn = std::log(static_cast<double>(n));
    const double e = (kind == Kind::InvLogSq) ? 2.0 : u;
    return std::pow(logn, -e);
}

double TruncationRule::threshold(unsigned n) const {
    return delta(n) * std::sqrt(static_cast<double>(n));
}

TruncationRule TruncationRule::parse(const std::string& text) {
    if (text == "invlogsq") return TruncationRule{Kind::InvLogSq, 2.0};
    const std::string prefix = "invlogpow:";
    if (text.rfind(prefix, 0) == 0) {
        const double u = std::stod(text.substr(prefix.size()));
        if (!(u > 0.0)) throw std::invalid_argument("invlogpow exponent must be positive");
        return TruncationRule{Kind::InvLogPow, u};
    }
    throw std::invalid_argument("unknown truncation rule: " + text);
}

std::string TruncationRule::to_string() const {
    if (kind == Kind::InvLogSq) return "invlogsq";
    return "invlogpow:" + std::to_string(u);
}

double sample_standard_normal(RngStream& rng) {
    const double u1 = rng.uniform01();
    const double u2 = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double sample_gamma(RngStream& rng, double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be positive");
    if (shape < 1.0) {
        const double g = sample_gamma(rng, shape + 1.0);
        return g * std::pow(rng.uniform01(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = sample_standard_normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        const double u = rng.uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

namespace {

double random_sign(RngStream& rng) { return (rng.next_u64() & 1u) ? 1.0 : -1.0; }

// Smallest x0 > 1 with x0^4 (log x0)^s = 1; the log-corrected quartic tail
// P(|X| > x) = x^-4 (log x)^-s starts at x0 so it is a proper tail function.
double log_quartic_x0(double s) {
    double lo = 1.0 + 1e-12;
    double hi = std::numbers::e;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double g = 4.0 * std::log(mid) + s * std::log(std::log(mid));
        (g < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Inverse of G(x) = x^4 (log x)^s on [x0, inf): returns x with G(x) = target.
double log_quartic_inverse(double s, double x0, double target) {
    if (target <= 1.0) return x0;
    // G is increasing; bracket on a log scale, then bisect.
    double lo = x0;
    double hi = std::max(2.0 * x0, std::pow(target, 0.25) + 1.0);
    auto g = [&](double x) { return 4.0 * std::log(x) + s * std::log(std::log(x)); };
    const double t = std::log(target);
    while (g(hi) < t) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < t ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

EntryDistribution EntryDistribution::standard_normal() { return EntryDistribution{}; }

EntryDistribution EntryDistribution::student_t(double df) {
    if (!(df > 2.0)) throw std::invalid_argument("student t: df must exceed 2");
    EntryDistribution d;
    d.kind = Kind::StudentT;
    d.param1 = df;
    return d;
}

EntryDistribution EntryDistribution::symmetrized_pareto(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("pareto: alpha must be positive");
    EntryDistribution d;
    d.kind = Kind::SymmetrizedPareto;
    d.param1 = alpha;
    return d;
}

EntryDistribution EntryDistribution::gamma_square(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("gamma square: parameters must be positive");
    }
    EntryDistribution d;
    d.kind = Kind::GammaSquare;
    d.param1 = alpha;
    d.param2 = beta;
    return d;
}

EntryDistribution EntryDistribution::log_corrected_quartic(double u, double s) {
    if (!(u > 4.0)) throw std::invalid_argument("log quartic: u must exceed 4");
    if (!(s > 4.0 / u) || !(s < 1.0)) {
        throw std::invalid_argument("log quartic: s must lie in (4/u, 1)");
    }
    EntryDistribution d;
    d.kind = Kind::LogCorrectedQuartic;
    d.param1 = u;
    d.param2 = s;
    return d;
}

EntryDistribution EntryDistribution::truncated(EntryDistribution inner, TruncationRule rule) {
    if (inner.is_truncated()) throw std::invalid_argument("nested truncation not supported");
    EntryDistribution d;
    d.kind = Kind::Truncated;
    d.inner = std::make_shared<EntryDistribution>(std::move(inner));
    d.rule = rule;
    return d;
}

EntryDistribution EntryDistribution::parse(const std::string& spec) {
    if (spec == "normal") return standard_normal();
    auto number_after = [&](const std::string& prefix) {
        return spec.substr(prefix.size());
    };
    auto split_pair = [](const std::string& text) {
        const auto comma = text.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("expected two comma-separated parameters");
        }
        return std::pair<double, double>{std::stod(text.substr(0, comma)),
                                         std::stod(text.substr(comma + 1))};
    };
    if (spec.rfind("t:", 0) == 0) return student_t(std::stod(number_after("t:")));
    if (spec.rfind("sympareto:", 0) == 0) {
        return symmetrized_pareto(std::stod(number_after("sympareto:")));
    }
    if (spec.rfind("gammasq:", 0) == 0) {
        auto [a, b] = split_pair(number_after("gammasq:"));
        return gamma_square(a, b);
    }
    if (spec.rfind("logquartic:", 0) == 0) {
        auto [u, s] = split_pair(number_after("logquartic:"));
        return log_corrected_quartic(u, s);
    }
    if (spec.rfind("trunc(", 0) == 0 && spec.back() == ')') {
        const std::string body = spec.substr(6, spec.size() - 7);
        const auto semi = body.find(';');
        if (semi == std::string::npos) {
            throw std::invalid_argument("trunc spec needs (inner;rule)");
        }
        return truncated(parse(body.substr(0, semi)),
                         TruncationRule::parse(body.substr(semi + 1)));
    }
    throw std::invalid_argument("unknown distribution spec: " + spec);
}

std::string EntryDistribution::to_string() const {
    switch (kind) {
        case Kind::StandardNormal: return "normal";
        case Kind::StudentT: return "t:" + std::to_string(param1);
        case Kind::SymmetrizedPareto: return "sympareto:" + std::to_string(param1);
        case Kind::GammaSquare:
            return "gammasq:" + std::to_string(param1) + "," + std::to_string(param2);
        case Kind::LogCorrectedQuartic:
            return "logquartic:" + std::to_string(param1) + "," + std::to_string(param2);
        case Kind::Truncated:
            return "trunc(" + inner->to_string() + ";" + rule->to_string() + ")";
    }
    return "?";
}

double EntryDistribution::sample(RngStream& rng) const {
    switch (kind) {
        case Kind::StandardNormal:
            return sample_standard_normal(rng);
        case Kind::StudentT: {
            const double df = param1;
            const double z = sample_standard_normal(rng);
            const double chi2 = 2.0 * sample_gamma(rng, 0.5 * df);
            const double t = z / std::sqrt(chi2 / df);
            return t * std::sqrt((df - 2.0) / df);  // unit variance
        }
        case Kind::SymmetrizedPareto: {
            const double alpha = param1;
            const double p = std::pow(rng.uniform01(), -1.0 / alpha);
            double x = random_sign(rng) * p;
            if (alpha > 2.0) x /= std::sqrt(alpha / (alpha - 2.0));  // unit variance
            return x;
        }
        case Kind::GammaSquare: {
            const double g = sample_gamma(rng, param1) / param2;
            return random_sign(rng) * std::sqrt(g);
        }
        case Kind::LogCorrectedQuartic: {
            const double s = param2;
            const double x0 = log_quartic_x0(s);
            const double mag = log_quartic_inverse(s, x0, 1.0 / rng.uniform01());
            return random_sign(rng) * mag;
        }
        case Kind::Truncated:
            throw std::logic_error("truncated distribution is sampled via generate()");
    }
    throw std::logic_error("unreachable");
}

std::optional<double> EntryDistribution::second_moment() const {
    switch (kind) {
        case Kind::StandardNormal: return 1.0;
        case Kind::StudentT: return 1.0;
        case Kind::SymmetrizedPareto:
            if (param1 > 2.0) return 1.0;
            return std::nullopt;
        case Kind::GammaSquare: return param1 / param2;
        case Kind::LogCorrectedQuartic: return std::nullopt;  // finite but not closed-form here
        case Kind::Truncated: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<double> EntryDistribution::min_abs_support() const {
    switch (kind) {
        case Kind::SymmetrizedPareto: {
            double scale = 1.0;
            if (param1 > 2.0) scale /= std::sqrt(param1 / (param1 - 2.0));
            return scale;
        }
        case Kind::LogCorrectedQuartic: return log_quartic_x0(param2);
        default: return std::nullopt;
    }
}

}  // namespace rmt
