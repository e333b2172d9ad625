#include "rmt/mp_law.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rmt/quadrature.hpp"

namespace rmt {

MpParameters MpParameters::create(double gamma) {
    if (!(gamma > 0.0) || gamma > 1.0) {
        throw std::domain_error("gamma must lie in (0,1]");
    }
    const double root = std::sqrt(gamma);
    return MpParameters{gamma, (1.0 - root) * (1.0 - root), (1.0 + root) * (1.0 + root)};
}

double mp_density(const MpParameters& params, double x) {
    if (x <= params.a || x >= params.b) return 0.0;
    return std::sqrt((params.b - x) * (x - params.a)) /
           (2.0 * std::numbers::pi * x * params.gamma);
}

Int narayana_coefficient(unsigned k, unsigned r) {
    if (r < 1 || r > k) return 0;
    Int num = binomial(k, r - 1) * binomial(k - 1, r - 1);
    // (1/r) C(k,r-1) C(k-1,r-1) is an integer for all 1 <= r <= k.
    if (num % r != 0) throw std::logic_error("narayana_coefficient: not divisible");
    return num / r;
}

Rat mp_moment_exact(unsigned k, const Rat& gamma) {
    if (k < 1) throw std::invalid_argument("mp_moment: k must be >= 1");
    Rat sum = 0;
    Rat gpow = 1;
    for (unsigned r = 1; r <= k; ++r) {
        sum += Rat(narayana_coefficient(k, r)) * gpow;
        gpow *= gamma;
    }
    return sum;
}

double mp_moment(const MpParameters& params, unsigned k) {
    return to_double(mp_moment_exact(k, rat_from_double(params.gamma)));
}

namespace {

// Transformed density under x = a + (b-a) sin^2(theta):
// f(x) dx = (b-a)^2 sin^2(2 theta) / (4 pi gamma x(theta)) dtheta, smooth on [0, pi/2].
double cdf_integrand(const MpParameters& params, double theta) {
    const double width = params.b - params.a;
    const double s = std::sin(theta);
    const double x = params.a + width * s * s;
    if (x <= 0.0) return 0.0;  // only at theta = 0 with gamma = 1
    const double s2 = std::sin(2.0 * theta);
    return width * width * s2 * s2 / (4.0 * std::numbers::pi * params.gamma * x);
}

}  // namespace

double mp_cdf(const MpParameters& params, double x) {
    if (x <= params.a) return 0.0;
    if (x >= params.b) return 1.0;
    const double ratio = (x - params.a) / (params.b - params.a);
    const double theta = std::asin(std::sqrt(ratio));
    auto result = integrate_adaptive([&](double t) { return cdf_integrand(params, t); }, 0.0,
                                     theta, 1e-12, 1e-12);
    double value = result.value;
    if (value < 0.0) value = 0.0;
    if (value > 1.0) value = 1.0;
    return value;
}

std::complex<double> mp_stieltjes(const MpParameters& params, std::complex<double> z) {
    if (!(z.imag() > 0.0)) {
        throw std::domain_error("mp_stieltjes: z must have positive imaginary part");
    }
    const double g = params.gamma;
    const std::complex<double> base = 1.0 + g - z;
    std::complex<double> root = std::sqrt(base * base - 4.0 * g);
    if (root.imag() < 0.0) root = -root;
    return (1.0 - g - z + root) / (2.0 * g * z);
}

Rat fk_direct(unsigned k, const Rat& x) {
    if (k < 1) throw std::invalid_argument("fk_direct: k must be >= 1");
    const Rat neg_inv = Rat(-1) / (Rat(1) + x);
    Rat total = 1;
    Rat outer = 1;  // (-1/(1+x))^i
    for (unsigned i = 1; i <= 2 * k; ++i) {
        outer *= neg_inv;
        Rat inner = 0;
        Rat xpow = 1;
        for (unsigned r = 1; r <= i; ++r) {
            inner += Rat(binomial(i, r - 1) * binomial(i - 1, r - 1), r) * xpow;
            xpow *= x;
        }
        total += Rat(binomial(2 * k, i)) * outer * inner;
    }
    return total;
}

Rat fk_closed(unsigned k, const Rat& x) {
    if (k < 1) throw std::invalid_argument("fk_closed: k must be >= 1");
    const Rat one_plus = Rat(1) + x;
    Rat total = 1;
    Rat xpow = 1;                  // x^(j-1)
    Rat denom = one_plus;          // (1+x)^(2j-1)
    const Rat denom_step = one_plus * one_plus;
    for (unsigned j = 1; j <= k; ++j) {
        // (2j-2)! / (j! (j-1)!) is the (j-1)-th Catalan number.
        const Int catalan = binomial(2 * j - 2, j - 1) / j;
        total -= xpow / denom * Rat(catalan);
        xpow *= x;
        denom *= denom_step;
    }
    return total;
}

double fk_closed(unsigned k, double x) { return to_double(fk_closed(k, rat_from_double(x))); }

Rat fk_upper_bound(unsigned k, const Rat& x) {
    return rat_pow(4 * x, k) / rat_pow(Rat(1) + x, 2 * k - 1);
}

GPolynomial GPolynomial::at(unsigned j) {
    if (j < 1) throw std::invalid_argument("GPolynomial: j must be >= 1");
    std::vector<Rat> coeffs{Rat(1)};
    for (unsigned step = 2; step <= j; ++step) {
        // (1+x)^2 * g_{step-1}
        std::vector<Rat> expanded(coeffs.size() + 2, Rat(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            expanded[i] += coeffs[i];
            expanded[i + 1] += 2 * coeffs[i];
            expanded[i + 2] += coeffs[i];
        }
        // Subtracting g_{step-1}(0) kills the constant term, so the division
        // by x is a coefficient shift.
        expanded[0] -= coeffs[0];
        if (expanded[0] != 0) throw std::logic_error("GPolynomial: recursion lost exactness");
        coeffs.assign(expanded.begin() + 1, expanded.end());
    }
    return GPolynomial(std::move(coeffs));
}

Rat GPolynomial::eval(const Rat& x) const {
    Rat value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
    return value;
}

double GPolynomial::eval(double x) const { return to_double(eval(rat_from_double(x))); }

double gk_recursive(unsigned j, double x) {
    if (!(x > 0.0)) throw std::domain_error("gk_recursive: x must be positive");
    return GPolynomial::at(j).eval(x);
}

bool appendix_identity(unsigned k, unsigned j) {
    if (j < 1 || j > k) throw std::invalid_argument("appendix_identity: need 1 <= j <= k");
    Int sum = 0;
    for (unsigned i = 2 * j - 1; i <= 2 * k; ++i) {
        Int term = binomial(2 * k, i) * binomial(i - 1, 2 * j - 2);
        if (i % 2 == 0) sum -= term; else sum += term;  // -(-1)^i
    }
    return sum == 1;
}

}  // namespace rmt
