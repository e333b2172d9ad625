#pragma once

#include <complex>
#include <vector>

#include "rmt/exact.hpp"

namespace rmt {

/// Marchenko-Pastur parameters for aspect ratio gamma in (0, 1], with the
/// support endpoints a = (1 - sqrt(gamma))^2, b = (1 + sqrt(gamma))^2.
struct MpParameters {
    double gamma;
    double a;
    double b;

    /// Throws std::domain_error unless gamma lies in (0, 1].
    static MpParameters create(double gamma);
};

/// Density f_gamma(x) = sqrt((b-x)(x-a)) / (2 pi x gamma) on [a, b], 0 outside.
/// Total function of x; the x = 0 boundary point at gamma = 1 returns 0.
double mp_density(const MpParameters& params, double x);

/// Integer coefficient of gamma^(r-1) in the k-th moment: (1/r) C(k,r-1) C(k-1,r-1).
Int narayana_coefficient(unsigned k, unsigned r);

/// k-th moment beta_k(gamma) as an exact rational in gamma.
Rat mp_moment_exact(unsigned k, const Rat& gamma);

/// k-th moment, evaluated exactly and converted to double at the boundary.
double mp_moment(const MpParameters& params, unsigned k);

/// CDF of the law; quadrature after the x = a + (b-a) sin^2(theta) substitution,
/// which absorbs the inverse-square-root edge singularity at gamma = 1.
double mp_cdf(const MpParameters& params, double x);

/// Stieltjes transform s(z) for Im z > 0, using the square-root branch with
/// positive imaginary part. Throws std::domain_error when Im z <= 0.
std::complex<double> mp_stieltjes(const MpParameters& params, std::complex<double> z);

/// f_k(x) evaluated directly from its double-sum definition (exact rationals).
Rat fk_direct(unsigned k, const Rat& x);

/// f_k(x) from the closed form 1 - sum_j x^(j-1)/(1+x)^(2j-1) * Catalan(j-1).
Rat fk_closed(unsigned k, const Rat& x);
double fk_closed(unsigned k, double x);

/// Upper bound (4x)^k / (1+x)^(2k-1) that the closed form satisfies on [0,1].
Rat fk_upper_bound(unsigned k, const Rat& x);

/// g_j polynomials: g_1 = 1 and g_j(x) = ((1+x)^2 g_{j-1}(x) - g_{j-1}(0)) / x,
/// carried as dense rational coefficient vectors so the division by x is a
/// coefficient shift rather than a pointwise 0/0.
class GPolynomial {
  public:
    static GPolynomial at(unsigned j);

    const std::vector<Rat>& coefficients() const { return coeffs_; }
    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    Rat eval(const Rat& x) const;
    double eval(double x) const;

  private:
    explicit GPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}
    std::vector<Rat> coeffs_;
};

/// g_j evaluated at x > 0. Asserts nothing; see GPolynomial for the invariants.
double gk_recursive(unsigned j, double x);

/// Exact check of the alternating binomial identity
/// -sum_{i=2j-1}^{2k} (-1)^i C(2k,i) C(i-1,2j-2) = 1 for 1 <= j <= k.
bool appendix_identity(unsigned k, unsigned j);

}  // namespace rmt
