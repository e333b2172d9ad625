#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rmt/distributions.hpp"
#include "rmt/exact.hpp"

namespace rmt {

/// Exponent multiset (m_1, ..., m_r) of a mixed even moment
/// E[Y_1^{2m_1} ... Y_r^{2m_r}] at sample size n. By exchangeability of the
/// self-normalized row the value depends only on the multiset, so exponents
/// are kept sorted descending.
struct MomentSignature {
    std::vector<unsigned> exponents;
    unsigned n = 0;

    static MomentSignature create(std::vector<unsigned> exponents, unsigned n);

    unsigned parts() const { return static_cast<unsigned>(exponents.size()); }
    unsigned total() const;  // ell = sum of exponents
    std::string to_string() const;
};

/// Supplier of exact mixed even moments. Implementations must be pure.
class MomentOracle {
  public:
    virtual ~MomentOracle() = default;
    virtual Rat mixed_even_moment(const MomentSignature& sig) const = 0;
    virtual std::string name() const = 0;
};

/// E[Y_1^{2m_1} ... Y_r^{2m_r}] = prod_j (2m_j - 1)!! / prod_{j=0}^{ell-1} (n + 2j)
/// for standard normal entries.
Rat gaussian_moment(const MomentSignature& sig);

/// X^2 ~ Gamma(alpha, beta): prod_j (alpha)_{m_j} / (alpha n)_ell, as rising
/// factorials only. Independent of beta.
Rat gamma_moment(const MomentSignature& sig, const Rat& alpha);

class GaussianMomentOracle final : public MomentOracle {
  public:
    Rat mixed_even_moment(const MomentSignature& sig) const override {
        return gaussian_moment(sig);
    }
    std::string name() const override { return "gaussian"; }
};

class GammaMomentOracle final : public MomentOracle {
  public:
    explicit GammaMomentOracle(Rat alpha) : alpha_(std::move(alpha)) {}
    Rat mixed_even_moment(const MomentSignature& sig) const override {
        return gamma_moment(sig, alpha_);
    }
    std::string name() const override { return "gamma"; }

  private:
    Rat alpha_;
};

/// Laplace-transform formula for the mixed moment, evaluated by adaptive
/// quadrature with the outer integral split at ell/n and each side mapped to
/// [0,1]. Closed-form inner expectations for StandardNormal and GammaSquare;
/// 1-D quadrature against the density otherwise. Truncated inputs are
/// rejected (the self-normalized row is ill-defined when a whole row can
/// truncate to zero).
double quadrature_moment(const EntryDistribution& dist, const MomentSignature& sig,
                         double rel_tol = 1e-9);

struct McMomentResult {
    double estimate = 0.0;
    double std_error = 0.0;
    long resamples = 0;  // degenerate all-zero rows redrawn
};

/// Monte-Carlo mixed even moment. Deterministic given (seed, reps); each
/// replicate row uses its own counter-derived stream.
McMomentResult mc_mixed_moment(const EntryDistribution& dist, const MomentSignature& sig,
                               long reps, std::uint64_t seed);

/// One-step moment contraction report: worst ratio of
/// E[... Y^{2m}] / E[... Y^{2m-2}] over all signatures with total <= k and
/// parts <= total - 1, against the target q/n.
struct CqReport {
    unsigned n = 0;
    unsigned k = 0;
    Rat q;
    Rat worst_ratio;          // max over signatures and decrement choices
    bool pass = false;        // worst_ratio <= q/n
    MomentSignature witness;  // signature attaining the worst ratio
    unsigned witness_part = 0;  // exponent value that was decremented
};

CqReport cq_check(const MomentOracle& oracle, unsigned n, unsigned k, const Rat& q);

/// Same enumeration with quadrature moments; pass/fail decided in doubles.
struct CqNumericReport {
    unsigned n = 0;
    unsigned k = 0;
    double q = 0.0;
    double worst_ratio = 0.0;
    bool pass = false;
    MomentSignature witness;
    unsigned witness_part = 0;
};

CqNumericReport cq_check_numeric(const EntryDistribution& dist, unsigned n, unsigned k, double q);

/// Monte-Carlo scan of n^2 E[Y1 Y2] and n E[Y1^4] over a grid of sample sizes.
struct CondXRow {
    unsigned n = 0;
    double n2_cross = 0.0;   // n^2 * estimate of E[Y1 Y2]
    double se_cross = 0.0;   // standard error of n2_cross
    double n_fourth = 0.0;   // n * estimate of E[Y1^4]
    double se_fourth = 0.0;  // standard error of n_fourth
    bool symmetric_zero_ok = false;  // |E[Y1 Y2]| <= 3 se for symmetric entries
};

std::vector<CondXRow> condx_check(const EntryDistribution& dist,
                                  const std::vector<unsigned>& n_grid, long reps,
                                  std::uint64_t seed);

}  // namespace rmt
