#pragma once

// Standard-normal special functions and truncated-Gaussian building blocks.
// Everything here is plain double precision; the tail-stable paths route
// through the scaled complementary error function erfcx(x) = exp(x^2) erfc(x)
// so that ratios like N(a)/Phi(-a) stay accurate far outside [-6, 6].

namespace noisybisect {

inline constexpr double kSqrt2 = 1.4142135623730950488;
inline constexpr double kSqrt2Pi = 2.5066282746310005024;
inline constexpr double kInvSqrt2Pi = 0.3989422804014326779;
inline constexpr double kSqrt2OverPi = 0.7978845608028653559;

/// Standard normal density N(x).
double norm_pdf(double x);

/// Standard normal CDF Phi(x).
double norm_cdf(double x);

/// log Phi(x), accurate for x << 0 where Phi underflows.
double log_norm_cdf(double x);

/// exp(x^2) * erfc(x).  Cody-style rational approximations (netlib SPECFUN);
/// relative accuracy ~1e-16 on the whole real line, +inf for x < -26.6.
double erfcx(double x);

/// Inverse of norm_cdf.  Wichura's AS241 rational approximation followed by
/// one Newton step; |error| < 1e-15 for p away from the extreme tails.
double inverse_norm_cdf(double p);

/// N(x) / Phi(-x), the normal hazard function.  Stable for all x.
double norm_hazard(double x);

/// Ratios of a standard normal over the window (a, b), a < b, either bound
/// may be infinite:
///   mean_ratio = (N(a) - N(b)) / Z
///   tilt_ratio = (a N(a) - b N(b)) / Z
///   log_mass   = log Z,  Z = Phi(b) - Phi(a)
/// These are exactly the quantities needed for truncated moments
/// (mean = m + s * mean_ratio, var = s^2 (1 + tilt_ratio - mean_ratio^2))
/// and for entropy matching (var = s^2 Z^2 exp(tilt_ratio)).
struct TruncatedRatios {
    double mean_ratio;
    double tilt_ratio;
    double log_mass;
};
TruncatedRatios truncated_ratios(double a, double b);

}  // namespace noisybisect
