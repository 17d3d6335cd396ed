#include "noisybisect/normal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace noisybisect {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Rational coefficients from W. J. Cody, "Rational Chebyshev approximations
// for the error function", Math. Comp. 23 (1969); netlib SPECFUN CALERF.
double erfcx_chebyshev(double y) {
    // 0.46875 <= y <= 4
    static const double c[9] = {
        5.64188496988670089e-1, 8.88314979438837594e0, 6.61191906371416295e1,
        2.98635138197400131e2,  8.81952221241769090e2, 1.71204761263407058e3,
        2.05107837782607147e3,  1.23033935479799725e3, 2.15311535474403846e-8};
    static const double d[8] = {
        1.57449261107098347e1, 1.17693950891312499e2, 5.37181101862009858e2,
        1.62138957456669019e3, 3.29079923573345963e3, 4.36261909014324716e3,
        3.43936767414372164e3, 1.23033935480374942e3};
    double num = c[8] * y;
    double den = y;
    for (int i = 0; i < 7; ++i) {
        num = (num + c[i]) * y;
        den = (den + d[i]) * y;
    }
    return (num + c[7]) / (den + d[7]);
}

double erfcx_asymptotic(double y) {
    // y > 4
    static const double p[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                                1.25781726111229246e-1, 1.60837851487422766e-2,
                                6.58749161529837803e-4, 1.63153871373020978e-2};
    static const double q[5] = {2.56852019228982242e0, 1.87295284992346047e0,
                                5.27905102951428412e-1, 6.05183413124413191e-2,
                                2.33520497626869185e-3};
    const double sqrpi = 5.6418958354775628695e-1;
    if (y >= 6.71e7) return sqrpi / y;
    const double ysq = 1.0 / (y * y);
    double num = p[5] * ysq;
    double den = ysq;
    for (int i = 0; i < 4; ++i) {
        num = (num + p[i]) * ysq;
        den = (den + q[i]) * ysq;
    }
    return (sqrpi - ysq * (num + p[4]) / (den + q[4])) / y;
}

}  // namespace

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double erfcx(double x) {
    const double y = std::fabs(x);
    double r;
    if (y <= 0.46875) {
        r = std::exp(y * y) * std::erfc(y);  // no cancellation this close to 0
    } else if (y <= 4.0) {
        r = erfcx_chebyshev(y);
    } else {
        r = erfcx_asymptotic(y);
    }
    if (x >= 0.0) return r;
    if (x < -26.628) return kInf;  // 2 exp(x^2) overflows
    const double e = std::exp(x * x);
    return 2.0 * e - r;
}

double log_norm_cdf(double x) {
    if (x > -1.0) return std::log(norm_cdf(x));
    // Phi(x) = 0.5 erfcx(-x/sqrt2) exp(-x^2/2)
    return std::log(0.5 * erfcx(-x / kSqrt2)) - 0.5 * x * x;
}

double norm_hazard(double x) { return kSqrt2OverPi / erfcx(x / kSqrt2); }

double inverse_norm_cdf(double p) {
    // Wichura, Algorithm AS241 (PPND16), Appl. Statist. 37 (1988).
    if (!(p > 0.0 && p < 1.0)) {
        if (p == 0.0) return -kInf;
        if (p == 1.0) return kInf;
        throw std::domain_error("inverse_norm_cdf: p outside [0, 1]");
    }
    const double q = p - 0.5;
    double x;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        x = q *
            (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                  6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
              1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
            (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                  3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
              4.2313330701600911252e1) * r + 1.0);
    } else {
        double r = q < 0.0 ? p : 1.0 - p;
        r = std::sqrt(-std::log(r));
        if (r <= 5.0) {
            r -= 1.6;
            x = (((((((7.74545014278341407640e-4 * r +
                       2.27238449892691845833e-2) * r +
                      2.41780725177450611770e-1) * r +
                     1.27045825245236838258e0) * r +
                    3.64784832476320460504e0) * r +
                   5.76949722146069140550e0) * r +
                  4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
                (((((((1.05075007164441684324e-9 * r +
                       5.47593808499534494600e-4) * r +
                      1.51986665636164571966e-2) * r +
                     1.48103976427480074590e-1) * r +
                    6.89767334985100004550e-1) * r +
                   1.67638483018380384940e0) * r +
                  2.05319162663775882187e0) * r + 1.0);
        } else {
            r -= 5.0;
            x = (((((((2.01033439929228813265e-7 * r +
                       2.71155556874348757815e-5) * r +
                      1.24266094738807843860e-3) * r +
                     2.65321895265761230930e-2) * r +
                    2.96560571828504891230e-1) * r +
                   1.78482653991729133580e0) * r +
                  5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
                (((((((2.04426310338993978564e-15 * r +
                       1.42151175831644588870e-7) * r +
                      1.84631831751005468180e-5) * r +
                     7.86869131145613259100e-4) * r +
                    1.48753612908506148525e-2) * r +
                   1.36929880922735805310e-1) * r +
                  5.99832206555887937690e-1) * r + 1.0);
        }
        if (q < 0.0) x = -x;
    }
    // One Newton step where Phi is well conditioned.
    if (std::fabs(x) < 8.0) {
        x -= (norm_cdf(x) - p) / norm_pdf(x);
    }
    return x;
}

TruncatedRatios truncated_ratios(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("truncated_ratios: need a < b");
    const bool lo_inf = std::isinf(a) && a < 0.0;
    const bool hi_inf = std::isinf(b) && b > 0.0;

    if (lo_inf && hi_inf) return {0.0, 0.0, 0.0};

    if (lo_inf) {  // window (-inf, b): mirror of (-b, inf)
        TruncatedRatios m = truncated_ratios(-b, kInf);
        return {-m.mean_ratio, m.tilt_ratio, m.log_mass};
    }

    if (a >= 0.0 || (!hi_inf && b <= 0.0)) {
        // One-tail window; reflect a left-tail window onto the right tail.
        double lo = a, hi = b;
        double sign = 1.0;
        if (!(a >= 0.0)) {
            lo = -b;
            hi = -a;
            sign = -1.0;
        }
        const double u = lo / kSqrt2;
        // Z = 0.5 exp(-u^2) D with D = erfcx(u) - exp(u^2 - v^2) erfcx(v);
        // the second term vanishes at v = inf.  N(lo)/Z = sqrt(2/pi)/D and
        // N(hi)/Z = sqrt(2/pi) exp(u^2 - v^2)/D, so nothing underflows.
        double d = erfcx(u);
        double ratio_hi = 0.0;  // exp(u^2 - v^2) erfcx(v)
        double decay = 0.0;     // exp(u^2 - v^2)
        if (!std::isinf(hi)) {
            const double v = hi / kSqrt2;
            decay = std::exp((u - v) * (u + v));
            ratio_hi = decay * erfcx(v);
            d -= ratio_hi;
        }
        const double pdf_lo_over_z = kSqrt2OverPi / d;
        const double pdf_hi_over_z = kSqrt2OverPi * decay / d;
        const double mean_ratio = sign * (pdf_lo_over_z - pdf_hi_over_z);
        const double tilt_ratio =
            lo * pdf_lo_over_z - (std::isinf(hi) ? 0.0 : hi * pdf_hi_over_z);
        const double log_mass = std::log(0.5 * d) - u * u;
        return {mean_ratio, tilt_ratio, log_mass};
    }

    // Straddling window a < 0 < b: erf difference has no cancellation.
    const double z = 0.5 * (std::erf(b / kSqrt2) - std::erf(a / kSqrt2));
    const double na = norm_pdf(a);
    const double nb = hi_inf ? 0.0 : norm_pdf(b);
    return {(na - nb) / z, (a * na - (hi_inf ? 0.0 : b * nb)) / z,
            std::log(z)};
}

}  // namespace noisybisect
