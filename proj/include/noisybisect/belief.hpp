#pragma once

#include <limits>
#include <stdexcept>

namespace noisybisect {

/// Observed signal: the sign of (target + noise - threshold), with sign(0) = +1.
enum class Sign : int { Minus = -1, Plus = +1 };

inline int raw(Sign s) { return static_cast<int>(s); }
inline Sign signum(double v) { return v < 0.0 ? Sign::Minus : Sign::Plus; }
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// Raised when a belief update would divide by an underflowed truncation mass.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BeliefMode { Gaussian, TruncatedLower, TruncatedUpper };

/// The learner's belief: a Gaussian with location `loc` and scale `scale`,
/// rescaled onto the support (lower, upper).  At most one bound is finite;
/// the mode tag is redundant with the bounds and must always agree with them.
struct BeliefState {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    double loc = 0.0;
    double scale = 1.0;
    BeliefMode mode = BeliefMode::Gaussian;

    static BeliefState gaussian(double loc, double scale);
    static BeliefState truncated_below(double lower, double loc, double scale);
    static BeliefState truncated_above(double upper, double loc, double scale);

    /// Throws std::invalid_argument if any invariant is violated.
    void validate() const;
};

struct LearnerConfig {
    double rho0 = 1.0;         // prior std in units of sigma_z
    double sigma_z = 1.0;      // observation noise std
    double rho_star = 2.5;     // switch-over between Gaussian inference and truncation
    double trunc_width = 2.0;  // truncation offset, in units of sigma_z

    void validate() const;
};

/// Mean / std of the belief distribution itself (truncation folded in).
struct BeliefSummary {
    double mean;
    double sd;
    double rho;  // sd / sigma_z
};

/// Density of the belief distribution at v.  Proper: integrates to 1.
double posterior_density(const BeliefState& state, double v);

/// Exact moments of the (possibly truncated) belief.
BeliefSummary belief_moments(const BeliefState& state, double sigma_z = 1.0);

/// Result of one Gaussian-regime update: the moment-matched posterior.
struct GaussianStep {
    double mean;
    double rho;
};

/// Moment-matched Bayesian update for a Gaussian belief whose threshold sat
/// at its own mean:
///   mean' = mean + x sigma_z sqrt(2/pi) rho^2 / sqrt(1 + rho^2)
///   rho'^2 = rho^2 (1 + rho^2 (1 - 2/pi)) / (1 + rho^2)
GaussianStep gaussian_step(double mean, double rho, Sign x, double sigma_z);

/// |mean' - mean| of gaussian_step: sigma_z sqrt(2/pi) rho^2 / sqrt(1+rho^2).
double gaussian_step_size(double rho, double sigma_z);

/// Support-chopping update for a signal consistent with the truncation
/// direction (x=+1 advances the lower bound to theta - width*sigma_z, never
/// backwards; x=-1 mirrored).  loc and scale are untouched.
BeliefState truncate_step(const BeliefState& state, double theta, Sign x,
                          double sigma_z, double width);

/// Entropy-matching collapse for a signal that contradicts the truncation:
/// doubly truncate at theta -/+ width*sigma_z, then return the Gaussian with
/// the same mean and differential entropy.
BeliefState collapse_step(const BeliefState& state, double theta, Sign x,
                          double sigma_z, double width);

struct LearnerStep {
    BeliefState state;
    double next_threshold;
};

/// One full state-machine transition for an observation x received at the
/// threshold this state last emitted (its belief mean).  Returns the new
/// state and the next myopic threshold.
LearnerStep learner_step(const BeliefState& state, Sign x, const LearnerConfig& config);

/// Stateful convenience wrapper around learner_step.
class ApproximateLearner {
   public:
    explicit ApproximateLearner(const LearnerConfig& config);

    double threshold() const { return threshold_; }
    void observe(Sign x);
    const BeliefState& state() const { return state_; }
    BeliefSummary summary() const { return belief_moments(state_, config_.sigma_z); }

   private:
    LearnerConfig config_;
    BeliefState state_;
    double threshold_;
};

}  // namespace noisybisect
