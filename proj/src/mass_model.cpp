#include "pdm/mass_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "detail/simpson.hpp"
#include "pdm/error.hpp"

namespace pdm {

namespace {

constexpr double kPctTolerance = 1e-10;
constexpr double kFirstDiffStep = 1e-5;
// LinearRamp masses are piecewise quadratic in x, so a wider step loses nothing
// and keeps the second difference clear of cancellation noise.
constexpr double kSecondDiffStep = 1e-3;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double heaviside(double x) {
  if (x < 0.0) return 0.0;
  if (x > 0.0) return 1.0;
  return 0.5;
}

// Richardson-extrapolated central differences of a scalar function.
template <typename F>
double first_difference(const F& f, double x, double h) {
  auto central = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

template <typename F>
double second_difference(const F& f, double x, double h) {
  const double fx = f(x);
  auto central = [&](double s) { return (f(x + s) - 2.0 * fx + f(x - s)) / (s * s); };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

}  // namespace

QuadraticInterpolant QuadraticInterpolant::through(const HeavisideGeneral& m) {
  QuadraticInterpolant f;
  f.c0 = m.m1;
  f.c1 = 4.0 * m.m2 - 3.0 * m.m1 - m.m3;
  f.c2 = 2.0 * (m.m1 + m.m3) - 4.0 * m.m2;
  return f;
}

double QuadraticInterpolant::min_on_unit_interval() const {
  double lowest = std::min(value(0.0), value(1.0));
  if (c2 > 0.0) {
    const double vertex = -c1 / (2.0 * c2);
    if (vertex > 0.0 && vertex < 1.0) {
      lowest = std::min(lowest, value(vertex));
    }
  }
  return lowest;
}

MassProfile MassProfile::heaviside_mu(double mu) {
  if (!std::isfinite(mu) || mu <= -1.0) {
    throw Error(Errc::InvalidProfile, "mu must be finite and > -1, got " + std::to_string(mu));
  }
  return MassProfile(HeavisideMu{mu});
}

MassProfile MassProfile::heaviside(double m1, double m2, double m3) {
  for (double m : {m1, m2, m3}) {
    if (!std::isfinite(m) || m <= 0.0) {
      throw Error(Errc::InvalidProfile, "jump masses must be finite and positive");
    }
  }
  return MassProfile(HeavisideGeneral{m1, m2, m3});
}

MassProfile MassProfile::smooth(const HeavisideGeneral& base, Regularizer regularizer,
                                double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(Errc::NonPositiveEpsilon, "epsilon must be positive, got " + std::to_string(epsilon));
  }
  // validates the three masses
  heaviside(base.m1, base.m2, base.m3);
  // h_eps sweeps all of [0, 1], so f must stay positive there, not only at the nodes
  if (QuadraticInterpolant::through(base).min_on_unit_interval() <= 0.0) {
    throw Error(Errc::InvalidProfile,
                "quadratic interpolant through (m1, m2, m3) is not positive on [0, 1]");
  }
  return MassProfile(SmoothRegularized{base, regularizer, epsilon});
}

HeavisideGeneral MassProfile::jump_values() const {
  return std::visit(overloaded{
                        [](const HeavisideMu& k) {
                          return HeavisideGeneral{1.0, 1.0 + 0.5 * k.mu, 1.0 + k.mu};
                        },
                        [](const HeavisideGeneral& k) { return k; },
                        [](const SmoothRegularized& k) { return k.base; },
                    },
                    kind_);
}

bool MassProfile::outside_nominal_range() const {
  const auto* mu = std::get_if<HeavisideMu>(&kind_);
  return mu != nullptr && mu->mu <= 0.0;
}

double MassProfile::epsilon() const {
  const auto* s = std::get_if<SmoothRegularized>(&kind_);
  return s == nullptr ? 0.0 : s->epsilon;
}

double regularized_step(Regularizer regularizer, double epsilon, double x) {
  switch (regularizer) {
    case Regularizer::Tanh:
      return 0.5 * (1.0 + std::tanh(x / epsilon));
    case Regularizer::ErrorFunction:
      return 0.5 * (1.0 + std::erf(x / epsilon));
    case Regularizer::LinearRamp:
      return std::clamp(0.5 + 0.5 * x / epsilon, 0.0, 1.0);
  }
  return heaviside(x);
}

double mass_at(const MassProfile& profile, double x) {
  return std::visit(overloaded{
                        [x](const HeavisideMu& k) { return 1.0 + k.mu * heaviside(x); },
                        [x](const HeavisideGeneral& k) {
                          if (x < 0.0) return k.m1;
                          if (x > 0.0) return k.m3;
                          return k.m2;
                        },
                        [x](const SmoothRegularized& k) {
                          const auto f = QuadraticInterpolant::through(k.base);
                          return f.value(regularized_step(k.regularizer, k.epsilon, x));
                        },
                    },
                    profile.kind());
}

MassDerivatives mass_derivatives(const MassProfile& profile, double x) {
  const auto* smooth = std::get_if<SmoothRegularized>(&profile.kind());
  if (smooth == nullptr) {
    throw Error(Errc::NotSmooth, "jump profiles have no classical derivatives at x = 0");
  }
  const auto f = QuadraticInterpolant::through(smooth->base);
  const double eps = smooth->epsilon;

  double h = 0.0;
  double dh = 0.0;
  double d2h = 0.0;
  switch (smooth->regularizer) {
    case Regularizer::Tanh: {
      const double t = std::tanh(x / eps);
      const double sech2 = 1.0 - t * t;
      h = 0.5 * (1.0 + t);
      dh = 0.5 * sech2 / eps;
      d2h = -t * sech2 / (eps * eps);
      break;
    }
    case Regularizer::ErrorFunction: {
      const double s = x / eps;
      h = 0.5 * (1.0 + std::erf(s));
      dh = std::exp(-s * s) / (eps * std::sqrt(std::numbers::pi));
      d2h = -2.0 * s / eps * dh;
      break;
    }
    case Regularizer::LinearRamp: {
      auto m = [&](double y) { return mass_at(profile, y); };
      return MassDerivatives{m(x), first_difference(m, x, kFirstDiffStep),
                             second_difference(m, x, kSecondDiffStep)};
    }
  }
  return MassDerivatives{f.value(h), f.slope(h) * dh, f.curvature() * dh * dh + f.slope(h) * d2h};
}

double pct_coordinate(const MassProfile& profile, double x) {
  if (x == 0.0) {
    return 0.0;
  }
  if (profile.is_jump()) {
    const double m = x < 0.0 ? profile.left_mass() : profile.right_mass();
    return x * std::sqrt(m);
  }
  auto root_mass = [&](double t) { return std::sqrt(mass_at(profile, t)); };
  return detail::adaptive_simpson(root_mass, 0.0, x, kPctTolerance);
}

double jump_coupling(const MassProfile& profile) {
  if (!profile.is_jump()) {
    throw Error(Errc::NotAJumpProfile, "U(0) is defined for jump profiles only");
  }
  const auto m = profile.jump_values();
  return (m.m3 - m.m1) / (m.m2 * m.m2);
}

MassProfile regularize(const MassProfile& profile, Regularizer regularizer, double epsilon) {
  if (!profile.is_jump()) {
    throw Error(Errc::NotAJumpProfile, "profile is already regularized");
  }
  return MassProfile::smooth(profile.jump_values(), regularizer, epsilon);
}

}  // namespace pdm
