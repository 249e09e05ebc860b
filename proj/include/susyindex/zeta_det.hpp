#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "susyindex/errors.hpp"
#include "susyindex/rational.hpp"

namespace susyindex::zeta {

// Closed forms of zeta-regularized determinants of the one-dimensional
// fluctuation operators on a circle of circumference beta, and an
// independent truncated-product oracle for each.
//
// Periodic modes have frequencies w_n = 2 pi n / beta, antiperiodic ones
// w_n = pi (2n+1) / beta. Modes n and -n (resp. n and -n-1) are paired so
// every partial product is a product of non-negative reals.

enum class OperatorKind {
  pbc_laplacian,             // -d^2/dt^2, periodic
  pbc_first_order,           // d/dt + w, periodic
  apbc_first_order_shifted,  // d/dt + w, antiperiodic
  pbc_curvature_block,       // [[-d/dt, y], [-y, -d/dt]], periodic
  apbc_curvature_block,      // same block, antiperiodic
};

inline std::string_view to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::pbc_laplacian: return "pbc_laplacian";
    case OperatorKind::pbc_first_order: return "pbc_first_order";
    case OperatorKind::apbc_first_order_shifted: return "apbc_first_order_shifted";
    case OperatorKind::pbc_curvature_block: return "pbc_curvature_block";
    case OperatorKind::apbc_curvature_block: return "apbc_curvature_block";
  }
  return "?";
}

inline OperatorKind parse_operator_kind(std::string_view s) {
  for (auto k : {OperatorKind::pbc_laplacian, OperatorKind::pbc_first_order, OperatorKind::apbc_first_order_shifted,
                 OperatorKind::pbc_curvature_block, OperatorKind::apbc_curvature_block})
    if (to_string(k) == s) return k;
  if (s == "apbc_first_order") return OperatorKind::apbc_first_order_shifted;
  throw Error("unknown operator kind '" + std::string(s) + "'");
}

struct OperatorSpec {
  OperatorKind kind = OperatorKind::pbc_laplacian;
  double beta = 1.0;
  double parameter = 0.0;  // y for curvature blocks, w for first-order operators
  bool prime = true;       // exclude the n = 0 periodic mode

  bool periodic() const {
    return kind == OperatorKind::pbc_laplacian || kind == OperatorKind::pbc_first_order ||
           kind == OperatorKind::pbc_curvature_block;
  }

  double frequency(long long n) const {
    constexpr double pi = std::numbers::pi;
    return periodic() ? 2.0 * pi * static_cast<double>(n) / beta
                      : pi * static_cast<double>(2 * n + 1) / beta;
  }

  /// Determinant of the operator restricted to Fourier mode n.
  std::complex<double> eigenvalue(long long n) const {
    const double w = frequency(n);
    switch (kind) {
      case OperatorKind::pbc_laplacian: return {w * w, 0.0};
      case OperatorKind::pbc_first_order:
      case OperatorKind::apbc_first_order_shifted: return {parameter, w};
      case OperatorKind::pbc_curvature_block:
      case OperatorKind::apbc_curvature_block: return {w * w - parameter * parameter, 0.0};
    }
    return {};
  }
};

struct RegularizedDet {
  OperatorSpec spec;
  double closed_form = 0.0;
  double oracle_value = 0.0;
  long long oracle_modes = 0;
  double tolerance = 0.0;  // C / N, see oracle_tolerance

  double delta() const { return std::abs(closed_form - oracle_value); }
  bool within_tolerance() const { return delta() <= tolerance; }
};

/// a log(beta) + b log(2) + c log(pi) with exact coefficients.
struct LogCombination {
  Rational log_beta;
  Rational log_two;
  Rational log_pi;

  LogCombination& operator+=(const LogCombination& o) {
    log_beta += o.log_beta;
    log_two += o.log_two;
    log_pi += o.log_pi;
    return *this;
  }
  friend LogCombination operator*(const Rational& s, LogCombination v) {
    v.log_beta *= s;
    v.log_two *= s;
    v.log_pi *= s;
    return v;
  }
};

namespace detail {

inline double exact_power(double base, const Rational& exponent) {
  if (exponent.is_integer()) {
    long long k = exponent.numerator().convert_to<long long>();
    double r = 1.0;
    double b = k < 0 ? 1.0 / base : base;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) r *= b;
    return r;
  }
  return std::pow(base, exponent.to_double());
}

/// log(2 pi / beta)
inline LogCombination log_periodic_scale() { return {Rational(-1), Rational(1), Rational(1)}; }

/// Hurwitz zeta data at s = 0 for shift a in {1, 1/2}:
/// zeta_H(0, a) = 1/2 - a, zeta_H'(0, a) = log Gamma(a) - log(2 pi) / 2.
inline Rational hurwitz_at_zero(const Rational& a) { return Rational(1, 2) - a; }
inline LogCombination hurwitz_derivative_at_zero(const Rational& a) {
  LogCombination v{Rational(0), Rational(-1, 2), Rational(-1, 2)};
  if (a == Rational(1, 2)) v.log_pi += Rational(1, 2);  // log Gamma(1/2) = log(pi)/2
  else if (a != Rational(1)) throw Error("hurwitz data only tabulated for a = 1 and a = 1/2");
  return v;
}

/// Multiplicity m and Hurwitz shift a such that the reference spectrum (parameter 0,
/// zero mode removed) is prod_{k>=0} ((2 pi / beta) (k + a))^m.
struct ReferenceSpectrum {
  unsigned multiplicity;
  Rational shift;
};

inline ReferenceSpectrum reference_spectrum(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::pbc_laplacian: return {4, Rational(1)};
    case OperatorKind::pbc_first_order: return {2, Rational(1)};
    case OperatorKind::apbc_first_order_shifted: return {2, Rational(1, 2)};
    case OperatorKind::pbc_curvature_block: return {4, Rational(1)};
    case OperatorKind::apbc_curvature_block: return {4, Rational(1, 2)};
  }
  return {0, Rational(0)};
}

inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

inline bool near_integer(double t, long long& nearest) {
  nearest = std::llround(t);
  return std::abs(t - static_cast<double>(nearest)) <= 1e-12 * std::max(1.0, std::abs(t));
}

}  // namespace detail

/// -zeta'(0) of the reference spectrum, as an exact combination of logs:
/// m (zeta_H(0,a) log(2 pi / beta) - zeta_H'(0,a)).
inline LogCombination reference_log_det(OperatorKind kind) {
  const auto ref = detail::reference_spectrum(kind);
  LogCombination v = detail::hurwitz_at_zero(ref.shift) * detail::log_periodic_scale();
  v += Rational(-1) * detail::hurwitz_derivative_at_zero(ref.shift);
  return Rational(ref.multiplicity) * v;
}

/// exp(reference_log_det(kind)) at beta: beta^2, beta, 2 or 4.
inline double reference_det(OperatorKind kind, double beta) {
  const auto v = reference_log_det(kind);
  return detail::exact_power(beta, v.log_beta) * detail::exact_power(2.0, v.log_two) *
         detail::exact_power(std::numbers::pi, v.log_pi);
}

inline void require_positive_beta(double beta) {
  if (!(beta > 0.0)) throw Error("beta must be positive");
}

/// Det'_PBC(-d^2/dt^2) = beta^2 through the zeta function 2 (beta/2pi)^{2s} zeta_R(2s).
inline double det_pbc_laplacian(double beta) {
  require_positive_beta(beta);
  return reference_det(OperatorKind::pbc_laplacian, beta);
}

/// Primed periodic determinant of [[-d/dt, y], [-y, -d/dt]]: (sin(beta y / 2) / (y / 2))^2.
inline double det_pbc_curvature_block(double y, double beta) {
  require_positive_beta(beta);
  long long n = 0;
  if (detail::near_integer(beta * y / (2.0 * std::numbers::pi), n) && n != 0)
    throw SingularOperator("periodic curvature block has a zero eigenvalue", n);
  if (y == 0.0) return beta * beta;
  const double r = std::sin(beta * y / 2.0) / (y / 2.0);
  return r * r;
}

/// Antiperiodic determinant of the curvature block: (2 cos(beta y / 2))^2.
inline double det_apbc_curvature_block(double y, double beta) {
  require_positive_beta(beta);
  long long n = 0;
  if (detail::near_integer(beta * y / std::numbers::pi, n) && (n % 2 != 0)) {
    // w_k = pi (2k+1) / beta = y
    throw SingularOperator("antiperiodic curvature block has a zero eigenvalue", (n - 1) / 2);
  }
  const double r = 2.0 * std::cos(beta * y / 2.0);
  return r * r;
}

/// The same antiperiodic determinant as the ratio I(2 beta) / I(beta) of periodic ones.
inline double apbc_block_from_pbc_ratio(double y, double beta) {
  return det_pbc_curvature_block(y, 2.0 * beta) / det_pbc_curvature_block(y, beta);
}

/// Tr e^{-beta H} over the two-level system with energies -w/2 and +w/2.
inline double fermion_partition(double omega, double beta) {
  require_positive_beta(beta);
  return std::exp(beta * omega / 2.0) + std::exp(-beta * omega / 2.0);
}

/// Det_APBC(d/dt + w) = 2 cosh(beta w / 2); equals 2 at w = 0.
inline double det_apbc_first_order(double omega, double beta) {
  require_positive_beta(beta);
  return reference_det(OperatorKind::apbc_first_order_shifted, beta) * std::cosh(beta * omega / 2.0);
}

/// Closed form for any OperatorSpec.
inline double closed_form(const OperatorSpec& spec) {
  require_positive_beta(spec.beta);
  const double p = spec.parameter;
  const double beta = spec.beta;
  switch (spec.kind) {
    case OperatorKind::pbc_laplacian:
      if (!spec.prime) throw SingularOperator("unprimed periodic laplacian", 0);
      return det_pbc_laplacian(beta);
    case OperatorKind::pbc_first_order: {
      if (!spec.prime) {
        if (p == 0.0) throw SingularOperator("unprimed periodic d/dt", 0);
        return 2.0 * std::sinh(beta * p / 2.0);
      }
      const double x = beta * p / 2.0;
      return reference_det(spec.kind, beta) * (x == 0.0 ? 1.0 : std::sinh(x) / x);
    }
    case OperatorKind::apbc_first_order_shifted:
      return det_apbc_first_order(p, beta);
    case OperatorKind::pbc_curvature_block: {
      const double primed = det_pbc_curvature_block(p, beta);
      if (spec.prime) return primed;
      if (p == 0.0) throw SingularOperator("unprimed periodic curvature block", 0);
      return primed * p * p;
    }
    case OperatorKind::apbc_curvature_block:
      return det_apbc_curvature_block(p, beta);
  }
  return 0.0;
}

/// C in the oracle bound |closed - oracle(N)| <= C / N:
/// 2 m max(1, |closed|) (1/12 + (beta p / 2 pi)^2), m the reference multiplicity.
inline double oracle_constant(const OperatorSpec& spec, double closed) {
  const double m = detail::reference_spectrum(spec.kind).multiplicity;
  const double q = spec.beta * spec.parameter / (2.0 * std::numbers::pi);
  return 2.0 * m * std::max(1.0, std::abs(closed)) * (1.0 / 12.0 + q * q);
}

inline double oracle_tolerance(const OperatorSpec& spec, double closed, long long modes) {
  return oracle_constant(spec, closed) / static_cast<double>(modes);
}

/// Truncated-product oracle over N paired modes:
///   reference: finite part of sum_{k<N} log((2 pi / beta)(k + a)) after removing the
///   divergent (N + a - 1/2) log N - N, with the regularized mode count zeta_H(0, a) = 1/2 - a;
///   parameter: prod of eigenvalue(parameter) / eigenvalue(0) over the same paired modes.
inline double oracle_product(const OperatorSpec& spec, long long modes) {
  require_positive_beta(spec.beta);
  if (modes < 1) throw Error("oracle needs at least one mode");
  const auto ref = detail::reference_spectrum(spec.kind);
  const double a = spec.periodic() ? 1.0 : 0.5;
  const double n = static_cast<double>(modes);

  std::vector<double> logs(static_cast<std::size_t>(modes));
  for (long long k = 0; k < modes; ++k) logs[static_cast<std::size_t>(k)] = std::log(static_cast<double>(k) + a);
  const double finite_part = detail::pairwise_sum(logs) - ((n + a - 0.5) * std::log(n) - n);
  const double mode_count = 0.5 - a;
  const double log_scale = std::log(2.0 * std::numbers::pi / spec.beta);
  const double log_reference = ref.multiplicity * (finite_part + mode_count * log_scale);

  OperatorSpec base = spec;
  base.parameter = 0.0;
  const long long first = spec.periodic() ? 1 : 0;
  for (long long k = 0; k < modes; ++k) {
    const long long mode = first + k;
    // pair mode with its partner -mode (periodic) or -mode-1 (antiperiodic)
    const long long partner = spec.periodic() ? -mode : -mode - 1;
    const std::complex<double> ratio =
        spec.eigenvalue(mode) * spec.eigenvalue(partner) / (base.eigenvalue(mode) * base.eigenvalue(partner));
    if (ratio.real() == 0.0) throw SingularOperator("zero eigenvalue in oracle product", mode);
    logs[static_cast<std::size_t>(k)] = std::log(std::abs(ratio.real()));
  }
  double log_det = log_reference + detail::pairwise_sum(logs);

  if (spec.periodic() && !spec.prime) {
    const std::complex<double> zero_mode = spec.eigenvalue(0);
    if (std::abs(zero_mode) == 0.0) throw SingularOperator("zero mode in unprimed oracle product", 0);
    double sign = 1.0;
    if (spec.kind == OperatorKind::pbc_first_order && zero_mode.real() < 0.0) sign = -1.0;
    return sign * std::abs(zero_mode) * std::exp(log_det);
  }
  return std::exp(log_det);
}

/// Closed form, oracle value and tolerance in one record.
inline RegularizedDet regularize(const OperatorSpec& spec, long long modes) {
  RegularizedDet r;
  r.spec = spec;
  r.closed_form = closed_form(spec);
  r.oracle_value = oracle_product(spec, modes);
  r.oracle_modes = modes;
  r.tolerance = oracle_tolerance(spec, r.closed_form, modes);
  return r;
}

}  // namespace susyindex::zeta
