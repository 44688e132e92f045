// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finite-SNR rates in floating point. This is the numerical cross-check for
// the exact GDoF path and shares no code with it beyond the data types.

#ifndef TIMTIN_ORACLE_HPP_
#define TIMTIN_ORACLE_HPP_

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "timtin/error.hpp"
#include "timtin/model.hpp"
#include "timtin/rational.hpp"

namespace timtin {

inline constexpr double kMaxOracleSnr = 1e12;

using OracleScalar = long double;
using OracleComplex = std::complex<OracleScalar>;
using OracleMatrix = Eigen::Matrix<OracleComplex, Eigen::Dynamic, Eigen::Dynamic>;
using OracleVector = Eigen::Matrix<OracleComplex, Eigen::Dynamic, 1>;

/// Phases theta_ki, uniform on [0, 2 pi), drawn row by row from `seed`.
inline std::vector<OracleScalar> draw_phases(int users, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
  std::vector<OracleScalar> out(static_cast<std::size_t>(users * users));
  for (auto& theta : out) theta = static_cast<OracleScalar>(uniform(gen));
  return out;
}

namespace detail {

inline void check_snr(double snr) {
  if (!(snr > 1.0) || snr > kMaxOracleSnr) {
    throw Error(ErrorCode::kInvalidArgument, "P must lie in (1, 1e12]");
  }
}

/// Natural-log determinant of a Hermitian positive definite matrix.
inline OracleScalar log_det_hpd(const OracleMatrix& q) {
  Eigen::LLT<OracleMatrix> llt(q);
  if (llt.info() == Eigen::Success) {
    OracleScalar sum = 0;
    const auto& l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < q.rows(); ++i) sum += std::log(std::abs(l(i, i).real()));
    return 2 * sum;
  }
  Eigen::LDLT<OracleMatrix> ldlt(q);
  if (ldlt.info() != Eigen::Success) throw Error(ErrorCode::kNumericalFailure, "covariance factorization failed");
  OracleScalar sum = 0;
  const OracleScalar tol = 1e-12L * q.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    const OracleScalar d = ldlt.vectorD()(i).real();
    if (d <= tol) throw Error(ErrorCode::kNumericalFailure, "covariance is not positive definite");
    sum += std::log(d);
  }
  return sum;
}

/// Received vector of `stream` at `receiver`: sqrt(P^(a + r)) e^{j theta} v/|v|.
inline OracleVector received_vector(const Stream& stream, const ChannelMatrix& channel, int receiver, double snr,
                                    const std::vector<OracleScalar>& phases) {
  const int users = channel.users();
  const OracleScalar exponent =
      static_cast<OracleScalar>(to_double(channel.alpha(receiver, stream.user) + stream.power_exp));
  const OracleScalar amplitude = std::pow(static_cast<OracleScalar>(snr), exponent / 2);
  const OracleScalar theta = phases[static_cast<std::size_t>(receiver * users + stream.user)];
  const OracleComplex gain = std::polar(amplitude, theta);
  OracleVector v(static_cast<Eigen::Index>(stream.vector.size()));
  for (std::size_t c = 0; c < stream.vector.size(); ++c) {
    v(static_cast<Eigen::Index>(c)) = OracleComplex(static_cast<OracleScalar>(to_double(stream.vector[c])), 0);
  }
  const OracleScalar norm = v.norm();
  if (norm == 0) throw Error(ErrorCode::kEmptyVector, "beamforming vector is zero");
  return v * (gain / norm);
}

/// Natural-log determinants of I + (interference) + (user's streams l..b),
/// for l = 0..b. Entry b is the interference-plus-noise term.
inline std::vector<OracleScalar> nested_log_dets(const Scheme& scheme, const ChannelMatrix& channel, int receiver,
                                                 double snr, const std::vector<OracleScalar>& phases) {
  const Eigen::Index n = scheme.n;
  OracleMatrix q = OracleMatrix::Identity(n, n);
  std::vector<OracleVector> desired;
  for (const Stream& s : scheme.streams) {
    OracleVector g = received_vector(s, channel, receiver, snr, phases);
    if (s.user == receiver) {
      desired.push_back(std::move(g));
    } else {
      q += g * g.adjoint();
    }
  }
  std::vector<OracleScalar> out(desired.size() + 1);
  out[desired.size()] = log_det_hpd(q);
  for (std::size_t l = desired.size(); l-- > 0;) {
    q += desired[l] * desired[l].adjoint();
    out[l] = log_det_hpd(q);
  }
  return out;
}

}  // namespace detail

/// Rates in bits per channel use for every user at SNR `snr`:
/// R_k = (log det(Q^D + Q^{N+I}) - log det(Q^{N+I})) / n.
inline std::vector<double> finite_p_rate(const Scheme& scheme, const ChannelMatrix& channel, double snr,
                                         std::uint64_t seed = 0) {
  detail::check_snr(snr);
  const std::vector<OracleScalar> phases = draw_phases(channel.users(), seed);
  std::vector<double> out;
  for (int k = 0; k < channel.users(); ++k) {
    const std::vector<OracleScalar> dets = detail::nested_log_dets(scheme, channel, k, snr, phases);
    out.push_back(static_cast<double>((dets.front() - dets.back()) / std::log(2.0L) / scheme.n));
  }
  return out;
}

/// Conditional rates of `user`'s streams under decode-and-subtract, in bits
/// per channel use. They sum to finite_p_rate for that user.
inline std::vector<double> finite_p_stream_rates(const Scheme& scheme, const ChannelMatrix& channel, int user,
                                                 double snr, std::uint64_t seed = 0) {
  detail::check_snr(snr);
  const std::vector<OracleScalar> phases = draw_phases(channel.users(), seed);
  const std::vector<OracleScalar> dets = detail::nested_log_dets(scheme, channel, user, snr, phases);
  std::vector<double> out;
  for (std::size_t l = 0; l + 1 < dets.size(); ++l) {
    out.push_back(static_cast<double>((dets[l] - dets[l + 1]) / std::log(2.0L) / scheme.n));
  }
  return out;
}

/// Finite-difference estimate of d R_k / d log2 P between two SNRs, with the
/// same phase draw at both points.
inline std::vector<double> slope_estimate(const Scheme& scheme, const ChannelMatrix& channel, double snr_low,
                                          double snr_high, std::uint64_t seed = 0) {
  if (!(snr_low < snr_high)) throw Error(ErrorCode::kInvalidArgument, "need P_low < P_high");
  const std::vector<double> low = finite_p_rate(scheme, channel, snr_low, seed);
  const std::vector<double> high = finite_p_rate(scheme, channel, snr_high, seed);
  const double span = std::log2(snr_high) - std::log2(snr_low);
  std::vector<double> out;
  for (std::size_t k = 0; k < low.size(); ++k) out.push_back((high[k] - low[k]) / span);
  return out;
}

}  // namespace timtin

#endif  // TIMTIN_ORACLE_HPP_
