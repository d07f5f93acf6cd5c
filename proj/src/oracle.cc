// Copyright 2026 The gkpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gkpsim/oracle.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "gkpsim/error.h"

namespace gkpsim {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);
constexpr double kTailLog = 40.0;
constexpr int kMaxTruncation = 10000000;

/// log |exp(pi i m^2 tau + 2 pi i m zeta)|.
double log_term_magnitude(double m, Complex tau, Complex zeta) {
    return -kPi * m * m * tau.imag() - 2.0 * kPi * m * zeta.imag();
}

Complex term(double m, Complex tau, Complex zeta) {
    double phase = std::fmod(m * m * tau.real(), 2.0) + std::fmod(2.0 * m * zeta.real(), 2.0);
    return std::polar(std::exp(log_term_magnitude(m, tau, zeta)), kPi * phase);
}

/// Log of a geometric bound on sum_{m > N} |t(sign * m)|, or +inf.
double log_tail_bound(int n, double sign, Complex tau, double imag_zeta) {
    double m = n + 1.0;
    double log_first = -kPi * m * m * tau.imag() - 2.0 * kPi * sign * m * imag_zeta;
    double log_ratio = -kPi * (2.0 * m + 1.0) * tau.imag() - 2.0 * kPi * sign * imag_zeta;
    if (log_ratio >= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return log_first - std::log1p(-std::exp(log_ratio));
}

}  // namespace

int theta_truncation(Complex tau, double max_imag_zeta) {
    if (!(tau.imag() > 0.0)) {
        throw Error(ErrorCode::DivergentSeries, "theta series needs Im(tau) > 0");
    }
    double z = std::fabs(max_imag_zeta);
    double log_peak = std::max(0.0, kPi * z * z / tau.imag());
    int n = static_cast<int>(z / tau.imag());
    for (; n < kMaxTruncation; n++) {
        double tail = std::max(log_tail_bound(n, 1.0, tau, z), log_tail_bound(n, -1.0, tau, z));
        if (n >= 1 && tail <= log_peak - kTailLog) {
            return n;
        }
    }
    throw Error(ErrorCode::DivergentSeries, "theta series needs more than 1e7 terms");
}

ThetaValue theta_eval(const ThetaParams &p) {
    if (!(p.tau.imag() > 0.0)) {
        throw Error(ErrorCode::DivergentSeries, "theta series needs Im(tau) > 0");
    }
    int n = p.truncation;
    if (n == kAutoTruncation) {
        n = theta_truncation(p.tau, p.zeta.imag());
    } else if (n < 0) {
        throw Error(ErrorCode::Domain, "theta truncation must be positive");
    }
    Complex sum = term(0.0, p.tau, p.zeta);
    for (int m = 1; m <= n; m++) {
        sum += term(m, p.tau, p.zeta) + term(-m, p.tau, p.zeta);
    }
    double upper = log_tail_bound(n, 1.0, p.tau, p.zeta.imag());
    double lower = log_tail_bound(n, -1.0, p.tau, p.zeta.imag());
    return ThetaValue{sum, std::exp(upper) + std::exp(lower), n};
}

Complex ideal_rotated_wavefunction(double x, double theta, double s, int truncation) {
    double sin_t = std::sin(theta);
    double cos_t = std::cos(theta);
    if (std::fabs(sin_t) <= 1e-12) {
        throw Error(ErrorCode::IdentityPath, "rotation by a multiple of pi is the identity");
    }
    if (s == 0.0) {
        throw Error(ErrorCode::Domain, "squeeze must be nonzero");
    }
    if (truncation < 1) {
        throw Error(ErrorCode::Domain, "truncation must be positive");
    }
    double xs = x / s;
    Complex sum = 0.0;
    for (int m = -truncation; m <= truncation; m++) {
        double y = 2.0 * m * kSqrtPi;
        double phase = ((xs * xs + y * y) * cos_t - 2.0 * xs * y) / (2.0 * sin_t);
        sum += std::polar(1.0, phase);
    }
    return sum / std::sqrt(Complex(0.0, 2.0 * kPi * sin_t));
}

RealisticGkpParams realistic_params(double delta_gkp, double s, double theta) {
    if (!(delta_gkp > 0.0)) {
        throw Error(ErrorCode::Domain, "delta_gkp must be positive");
    }
    if (s == 0.0) {
        throw Error(ErrorCode::Domain, "squeeze must be nonzero");
    }
    double sin_t = std::sin(theta);
    if (std::fabs(sin_t) <= 1e-12) {
        throw Error(ErrorCode::IdentityPath, "rotation by a multiple of pi is the identity");
    }
    const Complex i(0.0, 1.0);
    double cot = std::cos(theta) / sin_t;
    double d2 = delta_gkp * delta_gkp;
    double d4 = d2 * d2;
    Complex denom = 1.0 + d4 - i * d2 * cot;
    RealisticGkpParams p{delta_gkp, s, theta, 0.0, 0.0, 0.0};
    p.eta = -(1.0 / sin_t) / (kSqrtPi * (s + d4 * s - i * d2 * s * cot));
    p.tau = 2.0 * i * (d2 - i * cot) / denom;
    p.gamma = i * (i * d2 + (1.0 + d4) * cot) / (2.0 * s * s * denom);
    return p;
}

Complex realistic_wavefunction(double x, const RealisticGkpParams &p, int truncation) {
    ThetaValue th = theta_eval(ThetaParams{x * p.eta, p.tau, truncation});
    return std::exp(x * x * p.gamma) * th.value;
}

Complex realistic_identity_wavefunction(double x, double delta_gkp, double s, int truncation) {
    if (!(delta_gkp > 0.0)) {
        throw Error(ErrorCode::Domain, "delta_gkp must be positive");
    }
    if (s == 0.0) {
        throw Error(ErrorCode::Domain, "squeeze must be nonzero");
    }
    double xs = x / s;
    double d2 = delta_gkp * delta_gkp;
    ThetaValue th = theta_eval(ThetaParams{xs / (2.0 * kSqrtPi), Complex(0.0, d2 / 2.0), truncation});
    return std::exp(-xs * xs * d2 / 2.0) * th.value;
}

std::vector<double> make_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw Error(ErrorCode::EmptyGrid, "grid needs lo <= hi and step > 0");
    }
    size_t count = static_cast<size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
    std::vector<double> xs(count);
    for (size_t k = 0; k < count; k++) {
        xs[k] = lo + static_cast<double>(k) * step;
    }
    return xs;
}

std::vector<double> numeric_peaks(const GridPdf &grid, double min_prominence) {
    if (grid.xs.empty() || grid.xs.size() != grid.values.size()) {
        throw Error(ErrorCode::EmptyGrid, "grid is empty or malformed");
    }
    double top = 0.0;
    for (double v : grid.values) {
        top = std::max(top, v);
    }
    std::vector<double> peaks;
    double floor_value = min_prominence * top;
    for (size_t k = 1; k + 1 < grid.values.size(); k++) {
        double y0 = grid.values[k - 1];
        double y1 = grid.values[k];
        double y2 = grid.values[k + 1];
        if (!(y1 > y0 && y1 >= y2 && y1 > floor_value)) {
            continue;
        }
        double curvature = y0 - 2.0 * y1 + y2;
        double shift = curvature == 0.0 ? 0.0 : 0.5 * (y0 - y2) / curvature;
        double step = y0 - y2 >= 0 ? grid.xs[k] - grid.xs[k - 1] : grid.xs[k + 1] - grid.xs[k];
        peaks.push_back(grid.xs[k] + shift * step);
    }
    return peaks;
}

}  // namespace gkpsim
