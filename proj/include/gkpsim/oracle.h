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

#ifndef GKPSIM_ORACLE_H
#define GKPSIM_ORACLE_H

#include <complex>
#include <vector>

namespace gkpsim {

using Complex = std::complex<double>;

/// Truncation value that asks the evaluator to pick N itself.
inline constexpr int kAutoTruncation = 0;
inline constexpr int kDefaultTruncation = 50;

/// theta(zeta; tau) = sum_{m=-N..N} exp(pi i m^2 tau) exp(2 pi i m zeta).
struct ThetaParams {
    Complex zeta;
    Complex tau;
    int truncation = kDefaultTruncation;
};

struct ThetaValue {
    Complex value;
    /// Bound on the magnitude of the omitted tail |m| > N (infinite when the tail
    /// terms are not yet decreasing). Never smaller than the first omitted term.
    double error_bound;
    int truncation;
};

/// Throws Error(DivergentSeries) when Im(tau) <= 0.
ThetaValue theta_eval(const ThetaParams &p);

/// Smallest N whose omitted tail is below exp(-40) of the largest term, for |Im zeta| <= max_imag_zeta.
int theta_truncation(Complex tau, double max_imag_zeta);

/// Rotated, squeezed ideal GKP wavefunction: the truncated sum of harmonic-oscillator
/// propagators sum_{m=-N..N} K(x/s, 2 m sqrt(pi); theta), with
/// K(x, y; theta) = exp(i((x^2 + y^2) cos(theta) - 2 x y) / (2 sin(theta))) / sqrt(2 pi i sin(theta)).
/// Throws Error(IdentityPath) when sin(theta) == 0.
Complex ideal_rotated_wavefunction(double x, double theta, double s, int truncation = kDefaultTruncation);

/// Rotated, squeezed finitely-squeezed GKP state psi(x) = exp(gamma x^2) theta(eta x; tau).
struct RealisticGkpParams {
    double delta_gkp;
    double s;
    double theta;
    Complex eta;
    Complex tau;
    Complex gamma;
};

/// eta = -csc / (sqrt(pi) (s + D^4 s - i D^2 s cot)),
/// tau = 2 i (D^2 - i cot) / (1 + D^4 - i D^2 cot),
/// gamma = i (i D^2 + (1 + D^4) cot) / (2 s^2 (1 + D^4 - i D^2 cot)), with D = delta_gkp.
/// Throws Error(Domain) for delta_gkp <= 0 or s == 0, Error(IdentityPath) for sin(theta) == 0.
RealisticGkpParams realistic_params(double delta_gkp, double s, double theta);

/// truncation == kAutoTruncation picks N for the given x.
Complex realistic_wavefunction(double x, const RealisticGkpParams &p, int truncation = kDefaultTruncation);

/// Unrotated finitely-squeezed state, exp(-(x/s)^2 D^2 / 2) theta(x / (2 sqrt(pi) s); i D^2 / 2):
/// Gaussian peaks of width D s at 2 m sqrt(pi) s under an envelope of width s / D.
Complex realistic_identity_wavefunction(double x, double delta_gkp, double s,
                                        int truncation = kDefaultTruncation);

struct GridPdf {
    std::vector<double> xs;
    std::vector<double> values;
};

/// Evenly spaced points lo, lo + step, ... up to hi (inclusive within half a step).
std::vector<double> make_grid(double lo, double hi, double step);

/// Strict local maxima above min_prominence * max(values), refined by fitting a
/// parabola through each maximum and its two neighbours. Throws Error(EmptyGrid).
std::vector<double> numeric_peaks(const GridPdf &grid, double min_prominence = 0.1);

}  // namespace gkpsim

#endif
