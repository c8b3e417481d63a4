#pragma once
// Discrete time-frequency shift operators on C^L, pulse constructors,
// ambiguity functions and second-moment machinery.
//
// Conventions (used consistently across the library):
//   (S_mu f)[m] = exp(i*2*pi*mu.freq*m/L) * f[(m - mu.time) mod L]
//   <x, y>      = sum_m conj(x[m]) y[m]          (conjugate-linear first slot)
//   A_{g,gamma}(mu) = <g, S_mu gamma>
// Time axis centered at c = floor(L/2) for moments and pulse placement;
// frequency moments use the centered unitary DFT with signed bins in
// [-L/2, L/2). Units: time in samples, frequency in bins; continuum-scaled
// frequency (cycles/sample) is bin/L.

#include "wsspulse/types.hpp"

namespace wsspulse {

// Center sample used for moments and pulse placement.
inline int center(int L) { return L / 2; }

// ---------------------------------------------------------------- shifts ----
// Apply S_mu to f. Norm preserving; pure.
CVec tf_shift(const TFShift& mu, const CVec& f);

// Dense L x L matrix of S_mu: (S_mu)_{m,n} = delta_{m, n + mu.time mod L}
// * exp(i*2*pi*mu.freq*m/L). Used by oracles, the averaged shift operator and
// small-scale cross-checks; O(L^2) storage.
CMat shift_matrix(const TFShift& mu, int L);

// ------------------------------------------------------------- ambiguity ----
// <g, S_mu gamma>.
cplx cross_ambiguity(const CVec& g, const CVec& gamma, const TFShift& mu);

// Full grid: surface(mu1, mu2) = cross_ambiguity(g, gamma, {mu1, mu2}).
// Computed row-wise with an FFT (O(L^2 log L)); matches the direct definition
// to 1e-10 (contract) and in practice to machine precision.
CMat ambiguity_surface(const CVec& g, const CVec& gamma);

// -------------------------------------------------------------- builders ----
// Periodized, centered, unit-norm discrete Gaussian. spread_ratio is the
// target sigma_t/sigma_f in samples-per-bin units, so spread_ratio = 1 gives
// the DFT self-dual pulse exp(-pi (m-c)^2 / L) (periodized). The wrap-around
// summation is truncated when terms fall below 1e-18 of the peak.
Pulse gaussian_pulse(int L, double spread_ratio);

// Single standard basis vector at the center sample.
Pulse delta_pulse(int L);

// Constant vector 1/sqrt(L).
Pulse flat_pulse(int L);

// Indicator of `width` samples centered at c, amplitude 1/sqrt(width).
Pulse rect_pulse(int L, int width);

// Cyclic-prefix OFDM pair: gamma = (Tu+Tcp)^{-1/2} on the prefix+useful
// window {-Tcp..Tu-1 mod L}, g = Tu^{-1/2} on the useful window {0..Tu-1}.
struct PulsePair {
  Pulse g;
  Pulse gamma;
};
PulsePair cp_ofdm_pulses(int L, int Tu, int Tcp);

// ----------------------------------------------------------------- moments --
// Centered unitary DFT: X[k] = L^{-1/2} sum_m x[m] exp(-i*2*pi*(k-c)(m-c)/L).
// Maps real-even-about-c vectors to real-even-about-c vectors.
CVec centered_dft(const CVec& x);

struct SecondMoments {
  double sigma_t2 = 0.0;  // samples^2
  double sigma_f2 = 0.0;  // bins^2
  bool warning = false;   // set when inputs are complex or not even about c
};

// sigma_t^2 = <t^2 g, gamma> / <g, gamma> with t = m - c, and the analogous
// frequency moment over centered bins. Throws NumericalError when <g, gamma>
// vanishes; complex or asymmetric inputs set the warning flag.
SecondMoments second_moments(const CVec& g, const CVec& gamma);

// Second-order expansion of the squared cross ambiguity:
//   <g,gamma>^2 * [1 - 4 pi^2 (nu2^2 sigma_t^2 + nu1^2 sigma_f^2)]
// with nu1 = signed time shift in samples, nu2 = signed freq shift in
// cycles/sample (= bins/L), and sigma_f converted to cycles/sample.
double o2_ambiguity_approx(const CVec& g, const CVec& gamma, const TFShift& mu);

}  // namespace wsspulse
