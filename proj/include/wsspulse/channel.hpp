#pragma once
// Discrete WSSUS scattering functions, their moments, Monte-Carlo channel
// realizations and exact channel-matrix elements.

#include <cstdint>
#include <vector>

#include "wsspulse/tfcore.hpp"
#include "wsspulse/types.hpp"

namespace wsspulse {

// ------------------------------------------------------ ScatteringFunction --
// Nonnegative weights C(mu) on a causal delay / signed-Doppler support box,
// l1-normalized. Doppler indices are stored signed in [-B_D, B_D] and mapped
// mod L only when shifts are applied, so moments stay signed.
struct ScatteringAtom {
  int tau = 0;       // delay, samples, in [0, tau_d]
  int nu = 0;        // Doppler, bins, signed in [-B_D, B_D]
  double weight = 0; // nonnegative, sums to 1 over the support
};

struct ScatteringFunction {
  int L = 2;
  int tau_d = 0;  // max delay (samples)
  int B_D = 0;    // max one-sided Doppler (bins)
  std::vector<ScatteringAtom> atoms;  // fixed order = deterministic reductions

  ScatteringFunction() = default;
  // Validates: weights >= 0 and summing to 1 within 1e-9 (then renormalized
  // exactly), delays in [0, tau_d], |Doppler| <= B_D, support fits the grid.
  ScatteringFunction(int L, int tau_d, int B_D, std::vector<ScatteringAtom> atoms);

  std::size_t size() const { return atoms.size(); }
};

// Uniform weights 1/((tau_d+1)(2 B_D+1)) on the causal box
// [0, tau_d] x [-B_D, B_D]; atom order is tau-major, nu ascending.
ScatteringFunction flat_scattering(int L, int tau_d, int B_D);

// Raw continuum-scaled second moments (about the origin, not the centroid):
//   C_t = sum C(mu) tau^2          [samples^2]
//   C_f = sum C(mu) (nu/L)^2       [(cycles/sample)^2]
struct ScatteringMoments {
  double C_t = 0.0;
  double C_f = 0.0;
};
ScatteringMoments scattering_moments(const ScatteringFunction& C);

// Weight centroid (tau_bar in samples, nu_bar in bins); used by the
// timing-offset placement of baseline pulse families.
struct ScatteringCentroid {
  double tau = 0.0;
  double nu = 0.0;
};
ScatteringCentroid scattering_centroid(const ScatteringFunction& C);

// ---------------------------------------------------- ChannelRealization ----
// One draw of the spreading function: an independent circular-symmetric
// complex Gaussian amplitude per support atom with variance C(mu).
struct ChannelRealization {
  std::vector<TFShift> support;     // same order as the generating atoms
  std::vector<cplx> amplitude;
  uint64_t seed = 0;
};

// Deterministic for a given seed (std::mt19937_64; atoms in stored order).
ChannelRealization sample_realization(const ScatteringFunction& C, uint64_t seed);

// SplitMix64-style mixing for per-cell / per-draw seed derivation.
uint64_t mix_seed(uint64_t base, uint64_t index);

// Dense L x L matrix of the realization, sum_mu amp(mu) S_mu. Oracle /
// small-scale helper.
CMat realization_matrix(const ChannelRealization& H, int L);

// ------------------------------------------------------- matrix elements ----
// H_{m,n} = <S_{Lat m} g, H S_{Lat n} gamma> with Lat m = (m1*a, m2*b);
// real scheme: Re{ i^{(n1+n2)-(m1+m2)} H_{m,n} }.
struct LatticeIndex {
  int m1 = 0;  // time index (multiplies a)
  int m2 = 0;  // frequency index (multiplies b)
};

cplx channel_matrix_element(const ChannelRealization& H, const CVec& g,
                            const CVec& gamma, const Lattice& lat,
                            const LatticeIndex& m, const LatticeIndex& n);

double channel_matrix_element_real(const ChannelRealization& H, const CVec& g,
                                   const CVec& gamma, const Lattice& lat,
                                   const LatticeIndex& m, const LatticeIndex& n);

}  // namespace wsspulse
