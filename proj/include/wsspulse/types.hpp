#pragma once
// Shared domain types for the wsspulse library: pulses on C^L, time-frequency
// shift indices, separable lattices on Z_L x Z_L, and the error taxonomy used
// across modules.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wsspulse {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// ----------------------------------------------------------------- errors ---
// ValidationError: malformed inputs/configuration (CLI exit code 2).
// NumericalError:  solver failures, singular operators (CLI exit code 3).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct NumericalError : Error {
  using Error::Error;
};

// ------------------------------------------------------------- arithmetic ---
// Reduce x into [0, L).
inline int imod(long long x, int L) {
  int r = static_cast<int>(x % L);
  return r < 0 ? r + L : r;
}

// Signed representative of x mod L in [-L/2, L/2).
inline int signed_mod(long long x, int L) {
  int r = imod(x, L);
  return r >= (L + 1) / 2 ? r - L : r;
}

// ----------------------------------------------------------------- TFShift --
// A time-frequency shift index mu = (time, freq) in samples and bins. Values
// act modulo L; they are stored as given (scattering supports keep signed
// Doppler) and reduced when a shift is applied.
struct TFShift {
  int time = 0;
  int freq = 0;

  friend bool operator==(const TFShift&, const TFShift&) = default;
  TFShift reduced(int L) const { return {imod(time, L), imod(freq, L)}; }
  TFShift negated() const { return {-time, -freq}; }
};

// ------------------------------------------------------------------ Pulse ---
// Unit-norm complex vector of length L with a free-form label. Norms are
// validated at construction within 1e-9 and re-normalized exactly.
struct Pulse {
  CVec samples;
  std::string label;

  Pulse() = default;
  Pulse(CVec s, std::string lab) : samples(std::move(s)), label(std::move(lab)) {
    if (samples.size() < 2) throw ValidationError("pulse length must be >= 2");
    const double n = samples.norm();
    if (std::abs(n - 1.0) > 1e-9)
      throw ValidationError("pulse '" + label + "' is not unit norm (|x| = " +
                            std::to_string(n) + ")");
    samples /= n;
  }
  int L() const { return static_cast<int>(samples.size()); }
};

// ---------------------------------------------------------------- Lattice ---
// Separable lattice a*Z_{L/a} x b*Z_{L/b} inside Z_L^2, generated by
// diag(a, b). Both steps must divide L so the points form a subgroup.
struct Lattice {
  int a = 1;
  int b = 1;
  int L = 2;

  Lattice() = default;
  Lattice(int a_, int b_, int L_) : a(a_), b(b_), L(L_) {
    if (L < 2) throw ValidationError("lattice: L must be >= 2");
    if (a < 1 || b < 1) throw ValidationError("lattice: steps must be positive");
    if (L % a != 0 || L % b != 0)
      throw ValidationError("lattice: steps (" + std::to_string(a) + "," +
                            std::to_string(b) + ") must divide L=" +
                            std::to_string(L));
  }
  int points_time() const { return L / a; }
  int points_freq() const { return L / b; }
  long long points() const { return 1LL * points_time() * points_freq(); }
  double epsilon() const { return static_cast<double>(L) / (1.0 * a * b); }

  friend bool operator==(const Lattice&, const Lattice&) = default;
};

// ------------------------------------------------------------------ enums ---
enum class Scheme { complex_qam, real_oqam };

inline std::string to_string(Scheme s) {
  return s == Scheme::complex_qam ? "complex" : "real";
}
inline Scheme scheme_from_string(const std::string& s) {
  if (s == "complex" || s == "complex_qam") return Scheme::complex_qam;
  if (s == "real" || s == "real_oqam" || s == "oqam") return Scheme::real_oqam;
  throw ValidationError("unknown scheme '" + s + "' (complex|real)");
}

enum class Method {
  sinr_opt,
  gain_opt,
  tightened_gain_opt,
  gain_lower_bound,
  matched_gaussian,
  iota,
  rectangular,
};

inline std::string to_string(Method m) {
  switch (m) {
    case Method::sinr_opt: return "sinr_opt";
    case Method::gain_opt: return "gain_opt";
    case Method::tightened_gain_opt: return "tightened_gain_opt";
    case Method::gain_lower_bound: return "gain_lower_bound";
    case Method::matched_gaussian: return "matched_gaussian";
    case Method::iota: return "iota";
    case Method::rectangular: return "rectangular";
  }
  throw Error("unreachable");
}
inline Method method_from_string(const std::string& s) {
  for (Method m : {Method::sinr_opt, Method::gain_opt, Method::tightened_gain_opt,
                   Method::gain_lower_bound, Method::matched_gaussian, Method::iota,
                   Method::rectangular})
    if (to_string(m) == s) return m;
  throw ValidationError("unknown method '" + s + "'");
}

// Rotate the global phase so the largest-magnitude entry is real positive;
// shared convention for all pulse outputs so files are reproducible.
inline CVec phase_fixed(const CVec& x) {
  Eigen::Index idx = 0;
  x.cwiseAbs().maxCoeff(&idx);
  const cplx v = x[idx];
  if (std::abs(v) < 1e-300) return x;
  return x * (std::conj(v) / std::abs(v));
}

inline void require_same_length(const CVec& x, const CVec& y, const char* what) {
  if (x.size() != y.size())
    throw ValidationError(std::string(what) + ": dimension mismatch (" +
                          std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()) + ")");
}

}  // namespace wsspulse
