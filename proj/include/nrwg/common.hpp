#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace nrwg {

using Complex = std::complex<double>;

inline constexpr Complex I{0.0, 1.0};

// Physical constants (CODATA). Internal canonical units are SI:
// lengths in m, wavenumbers in 1/m, energies in eV where noted,
// rates and detunings in 1/s.
inline constexpr double hbar_ev_s = 6.582119569e-16;   // eV s
inline constexpr double hbar_c_ev_m = 1.973269804e-7;  // eV m
inline constexpr double classical_electron_radius_m = 2.8179403262e-15;

// vacuum wavenumber of a photon of the given energy
inline double vacuum_wavenumber(double energy_ev) { return energy_ev / hbar_c_ev_m; }

// Errors thrown by the library carry a module-qualified message,
// e.g. "modes: root count mismatch ...".
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// exp(w) - 1, stable for small |w|
inline Complex expm1c(Complex w) {
  if (std::abs(w) < 1e-4) {
    return w * (1.0 + w * (0.5 + w * (1.0 / 6.0 + w / 24.0)));
  }
  return std::exp(w) - 1.0;
}

// sin(w)/w, entire
inline Complex sinc(Complex w) {
  if (std::abs(w) < 1e-4) {
    Complex w2 = w * w;
    return 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
  }
  return std::sin(w) / w;
}

// (1 - cos(w))/w^2, entire
inline Complex haversinc(Complex w) {
  if (std::abs(w) < 1e-3) {
    Complex w2 = w * w;
    return 0.5 - w2 / 24.0 + w2 * w2 / 720.0;
  }
  return (1.0 - std::cos(w)) / (w * w);
}

}  // namespace nrwg
