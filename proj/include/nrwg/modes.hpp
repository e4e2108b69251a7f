#pragma once

#include <optional>
#include <vector>

#include "nrwg/common.hpp"

namespace nrwg {

// Planar layer stack along z. z = 0 at the interface between the
// semi-infinite top cladding and the first interior layer; z increases
// into the stack. The TE mode equation with mu = 1 is
//
//   u''(z) + (k0^2 n(z)^2 - q^2) u(z) = 0,
//
// with u and u' continuous at every interface and u decaying into both
// claddings (principal sheet). Guided modes are the complex q at which the
// outgoing-wave boundary determinant vanishes.
struct Layer {
  double thickness;  // m, > 0
  Complex index;
};

struct LayerStack {
  Complex top_index;          // semi-infinite top cladding
  std::vector<Layer> layers;  // interior layers, ordered from the top
  Complex bottom_index;       // semi-infinite bottom cladding
  double k0;                  // vacuum wavenumber, 1/m

  double interior_thickness() const;
  Complex index_at(double z) const;
  void validate() const;
};

// One interior segment of a mode profile, parameterized by the field and
// its derivative at the segment start:
//   u(z0 + s) = u0 cos(kappa s) + du0 sin(kappa s)/kappa.
// Only even functions of kappa enter, so the interior branch choice is
// immaterial; the pair (u0, du0) are the piecewise amplitudes.
struct ModeSegment {
  Complex u0;
  Complex du0;
  Complex kappa;
  double z_begin;
  double thickness;
};

struct GuidedMode {
  Complex q = 0.0;
  double k0 = 0.0;
  Complex top_coeff;     // u(z) = top_coeff exp(-i top_kappa z), z <= 0
  Complex top_kappa;     // Im >= 0 on the principal sheet
  std::vector<ModeSegment> segments;
  Complex bottom_coeff;  // u(z) = bottom_coeff exp(+i bottom_kappa (z - z_end))
  Complex bottom_kappa;
  double interior_end = 0.0;  // z of the bottom cladding interface
  bool normalized = false;

  Complex value(double z) const;
  Complex derivative(double z) const;
};

// principal-sheet transverse wavenumber: sqrt(n^2 k0^2 - q^2), Im >= 0
Complex transverse_wavenumber(Complex n, double k0, Complex q);

// Outgoing-wave boundary-condition determinant built by the 2x2 transverse
// transfer matrix across the layers; analytic in q on the chosen sheet,
// zero exactly at the guided modes. `leaky_sheet` flips the cladding
// transverse decay (growing solutions) for the analytic continuation.
Complex dispersion_determinant(const LayerStack& stack, Complex q, bool leaky_sheet = false);

// local norm used to make |D| comparisons scale-free
double dispersion_scale(const LayerStack& stack, Complex q, bool leaky_sheet = false);

inline constexpr double tol_root = 1e-10;  // relative, on |D| / dispersion_scale

// All guided-mode roots with Re q between the cladding and maximum core
// light lines, sorted by descending Re q. Zeros are counted by the argument
// principle on subdivided rectangles and polished by Newton iteration, so a
// count/polish disagreement raises a diagnostic error.
std::vector<Complex> find_guided_modes(const LayerStack& stack);

struct SearchRegion {
  double re_lo, re_hi;
  double im_lo, im_hi;
};

// Roots of the determinant continued to the non-principal sheet
// (sign-flipped cladding decay) inside the given rectangle. Diagnostic
// only: never normalized, never coupled. Located by a grid scan with
// Newton polishing; may return empty.
std::vector<Complex> find_leaky_modes(const LayerStack& stack, const SearchRegion& region);

// Unnormalized profile at a root q (|D|/scale must be < 100*tol_root).
GuidedMode mode_profile(const LayerStack& stack, Complex q);

// analytic  ∫ u(z)^2 dz  over all z including both cladding tails (mu = 1)
Complex mode_square_integral(const GuidedMode& mode);

// analytic  ∫ u(z) dz ; interior_only restricts to the layer interior
// (the guide aperture), which is the window seen by the drive.
Complex mode_overlap_integral(const GuidedMode& mode, bool interior_only);

// Rescales so that ∫ u^2 dz = 1 (bi-orthogonal normalization, no complex
// conjugation). The overall sign is fixed so that Re ∫_aperture u dz >= 0,
// with deterministic fallbacks for modes whose aperture overlap vanishes.
GuidedMode normalize_mode(GuidedMode mode);

// dimensionless coupling strength  xi = k0 L u(z0)^2 / q
Complex coupling_strength(const GuidedMode& mode, double z0, double L, double k0);

// input-mode amplitude for a uniform unit drive across the guide aperture:
// beta(0) = amplitude * ∫_aperture u dz   (mu = 1, analytic piecewise)
Complex input_overlap(const GuidedMode& mode, Complex amplitude = 1.0);

// overlaps are quoted in units of sqrt(nm) in tables and CSV output
inline double overlap_report_scale() { return 31622.776601683792; }  // sqrt(1e9)

// guided-mode envelope of the Green's function: i u(z) u(z') / (2 q)
Complex greens_envelope(const GuidedMode& mode, double z, double zp);

// A solved stack: normalized modes sorted by descending Re q together with
// their couplings to the resonant layer at z0 of thickness L.
struct ModeSet {
  std::vector<GuidedMode> modes;
  std::vector<Complex> q;
  std::vector<Complex> xi;
  double z0 = 0.0;
  double L = 0.0;
  double k0 = 0.0;
};

ModeSet solve_mode_set(const LayerStack& stack, double z0, double L);

// Mean/difference parameterization of a mode pair. delta_phi uses the
// half-difference of the coupling phases; Q factors use the infinity
// sentinel when the corresponding denominator vanishes.
struct TwoModeParams {
  double q_bar, delta_q;        // 1/m
  double kappa_bar, delta_kappa;
  double phi_bar, delta_phi;    // rad
  double xi_mag1, xi_mag2;
  double q_beat, q_atten, q_bar_factor;
  Complex q1, q2, xi1, xi2;     // stored pair, reconstructable exactly
};

TwoModeParams two_mode_parameters(Complex q1, Complex q2, Complex xi1, Complex xi2);

// inverse of two_mode_parameters: rebuilds (q1, q2, xi1, xi2)
struct TwoModePair {
  Complex q1, q2, xi1, xi2;
};
TwoModePair two_mode_reconstruct(const TwoModeParams& p);

}  // namespace nrwg
