#pragma once

#include <complex>

#include "factray/mat/material.hpp"

namespace factray::mat {

/// Air-to-medium reflection amplitude coefficient at incidence theta_i from
/// the normal, theta_i in [0, pi/2).
///
/// Sign convention (fixed by the PEC case): TE -> -1, TM -> +1 on a perfect
/// conductor; at normal incidence on a lossless n=2 dielectric TE gives -1/3
/// and TM +1/3. For passive materials |result| <= 1.
/// Throws for theta_i >= pi/2 (grazing handled by callers as a vanishing term).
std::complex<double> fresnel_reflection(const Material& m, double theta_i, Pol pol, double f_hz);

/// Air-to-medium interface transmission amplitude (E-field convention).
/// The power balance on a lossless interface is
///   |r|^2 + Re(sqrt(eps - sin^2))/cos(theta_i) * |t|^2 = 1   for both pols.
std::complex<double> interface_transmission(const Material& m, double theta_i, Pol pol, double f_hz);

/// Complete through-object crossing: the two air/medium interface transmission
/// amplitudes at theta_i and the bulk attenuation over chord_length meters
/// inside the material. Envelopes attenuate by their declared linear loss;
/// dielectrics by the plane-wave attenuation constant from eps_im. PEC -> 0.
/// A zero-length chord is lossless by definition (interfaces included).
std::complex<double> transmission_gain(const Material& m, double chord_length, double theta_i,
                                       Pol pol, double f_hz);

} // namespace factray::mat
