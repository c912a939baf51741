#pragma once

// The dephrasure channel N_{p,q}(rho) = (1-q)((1-p) rho + p Z rho Z) + q tr(rho) |e><e|,
// its complementary channel, the region boundary curves, and the
// single-letter coherent information.

#include "dephrasure/quantum_core.hpp"

namespace dephrasure {

/// Dephasing probability p and erasure probability q.
struct ChannelParams {
  double p = 0.0;
  double q = 0.0;
};

/// Throws std::domain_error unless p, q lie in [0, 1] (or [0, 1/2] when
/// `region_square` is set).
void validate(const ChannelParams& params, bool region_square = false);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Qubit dephasing channel Z_p (1 -> 2 Kraus operators).
KrausSet dephasing_kraus(double p);

/// Four Kraus operators mapping a qubit into span{|0>, |1>, |e>}, with |e>
/// the third basis vector.
KrausSet dephrasure_kraus(const ChannelParams& params);

/// Complementary channel q rho (+) (1-q) sum_x <x|rho|x> |phi_p^x><phi_p^x|
/// as a 2 -> 4 Kraus set. Output indices 0,1 hold the q-block, 2,3 the
/// (1-q)-block.
KrausSet complementary_kraus(const ChannelParams& params);

DensityMatrix complementary_apply(const ChannelParams& params, const DensityMatrix& rho);

/// |phi_p^x> = sqrt(1-p)|0> + (-1)^x sqrt(p)|1>.
Vector phi_state(double p, int x);

struct RegionCurves {
  double g = 0.0;  // zero threshold of the single-letter coherent information
  double j = 0.0;  // below j the maximally mixed input is optimal
  double k = 0.0;  // above k the channel is antidegradable
};

double curve_g(double p);
double curve_j(double p);
double curve_k(double p);
RegionCurves region_curves(double p);

enum class Region {
  MixedOptimal,    // q < j(p)
  Fish,            // j(p) <= q < g(p)
  NoCoherentInfo,  // g(p) <= q < k(p)
  Antidegradable,  // q >= k(p)
};

Region classify(const ChannelParams& params);
const char* to_string(Region region);

/// [[1-p, z sqrt(p(1-p))], [z sqrt(p(1-p)), p]].
DensityMatrix phi_matrix(double p, double z);

/// I_c(rho_z, N) for the Z-diagonal input with Bloch vector (0, 0, z).
double coherent_info_z(const ChannelParams& params, double z);

/// Same quantity parametrized by the smaller eigenvalue w = (1 - |z|) / 2 of
/// the input; accurate for w far below machine epsilon.
double coherent_info_weight(const ChannelParams& params, double w);

/// I_c for the Bloch state (x, 0, z).
double coherent_info_xz(const ChannelParams& params, double x, double z);

struct SingleLetterResult {
  double value = 0.0;
  double z_star = 0.0;  // argmax, reported with z_star >= 0
};

/// Maximum of coherent_info_z over z in [-1, 1].
SingleLetterResult single_letter_ci(const ChannelParams& params);

struct XzMaximum {
  double value = 0.0;
  double x = 0.0;
  double z = 0.0;
};

/// Maximum of coherent_info_xz over a grid of the upper-right quarter disc.
/// Makes no optimality claim; used to probe inputs off the z axis.
XzMaximum xz_grid_maximum(const ChannelParams& params, double step);

}  // namespace dephrasure
