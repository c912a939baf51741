#pragma once

// Degrading maps from the complementary channel back to N_{p,q}, and their
// numerical verification through Choi matrices.
//
// Input layout of every map here is the 4-dim complementary output of
// complementary_kraus(): indices 0,1 are the q-flagged copy of the input,
// indices 2,3 the (1-q)-flagged block spanned by |phi_p^0>, |phi_p^1>.

#include <stdexcept>

#include "dephrasure/channel.hpp"

namespace dephrasure {

class NotAntidegradableHere : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unambiguous discrimination of |phi_p^0>, |phi_p^1>.
struct UsdPovm {
  Matrix pi0;
  Matrix pi1;
  Matrix pi_e;  // inconclusive outcome, mapped to the erasure flag
};

/// Defined for p in [0, 1/2]; at p = 0 the formulas give the limiting POVM.
UsdPovm usd_povm(double p);

enum class DegradingMapKind { Trivial, Usd };

const char* to_string(DegradingMapKind kind);

/// Erasure probability applied to the q-block: (2q-1)/q for the trivial map,
/// 1 - (1-q)(1-2p)/q for the measurement-based map.
double erasure_parameter(DegradingMapKind kind, const ChannelParams& params);

/// Kind used for the given parameters: trivial for q >= 1/2, otherwise the
/// measurement-based map.
DegradingMapKind map_kind_for(const ChannelParams& params);

/// Explicit action of the degrading map with erasure parameter x on a 4x4
/// operator. Linear for every real x; completely positive only for x in [0, 1].
Matrix apply_degrading_map(DegradingMapKind kind, double p, double x, const Matrix& sigma);

/// Kraus form of the degrading map. Throws NotAntidegradableHere for q < k(p).
KrausSet antidegrading_map(const ChannelParams& params);

struct DegradingMapReport {
  ChannelParams params;
  DegradingMapKind map_kind = DegradingMapKind::Usd;
  double x_param = 0.0;
  double composition_residual = 0.0;  // max |Choi(A o N^c) - Choi(N)|
  double cp_min_eigenvalue = 0.0;     // of Choi(A), from its explicit action
  bool antidegradable = false;
};

/// Builds the degrading map (for any q, including the non-CP regime
/// q < k(p)), composes it with the complementary channel, and compares Choi
/// matrices with N_{p,q}. A failed report means "not certified", not
/// "not antidegradable".
DegradingMapReport verify_antidegradable(const ChannelParams& params, double tol);

}  // namespace dephrasure
