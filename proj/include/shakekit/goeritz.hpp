#pragma once

#include <set>
#include <vector>

#include "shakekit/exactlinalg.hpp"

namespace shakekit {

/// One band of a disk-with-bands spanning surface.
struct Band {
  bool orientable = true;
  long long half_twists = 0;  // signed half twists relative to the plane
  long long self_writhe = 0;  // twice the signed count of self-crossings; even
};

/// Disk-with-bands combinatorics. `crossings(i, j)` is the signed count of
/// crossings between bands i and j; it is symmetric with zero diagonal.
struct BandPresentation {
  std::vector<Band> bands;
  IntMatrix crossings;

  /// Throws InputError when the invariants above fail.
  void validate() const;
};

/// Symmetric Goeritz matrix together with the bands that are non-orientable.
struct GoeritzData {
  IntMatrix g;
  std::set<std::size_t> nonorientable;

  /// Sum of the entries of g over non-orientable x non-orientable pairs.
  long long correction_term() const;
  void validate() const;
};

GoeritzData goeritz_form(const BandPresentation& bp);

/// sign(G) - eta.
int classical_signature_goeritz(const GoeritzData& gd);
int classical_signature_goeritz(const BandPresentation& bp);

/// Builds the Goeritz data of K_2 from an all-orientable surface for K.
/// `through_disk[i]` is the algebraic number of times band i passes through
/// the spanning disk. The result has entries G[i][j] + 4 l_i l_j, a border
/// row/column 2 l_i, corner +1, and its last index is the only
/// non-orientable band.
GoeritzData add_two_twists(const GoeritzData& gd, const std::vector<long long>& through_disk);

/// True iff sign(G_2) - eta_2 equals sign(G) - eta.
bool verify_two_twist_stability(const GoeritzData& gd, const std::vector<long long>& through_disk);

/// Presentation of T(2, 2n+1) as one Moebius band with 2n+1 half twists.
BandPresentation torus_presentation(int n);

/// An all-orientable presentation whose Goeritz matrix is A + A^T.
BandPresentation orientable_presentation(const IntMatrix& seifert);

}  // namespace shakekit
