#include "shakekit/goeritz.hpp"

#include "shakekit/errors.hpp"

namespace shakekit {

void BandPresentation::validate() const {
  if (crossings.dim() != bands.size()) {
    throw InputError("crossing matrix is " + std::to_string(crossings.dim()) + "x" +
                     std::to_string(crossings.dim()) + " but there are " +
                     std::to_string(bands.size()) + " bands");
  }
  if (!crossings.is_symmetric()) throw InputError("crossing matrix must be symmetric");
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (crossings(i, i) != 0) throw InputError("crossing matrix must have zero diagonal");
    if (bands[i].self_writhe % 2 != 0) {
      throw InputError("self_writhe of band " + std::to_string(i) + " must be even");
    }
  }
}

long long GoeritzData::correction_term() const {
  long long eta = 0;
  for (auto i : nonorientable)
    for (auto j : nonorientable) eta += g(i, j);
  return eta;
}

void GoeritzData::validate() const {
  if (!g.is_symmetric()) throw InputError("Goeritz matrix must be symmetric");
  for (auto i : nonorientable) {
    if (i >= g.dim()) throw InputError("non-orientable index " + std::to_string(i) + " out of range");
  }
}

GoeritzData goeritz_form(const BandPresentation& bp) {
  bp.validate();
  const std::size_t n = bp.bands.size();
  GoeritzData gd{bp.crossings, {}};
  for (std::size_t i = 0; i < n; ++i) {
    gd.g(i, i) = bp.bands[i].self_writhe + bp.bands[i].half_twists;
    if (!bp.bands[i].orientable) gd.nonorientable.insert(i);
  }
  return gd;
}

int classical_signature_goeritz(const GoeritzData& gd) {
  gd.validate();
  return signature(gd.g) - static_cast<int>(gd.correction_term());
}

int classical_signature_goeritz(const BandPresentation& bp) {
  return classical_signature_goeritz(goeritz_form(bp));
}

GoeritzData add_two_twists(const GoeritzData& gd, const std::vector<long long>& through_disk) {
  gd.validate();
  if (!gd.nonorientable.empty()) {
    throw DomainError("two-twist transform needs an all-orientable surface");
  }
  const std::size_t n = gd.g.dim();
  if (through_disk.size() != n) {
    throw InputError("through-disk vector has " + std::to_string(through_disk.size()) +
                     " entries for " + std::to_string(n) + " bands");
  }
  GoeritzData out{IntMatrix(n + 1, 0), {n}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.g(i, j) = gd.g(i, j) + 4 * through_disk[i] * through_disk[j];
    }
    out.g(i, n) = 2 * through_disk[i];
    out.g(n, i) = 2 * through_disk[i];
  }
  out.g(n, n) = 1;
  return out;
}

bool verify_two_twist_stability(const GoeritzData& gd, const std::vector<long long>& through_disk) {
  return classical_signature_goeritz(add_two_twists(gd, through_disk)) ==
         classical_signature_goeritz(gd);
}

BandPresentation torus_presentation(int n) {
  if (n < 0) throw DomainError("torus presentation needs n >= 0");
  return {{Band{false, 2LL * n + 1, 0}}, IntMatrix(1, 0)};
}

BandPresentation orientable_presentation(const IntMatrix& seifert) {
  const std::size_t n = seifert.dim();
  BandPresentation bp{std::vector<Band>(n), IntMatrix(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    bp.bands[i] = Band{true, 2 * seifert(i, i), 0};
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) bp.crossings(i, j) = seifert(i, j) + seifert(j, i);
    }
  }
  return bp;
}

}  // namespace shakekit
