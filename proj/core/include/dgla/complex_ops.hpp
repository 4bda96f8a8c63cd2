#ifndef DGLA_COMPLEX_OPS_HPP
#define DGLA_COMPLEX_OPS_HPP

#include <map>
#include <vector>

#include "dgla/graded.hpp"

namespace dgla {

struct Cohomology {
  std::map<int, std::size_t> cocycle_dims;
  std::map<int, std::size_t> coboundary_dims;
  std::map<int, std::size_t> dims;                       // dim H^n
  std::map<int, std::vector<Vec>> representatives;       // cocycles spanning H^n mod B^n

  std::size_t dim(int degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
  }
  bool acyclic() const {
    for (const auto& [deg, d] : dims) {
      if (d != 0) return false;
    }
    return true;
  }
};

/// Degreewise kernels/images by row reduction; throws when d^2 != 0.
Cohomology cohomology(const ChainComplex& c);

/// V = H (+) W with H carrying zero differential and W acyclic, plus the
/// contracting homotopy gamma on W with d gamma + gamma d = -Id_W.
struct Splitting {
  ChainComplex harmonic;  // H
  ChainComplex acyclic;   // W
  DegreeMap embed_h;      // H -> V
  DegreeMap embed_w;      // W -> V
  DegreeMap project_h;    // V -> H
  DegreeMap project_w;    // V -> W
  DegreeMap gamma;        // W -> W, degree -1
};

Splitting split_complex(const ChainComplex& c);

/// h := -gamma d gamma. Requires d gamma + gamma d = -Id on the given
/// complex; the output satisfies d h + h d = -Id and h^2 = 0.
DegreeMap normalize_homotopy(const ChainComplex& w, const DegreeMap& gamma);

struct Truncation {
  ChainComplex complex;
  DegreeMap inclusion;  // truncation -> original, a chain map
};

/// Canonical truncation: degrees below -1 unchanged, degree -1 replaced by
/// ker(d), everything above -1 dropped.
Truncation truncate(const ChainComplex& c);

}  // namespace dgla

#endif
