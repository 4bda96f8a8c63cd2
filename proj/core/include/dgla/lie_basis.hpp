#ifndef DGLA_LIE_BASIS_HPP
#define DGLA_LIE_BASIS_HPP

#include <map>
#include <optional>

#include "dgla/words.hpp"

namespace dgla {

/// Basis of the weight/degree block of the free Lie algebra inside T(V),
/// computed as the column space of the Dynkin projector under the fixed
/// pivot rule. Every basis vector is a fixed point of rho.
struct LieBlock {
  int weight = 0;
  int degree = 0;
  std::vector<TensorWord> words;       // tensor words spanning the ambient block
  std::vector<TensorElement> basis;    // rho-fixed basis vectors
  Matrix basis_columns;                // |words| x |basis| coordinate matrix

  std::size_t dim() const { return basis.size(); }

  /// Coordinates of a (weight, degree)-homogeneous element in this basis;
  /// nullopt when the element is not in the Lie subspace.
  std::optional<Vec> coords(const TensorElement& x) const;
  TensorElement element(const Vec& coords) const;
  Vec word_coords(const TensorElement& x) const;  // ambient coordinates
};

LieBlock lie_block(const GeneratorSet& gens, int weight, int degree);

/// All nonzero blocks of a given weight, keyed by degree.
std::map<int, LieBlock> lie_basis(const GeneratorSet& gens, int weight);

}  // namespace dgla

#endif
