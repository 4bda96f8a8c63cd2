#ifndef DGLA_MORPHISM_HPP
#define DGLA_MORPHISM_HPP

#include "dgla/presentation.hpp"

namespace dgla {

/// Morphism of presented DG-Lie algebras, determined by generator images.
/// Extension to the whole algebra evaluates (1/n)[f(v1),[f(v2),...]] on
/// every tensor word, which on the Lie subspace is the unique graded Lie
/// algebra morphism extending the images.
struct DglaMorphism {
  DglaPresentation source;
  DglaPresentation target;
  std::vector<LieExpression> images;  // one per source generator
};

/// Validates counts, letters and degree preservation.
DglaMorphism make_morphism(DglaPresentation source, DglaPresentation target,
                           std::vector<LieExpression> images);

DglaMorphism identity_morphism(const DglaPresentation& p);

/// Evaluation on an element written in source letters; truncation at the
/// target cap is flagged on the result.
TensorElement apply_morphism(const DglaMorphism& f, const TensorElement& x);

struct MorphismCheck {
  struct Item {
    std::string gen;
    bool checked;  // false when truncation clipped either side
    bool pass;
    TensorElement residue;  // F(dg) - d F(g)
  };
  std::vector<Item> items;
  bool all_pass = true;
};

/// Commutation with the differentials on generators; by the uniqueness of
/// the extension this is the full chain-map condition.
MorphismCheck verify_morphism(const DglaMorphism& f);

/// outer after inner; requires inner.target and outer.source to agree.
DglaMorphism compose_morphisms(const DglaMorphism& outer, const DglaMorphism& inner);

/// Degreewise matrices of f between two realized slices, which must realize
/// f's own source and target. `clipped` reports any truncation on the way.
DegreeMap realize_morphism(const DglaMorphism& f, const RealizedDgla& src,
                           const RealizedDgla& tgt, bool* clipped = nullptr);

}  // namespace dgla

#endif
