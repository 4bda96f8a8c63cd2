#include "dgla/morphism.hpp"

#include <stdexcept>

namespace dgla {

DglaMorphism make_morphism(DglaPresentation source, DglaPresentation target,
                           std::vector<LieExpression> images) {
  if (images.size() != source.size()) {
    throw std::invalid_argument("make_morphism: one image per source generator");
  }
  DglaMorphism f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.images = std::move(images);
  for (std::size_t i = 0; i < f.images.size(); ++i) {
    TensorElement t = lie_to_tensor(f.target.gens(), f.images[i]);
    auto deg = t.degree(f.target.gens());
    if (deg && *deg != f.source.gens().degree(i)) {
      throw std::invalid_argument("make_morphism: image of '" +
                                  f.source.gens().gen(i).name +
                                  "' does not preserve degree");
    }
  }
  return f;
}

DglaMorphism identity_morphism(const DglaPresentation& p) {
  std::vector<LieExpression> images;
  for (const auto& g : p.gens().gens()) images.push_back(LieExpression::generator(g.name));
  return make_morphism(p, p, std::move(images));
}

TensorElement apply_morphism(const DglaMorphism& f, const TensorElement& x) {
  std::vector<TensorElement> image_tensors;
  image_tensors.reserve(f.images.size());
  for (const auto& e : f.images) {
    image_tensors.push_back(lie_to_tensor(f.target.gens(), e));
  }
  TensorElement out;
  if (x.truncated()) out.mark_truncated();
  for (const auto& [w, c] : x.terms()) {
    if (w.empty()) continue;  // F(1) = 0
    TensorElement acc = image_tensors[w.back()];
    for (std::size_t i = w.size() - 1; i-- > 0;) {
      acc = bracket(f.target.gens(), image_tensors[w[i]], acc);
    }
    out += acc.scaled(c / Rational(w.size()));
  }
  return out;
}

MorphismCheck verify_morphism(const DglaMorphism& f) {
  MorphismCheck out;
  for (std::size_t i = 0; i < f.source.size(); ++i) {
    MorphismCheck::Item item;
    item.gen = f.source.gens().gen(i).name;
    TensorElement lhs = apply_morphism(f, f.source.diff_tensors()[i]);
    TensorElement image = lie_to_tensor(f.target.gens(), f.images[i]);
    TensorElement rhs = f.target.d(image);
    item.checked = !lhs.truncated() && !rhs.truncated();
    item.residue = lhs - rhs;
    item.pass = item.residue.is_zero();
    if (item.checked && !item.pass) out.all_pass = false;
    out.items.push_back(std::move(item));
  }
  return out;
}

DglaMorphism compose_morphisms(const DglaMorphism& outer, const DglaMorphism& inner) {
  if (!same_presentation(inner.target, outer.source)) {
    throw std::invalid_argument("compose_morphisms: middle presentations differ");
  }
  std::vector<LieExpression> images;
  for (std::size_t i = 0; i < inner.images.size(); ++i) {
    TensorElement t = lie_to_tensor(inner.target.gens(), inner.images[i]);
    TensorElement mapped = apply_morphism(outer, t);
    images.push_back(tensor_to_lie(outer.target.gens(), mapped));
  }
  return make_morphism(inner.source, outer.target, std::move(images));
}

DegreeMap realize_morphism(const DglaMorphism& f, const RealizedDgla& src,
                           const RealizedDgla& tgt, bool* clipped) {
  if (!same_presentation(f.source, src.presentation()) ||
      !same_presentation(f.target, tgt.presentation())) {
    throw std::invalid_argument("realize_morphism: realization mismatch");
  }
  bool any_clip = false;
  DegreeMap out = DegreeMap::zero(src.complex().space, tgt.complex().space, 0);
  for (int deg : src.complex().space.degrees()) {
    const std::size_t cols = src.dim(deg);
    Matrix blk(tgt.dim(deg), cols);
    for (std::size_t j = 0; j < cols; ++j) {
      TensorElement image = apply_morphism(f, src.entry(deg, j).element);
      bool clip = false;
      auto c = tgt.coords(deg, image, &clip);
      if (!c) {
        throw std::invalid_argument("realize_morphism: image leaves the Lie subspace");
      }
      any_clip = any_clip || clip;
      for (std::size_t i = 0; i < c->size(); ++i) blk.at(i, j) = (*c)[i];
    }
    out.set_block(deg, std::move(blk));
  }
  if (clipped) *clipped = any_clip;
  return out;
}

}  // namespace dgla
