#include "dgla/lie_basis.hpp"

#include <stdexcept>

namespace dgla {

std::optional<Vec> LieBlock::coords(const TensorElement& x) const {
  return solve(basis_columns, word_coords(x));
}

TensorElement LieBlock::element(const Vec& c) const {
  if (c.size() != basis.size()) {
    throw std::invalid_argument("LieBlock::element: coordinate length mismatch");
  }
  TensorElement out;
  for (std::size_t i = 0; i < c.size(); ++i) out += basis[i].scaled(c[i]);
  return out;
}

Vec LieBlock::word_coords(const TensorElement& x) const {
  Vec v(words.size());
  std::map<TensorWord, std::size_t> pos;
  for (std::size_t i = 0; i < words.size(); ++i) pos[words[i]] = i;
  for (const auto& [w, c] : x.terms()) {
    auto it = pos.find(w);
    if (it == pos.end()) {
      throw std::invalid_argument("element outside the (weight, degree) block");
    }
    v[it->second] = c;
  }
  return v;
}

LieBlock lie_block(const GeneratorSet& gens, int weight, int degree) {
  LieBlock block;
  block.weight = weight;
  block.degree = degree;
  block.words = tensor_basis(gens, weight, degree);
  const std::size_t n = block.words.size();

  std::map<TensorWord, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[block.words[i]] = i;

  // Columns of the Dynkin projector on this block.
  Matrix rho(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    TensorElement image = dynkin_rho(gens, TensorElement::single(block.words[j]));
    for (const auto& [w, c] : image.terms()) {
      rho.at(pos.at(w), j) = c;
    }
  }
  RowReduction red = row_reduce(rho);
  for (const auto& col : red.image_basis) {
    TensorElement v;
    for (std::size_t i = 0; i < n; ++i) {
      if (col[i] != 0) v.add_term(block.words[i], col[i]);
    }
    block.basis.push_back(std::move(v));
  }
  block.basis_columns = Matrix::from_columns(red.image_basis, n);
  return block;
}

std::map<int, LieBlock> lie_basis(const GeneratorSet& gens, int weight) {
  std::map<int, LieBlock> out;
  for (int degree : degrees_for_weight(gens, weight)) {
    LieBlock block = lie_block(gens, weight, degree);
    if (block.dim() > 0) out.emplace(degree, std::move(block));
  }
  return out;
}

}  // namespace dgla
