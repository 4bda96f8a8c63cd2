#include "dgla/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dgla {

namespace {

std::string degree_token(int degree) {
  return degree < 0 ? "m" + std::to_string(-degree) : std::to_string(degree);
}

}  // namespace

TensorElement lie_to_tensor(const GeneratorSet& gens, const LieExpression& e) {
  TensorElement out;
  for (const auto& term : e.terms) {
    if (term.word.empty()) {
      throw std::invalid_argument("empty bracket word in Lie expression");
    }
    if (static_cast<int>(term.word.size()) > gens.weight_cap()) {
      throw std::invalid_argument("bracket word exceeds the weight cap");
    }
    TensorWord w;
    w.reserve(term.word.size());
    for (const auto& name : term.word) {
      w.push_back(static_cast<std::uint32_t>(gens.index_of(name)));
    }
    out += nested_bracket(gens, w).scaled(term.coeff);
  }
  return out;
}

LieExpression tensor_to_lie(const GeneratorSet& gens, const TensorElement& x) {
  if (!(dynkin_rho(gens, x) == x)) {
    throw std::invalid_argument("tensor_to_lie: element is not fixed by rho");
  }
  LieExpression out;
  for (const auto& [w, c] : x.terms()) {
    LieTerm term;
    term.coeff = c / Rational(w.size());
    for (auto i : w) term.word.push_back(gens.gen(i).name);
    out.terms.push_back(std::move(term));
  }
  return out;
}

DglaPresentation DglaPresentation::make(
    GeneratorSet gens, std::vector<LieExpression> diff_images,
    std::vector<std::vector<std::string>> cofactors) {
  if (diff_images.size() != gens.size()) {
    throw std::invalid_argument("one differential image per generator required");
  }
  DglaPresentation p;
  p.gens_ = std::move(gens);
  p.diff_images_ = std::move(diff_images);
  for (std::size_t i = 0; i < p.gens_.size(); ++i) {
    TensorElement t = lie_to_tensor(p.gens_, p.diff_images_[i]);
    auto deg = t.degree(p.gens_);
    if (deg && *deg != p.gens_.degree(i) + 1) {
      throw std::invalid_argument("differential image of '" + p.gens_.gen(i).name +
                                  "' does not raise degree by 1");
    }
    p.diff_tensors_.push_back(std::move(t));
  }

  if (cofactors.empty()) {
    std::vector<std::string> all;
    for (const auto& g : p.gens_.gens()) all.push_back(g.name);
    if (!all.empty()) cofactors.push_back(std::move(all));
  }
  std::set<std::string> seen;
  for (const auto& group : cofactors) {
    for (const auto& name : group) {
      p.gens_.index_of(name);  // throws on unknown
      if (!seen.insert(name).second) {
        throw std::invalid_argument("generator '" + name + "' in two cofactors");
      }
    }
  }
  if (seen.size() != p.gens_.size()) {
    throw std::invalid_argument("cofactors must cover all generators");
  }
  p.cofactors_ = std::move(cofactors);
  return p;
}

TensorElement DglaPresentation::d(const TensorElement& x) const {
  return apply_derivation(gens_, diff_tensors_, 1, x);
}

bool same_presentation(const DglaPresentation& a, const DglaPresentation& b) {
  if (a.size() != b.size()) return false;
  if (a.gens().weight_cap() != b.gens().weight_cap()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.gens().gen(i).name != b.gens().gen(i).name) return false;
    if (a.gens().gen(i).degree != b.gens().gen(i).degree) return false;
    if (!(a.diff_tensors()[i] == b.diff_tensors()[i])) return false;
  }
  return true;
}

DifferentialCheck differential_check(const DglaPresentation& p) {
  DifferentialCheck out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    DifferentialCheck::Item item;
    item.gen = p.gens().gen(i).name;
    const TensorElement& dg = p.diff_tensors()[i];
    TensorElement ddg = p.d(dg);
    item.checked = !dg.truncated() && !ddg.truncated();
    item.pass = ddg.is_zero();
    item.residue = std::move(ddg);
    if (item.checked && !item.pass) out.all_pass = false;
    out.items.push_back(std::move(item));
  }
  return out;
}

DglaPresentation coproduct(const DglaPresentation& p, const DglaPresentation& q) {
  std::set<std::string> used;
  for (const auto& g : p.gens().gens()) used.insert(g.name);

  std::map<std::string, std::string> rename;
  for (const auto& g : q.gens().gens()) {
    std::string name = g.name;
    for (int suffix = 1; used.count(name); ++suffix) {
      name = g.name + "_" + std::to_string(suffix);
    }
    used.insert(name);
    rename[g.name] = name;
  }

  std::vector<Generator> gens = p.gens().gens();
  for (const auto& g : q.gens().gens()) {
    gens.push_back({rename.at(g.name), g.degree});
  }
  const int cap = std::min(p.gens().weight_cap(), q.gens().weight_cap());

  std::vector<LieExpression> images;
  for (std::size_t i = 0; i < p.size(); ++i) images.push_back(p.diff_image(i));
  for (std::size_t i = 0; i < q.size(); ++i) {
    LieExpression e = q.diff_image(i);
    for (auto& term : e.terms) {
      for (auto& letter : term.word) letter = rename.at(letter);
    }
    images.push_back(std::move(e));
  }

  std::vector<std::vector<std::string>> cofactors = p.cofactors();
  for (const auto& group : q.cofactors()) {
    std::vector<std::string> renamed;
    for (const auto& name : group) renamed.push_back(rename.at(name));
    cofactors.push_back(std::move(renamed));
  }
  return DglaPresentation::make(GeneratorSet::make(std::move(gens), cap),
                                std::move(images), std::move(cofactors));
}

const RealizedDgla::BasisEntry& RealizedDgla::entry(int degree,
                                                    std::size_t index_in_degree) const {
  auto it = by_degree_.find(degree);
  if (it == by_degree_.end() || index_in_degree >= it->second.size()) {
    throw std::out_of_range("realized basis index out of range");
  }
  return basis_[it->second[index_in_degree]];
}

std::optional<Vec> RealizedDgla::coords(int degree, const TensorElement& x,
                                        bool* clipped) const {
  if (clipped) *clipped = x.truncated();
  const std::size_t n = dim(degree);
  Vec out(n);
  if (x.is_zero()) return out;
  if (degree < lo_ || degree > hi_) {
    if (clipped) *clipped = true;
    return out;
  }
  if (n == 0) return std::nullopt;  // nonzero element, empty block
  // split by weight and solve inside each Lie block
  std::map<int, TensorElement> by_weight;
  for (const auto& [w, c] : x.terms()) {
    if (word_degree(pres_.gens(), w) != degree) {
      throw std::invalid_argument("coords: element is not homogeneous of the degree");
    }
    by_weight[static_cast<int>(w.size())].add_term(w, c);
  }
  std::size_t offset = 0;
  std::map<int, std::pair<std::size_t, const LieBlock*>> layout;
  for (auto idx : by_degree_.at(degree)) {
    const BasisEntry& e = basis_[idx];
    auto key = std::make_pair(e.weight, e.degree);
    if (!layout.count(e.weight)) {
      layout[e.weight] = {offset, &blocks_.at(key)};
    }
    ++offset;
  }
  for (const auto& [w, part] : by_weight) {
    auto it = layout.find(w);
    if (it == layout.end()) return std::nullopt;
    auto sol = it->second.second->coords(part);
    if (!sol) return std::nullopt;
    for (std::size_t i = 0; i < sol->size(); ++i) out[it->second.first + i] = (*sol)[i];
  }
  return out;
}

TensorElement RealizedDgla::element(int degree, const Vec& c) const {
  auto it = by_degree_.find(degree);
  const std::size_t n = dim(degree);
  if (c.size() != n) throw std::invalid_argument("element: coordinate length mismatch");
  TensorElement out;
  if (it == by_degree_.end()) return out;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] != 0) out += basis_[it->second[i]].element.scaled(c[i]);
  }
  return out;
}

bool RealizedDgla::d_clipped(const std::string& name) const {
  auto it = d_clipped_.find(name);
  return it != d_clipped_.end() && it->second;
}

bool RealizedDgla::d2_ok() const {
  for (const auto& item : d2_) {
    if (item.checked && !item.pass) return false;
  }
  return true;
}

RealizedDgla realize(const DglaPresentation& p, int lo, int hi) {
  RealizedDgla r;
  r.pres_ = p;
  r.lo_ = lo;
  r.hi_ = hi;

  std::vector<std::pair<std::string, int>> names;
  for (int deg = lo; deg <= hi; ++deg) {
    for (int w = 1; w <= p.gens().weight_cap(); ++w) {
      auto degs = degrees_for_weight(p.gens(), w);
      if (!std::binary_search(degs.begin(), degs.end(), deg)) continue;
      auto key = std::make_pair(w, deg);
      LieBlock block = lie_block(p.gens(), w, deg);
      for (std::size_t i = 0; i < block.dim(); ++i) {
        RealizedDgla::BasisEntry e;
        e.weight = w;
        e.degree = deg;
        e.block_index = i;
        e.name = "b" + std::to_string(w) + "_" + degree_token(deg) + "_" + std::to_string(i);
        e.element = block.basis[i];
        names.emplace_back(e.name, deg);
        r.by_degree_[deg].push_back(r.basis_.size());
        r.basis_.push_back(std::move(e));
      }
      if (block.dim() > 0) r.blocks_.emplace(key, std::move(block));
    }
  }
  GradedSpace space = GradedSpace::from_basis(names);
  DegreeMap d = DegreeMap::zero(space, space, 1);

  for (const auto& [deg, indices] : r.by_degree_) {
    if (space.dim(deg + 1) == 0) {
      for (auto idx : indices) {
        const auto& e = r.basis_[idx];
        TensorElement dv = p.d(e.element);
        r.d_clipped_[e.name] = dv.truncated() || !dv.is_zero();
      }
      continue;
    }
    Matrix blk(space.dim(deg + 1), indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
      const auto& e = r.basis_[indices[j]];
      TensorElement dv = p.d(e.element);
      bool clipped = false;
      auto c = r.coords(deg + 1, dv, &clipped);
      if (!c) {
        throw std::logic_error("realize: differential leaves the Lie subspace");
      }
      r.d_clipped_[e.name] = clipped;
      for (std::size_t i = 0; i < c->size(); ++i) blk.at(i, j) = (*c)[i];
    }
    d.set_block(deg, std::move(blk));
  }
  r.complex_ = ChainComplex::make(std::move(space), std::move(d));

  for (const auto& e : r.basis_) {
    RealizedDgla::D2Item item;
    item.name = e.name;
    TensorElement dv = p.d(e.element);
    TensorElement ddv = p.d(dv);
    item.checked = !dv.truncated() && !ddv.truncated();
    item.pass = ddv.is_zero();
    r.d2_.push_back(std::move(item));
  }
  return r;
}

std::pair<int, int> natural_window(const DglaPresentation& p) {
  bool any = false;
  int lo = 0, hi = 0;
  for (int w = 1; w <= p.gens().weight_cap(); ++w) {
    for (int d : degrees_for_weight(p.gens(), w)) {
      if (!any) {
        lo = hi = d;
        any = true;
      } else {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
    }
  }
  if (!any) return {0, -1};
  return {lo, hi};
}

}  // namespace dgla
