#ifndef DGLA_PRESENTATION_HPP
#define DGLA_PRESENTATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgla/graded.hpp"
#include "dgla/lie_basis.hpp"
#include "dgla/words.hpp"

namespace dgla {

/// One summand c * [g1,[g2,[...,gn]...]] of a Lie expression; the word is
/// the right-nested bracket word over generator names.
struct LieTerm {
  Rational coeff;
  std::vector<std::string> word;
};

/// Rational combination of right-nested bracket words. This is the I/O and
/// storage form; computations go through the tensor expansion.
struct LieExpression {
  std::vector<LieTerm> terms;

  static LieExpression zero() { return {}; }
  static LieExpression generator(const std::string& name) {
    return LieExpression{{LieTerm{1, {name}}}};
  }
  bool is_zero_form() const { return terms.empty(); }
};

/// Expansion into T(V); throws on unknown letters or words over the cap.
TensorElement lie_to_tensor(const GeneratorSet& gens, const LieExpression& e);

/// Normal form of a rho-fixed element: each tensor word w of weight n
/// contributes the bracket word w with coefficient c_w / n. Throws when the
/// input is not fixed by the Dynkin projector.
LieExpression tensor_to_lie(const GeneratorSet& gens, const TensorElement& x);

/// A DG-Lie algebra presented as the free graded Lie algebra on generators,
/// truncated at the weight cap, with the differential given on generators.
/// Iterated coproducts stay in this shape; cofactor boundaries are recorded.
/// d^2 = 0 is checked by differential_check, not at construction.
class DglaPresentation {
 public:
  DglaPresentation() = default;
  static DglaPresentation make(GeneratorSet gens, std::vector<LieExpression> diff_images,
                               std::vector<std::vector<std::string>> cofactors = {});

  const GeneratorSet& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const LieExpression& diff_image(std::size_t i) const { return diff_images_.at(i); }
  const std::vector<TensorElement>& diff_tensors() const { return diff_tensors_; }
  const std::vector<std::vector<std::string>>& cofactors() const { return cofactors_; }

  /// The differential as a derivation, truncated at the cap.
  TensorElement d(const TensorElement& x) const;

 private:
  GeneratorSet gens_;
  std::vector<LieExpression> diff_images_;
  std::vector<TensorElement> diff_tensors_;
  std::vector<std::vector<std::string>> cofactors_;
};

bool same_presentation(const DglaPresentation& a, const DglaPresentation& b);

struct DifferentialCheck {
  struct Item {
    std::string gen;
    bool checked = true;  // false when weight truncation clipped d(d(gen))
    bool pass = false;
    TensorElement residue;
  };
  std::vector<Item> items;
  bool all_pass = true;
};

/// d(d(g)) = 0 for every generator, evaluated up to the weight cap.
DifferentialCheck differential_check(const DglaPresentation& p);

/// Coproduct of presentations: disjoint union of generators (second factor
/// renamed with suffix _1, _2, ... on collision), cap = min of the caps.
DglaPresentation coproduct(const DglaPresentation& p, const DglaPresentation& q);

/// Finite slice of the presented algebra: all Lie basis vectors of weight
/// <= cap with degree inside [lo, hi], with the realized differential.
class RealizedDgla {
 public:
  struct BasisEntry {
    int weight;
    int degree;
    std::size_t block_index;
    std::string name;
    TensorElement element;
  };

  struct D2Item {
    std::string name;
    bool checked;  // false when truncation clips the computation
    bool pass;
  };

  const DglaPresentation& presentation() const { return pres_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const ChainComplex& complex() const { return complex_; }
  const std::vector<BasisEntry>& basis() const { return basis_; }
  std::size_t dim(int degree) const {
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? 0 : it->second.size();
  }
  const BasisEntry& entry(int degree, std::size_t index_in_degree) const;

  /// Coordinates of a degree-homogeneous element in the realized basis of
  /// its degree. `clipped` is set when truncation already lost terms or the
  /// degree falls outside the window.
  std::optional<Vec> coords(int degree, const TensorElement& x, bool* clipped) const;
  TensorElement element(int degree, const Vec& coords) const;

  TensorElement d_apply(const TensorElement& x) const { return pres_.d(x); }
  /// Differential of the entry as realized coordinates was already built into
  /// complex(); d_clipped flags entries whose differential lost terms.
  bool d_clipped(const std::string& name) const;

  const std::vector<D2Item>& d2_report() const { return d2_; }
  bool d2_ok() const;

  friend RealizedDgla realize(const DglaPresentation& p, int lo, int hi);

 private:
  DglaPresentation pres_;
  int lo_ = 0, hi_ = -1;
  ChainComplex complex_;
  std::vector<BasisEntry> basis_;
  std::map<std::pair<int, int>, LieBlock> blocks_;  // (weight, degree)
  std::map<int, std::vector<std::size_t>> by_degree_;
  std::map<std::string, bool> d_clipped_;
  std::vector<D2Item> d2_;
};

RealizedDgla realize(const DglaPresentation& p, int lo, int hi);

/// Smallest window containing every realizable degree; {0, -1} when empty.
std::pair<int, int> natural_window(const DglaPresentation& p);

}  // namespace dgla

#endif
