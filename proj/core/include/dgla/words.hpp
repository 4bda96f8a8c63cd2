#ifndef DGLA_WORDS_HPP
#define DGLA_WORDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgla/matrix.hpp"

namespace dgla {

struct Generator {
  std::string name;
  int degree = 0;
};

/// Ordered graded generators plus the hard weight truncation W.
/// Every bracket whose weight would exceed W is dropped; results that lost
/// terms this way carry a `truncated` flag.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  static GeneratorSet make(std::vector<Generator> gens, int weight_cap);

  std::size_t size() const { return gens_.size(); }
  int weight_cap() const { return weight_cap_; }
  const Generator& gen(std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& gens() const { return gens_; }
  int degree(std::size_t i) const { return gens_.at(i).degree; }
  std::size_t index_of(const std::string& name) const;  // throws on unknown
  std::optional<std::size_t> find(const std::string& name) const;

 private:
  std::vector<Generator> gens_;
  std::map<std::string, std::size_t> index_;
  int weight_cap_ = 1;
};

/// A pure tensor word: a sequence of generator indices. Length = weight.
using TensorWord = std::vector<std::uint32_t>;

int word_degree(const GeneratorSet& gens, const TensorWord& w);

/// Finite rational combination of tensor words, the working currency for
/// everything in T(V). No zero coefficients are stored.
class TensorElement {
 public:
  TensorElement() = default;
  static TensorElement single(TensorWord w, Rational c = 1);

  const std::map<TensorWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }

  void add_term(const TensorWord& w, const Rational& c);
  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  TensorElement operator+(const TensorElement& other) const;
  TensorElement operator-(const TensorElement& other) const;
  TensorElement scaled(const Rational& c) const;
  bool operator==(const TensorElement& other) const { return terms_ == other.terms_; }

  /// Degree of a degree-homogeneous element; nullopt when mixed or zero.
  std::optional<int> degree(const GeneratorSet& gens) const;
  /// Weight of a weight-homogeneous element; nullopt when mixed or zero.
  std::optional<int> weight() const;

  std::string to_string(const GeneratorSet& gens) const;

 private:
  std::map<TensorWord, Rational> terms_;
  bool truncated_ = false;
};

/// Concatenation product of T(V), truncated at the weight cap.
TensorElement tensor_product(const GeneratorSet& gens, const TensorElement& x,
                             const TensorElement& y);

/// Graded commutator [x,y] = xy - (-1)^{|x||y|} yx, truncated at the cap.
TensorElement bracket(const GeneratorSet& gens, const TensorElement& x,
                      const TensorElement& y);

/// Right-nested bracketing [v1,[v2,...[v_{n-1},v_n]...]] of a word.
TensorElement nested_bracket(const GeneratorSet& gens, const TensorWord& w);

/// Dynkin projector: word of weight n maps to (1/n) times its right-nested
/// bracketing; the weight-zero component maps to zero.
TensorElement dynkin_rho(const GeneratorSet& gens, const TensorElement& x);

/// All tensor words of the given weight and total degree, ordered
/// lexicographically by generator index. Throws when weight is outside
/// [1, weight_cap].
std::vector<TensorWord> tensor_basis(const GeneratorSet& gens, int weight, int degree);

/// Total degrees that weight-w words can take.
std::vector<int> degrees_for_weight(const GeneratorSet& gens, int weight);

/// Degree-r derivation determined by generator images, applied by the graded
/// Leibniz rule; words pushed beyond the cap are dropped and flagged.
TensorElement apply_derivation(const GeneratorSet& gens,
                               const std::vector<TensorElement>& images, int r,
                               const TensorElement& x);

}  // namespace dgla

#endif
