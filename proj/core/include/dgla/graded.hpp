#ifndef DGLA_GRADED_HPP
#define DGLA_GRADED_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgla/matrix.hpp"

namespace dgla {

/// Finite named basis per integer degree. Degrees with no basis vectors are
/// simply absent; names are unique across all degrees.
class GradedSpace {
 public:
  GradedSpace() = default;

  /// Builds from (name, degree) pairs; throws on duplicate names.
  static GradedSpace from_basis(const std::vector<std::pair<std::string, int>>& basis);

  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  bool empty() const { return basis_.empty(); }

  /// Degrees with dimension >= 1, ascending.
  std::vector<int> degrees() const;
  const std::vector<std::string>& names(int degree) const;
  const std::string& name(int degree, std::size_t index) const;

  /// (degree, index) of a basis name.
  std::optional<std::pair<int, std::size_t>> find(const std::string& name) const;

  bool operator==(const GradedSpace& other) const { return basis_ == other.basis_; }

 private:
  std::map<int, std::vector<std::string>> basis_;
  std::map<std::string, std::pair<int, std::size_t>> index_;
};

/// Degreewise collection of matrices representing an element of
/// Hom^shift(source, target): block(n) maps source^n into target^(n+shift).
/// Missing blocks are zero.
struct DegreeMap {
  GradedSpace source;
  GradedSpace target;
  int shift = 0;
  std::map<int, Matrix> blocks;

  static DegreeMap zero(const GradedSpace& source, const GradedSpace& target, int shift);
  static DegreeMap identity(const GradedSpace& space);

  /// Block at source degree n, materialized with the right shape.
  Matrix block(int n) const;
  void set_block(int n, Matrix m);  // validates the shape
  void set_entry(const std::string& source_name, const std::string& target_name,
                 const Rational& value);

  bool is_zero() const;

  DegreeMap compose(const DegreeMap& inner) const;  // this after inner
  DegreeMap operator+(const DegreeMap& other) const;
  DegreeMap operator-(const DegreeMap& other) const;
  DegreeMap scaled(const Rational& factor) const;

  /// Entry of largest absolute value among nonzero blocks, as a witness:
  /// (source degree, row, col, value). nullopt when the map is zero.
  std::optional<std::tuple<int, std::size_t, std::size_t, Rational>> max_entry() const;
};

/// A cochain complex: the differential has degree +1. d^2 = 0 is a testable
/// identity, not a construction invariant; validate() checks shapes only.
struct ChainComplex {
  GradedSpace space;
  DegreeMap d;

  static ChainComplex make(GradedSpace space, DegreeMap d);
  static ChainComplex zero_complex(GradedSpace space);

  bool d_squared_is_zero() const;
};

}  // namespace dgla

#endif
