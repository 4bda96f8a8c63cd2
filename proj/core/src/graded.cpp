#include "dgla/graded.hpp"

#include <stdexcept>
#include <tuple>

namespace dgla {

GradedSpace GradedSpace::from_basis(
    const std::vector<std::pair<std::string, int>>& basis) {
  GradedSpace s;
  for (const auto& [name, degree] : basis) {
    if (name.empty()) throw std::invalid_argument("empty basis name");
    if (s.index_.count(name)) {
      throw std::invalid_argument("duplicate basis name '" + name + "'");
    }
    auto& names = s.basis_[degree];
    s.index_[name] = {degree, names.size()};
    names.push_back(name);
  }
  return s;
}

std::size_t GradedSpace::dim(int degree) const {
  auto it = basis_.find(degree);
  return it == basis_.end() ? 0 : it->second.size();
}

std::size_t GradedSpace::total_dim() const {
  std::size_t n = 0;
  for (const auto& [deg, names] : basis_) n += names.size();
  return n;
}

std::vector<int> GradedSpace::degrees() const {
  std::vector<int> ds;
  ds.reserve(basis_.size());
  for (const auto& [deg, names] : basis_) ds.push_back(deg);
  return ds;
}

const std::vector<std::string>& GradedSpace::names(int degree) const {
  static const std::vector<std::string> kEmpty;
  auto it = basis_.find(degree);
  return it == basis_.end() ? kEmpty : it->second;
}

const std::string& GradedSpace::name(int degree, std::size_t index) const {
  const auto& ns = names(degree);
  if (index >= ns.size()) throw std::out_of_range("basis index out of range");
  return ns[index];
}

std::optional<std::pair<int, std::size_t>> GradedSpace::find(
    const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DegreeMap DegreeMap::zero(const GradedSpace& source, const GradedSpace& target,
                          int shift) {
  DegreeMap m;
  m.source = source;
  m.target = target;
  m.shift = shift;
  return m;
}

DegreeMap DegreeMap::identity(const GradedSpace& space) {
  DegreeMap m = zero(space, space, 0);
  for (int deg : space.degrees()) {
    m.blocks[deg] = Matrix::identity(space.dim(deg));
  }
  return m;
}

Matrix DegreeMap::block(int n) const {
  auto it = blocks.find(n);
  if (it != blocks.end()) return it->second;
  return Matrix(target.dim(n + shift), source.dim(n));
}

void DegreeMap::set_block(int n, Matrix m) {
  if (m.rows() != target.dim(n + shift) || m.cols() != source.dim(n)) {
    throw std::invalid_argument("DegreeMap block shape mismatch at degree " +
                                std::to_string(n));
  }
  if (m.is_zero()) {
    blocks.erase(n);
  } else {
    blocks[n] = std::move(m);
  }
}

void DegreeMap::set_entry(const std::string& source_name,
                          const std::string& target_name, const Rational& value) {
  auto s = source.find(source_name);
  auto t = target.find(target_name);
  if (!s) throw std::invalid_argument("unknown source basis name '" + source_name + "'");
  if (!t) throw std::invalid_argument("unknown target basis name '" + target_name + "'");
  if (t->first != s->first + shift) {
    throw std::invalid_argument("entry " + source_name + " -> " + target_name +
                                " violates degree shift " + std::to_string(shift));
  }
  auto it = blocks.find(s->first);
  if (it == blocks.end()) {
    it = blocks.emplace(s->first, Matrix(target.dim(t->first), source.dim(s->first)))
             .first;
  }
  it->second.at(t->second, s->second) = value;
}

bool DegreeMap::is_zero() const {
  for (const auto& [deg, m] : blocks) {
    if (!m.is_zero()) return false;
  }
  return true;
}

DegreeMap DegreeMap::compose(const DegreeMap& inner) const {
  if (!(inner.target == source)) {
    throw std::invalid_argument("DegreeMap composition: middle spaces differ");
  }
  DegreeMap out = zero(inner.source, target, shift + inner.shift);
  for (int deg : inner.source.degrees()) {
    Matrix b = block(deg + inner.shift) * inner.block(deg);
    if (!b.is_zero()) out.blocks[deg] = std::move(b);
  }
  return out;
}

DegreeMap DegreeMap::operator+(const DegreeMap& other) const {
  if (!(source == other.source) || !(target == other.target) || shift != other.shift) {
    throw std::invalid_argument("DegreeMap addition shape mismatch");
  }
  DegreeMap out = zero(source, target, shift);
  for (int deg : source.degrees()) {
    Matrix b = block(deg) + other.block(deg);
    if (!b.is_zero()) out.blocks[deg] = std::move(b);
  }
  return out;
}

DegreeMap DegreeMap::operator-(const DegreeMap& other) const {
  return *this + other.scaled(-1);
}

DegreeMap DegreeMap::scaled(const Rational& factor) const {
  DegreeMap out = zero(source, target, shift);
  if (factor == 0) return out;
  for (const auto& [deg, m] : blocks) out.blocks[deg] = m.scaled(factor);
  return out;
}

std::optional<std::tuple<int, std::size_t, std::size_t, Rational>>
DegreeMap::max_entry() const {
  std::optional<std::tuple<int, std::size_t, std::size_t, Rational>> best;
  for (const auto& [deg, m] : blocks) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rational& v = m.at(i, j);
        if (v == 0) continue;
        if (!best || abs(v) > abs(std::get<3>(*best))) {
          best = {deg, i, j, v};
        }
      }
    }
  }
  return best;
}

ChainComplex ChainComplex::make(GradedSpace space, DegreeMap d) {
  if (!(d.source == space) || !(d.target == space) || d.shift != 1) {
    throw std::invalid_argument("differential must be an endo-map of degree +1");
  }
  ChainComplex c;
  c.space = std::move(space);
  c.d = std::move(d);
  return c;
}

ChainComplex ChainComplex::zero_complex(GradedSpace space) {
  DegreeMap d = DegreeMap::zero(space, space, 1);
  return make(std::move(space), std::move(d));
}

bool ChainComplex::d_squared_is_zero() const {
  return d.compose(d).is_zero();
}

}  // namespace dgla
