#include "dgla/complex_ops.hpp"

#include <stdexcept>
#include <string>

namespace dgla {

namespace {

std::string degree_token(int degree) {
  return degree < 0 ? "m" + std::to_string(-degree) : std::to_string(degree);
}

}  // namespace

Cohomology cohomology(const ChainComplex& c) {
  if (!c.d_squared_is_zero()) {
    throw std::invalid_argument("cohomology: d^2 != 0");
  }
  Cohomology out;
  for (int deg : c.space.degrees()) {
    const std::size_t n = c.space.dim(deg);
    RowReduction at = row_reduce(c.d.block(deg));
    RowReduction below = row_reduce(c.d.block(deg - 1));
    out.cocycle_dims[deg] = at.kernel_basis.size();
    out.coboundary_dims[deg] = below.rank;
    out.dims[deg] = at.kernel_basis.size() - below.rank;

    RowSpan span(n);
    for (const auto& b : below.image_basis) span.insert(b);
    std::vector<Vec> reps;
    for (const auto& z : at.kernel_basis) {
      if (span.insert(z)) reps.push_back(z);
    }
    out.representatives[deg] = std::move(reps);
  }
  return out;
}

Splitting split_complex(const ChainComplex& c) {
  if (!c.d_squared_is_zero()) {
    throw std::invalid_argument("split_complex: d^2 != 0");
  }

  // Per degree: V = B (+) H-reps (+) C, with C a complement of the cocycles
  // chosen among unit vectors and B^{n+1} spanned by d(C^n).
  std::map<int, std::vector<Vec>> kernels;    // Z^n basis
  std::map<int, std::vector<Vec>> coexact;    // C^n basis
  std::map<int, std::vector<Vec>> boundaries; // B^n basis, aligned with C^{n-1}
  std::map<int, std::vector<Vec>> harmonic;   // H^n representatives

  for (int deg : c.space.degrees()) {
    const std::size_t n = c.space.dim(deg);
    RowReduction red = row_reduce(c.d.block(deg));
    kernels[deg] = red.kernel_basis;

    RowSpan span(n);
    for (const auto& z : red.kernel_basis) span.insert(z);
    std::vector<Vec> comp;
    for (std::size_t i = 0; i < n && span.dim() < n; ++i) {
      Vec e(n);
      e[i] = 1;
      if (span.insert(e)) comp.push_back(std::move(e));
    }
    coexact[deg] = std::move(comp);
  }
  for (int deg : c.space.degrees()) {
    const Matrix d_below = c.d.block(deg - 1);
    std::vector<Vec> bs;
    auto it = coexact.find(deg - 1);
    if (it != coexact.end()) {
      for (const auto& cvec : it->second) bs.push_back(d_below.apply(cvec));
    }
    boundaries[deg] = std::move(bs);

    RowSpan span(c.space.dim(deg));
    for (const auto& b : boundaries[deg]) span.insert(b);
    std::vector<Vec> reps;
    for (const auto& z : kernels[deg]) {
      if (span.insert(z)) reps.push_back(z);
    }
    harmonic[deg] = std::move(reps);
  }

  std::vector<std::pair<std::string, int>> h_names;
  std::vector<std::pair<std::string, int>> w_names;
  for (int deg : c.space.degrees()) {
    for (std::size_t i = 0; i < harmonic[deg].size(); ++i) {
      h_names.emplace_back("h_" + degree_token(deg) + "_" + std::to_string(i), deg);
    }
    const std::size_t wdim = boundaries[deg].size() + coexact[deg].size();
    for (std::size_t i = 0; i < wdim; ++i) {
      w_names.emplace_back("w_" + degree_token(deg) + "_" + std::to_string(i), deg);
    }
  }
  GradedSpace h_space = GradedSpace::from_basis(h_names);
  GradedSpace w_space = GradedSpace::from_basis(w_names);

  Splitting out;
  out.harmonic = ChainComplex::zero_complex(h_space);

  DegreeMap w_d = DegreeMap::zero(w_space, w_space, 1);
  // W^n is ordered as [B^n | C^n]; d sends the j-th C^n vector to the j-th
  // B^{n+1} vector and kills B^n.
  for (int deg : w_space.degrees()) {
    const std::size_t b_lo = boundaries.count(deg) ? boundaries[deg].size() : 0;
    const std::size_t c_lo = coexact.count(deg) ? coexact[deg].size() : 0;
    const std::size_t b_hi = boundaries.count(deg + 1) ? boundaries[deg + 1].size() : 0;
    const std::size_t c_hi = coexact.count(deg + 1) ? coexact[deg + 1].size() : 0;
    if (c_lo == 0 || b_hi + c_hi == 0) continue;
    Matrix blk(b_hi + c_hi, b_lo + c_lo);
    for (std::size_t j = 0; j < c_lo; ++j) blk.at(j, b_lo + j) = 1;
    w_d.set_block(deg, std::move(blk));
  }
  out.acyclic = ChainComplex::make(w_space, w_d);

  out.embed_h = DegreeMap::zero(h_space, c.space, 0);
  out.embed_w = DegreeMap::zero(w_space, c.space, 0);
  std::map<int, Matrix> basis_change;  // columns [B | H | C] per degree
  for (int deg : c.space.degrees()) {
    const std::size_t n = c.space.dim(deg);
    std::vector<Vec> h_cols = harmonic[deg];
    if (!h_cols.empty()) {
      out.embed_h.set_block(deg, Matrix::from_columns(h_cols, n));
    }
    std::vector<Vec> w_cols = boundaries[deg];
    for (const auto& v : coexact[deg]) w_cols.push_back(v);
    if (!w_cols.empty()) {
      out.embed_w.set_block(deg, Matrix::from_columns(w_cols, n));
    }
    std::vector<Vec> all = boundaries[deg];
    for (const auto& v : harmonic[deg]) all.push_back(v);
    for (const auto& v : coexact[deg]) all.push_back(v);
    basis_change.emplace(deg, Matrix::from_columns(all, n));
  }

  out.project_h = DegreeMap::zero(c.space, h_space, 0);
  out.project_w = DegreeMap::zero(c.space, w_space, 0);
  for (int deg : c.space.degrees()) {
    const std::size_t n = c.space.dim(deg);
    const std::size_t nb = boundaries[deg].size();
    const std::size_t nh = harmonic[deg].size();
    const std::size_t nc = coexact[deg].size();
    Matrix inv = inverse(basis_change.at(deg));  // rows give coordinates
    if (nh > 0) {
      Matrix ph(nh, n);
      for (std::size_t i = 0; i < nh; ++i) {
        for (std::size_t j = 0; j < n; ++j) ph.at(i, j) = inv.at(nb + i, j);
      }
      out.project_h.set_block(deg, std::move(ph));
    }
    if (nb + nc > 0) {
      Matrix pw(nb + nc, n);
      for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = 0; j < n; ++j) pw.at(i, j) = inv.at(i, j);
      }
      for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t j = 0; j < n; ++j) pw.at(nb + i, j) = inv.at(nb + nh + i, j);
      }
      out.project_w.set_block(deg, std::move(pw));
    }
  }

  // gamma(d c_j) = -c_j, gamma(C) = 0; then d gamma + gamma d = -Id_W.
  out.gamma = DegreeMap::zero(w_space, w_space, -1);
  for (int deg : w_space.degrees()) {
    const std::size_t b_here = boundaries[deg].size();
    const std::size_t c_here = coexact[deg].size();
    const std::size_t b_below = boundaries.count(deg - 1) ? boundaries[deg - 1].size() : 0;
    const std::size_t c_below = coexact.count(deg - 1) ? coexact[deg - 1].size() : 0;
    if (b_here == 0 || b_below + c_below == 0) continue;
    Matrix blk(b_below + c_below, b_here + c_here);
    for (std::size_t j = 0; j < b_here; ++j) blk.at(b_below + j, j) = -1;
    out.gamma.set_block(deg, std::move(blk));
  }
  return out;
}

DegreeMap normalize_homotopy(const ChainComplex& w, const DegreeMap& gamma) {
  if (!(gamma.source == w.space) || !(gamma.target == w.space) || gamma.shift != -1) {
    throw std::invalid_argument("normalize_homotopy: gamma must have degree -1 on the complex");
  }
  DegreeMap anti = w.d.compose(gamma) + gamma.compose(w.d) + DegreeMap::identity(w.space);
  if (!anti.is_zero()) {
    throw std::invalid_argument("normalize_homotopy: d gamma + gamma d != -Id");
  }
  DegreeMap h = gamma.compose(w.d.compose(gamma)).scaled(-1);
  DegreeMap check = w.d.compose(h) + h.compose(w.d) + DegreeMap::identity(w.space);
  if (!check.is_zero() || !h.compose(h).is_zero()) {
    throw std::logic_error("normalize_homotopy: output identities failed");
  }
  return h;
}

Truncation truncate(const ChainComplex& c) {
  if (!c.d_squared_is_zero()) {
    throw std::invalid_argument("truncate: d^2 != 0");
  }
  RowReduction at_minus1 = row_reduce(c.d.block(-1));
  const std::size_t full = c.space.dim(-1);
  const bool kernel_full = at_minus1.kernel_basis.size() == full;

  std::vector<std::pair<std::string, int>> names;
  for (int deg : c.space.degrees()) {
    if (deg < -1) {
      for (const auto& n : c.space.names(deg)) names.emplace_back(n, deg);
    } else if (deg == -1) {
      if (kernel_full) {
        for (const auto& n : c.space.names(deg)) names.emplace_back(n, deg);
      } else {
        for (std::size_t i = 0; i < at_minus1.kernel_basis.size(); ++i) {
          names.emplace_back("tau_m1_" + std::to_string(i), -1);
        }
      }
    }
  }
  GradedSpace space = GradedSpace::from_basis(names);

  DegreeMap inclusion = DegreeMap::zero(space, c.space, 0);
  for (int deg : space.degrees()) {
    if (deg < -1 || kernel_full) {
      inclusion.set_block(deg, Matrix::identity(c.space.dim(deg)));
    } else {
      inclusion.set_block(deg, Matrix::from_columns(at_minus1.kernel_basis, full));
    }
  }

  DegreeMap d = DegreeMap::zero(space, space, 1);
  for (int deg : space.degrees()) {
    if (deg + 1 < -1 || (deg + 1 == -1 && kernel_full)) {
      d.set_block(deg, c.d.block(deg));
    } else if (deg + 1 == -1) {
      // express d(V^{-2}) in the kernel basis
      const Matrix k = Matrix::from_columns(at_minus1.kernel_basis, full);
      const Matrix below = c.d.block(-2);
      Matrix blk(at_minus1.kernel_basis.size(), below.cols());
      for (std::size_t j = 0; j < below.cols(); ++j) {
        auto x = solve(k, below.column(j));
        if (!x) throw std::logic_error("truncate: image not inside kernel");
        for (std::size_t i = 0; i < x->size(); ++i) blk.at(i, j) = (*x)[i];
      }
      d.set_block(deg, std::move(blk));
    }
  }
  Truncation out;
  out.complex = ChainComplex::make(std::move(space), std::move(d));
  out.inclusion = std::move(inclusion);
  return out;
}

}  // namespace dgla
