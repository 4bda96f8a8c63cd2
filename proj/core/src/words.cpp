#include "dgla/words.hpp"

#include <set>
#include <stdexcept>

namespace dgla {

GeneratorSet GeneratorSet::make(std::vector<Generator> gens, int weight_cap) {
  if (weight_cap < 1) throw std::invalid_argument("weight cap must be >= 1");
  GeneratorSet s;
  s.weight_cap_ = weight_cap;
  for (const auto& g : gens) {
    if (g.name.empty()) throw std::invalid_argument("empty generator name");
    if (s.index_.count(g.name)) {
      throw std::invalid_argument("duplicate generator '" + g.name + "'");
    }
    s.index_[g.name] = s.gens_.size();
    s.gens_.push_back(g);
  }
  return s;
}

std::size_t GeneratorSet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw std::invalid_argument("unknown generator '" + name + "'");
  }
  return it->second;
}

std::optional<std::size_t> GeneratorSet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int word_degree(const GeneratorSet& gens, const TensorWord& w) {
  int d = 0;
  for (auto i : w) d += gens.degree(i);
  return d;
}

TensorElement TensorElement::single(TensorWord w, Rational c) {
  TensorElement e;
  e.add_term(w, c);
  return e;
}

void TensorElement::add_term(const TensorWord& w, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  truncated_ = truncated_ || other.truncated_;
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  truncated_ = truncated_ || other.truncated_;
  return *this;
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
  TensorElement r = *this;
  r += other;
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& other) const {
  TensorElement r = *this;
  r -= other;
  return r;
}

TensorElement TensorElement::scaled(const Rational& c) const {
  TensorElement r;
  r.truncated_ = truncated_;
  if (c == 0) return r;
  for (const auto& [w, coeff] : terms_) r.terms_.emplace(w, coeff * c);
  return r;
}

std::optional<int> TensorElement::degree(const GeneratorSet& gens) const {
  std::optional<int> d;
  for (const auto& [w, c] : terms_) {
    int wd = word_degree(gens, w);
    if (!d) {
      d = wd;
    } else if (*d != wd) {
      return std::nullopt;
    }
  }
  return d;
}

std::optional<int> TensorElement::weight() const {
  std::optional<int> n;
  for (const auto& [w, c] : terms_) {
    if (!n) {
      n = static_cast<int>(w.size());
    } else if (*n != static_cast<int>(w.size())) {
      return std::nullopt;
    }
  }
  return n;
}

std::string TensorElement::to_string(const GeneratorSet& gens) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + rational_string(c) + ")";
    for (auto i : w) out += "." + gens.gen(i).name;
  }
  if (truncated_) out += " [truncated]";
  return out;
}

TensorElement tensor_product(const GeneratorSet& gens, const TensorElement& x,
                             const TensorElement& y) {
  TensorElement r;
  if (x.truncated() || y.truncated()) r.mark_truncated();
  const std::size_t cap = static_cast<std::size_t>(gens.weight_cap());
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      if (wx.size() + wy.size() > cap) {
        r.mark_truncated();
        continue;
      }
      TensorWord w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      r.add_term(w, cx * cy);
    }
  }
  return r;
}

TensorElement bracket(const GeneratorSet& gens, const TensorElement& x,
                      const TensorElement& y) {
  TensorElement r;
  if (x.truncated() || y.truncated()) r.mark_truncated();
  const std::size_t cap = static_cast<std::size_t>(gens.weight_cap());
  for (const auto& [wx, cx] : x.terms()) {
    const int dx = word_degree(gens, wx);
    for (const auto& [wy, cy] : y.terms()) {
      if (wx.size() + wy.size() > cap) {
        r.mark_truncated();
        continue;
      }
      const int dy = word_degree(gens, wy);
      TensorWord xy = wx;
      xy.insert(xy.end(), wy.begin(), wy.end());
      TensorWord yx = wy;
      yx.insert(yx.end(), wx.begin(), wx.end());
      const Rational c = cx * cy;
      r.add_term(xy, c);
      r.add_term(yx, ((dx * dy) % 2 == 0) ? -c : c);
    }
  }
  return r;
}

TensorElement nested_bracket(const GeneratorSet& gens, const TensorWord& w) {
  if (w.empty()) return TensorElement();
  TensorElement acc = TensorElement::single({w.back()});
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    acc = bracket(gens, TensorElement::single({w[i]}), acc);
  }
  return acc;
}

TensorElement dynkin_rho(const GeneratorSet& gens, const TensorElement& x) {
  TensorElement r;
  if (x.truncated()) r.mark_truncated();
  for (const auto& [w, c] : x.terms()) {
    if (w.empty()) continue;  // rho kills the weight-zero component
    const Rational factor = c / Rational(w.size());
    r += nested_bracket(gens, w).scaled(factor);
  }
  return r;
}

namespace {

void enumerate_words(const GeneratorSet& gens, int weight, int degree,
                     TensorWord& prefix, int partial_degree,
                     std::vector<TensorWord>& out) {
  if (static_cast<int>(prefix.size()) == weight) {
    if (partial_degree == degree) out.push_back(prefix);
    return;
  }
  for (std::uint32_t i = 0; i < gens.size(); ++i) {
    prefix.push_back(i);
    enumerate_words(gens, weight, degree, prefix, partial_degree + gens.degree(i), out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TensorWord> tensor_basis(const GeneratorSet& gens, int weight, int degree) {
  if (weight < 1 || weight > gens.weight_cap()) {
    throw std::invalid_argument("tensor_basis: weight outside [1, cap]");
  }
  std::vector<TensorWord> out;
  TensorWord prefix;
  enumerate_words(gens, weight, degree, prefix, 0, out);
  return out;
}

std::vector<int> degrees_for_weight(const GeneratorSet& gens, int weight) {
  std::set<int> sums = {0};
  for (int step = 0; step < weight; ++step) {
    std::set<int> next;
    for (int s : sums) {
      for (std::size_t i = 0; i < gens.size(); ++i) next.insert(s + gens.degree(i));
    }
    sums = std::move(next);
  }
  if (gens.size() == 0) return {};
  return {sums.begin(), sums.end()};
}

TensorElement apply_derivation(const GeneratorSet& gens,
                               const std::vector<TensorElement>& images, int r,
                               const TensorElement& x) {
  if (images.size() != gens.size()) {
    throw std::invalid_argument("apply_derivation: one image per generator required");
  }
  TensorElement out;
  if (x.truncated()) out.mark_truncated();
  const std::size_t cap = static_cast<std::size_t>(gens.weight_cap());
  for (const auto& [w, c] : x.terms()) {
    int prefix_degree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const TensorElement& im = images[w[i]];
      if (im.truncated()) out.mark_truncated();
      const bool flip = ((r * prefix_degree) % 2) != 0;
      for (const auto& [iw, ic] : im.terms()) {
        if (w.size() - 1 + iw.size() > cap) {
          out.mark_truncated();
          continue;
        }
        TensorWord nw;
        nw.reserve(w.size() - 1 + iw.size());
        nw.insert(nw.end(), w.begin(), w.begin() + i);
        nw.insert(nw.end(), iw.begin(), iw.end());
        nw.insert(nw.end(), w.begin() + i + 1, w.end());
        out.add_term(nw, flip ? -(c * ic) : (c * ic));
      }
      prefix_degree += gens.degree(w[i]);
    }
  }
  return out;
}

}  // namespace dgla
