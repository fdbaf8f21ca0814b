#include "cubepaths/cube_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubepaths {

namespace {

std::size_t word_count(int n) {
  std::uint64_t bits = std::uint64_t{1} << n;
  return static_cast<std::size_t>((bits + 63) >> 6);
}

void check_dim(int n) {
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("dimension must be in [1, " + std::to_string(kMaxDim) +
                                "], got " + std::to_string(n));
  }
}

void check_coord(int i, int n) {
  if (i < 1 || i > n) {
    throw std::out_of_range("coordinate " + std::to_string(i) + " out of range [1, " +
                            std::to_string(n) + "]");
  }
}

// Mask clearing the unused high bits of the last word when 2^n < 64.
std::uint64_t tail_mask(int n) {
  if (n >= 6) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
}

}  // namespace

CubeSet::CubeSet(int n) : dim_(n), words_(word_count(n), 0) { check_dim(n); }

CubeSet::CubeSet(int n, std::initializer_list<std::uint32_t> masks) : CubeSet(n) {
  for (std::uint32_t m : masks) {
    if (m >= universe_size()) throw std::invalid_argument("mask exceeds dimension");
    insert(m);
  }
}

CubeSet CubeSet::full(int n) {
  CubeSet s(n);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.words_.back() &= tail_mask(n);
  return s;
}

std::uint64_t CubeSet::size() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += std::uint64_t(std::popcount(w));
  return total;
}

CubeSet CubeSet::complement() const {
  CubeSet r = *this;
  for (auto& w : r.words_) w = ~w;
  r.words_.back() &= tail_mask(dim_);
  return r;
}

void CubeSet::check_compatible(const CubeSet& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch between cube sets");
}

bool CubeSet::subset_of(const CubeSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool CubeSet::intersects(const CubeSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

CubeSet CubeSet::operator|(const CubeSet& other) const {
  check_compatible(other);
  CubeSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
  return r;
}

CubeSet CubeSet::operator&(const CubeSet& other) const {
  check_compatible(other);
  CubeSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

CubeSet CubeSet::operator-(const CubeSet& other) const {
  check_compatible(other);
  CubeSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~other.words_[i];
  return r;
}

std::vector<std::uint32_t> CubeSet::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(size());
  for_each([&](std::uint32_t m) { out.push_back(m); });
  return out;
}

CubeSet make_cube_set(int n, const std::vector<CubeVertex>& members) {
  check_dim(n);
  CubeSet s(n);
  for (const CubeVertex& v : members) {
    if (v.dim != n) {
      throw std::invalid_argument("vertex dimension " + std::to_string(v.dim) +
                                  " does not match set dimension " + std::to_string(n));
    }
    if (v.mask >= s.universe_size()) throw std::invalid_argument("vertex mask out of range");
    s.insert(v.mask);
  }
  return s;
}

bool is_i_down(const CubeSet& s, int i) {
  check_coord(i, s.dim());
  std::uint32_t bit = std::uint32_t{1} << (i - 1);
  bool ok = true;
  s.for_each([&](std::uint32_t m) {
    if ((m & bit) && !s.contains(m & ~bit)) ok = false;
  });
  return ok;
}

bool is_down_set(const CubeSet& s) {
  bool ok = true;
  s.for_each([&](std::uint32_t m) {
    std::uint32_t rest = m;
    while (rest) {
      std::uint32_t bit = rest & (0u - rest);
      if (!s.contains(m & ~bit)) {
        ok = false;
        return;
      }
      rest &= rest - 1;
    }
  });
  return ok;
}

bool is_up_set(const CubeSet& s) { return is_down_set(s.complement()); }

std::strong_ordering compare_binary(const CubeVertex& x, const CubeVertex& y) {
  if (x.dim != y.dim) throw std::invalid_argument("dimension mismatch in binary comparison");
  std::uint32_t diff = x.mask ^ y.mask;
  if (diff == 0) return std::strong_ordering::equal;
  std::uint32_t top = std::uint32_t{1} << (31 - std::countl_zero(diff));
  return (y.mask & top) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering compare_simplicial(const CubeVertex& x, const CubeVertex& y) {
  if (x.dim != y.dim) throw std::invalid_argument("dimension mismatch in simplicial comparison");
  if (x.weight() != y.weight()) return x.weight() <=> y.weight();
  std::uint32_t diff = x.mask ^ y.mask;
  if (diff == 0) return std::strong_ordering::equal;
  std::uint32_t low = diff & (0u - diff);
  return (x.mask & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<std::uint32_t> sorted_masks(int n, VertexOrder order) {
  check_dim(n);
  std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint32_t> masks(total);
  for (std::uint64_t m = 0; m < total; ++m) masks[m] = static_cast<std::uint32_t>(m);
  if (order == VertexOrder::simplicial) {
    std::sort(masks.begin(), masks.end(), [n](std::uint32_t a, std::uint32_t b) {
      return compare_simplicial({a, n}, {b, n}) < 0;
    });
  }
  return masks;
}

CubeSet initial_segment(int n, std::uint64_t m, VertexOrder order) {
  check_dim(n);
  if (m > (std::uint64_t{1} << n)) throw std::out_of_range("initial segment length exceeds 2^n");
  CubeSet s(n);
  if (order == VertexOrder::binary) {
    for (std::uint64_t v = 0; v < m; ++v) s.insert(static_cast<std::uint32_t>(v));
    return s;
  }
  auto masks = sorted_masks(n, order);
  for (std::uint64_t v = 0; v < m; ++v) s.insert(masks[v]);
  return s;
}

SectionDecomposition sections(const CubeSet& s, int i) {
  check_coord(i, s.dim());
  std::uint32_t bit = std::uint32_t{1} << (i - 1);
  SectionDecomposition d{i, CubeSet(s.dim()), CubeSet(s.dim()), CubeSet(s.dim()), CubeSet(s.dim())};
  std::uint64_t total = s.universe_size();
  for (std::uint64_t m = 0; m < total; ++m) {
    if (m & bit) continue;
    std::uint32_t lo = static_cast<std::uint32_t>(m);
    bool in_lo = s.contains(lo);
    bool in_hi = s.contains(lo | bit);
    if (in_lo && in_hi) d.T.insert(lo);
    else if (in_lo) d.U.insert(lo);
    else if (in_hi) d.V.insert(lo);
    else d.W.insert(lo);
  }
  return d;
}

std::string mask_to_string(std::uint32_t mask, int dim) {
  std::string out = "{";
  bool first = true;
  for (int i = 1; i <= dim; ++i) {
    if (mask & (std::uint32_t{1} << (i - 1))) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  }
  out += "}";
  return out;
}

}  // namespace cubepaths
