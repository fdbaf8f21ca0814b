#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cubepaths {

// Dimension caps: CubeSet bitsets up to 2^24 bits, flow networks up to 2^16 nodes.
inline constexpr int kMaxDim = 24;
inline constexpr int kMaxFlowDim = 16;

// A vertex of Q_n: subset of {1..n} as a bitmask, element i <-> bit i-1.
struct CubeVertex {
  std::uint32_t mask = 0;
  int dim = 0;

  int weight() const { return std::popcount(mask); }
  bool contains_element(int i) const { return (mask >> (i - 1)) & 1u; }

  bool operator==(const CubeVertex&) const = default;
};

// A family S subseteq P[n] as a characteristic bitset over all 2^n masks.
class CubeSet {
 public:
  CubeSet() = default;
  explicit CubeSet(int n);
  CubeSet(int n, std::initializer_list<std::uint32_t> masks);

  static CubeSet full(int n);

  int dim() const { return dim_; }
  std::uint64_t universe_size() const { return std::uint64_t{1} << dim_; }
  std::uint64_t size() const;
  bool empty() const { return size() == 0; }

  bool contains(std::uint32_t mask) const {
    return (words_[mask >> 6] >> (mask & 63)) & 1u;
  }
  void insert(std::uint32_t mask) { words_[mask >> 6] |= std::uint64_t{1} << (mask & 63); }
  void erase(std::uint32_t mask) { words_[mask >> 6] &= ~(std::uint64_t{1} << (mask & 63)); }

  CubeSet complement() const;
  bool subset_of(const CubeSet& other) const;
  bool intersects(const CubeSet& other) const;

  CubeSet operator|(const CubeSet& other) const;
  CubeSet operator&(const CubeSet& other) const;
  CubeSet operator-(const CubeSet& other) const;

  bool operator==(const CubeSet&) const = default;

  std::vector<std::uint32_t> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        int b = std::countr_zero(word);
        f(static_cast<std::uint32_t>((w << 6) | unsigned(b)));
        word &= word - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  int dim_ = 0;
  std::vector<std::uint64_t> words_{0};  // default: dim 0, empty

  void check_compatible(const CubeSet& other) const;
};

// Throws std::invalid_argument on dimension mismatch or n outside [1, kMaxDim].
CubeSet make_cube_set(int n, const std::vector<CubeVertex>& members);

bool is_i_down(const CubeSet& s, int i);  // i is 1-based
bool is_down_set(const CubeSet& s);
bool is_up_set(const CubeSet& s);

// Binary order: x < y iff max(x xor y) in y; coincides with numeric mask order.
std::strong_ordering compare_binary(const CubeVertex& x, const CubeVertex& y);

// Simplicial order: by weight, ties by min(x xor y) in x.
std::strong_ordering compare_simplicial(const CubeVertex& x, const CubeVertex& y);

enum class VertexOrder { binary, simplicial };

// All 2^n masks sorted ascending in the given order.
std::vector<std::uint32_t> sorted_masks(int n, VertexOrder order);

// First m vertices of P[n] in the given order.
CubeSet initial_segment(int n, std::uint64_t m, VertexOrder order);

// The four i-section parts of S. Members all avoid element i; ambient
// dimension stays n, so "x times {i}" is just setting bit i-1.
struct SectionDecomposition {
  int axis = 0;  // the coordinate i, 1-based
  CubeSet T, U, V, W;
};

SectionDecomposition sections(const CubeSet& s, int i);

std::string mask_to_string(std::uint32_t mask, int dim);

}  // namespace cubepaths
