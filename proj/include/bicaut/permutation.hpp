#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bicaut {

/// Bijection on [0, n) stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `image` is a bijection on [0, n).
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator[](int x) const { return image_[x]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;

  // (a * b)(x) = a(b(x)): apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// Order of the group generated by `gens`, by breadth-first closure.
// Returns nullopt once more than `cap` elements have been produced.
// Throws std::invalid_argument on mixed lengths.
std::optional<std::uint64_t> closure_order(std::span<const Permutation> gens,
                                           std::uint64_t cap);

// All elements of the generated group (identity first), or nullopt past cap.
std::optional<std::vector<Permutation>> closure_elements(
    std::span<const Permutation> gens, std::uint64_t cap);

// Orbits of the generated group on points, each sorted, ordered by minimum.
std::vector<std::vector<int>> orbits_of(std::span<const Permutation> gens,
                                        int n);

}  // namespace bicaut
