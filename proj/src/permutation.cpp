#include "bicaut/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace bicaut {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (int y : image_) {
    if (y < 0 || y >= size() || hit[y]) {
      throw std::invalid_argument("not a permutation");
    }
    hit[y] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  Permutation out;
  out.image_.resize(a.size());
  for (int i = 0; i < a.size(); ++i) out.image_[i] = a.image_[b.image_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image_.resize(image_.size());
  for (int i = 0; i < size(); ++i) out.image_[image_[i]] = i;
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[i] || image_[i] == i) continue;
    out += '(';
    for (int x = i; !seen[x]; x = image_[x]) {
      seen[x] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.image()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

namespace {

int common_length(std::span<const Permutation> gens) {
  if (gens.empty()) return -1;
  const int n = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != n) throw std::invalid_argument("mixed permutation lengths");
  }
  return n;
}

}  // namespace

std::optional<std::vector<Permutation>> closure_elements(
    std::span<const Permutation> gens, std::uint64_t cap) {
  const int n = common_length(gens);
  if (n < 0) return std::vector<Permutation>{Permutation::identity(0)};
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation::identity(n)};
  seen.insert(elements.front());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = g * elements[i];
      if (seen.insert(next).second) {
        if (elements.size() >= cap) return std::nullopt;
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::optional<std::uint64_t> closure_order(std::span<const Permutation> gens,
                                           std::uint64_t cap) {
  auto elements = closure_elements(gens, cap);
  if (!elements) return std::nullopt;
  return elements->size();
}

std::vector<std::vector<int>> orbits_of(std::span<const Permutation> gens,
                                        int n) {
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> orbit{s};
    label[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : gens) {
        int y = g[orbit[i]];
        if (label[y] < 0) {
          label[y] = label[s];
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace bicaut
