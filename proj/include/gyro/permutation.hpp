#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gyro {

using Element = std::uint32_t;

// A bijection on 0..n-1, stored as its image list.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Element> images) : images_(std::move(images)) {
    if (!is_bijection(images_)) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Element> images(n);
    std::iota(images.begin(), images.end(), Element{0});
    return Permutation(std::move(images), Unchecked{});
  }

  // Caller guarantees bijectivity (used on hot paths after a separate check).
  static Permutation from_trusted(std::vector<Element> images) {
    return Permutation(std::move(images), Unchecked{});
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator()(Element x) const { return images_.at(x); }
  const std::vector<Element>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    std::vector<Element> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      inv[images_[i]] = static_cast<Element>(i);
    }
    return Permutation(std::move(inv), Unchecked{});
  }

  // (this * other)(x) = this(other(x))
  Permutation compose(const Permutation& other) const {
    if (other.degree() != degree()) {
      throw std::invalid_argument("composing permutations of different degree");
    }
    std::vector<Element> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[other.images_[i]];
    return Permutation(std::move(out), Unchecked{});
  }

  static bool is_bijection(const std::vector<Element>& images) {
    std::vector<bool> seen(images.size(), false);
    for (Element v : images) {
      if (v >= images.size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Element> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Element> images_;
};

}  // namespace gyro
