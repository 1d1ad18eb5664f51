#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nckit/error.hpp"

namespace nckit {

using Block = std::vector<int>;

/// A set partition of {1..n}. Stored canonically as a restricted growth
/// string: label(e) is the index of the block containing e, and blocks are
/// numbered in order of their minimum. Equality is structural.
class Partition {
public:
  Partition() = default;

  /// Relabels arbitrary block labels (one per element, element i+1 at index
  /// i) into canonical form.
  static Partition from_labels(std::span<const int> labels) {
    if (labels.empty()) throw domain_error("partition of an empty ground set");
    Partition p;
    p.labels_.resize(labels.size());
    std::vector<std::pair<int, int>> seen; // (raw label, canonical index)
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto it = std::find_if(seen.begin(), seen.end(),
                             [&](const auto& s) { return s.first == labels[i]; });
      if (it == seen.end()) {
        seen.emplace_back(labels[i], static_cast<int>(seen.size()));
        p.labels_[i] = static_cast<int>(seen.size()) - 1;
      } else {
        p.labels_[i] = it->second;
      }
    }
    p.block_count_ = static_cast<int>(seen.size());
    return p;
  }

  /// Validates that `blocks` are nonempty, disjoint and cover {1..n}.
  static Partition from_blocks(int n, const std::vector<Block>& blocks) {
    if (n < 1) throw domain_error("partition of an empty ground set");
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw domain_error("empty block");
      for (int e : blocks[b]) {
        if (e < 1 || e > n) {
          throw domain_error("element " + std::to_string(e) + " outside {1.." +
                             std::to_string(n) + "}");
        }
        if (labels[e - 1] != -1) {
          throw domain_error("element " + std::to_string(e) + " in two blocks");
        }
        labels[e - 1] = static_cast<int>(b);
      }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
      throw domain_error("blocks do not cover {1.." + std::to_string(n) + "}");
    }
    return from_labels(labels);
  }

  static Partition finest(int n) { // 0_n
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[i] = i;
    return from_labels(labels);
  }

  static Partition coarsest(int n) { // 1_n
    return from_labels(std::vector<int>(static_cast<std::size_t>(n), 0));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int block_count() const { return block_count_; }

  /// Index of the block containing element `e` (1-based element).
  int block_of(int e) const { return labels_[static_cast<std::size_t>(e - 1)]; }

  std::span<const int> labels() const { return labels_; }

  std::vector<Block> blocks() const {
    std::vector<Block> out(static_cast<std::size_t>(block_count_));
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      out[labels_[i]].push_back(static_cast<int>(i) + 1);
    }
    return out;
  }

  Block block(int index) const {
    Block out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == index) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
  }

  bool is_finest() const { return block_count_ == size(); }
  bool is_coarsest() const { return block_count_ == 1; }

  /// "[[1,4],[2,3]]"
  std::string to_string() const {
    std::string s = "[";
    const auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
      if (b) s += ',';
      s += '[';
      for (std::size_t j = 0; j < bs[b].size(); ++j) {
        if (j) s += ',';
        s += std::to_string(bs[b][j]);
      }
      s += ']';
    }
    return s + "]";
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  // Lexicographic on canonical block form (ground-set size first).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    const auto ab = a.blocks();
    const auto bb = b.blocks();
    return std::lexicographical_compare_three_way(ab.begin(), ab.end(), bb.begin(), bb.end());
  }

private:
  std::vector<int> labels_;
  int block_count_ = 0;
};

/// A bijection of {1..n}; images()[i] is the image of i+1.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || hit[v - 1]) {
        throw domain_error("not a permutation of {1..n}");
      }
      hit[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
  }

  /// The cycle 1 -> 2 -> ... -> n -> 1.
  static Permutation full_cycle(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n + 1;
    return Permutation(std::move(img));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  /// Composition: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw domain_error("composing permutations of different sizes");
    std::vector<int> img(a.images_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = a(b.images_[i]);
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

} // namespace nckit

template <>
struct std::hash<nckit::Partition> {
  std::size_t operator()(const nckit::Partition& p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.size());
    for (int l : p.labels()) h = h * 1000003u ^ static_cast<std::size_t>(l);
    return h;
  }
};
