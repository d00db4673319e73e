// Copyright 2026 The cycletrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYCLETRACE_PERMUTATION_HPP
#define CYCLETRACE_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "cycletrace/error.hpp"

namespace cycletrace {

/// A permutation of {0, ..., n-1}. Products compose right to left:
/// (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t n) : images_(n), preimages_(n) {
    std::iota(images_.begin(), images_.end(), std::size_t{0});
    std::iota(preimages_.begin(), preimages_.end(), std::size_t{0});
  }

  static Permutation from_images(std::vector<std::size_t> images) {
    Permutation p;
    p.preimages_.assign(images.size(), images.size());
    for (std::size_t x = 0; x < images.size(); ++x) {
      if (images[x] >= images.size() || p.preimages_[images[x]] != images.size())
        throw Error(ErrorKind::InvalidArgument, "image list is not a bijection");
      p.preimages_[images[x]] = x;
    }
    p.images_ = std::move(images);
    return p;
  }

  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b) {
    Permutation p(n);
    p.swap_values(a, b);
    return p;
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t x) const { return images_.at(x); }
  const std::vector<std::size_t>& images() const { return images_; }

  /// Replaces this permutation p by (a b) * p in O(1).
  void swap_values(std::size_t a, std::size_t b) {
    std::swap(images_[preimages_[a]], images_[preimages_[b]]);
    std::swap(preimages_[a], preimages_[b]);
  }

  Permutation inverse() const { return from_images(preimages_); }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw Error(ErrorKind::InvalidArgument, "permutation sizes differ");
    std::vector<std::size_t> images(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) images[x] = p.images_[q.images_[x]];
    return from_images(std::move(images));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

  /// Canonical cycle decomposition, fixed points included: each cycle starts
  /// at its least element and cycles are sorted by that element.
  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(size(), false);
    for (std::size_t start = 0; start < size(); ++start) {
      if (seen[start]) continue;
      auto& cycle = out.emplace_back();
      for (std::size_t x = start; !seen[x]; x = images_[x]) {
        seen[x] = true;
        cycle.push_back(x);
      }
    }
    return out;
  }

  /// Cycle lengths in non-increasing order.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    for (const auto& c : cycles()) lengths.push_back(c.size());
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
  }

  std::size_t orbit_count() const {
    std::size_t count = 0;
    std::vector<bool> seen(size(), false);
    for (std::size_t start = 0; start < size(); ++start) {
      if (seen[start]) continue;
      ++count;
      for (std::size_t x = start; !seen[x]; x = images_[x]) seen[x] = true;
    }
    return count;
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < size(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  bool has_fixed_point() const {
    for (std::size_t x = 0; x < size(); ++x)
      if (images_[x] == x) return true;
    return false;
  }

  /// A single cycle through all n points.
  bool is_full_cycle() const { return size() >= 1 && orbit_count() == 1; }

  /// Cycle notation with fixed points omitted; points are named by `name`.
  template <typename Namer>
  std::string to_string(Namer&& name) const {
    std::string out;
    for (const auto& cycle : cycles()) {
      if (cycle.size() < 2) continue;
      out += '(';
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out += ' ';
        out += name(cycle[i]);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  /// Cycle notation on 1-based points, e.g. "(1 3 2 5 4)"; identity is "()".
  std::string to_string() const {
    return to_string([](std::size_t x) { return std::to_string(x + 1); });
  }

 private:
  std::vector<std::size_t> images_;
  std::vector<std::size_t> preimages_;
};

}  // namespace cycletrace

#endif  // CYCLETRACE_PERMUTATION_HPP
