/*
Copyright (c) 2026 The hxsim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HXSIM_FRONTIER_HPP
#define HXSIM_FRONTIER_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "hxsim/graph.hpp"

namespace hxsim {

class Bitmap {
 public:
  Bitmap() = default;
  explicit Bitmap(std::size_t size) : words_((size + 63) / 64, 0), size_(size) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Calls fn(i) for every set bit in [begin, end), ascending.
  template <typename Fn>
  void for_each_set(std::size_t begin, std::size_t end, Fn&& fn) const {
    if (begin >= end) return;
    std::size_t wi = begin >> 6;
    const std::size_t wend = (end + 63) >> 6;
    std::uint64_t word = words_[wi] & (~std::uint64_t{0} << (begin & 63));
    while (true) {
      while (word) {
        const std::size_t i = (wi << 6) + static_cast<std::size_t>(std::countr_zero(word));
        if (i >= end) return;
        fn(i);
        word &= word - 1;
      }
      if (++wi >= wend) return;
      word = words_[wi];
    }
  }

  bool operator==(const Bitmap&) const = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Active vertices entering an iteration.
struct FrontierState {
  Bitmap active;
  std::size_t iteration = 0;

  FrontierState() = default;
  explicit FrontierState(VertexId n) : active(n) {}
  bool empty() const { return active.none(); }
};

}  // namespace hxsim

#endif  // HXSIM_FRONTIER_HPP
