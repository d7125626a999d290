#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hcut::detail {

// Addressable binary max-heap over ids [0, n) with increase-key.
// Ties on the key go to the smaller rank, then to the smaller id.
template <typename Key>
class IndexedMaxHeap {
 public:
  static constexpr std::size_t kAbsent = SIZE_MAX;

  explicit IndexedMaxHeap(std::size_t n, std::span<const std::uint32_t> rank = {})
      : key_(n, Key{}), pos_(n, kAbsent), rank_(rank) {
    heap_.reserve(n);
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  bool contains(std::uint32_t id) const { return pos_[id] != kAbsent; }
  Key key(std::uint32_t id) const { return key_[id]; }

  void push(std::uint32_t id, Key key) {
    key_[id] = key;
    pos_[id] = heap_.size();
    heap_.push_back(id);
    sift_up(pos_[id]);
  }

  void increase(std::uint32_t id, Key delta) {
    key_[id] += delta;
    sift_up(pos_[id]);
  }

  std::uint32_t pop() {
    std::uint32_t top = heap_.front();
    swap_at(0, heap_.size() - 1);
    heap_.pop_back();
    pos_[top] = kAbsent;
    if (!heap_.empty()) sift_down(0);
    return top;
  }

 private:
  bool before(std::uint32_t a, std::uint32_t b) const {
    if (key_[a] != key_[b]) return key_[a] > key_[b];
    if (!rank_.empty() && rank_[a] != rank_[b]) return rank_[a] < rank_[b];
    return a < b;
  }

  void swap_at(std::size_t i, std::size_t j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }

  void sift_up(std::size_t i) {
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!before(heap_[i], heap_[parent])) break;
      swap_at(i, parent);
      i = parent;
    }
  }

  void sift_down(std::size_t i) {
    for (;;) {
      std::size_t best = i, l = 2 * i + 1, r = l + 1;
      if (l < heap_.size() && before(heap_[l], heap_[best])) best = l;
      if (r < heap_.size() && before(heap_[r], heap_[best])) best = r;
      if (best == i) return;
      swap_at(i, best);
      i = best;
    }
  }

  std::vector<Key> key_;
  std::vector<std::size_t> pos_;
  std::vector<std::uint32_t> heap_;
  std::span<const std::uint32_t> rank_;
};

}  // namespace hcut::detail
