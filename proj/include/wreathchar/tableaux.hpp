#pragma once

// Border-strip tableaux of straight and r-partite shapes, produced as a lazy
// stream. A tableau of weight (mu_1, ..., mu_t) is built by peeling strips of
// length mu_t, then mu_{t-1}, ..., then mu_1; step i of the result records the
// strip filled with the entry i.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wreathchar/error.hpp"
#include "wreathchar/partition.hpp"

namespace wreathchar {

struct StripStep {
  int component = 0;  // index of the component the strip lies in
  int length = 0;
  int height = 0;
  std::vector<Cell> cells;
};

struct BorderStripTableau {
  RPartitePartition shape;  // straight shapes have arity 1
  Composition weight;
  std::vector<StripStep> steps;  // steps[i] is the strip of entry i+1

  int total_height() const {
    int h = 0;
    for (const auto& s : steps) h += s.height;
    return h;
  }
};

/// Depth-first enumeration with an explicit stack; one tableau is held at a
/// time. Usage: `while (stream.next()) use(stream.current());`
class BorderStripStream {
 public:
  BorderStripStream(RPartitePartition shape, Composition weight)
      : shape_(std::move(shape)), weight_(std::move(weight)) {
    if (shape_.total() != weight_.size())
      throw InvalidInput("shape and weight sizes differ: " + std::to_string(shape_.total()) + " vs " +
                         std::to_string(weight_.size()));
    current_.shape = shape_;
    current_.weight = weight_;
    current_.steps.resize(static_cast<std::size_t>(weight_.length()));
  }
  BorderStripStream(const Partition& shape, Composition weight)
      : BorderStripStream(RPartitePartition({shape}), std::move(weight)) {}

  /// Advances to the next tableau; false once the stream is exhausted.
  bool next() {
    const std::size_t t = static_cast<std::size_t>(weight_.length());
    if (done_) return false;
    if (!started_) {
      started_ = true;
      if (t == 0) {
        done_ = true;  // only the empty tableau of the empty shape
        return true;
      }
      push_frame(shape_);
    }
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (top.cursor == top.moves.size()) {
        stack_.pop_back();
        continue;
      }
      Move& mv = top.moves[top.cursor++];
      const std::size_t depth = stack_.size() - 1;
      StripStep& step = current_.steps[t - 1 - depth];
      step.component = mv.component;
      step.length = weight_[t - 1 - depth];
      step.height = mv.height;
      step.cells = mv.cells;
      if (depth + 1 == t) return true;
      RPartitePartition next_shape = top.shape;
      auto comps = next_shape.components();
      comps[static_cast<std::size_t>(mv.component)] = mv.after;
      push_frame(RPartitePartition(std::move(comps)));
    }
    done_ = true;
    return false;
  }

  const BorderStripTableau& current() const noexcept { return current_; }

 private:
  struct Move {
    int component;
    int height;
    Partition after;
    std::vector<Cell> cells;
  };
  struct Frame {
    RPartitePartition shape;
    std::vector<Move> moves;
    std::size_t cursor = 0;
  };

  void push_frame(RPartitePartition shape) {
    const std::size_t depth = stack_.size();
    const int k = weight_[static_cast<std::size_t>(weight_.length()) - 1 - depth];
    Frame f{std::move(shape), {}, 0};
    for (int c = 0; c < f.shape.arity(); ++c)
      for (auto& rh : removable_rim_hooks(f.shape[static_cast<std::size_t>(c)], k))
        f.moves.push_back(Move{c, rh.height, std::move(rh.after), std::move(rh.cells)});
    stack_.push_back(std::move(f));
  }

  RPartitePartition shape_;
  Composition weight_;
  BorderStripTableau current_;
  std::vector<Frame> stack_;
  bool started_ = false;
  bool done_ = false;
};

inline std::vector<BorderStripTableau> enumerate_bst_rpartite(const RPartitePartition& shape, const Composition& weight) {
  std::vector<BorderStripTableau> out;
  BorderStripStream s(shape, weight);
  while (s.next()) out.push_back(s.current());
  return out;
}

inline std::vector<BorderStripTableau> enumerate_bst(const Partition& shape, const Composition& weight) {
  return enumerate_bst_rpartite(RPartitePartition({shape}), weight);
}

namespace detail {

// Counting and signed sums only need heights, so they recurse directly on
// the shape instead of materializing cells.
inline void fold_heights(std::vector<Partition>& comps, const std::vector<int>& weight, std::size_t remaining,
                         int height, std::uint64_t& count, long long& signed_sum) {
  if (remaining == 0) {
    ++count;
    signed_sum += (height % 2 == 0) ? 1 : -1;
    return;
  }
  const int k = weight[remaining - 1];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].size() < k) continue;
    const Partition saved = comps[c];
    for_each_rim_hook(saved.parts(), k, [&](std::span<const int> after, int h) {
      comps[c] = Partition(std::vector<int>(after.begin(), after.end()));
      fold_heights(comps, weight, remaining - 1, height + h, count, signed_sum);
    });
    comps[c] = saved;
  }
}

struct HeightFold {
  std::uint64_t count = 0;
  long long signed_sum = 0;
};

inline HeightFold fold_heights(const RPartitePartition& shape, const Composition& weight) {
  if (shape.total() != weight.size()) throw InvalidInput("shape and weight sizes differ");
  HeightFold f;
  auto comps = shape.components();
  fold_heights(comps, weight.parts(), weight.parts().size(), 0, f.count, f.signed_sum);
  return f;
}

}  // namespace detail

inline std::uint64_t count_bst(const RPartitePartition& shape, const Composition& weight) {
  return detail::fold_heights(shape, weight).count;
}
inline std::uint64_t count_bst(const Partition& shape, const Composition& weight) {
  return count_bst(RPartitePartition({shape}), weight);
}

/// Sum over all border-strip tableaux of (-1)^ht(T).
inline long long signed_sum(const RPartitePartition& shape, const Composition& weight) {
  return detail::fold_heights(shape, weight).signed_sum;
}
inline long long signed_sum(const Partition& shape, const Composition& weight) {
  return signed_sum(RPartitePartition({shape}), weight);
}

}  // namespace wreathchar
