#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar::detail {

template <typename Dist>
inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

/// Reusable single-source BFS over a Graph. dist must hold g.order() slots;
/// it is reset on every run. Returns the number of vertices reached.
template <typename Dist>
class BfsKernel {
 public:
  explicit BfsKernel(const Graph& g) : g_(g), queue_(g.order()) {}

  std::size_t run(Vertex s, std::span<Dist> dist) {
    std::fill(dist.begin(), dist.end(), kUnreachable<Dist>);
    std::size_t head = 0;
    std::size_t tail = 0;
    dist[s] = 0;
    queue_[tail++] = s;
    while (head < tail) {
      const Vertex x = queue_[head++];
      const Dist next = static_cast<Dist>(dist[x] + 1);
      for (const Vertex y : g_.neighbors(x)) {
        if (dist[y] == kUnreachable<Dist>) {
          dist[y] = next;
          queue_[tail++] = y;
        }
      }
    }
    return tail;
  }

 private:
  const Graph& g_;
  std::vector<Vertex> queue_;
};

/// Calls fn.template operator()<Dist>() with the narrowest width that
/// holds every distance of an n-vertex graph plus the sentinel.
template <typename Fn>
decltype(auto) with_distance_width(std::size_t n, Fn&& fn) {
  if (n < std::numeric_limits<std::uint8_t>::max()) {
    return fn.template operator()<std::uint8_t>();
  }
  if (n < std::numeric_limits<std::uint16_t>::max()) {
    return fn.template operator()<std::uint16_t>();
  }
  return fn.template operator()<std::uint32_t>();
}

}  // namespace mostar::detail
