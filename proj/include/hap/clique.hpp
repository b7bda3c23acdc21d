#pragma once

#include <cstdint>
#include <vector>

namespace hap {

/// Undirected simple graph with bit-row adjacency.
class Graph {
 public:
  explicit Graph(int n) : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * words_, 0) {}

  int size() const { return n_; }
  int words() const { return words_; }

  void add_edge(int u, int v) {
    if (u == v) return;
    row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
  }
  bool edge(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1U; }

  const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }

 private:
  std::uint64_t* row(int v) { return adj_.data() + static_cast<std::size_t>(v) * words_; }

  int n_;
  int words_;
  std::vector<std::uint64_t> adj_;
};

struct CliqueResult {
  std::vector<int> clique;  ///< ascending
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// Maximum clique by branch and bound with greedy-coloring bounds; the root
/// branches of the colour order run in parallel under a shared best size.
CliqueResult max_clique(const Graph& g, std::uint64_t node_limit = UINT64_MAX);

/// Maximum clique inside the vertex subset `allowed`.
CliqueResult max_clique_within(const Graph& g, const std::vector<int>& allowed, std::uint64_t node_limit = UINT64_MAX);

namespace reference {
/// Largest clique size by trying all 2^n vertex subsets; n <= 20.
int max_clique_size_bruteforce(const Graph& g);
}  // namespace reference

}  // namespace hap
