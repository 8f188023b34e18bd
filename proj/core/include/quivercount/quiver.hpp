#ifndef QUIVERCOUNT_QUIVER_HPP
#define QUIVERCOUNT_QUIVER_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace quivercount {

struct Arrow {
  std::size_t tail = 0;
  std::size_t head = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Finite directed multigraph. Loops and parallel arrows are allowed.
class Quiver {
 public:
  Quiver() = default;
  /// Throws InputError if an arrow endpoint is out of range.
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  /// S_g: one vertex with g loops.
  static Quiver loop_quiver(unsigned g);
  /// Vertices 0..n-1 and no arrows.
  static Quiver discrete(std::size_t n);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  /// Underlying undirected multigraph is a tree (connected, #arrows = #vertices - 1, no loops).
  bool is_tree() const;
  bool is_connected() const;

  /// "3:1>0,1>0,2>1" (vertex count, then tail>head per arrow).
  std::string to_string() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

/// Parses quiver text: "S<g>" (g-loop quiver), "A<n>" (equioriented path 0>1>...),
/// or the explicit form produced by Quiver::to_string. Throws InputError.
Quiver parse_quiver(const std::string& text);

/// Vertex map plus arrow map with f0(t a) = t f1(a) and f0(h a) = h f1(a).
struct QuiverMorphism {
  Quiver source;
  Quiver target;
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> arrow_map;

  /// Throws InputError unless the maps have the right sizes, ranges and are compatible.
  void validate() const;
  static QuiverMorphism identity(const Quiver& q);
  /// Morphism from a quiver to S_g sending arrow a to loop labels[a].
  static QuiverMorphism to_loop_quiver(const Quiver& source, unsigned g,
                                       const std::vector<std::size_t>& labels);
};

}  // namespace quivercount

#endif  // QUIVERCOUNT_QUIVER_HPP
