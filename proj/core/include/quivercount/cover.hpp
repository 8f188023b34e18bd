#ifndef QUIVERCOUNT_COVER_HPP
#define QUIVERCOUNT_COVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "quivercount/quiver.hpp"

namespace quivercount {

/// Reduced word in the free group F_g. Letter +(i+1) is a_i, -(i+1) its inverse.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the given letters; InputError on a zero letter.
  explicit FreeWord(const std::vector<int>& letters);

  static FreeWord identity() { return {}; }
  static FreeWord generator(std::size_t i) { return FreeWord({static_cast<int>(i) + 1}); }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord inverse() const;
  /// "e", or e.g. "a1 a2^-1".
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

/// A tree morphism T -> S_g factored through the universal cover: vertex_words[t] is
/// f'(t), and `image` is the finite subquiver of the cover spanned by f'(T), with
/// vertices numbered in order of first appearance and image_labels[b] = pi(b).
struct CoverLift {
  std::vector<FreeWord> vertex_words;
  std::vector<FreeWord> image_vertices;
  std::vector<std::size_t> image_labels;
  /// T -> image: vertex_map[t] indexes image_vertices.
  QuiverMorphism to_image;
  /// image -> S_g, reading off labels.
  QuiverMorphism projection;
};

/// Lift of the labeling T_1 -> {0..g-1}: base_vertex goes to the identity,
/// and an arrow t -> h labelled i means f'(h) = a_i f'(t) (left multiplication).
/// Throws InputError if t is not a tree or a label is out of range.
CoverLift lift_to_cover(const Quiver& tree, unsigned g, const std::vector<std::size_t>& labels,
                        std::size_t base_vertex = 0);

/// True iff projection composed with to_image reproduces the given labeling exactly.
bool lift_commutes(const CoverLift& lift, const std::vector<std::size_t>& labels);

}  // namespace quivercount

#endif  // QUIVERCOUNT_COVER_HPP
