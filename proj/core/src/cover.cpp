#include "quivercount/cover.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "quivercount/errors.hpp"

namespace quivercount {

FreeWord::FreeWord(const std::vector<int>& letters) {
  for (int x : letters) {
    if (x == 0) throw InputError("free word letter 0");
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  std::vector<int> all = letters_;
  all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
  return FreeWord(all);
}

FreeWord FreeWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (auto& x : inv) x = -x;
  return FreeWord(inv);
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << 'a' << std::abs(letters_[i]);
    if (letters_[i] < 0) os << "^-1";
  }
  return os.str();
}

CoverLift lift_to_cover(const Quiver& tree, unsigned g, const std::vector<std::size_t>& labels,
                        std::size_t base_vertex) {
  if (!tree.is_tree()) throw InputError("lift_to_cover: quiver is not a tree");
  if (labels.size() != tree.arrow_count()) throw InputError("lift_to_cover: one label per arrow required");
  if (base_vertex >= tree.vertex_count()) throw InputError("lift_to_cover: base vertex out of range");
  for (auto l : labels) {
    if (l >= g) throw InputError("lift_to_cover: label out of range");
  }
  const std::size_t n = tree.vertex_count();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t a = 0; a < tree.arrow_count(); ++a) {
    incident[tree.arrow(a).tail].push_back(a);
    incident[tree.arrow(a).head].push_back(a);
  }

  CoverLift out;
  out.vertex_words.assign(n, FreeWord{});
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> todo;
  seen[base_vertex] = true;
  todo.push(base_vertex);
  while (!todo.empty()) {
    const auto v = todo.front();
    todo.pop();
    for (auto a : incident[v]) {
      const auto& arr = tree.arrow(a);
      const auto gen = FreeWord::generator(labels[a]);
      if (arr.tail == v && !seen[arr.head]) {
        out.vertex_words[arr.head] = gen * out.vertex_words[v];
        seen[arr.head] = true;
        todo.push(arr.head);
      } else if (arr.head == v && !seen[arr.tail]) {
        out.vertex_words[arr.tail] = gen.inverse() * out.vertex_words[v];
        seen[arr.tail] = true;
        todo.push(arr.tail);
      }
    }
  }

  std::map<FreeWord, std::size_t> vertex_index;
  std::vector<std::size_t> vmap(n);
  for (std::size_t t = 0; t < n; ++t) {
    auto [it, inserted] = vertex_index.emplace(out.vertex_words[t], out.image_vertices.size());
    if (inserted) out.image_vertices.push_back(out.vertex_words[t]);
    vmap[t] = it->second;
  }
  // Cover arrows are pairs (source word, label); distinct tree arrows can collapse.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrow_index;
  std::vector<Arrow> image_arrows;
  std::vector<std::size_t> amap(tree.arrow_count());
  for (std::size_t a = 0; a < tree.arrow_count(); ++a) {
    const auto key = std::make_pair(vmap[tree.arrow(a).tail], labels[a]);
    auto [it, inserted] = arrow_index.emplace(key, image_arrows.size());
    if (inserted) {
      image_arrows.push_back({vmap[tree.arrow(a).tail], vmap[tree.arrow(a).head]});
      out.image_labels.push_back(labels[a]);
    }
    amap[a] = it->second;
  }
  const Quiver image(out.image_vertices.size(), image_arrows);
  out.to_image = QuiverMorphism{tree, image, vmap, amap};
  out.projection = QuiverMorphism::to_loop_quiver(image, g, out.image_labels);
  out.to_image.validate();
  return out;
}

bool lift_commutes(const CoverLift& lift, const std::vector<std::size_t>& labels) {
  const auto& f = lift.to_image;
  if (labels.size() != f.arrow_map.size()) return false;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    if (lift.projection.arrow_map[f.arrow_map[a]] != labels[a]) return false;
  }
  return true;
}

}  // namespace quivercount
