#include "quivercount/quiver.hpp"

#include <numeric>
#include <sstream>

#include "quivercount/errors.hpp"

namespace quivercount {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  for (const auto& a : arrows_) {
    if (a.tail >= vertex_count_ || a.head >= vertex_count_) {
      throw InputError("arrow endpoint out of range");
    }
  }
}

Quiver Quiver::loop_quiver(unsigned g) { return Quiver(1, std::vector<Arrow>(g, Arrow{0, 0})); }

Quiver Quiver::discrete(std::size_t n) { return Quiver(n, {}); }

bool Quiver::is_connected() const {
  if (vertex_count_ == 0) return true;
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertex_count_;
  for (const auto& a : arrows_) {
    auto x = find(a.tail);
    auto y = find(a.head);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components == 1;
}

bool Quiver::is_tree() const {
  if (vertex_count_ == 0 || arrows_.size() + 1 != vertex_count_) return false;
  for (const auto& a : arrows_) {
    if (a.tail == a.head) return false;
  }
  return is_connected();
}

std::string Quiver::to_string() const {
  std::ostringstream os;
  os << vertex_count_ << ":";
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) os << ",";
    os << arrows_[i].tail << ">" << arrows_[i].head;
  }
  return os.str();
}

namespace {

std::size_t parse_index(const std::string& s, const std::string& whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("malformed quiver '" + whole + "'");
  }
  return std::stoul(s);
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  if (text.size() >= 2 && (text[0] == 'S' || text[0] == 'A') && text.find(':') == std::string::npos) {
    const std::size_t n = parse_index(text.substr(1), text);
    if (text[0] == 'S') return Quiver::loop_quiver(static_cast<unsigned>(n));
    if (n == 0) throw InputError("A0 is not a quiver");
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
    return Quiver(n, std::move(arrows));
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("malformed quiver '" + text + "'");
  const std::size_t n = parse_index(text.substr(0, colon), text);
  std::vector<Arrow> arrows;
  std::string rest = text.substr(colon + 1);
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto gt = item.find('>');
    if (gt == std::string::npos) throw InputError("malformed arrow '" + item + "'");
    arrows.push_back({parse_index(item.substr(0, gt), text), parse_index(item.substr(gt + 1), text)});
  }
  return Quiver(n, std::move(arrows));
}

void QuiverMorphism::validate() const {
  if (vertex_map.size() != source.vertex_count() || arrow_map.size() != source.arrow_count()) {
    throw InputError("morphism map sizes do not match the source quiver");
  }
  for (auto v : vertex_map) {
    if (v >= target.vertex_count()) throw InputError("morphism vertex image out of range");
  }
  for (std::size_t a = 0; a < arrow_map.size(); ++a) {
    if (arrow_map[a] >= target.arrow_count()) throw InputError("morphism arrow image out of range");
    const auto& src = source.arrow(a);
    const auto& dst = target.arrow(arrow_map[a]);
    if (vertex_map[src.tail] != dst.tail || vertex_map[src.head] != dst.head) {
      throw InputError("morphism does not preserve heads and tails");
    }
  }
}

QuiverMorphism QuiverMorphism::identity(const Quiver& q) {
  QuiverMorphism f{q, q, {}, {}};
  f.vertex_map.resize(q.vertex_count());
  f.arrow_map.resize(q.arrow_count());
  std::iota(f.vertex_map.begin(), f.vertex_map.end(), 0);
  std::iota(f.arrow_map.begin(), f.arrow_map.end(), 0);
  return f;
}

QuiverMorphism QuiverMorphism::to_loop_quiver(const Quiver& source, unsigned g,
                                              const std::vector<std::size_t>& labels) {
  QuiverMorphism f{source, Quiver::loop_quiver(g), std::vector<std::size_t>(source.vertex_count(), 0),
                   labels};
  f.validate();
  return f;
}

}  // namespace quivercount
