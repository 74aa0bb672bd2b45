#include "dualco/quiver.hpp"

#include <algorithm>
#include <set>

namespace dualco {

std::size_t Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  throw input_error("unknown vertex: " + name);
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == name) return i;
  throw input_error("unknown arrow: " + name);
}

std::vector<std::size_t> Quiver::arrows_between(std::size_t v, std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].src == v && arrows[i].dst == w) out.push_back(i);
  return out;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) throw input_error("duplicate vertex label: " + v);
  std::set<std::string> aseen;
  for (const auto& a : arrows) {
    if (!aseen.insert(a.label).second) throw input_error("duplicate arrow label: " + a.label);
    if (seen.count(a.label)) throw input_error("label used for both vertex and arrow: " + a.label);
    if (a.src >= vertices.size() || a.dst >= vertices.size())
      throw input_error("arrow endpoint out of range: " + a.label);
  }
}

std::size_t path_source(const Quiver&, const Path& p) { return p.source; }

std::size_t path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.source : q.arrows[p.arrows.back()].dst;
}

Path path_concat(const Quiver& q, const Path& p, const Path& r) {
  if (path_target(q, p) != path_source(q, r)) throw check_error("path_concat: not composable");
  Path out = p;
  out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
  return out;
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.trivial()) return q.vertices[p.source];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[p.arrows[i]].label;
  }
  return s;
}

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.trivial()) return a.source < b.source;
  return a.arrows < b.arrows;
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len) {
  std::vector<Path> all;
  std::vector<Path> layer;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) layer.push_back(Path{v, {}});
  all = layer;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : layer) {
      std::size_t t = path_target(q, p);
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].src != t) continue;
        Path e = p;
        e.arrows.push_back(a);
        next.push_back(e);
      }
    }
    // Generation order already respects path_less; the sort just keeps the
    // canonical-order invariant explicit.
    std::sort(next.begin(), next.end(), path_less);
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return all;
}

}  // namespace dualco
