#pragma once
// Quivers and paths.  A path stores its arrows in traversal order, so the
// word "a*b" means "a then b" and requires dst(a) == src(b).  Trivial paths
// carry only their vertex.  Enumeration is by length, then lexicographically
// by arrow indices; this order is canonical everywhere (bases, reports).

#include <cstddef>
#include <string>
#include <vector>

#include "dualco/field.hpp"

namespace dualco {

struct Arrow {
  std::string label;
  std::size_t src, dst;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t vertex_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;
  // Arrows v -> w.
  std::vector<std::size_t> arrows_between(std::size_t v, std::size_t w) const;
  void validate() const;
};

struct Path {
  std::size_t source = 0;             // vertex index; meaningful even when arrows empty
  std::vector<std::size_t> arrows;    // traversal order

  std::size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }

  bool operator==(const Path& o) const { return source == o.source && arrows == o.arrows; }
};

std::size_t path_target(const Quiver& q, const Path& p);
std::size_t path_source(const Quiver& q, const Path& p);
// "p then r"; requires target(p) == source(r).
Path path_concat(const Quiver& q, const Path& p, const Path& r);
std::string path_name(const Quiver& q, const Path& p);

// length < l ordering, then lex on arrow indices; trivial paths by source.
bool path_less(const Path& a, const Path& b);

// All paths of length <= max_len, in canonical order.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len);

}  // namespace dualco
