#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace perihall::repcat {

struct Arrow {
  std::size_t source;
  std::size_t target;
  std::string name;
};

// A path is a sequence of arrow indices; the trivial path at v is empty.
struct Path {
  std::size_t start;
  std::size_t end;
  std::vector<std::size_t> arrows;
};

class Quiver {
 public:
  // Throws ContractViolation on duplicate labels/names, dangling
  // endpoints or an oriented cycle.
  Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows);

  // Linearly oriented A_n: 1 -> 2 -> ... -> n.
  static std::shared_ptr<const Quiver> linear(std::size_t n);

  std::size_t num_vertices() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::size_t>& arrows_into(std::size_t v) const { return into_.at(v); }
  const std::vector<std::size_t>& arrows_out_of(std::size_t v) const { return out_.at(v); }
  // Index of the vertex labelled `label`, or npos.
  std::size_t vertex_index(const std::string& label) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // All paths starting at v, ordered by end vertex, then by arrow sequence.
  const std::vector<Path>& paths_from(std::size_t v) const { return paths_.at(v); }

  // Canonical text: the hash input and the form written into catalogs.
  std::string canonical_text() const;
  // 64-bit FNV-1a of canonical_text(), as 16 hex digits.
  std::string hash() const;

  bool operator==(const Quiver& o) const { return labels_ == o.labels_ && canonical_text() == o.canonical_text(); }

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> into_, out_;
  std::vector<std::vector<Path>> paths_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

}  // namespace perihall::repcat
