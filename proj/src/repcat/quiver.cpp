#include "perihall/repcat/quiver.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>

#include "perihall/error.hpp"

namespace perihall::repcat {

Quiver::Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows)
    : labels_(std::move(vertex_labels)), arrows_(std::move(arrows)) {
  const std::size_t n = labels_.size();
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ContractViolation("empty vertex label");
    if (!seen.insert(l).second) throw ContractViolation("duplicate vertex label '" + l + "'");
  }
  std::set<std::string> names;
  into_.resize(n);
  out_.resize(n);
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto& ar = arrows_[a];
    if (ar.source >= n || ar.target >= n) throw ContractViolation("arrow '" + ar.name + "' has a dangling endpoint");
    if (!names.insert(ar.name).second) throw ContractViolation("duplicate arrow name '" + ar.name + "'");
    out_[ar.source].push_back(a);
    into_[ar.target].push_back(a);
  }
  // Kahn's algorithm; leftover vertices lie on a cycle.
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& ar : arrows_) ++indeg[ar.target];
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::size_t done = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    ++done;
    for (auto a : out_[v])
      if (--indeg[arrows_[a].target] == 0) stack.push_back(arrows_[a].target);
  }
  if (done != n) throw ContractViolation("quiver has an oriented cycle");

  paths_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Path> all;
    std::vector<Path> frontier{Path{v, v, {}}};
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (auto& p : frontier) {
        for (auto a : out_[p.end]) {
          Path q = p;
          q.arrows.push_back(a);
          q.end = arrows_[a].target;
          next.push_back(std::move(q));
        }
        all.push_back(std::move(p));
      }
      frontier = std::move(next);
    }
    std::stable_sort(all.begin(), all.end(), [](const Path& a, const Path& b) {
      if (a.end != b.end) return a.end < b.end;
      return a.arrows < b.arrows;
    });
    paths_[v] = std::move(all);
  }
}

std::shared_ptr<const Quiver> Quiver::linear(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1, "a" + std::to_string(i + 1)});
  return std::make_shared<const Quiver>(std::move(labels), std::move(arrows));
}

std::size_t Quiver::vertex_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? npos : static_cast<std::size_t>(it - labels_.begin());
}

std::string Quiver::canonical_text() const {
  std::string s = "vertices";
  for (const auto& l : labels_) s += " " + l;
  s += "\n";
  for (const auto& a : arrows_) s += "arrow " + a.name + " " + labels_[a.source] + " " + labels_[a.target] + "\n";
  return s;
}

std::string Quiver::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical_text()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace perihall::repcat
