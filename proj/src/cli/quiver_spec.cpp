#include "perihall/cli/quiver_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <tuple>
#include <vector>

#include "perihall/error.hpp"
#include "perihall/ffla/matrix.hpp"

namespace perihall::cli {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t b = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(b, i - b)), static_cast<int>(b) + 1});
  }
  return out;
}

struct RawArrow {
  std::string name;
  std::size_t source, target;
};

}  // namespace

QuiverSpec parse_quiver_spec(std::string_view text, const std::string& source) {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::vector<RawArrow> arrows;
  std::optional<std::uint32_t> p;
  bool have_vertices = false;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    auto fail = [&](const Token& t, const std::string& msg) { throw ParseError(source, lineno, t.column, msg); };
    const std::string& kw = tok[0].text;
    if (kw == "vertices") {
      if (have_vertices) fail(tok[0], "second 'vertices' line");
      if (tok.size() < 2) fail(tok[0], "'vertices' needs at least one label");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!index.emplace(tok[i].text, labels.size()).second) fail(tok[i], "duplicate vertex '" + tok[i].text + "'");
        labels.push_back(tok[i].text);
      }
      have_vertices = true;
    } else if (kw == "arrow") {
      if (!have_vertices) fail(tok[0], "'arrow' before 'vertices'");
      if (tok.size() != 4) fail(tok[0], "expected 'arrow <name> <source> <target>'");
      for (const auto& a : arrows)
        if (a.name == tok[1].text) fail(tok[1], "duplicate arrow '" + tok[1].text + "'");
      std::size_t ends[2];
      for (int k = 0; k < 2; ++k) {
        auto it = index.find(tok[2 + k].text);
        if (it == index.end())
          fail(tok[2 + k], "arrow '" + tok[1].text + "' references unknown vertex '" + tok[2 + k].text + "'");
        ends[k] = it->second;
      }
      arrows.push_back({tok[1].text, ends[0], ends[1]});
    } else if (kw == "p") {
      if (p) fail(tok[0], "second 'p' line");
      if (tok.size() != 2) fail(tok[0], "expected 'p <prime>'");
      std::uint32_t v = 0;
      const auto& s = tok[1].text;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) fail(tok[1], "'" + s + "' is not a number");
      if (!ffla::is_prime(v)) fail(tok[1], "p = " + s + " is not prime");
      p = v;
    } else {
      fail(tok[0], "unknown keyword '" + kw + "'");
    }
  }
  if (!have_vertices) throw ParseError(source, lineno + 1, 1, "missing 'vertices' line");

  // Kahn's algorithm, smallest file index first.
  const std::size_t n = labels.size();
  std::vector<std::size_t> indeg(n, 0), order;
  for (const auto& a : arrows) ++indeg[a.target];
  std::vector<bool> done(n, false);
  while (order.size() < n) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n && pick == n; ++v)
      if (!done[v] && indeg[v] == 0) pick = v;
    if (pick == n) throw ContractViolation(source + ": quiver has an oriented cycle");
    done[pick] = true;
    order.push_back(pick);
    for (const auto& a : arrows)
      if (a.source == pick) --indeg[a.target];
  }
  std::vector<std::size_t> rank(n);
  std::vector<std::string> canon_labels;
  for (std::size_t i = 0; i < n; ++i) {
    rank[order[i]] = i;
    canon_labels.push_back(labels[order[i]]);
  }
  std::vector<repcat::Arrow> canon;
  for (const auto& a : arrows) canon.push_back({rank[a.source], rank[a.target], a.name});
  std::sort(canon.begin(), canon.end(), [](const repcat::Arrow& x, const repcat::Arrow& y) {
    return std::tie(x.source, x.target, x.name) < std::tie(y.source, y.target, y.name);
  });
  return {std::make_shared<const repcat::Quiver>(std::move(canon_labels), std::move(canon)), p};
}

QuiverSpec load_quiver_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    static const std::regex builtin("A([1-9][0-9]?)");
    std::smatch m;
    if (std::regex_match(path, m, builtin)) return {repcat::Quiver::linear(std::stoul(m[1].str())), std::nullopt};
    throw ContractViolation("cannot read quiver spec '" + path + "'");
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_quiver_spec(ss.str(), path);
}

}  // namespace perihall::cli
