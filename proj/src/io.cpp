#include "chordal/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace chordal {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

SimplicialComplex parse_complex_text(const std::string& text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  bool fixed_order = false;
  std::vector<Face> facets;

  auto intern = [&](const std::string& s, int lineno) -> int {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (fixed_order)
      throw std::runtime_error("facet file line " + std::to_string(lineno) + ": label '" + s +
                               "' not in the vertices header");
    if (labels.size() >= 64)
      throw std::runtime_error("facet file: more than 64 vertex labels");
    int id = static_cast<int>(labels.size());
    labels.push_back(s);
    index.emplace(s, id);
    return id;
  };

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_content = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (!saw_content && toks[0] == "vertices:") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (index.count(toks[i]))
          throw std::runtime_error("facet file line " + std::to_string(lineno) +
                                   ": duplicate label '" + toks[i] + "'");
        if (labels.size() >= 64) throw std::runtime_error("facet file: more than 64 vertex labels");
        index.emplace(toks[i], static_cast<int>(labels.size()));
        labels.push_back(toks[i]);
      }
      fixed_order = true;
      saw_content = true;
      continue;
    }
    saw_content = true;
    Face f;
    for (const auto& t : toks) {
      int v = intern(t, lineno);
      if (f.has_vertex(v))
        throw std::runtime_error("facet file line " + std::to_string(lineno) +
                                 ": repeated vertex '" + t + "'");
      f = f.with(v);
    }
    facets.push_back(f);
  }
  if (labels.empty() && facets.empty())
    throw std::runtime_error("facet file: no facets and no vertex header");
  return SimplicialComplex(std::move(labels), std::move(facets));
}

SimplicialComplex load_complex_file(const std::string& path) {
  return parse_complex_text(load_text_file(path));
}

std::string dump_complex(const SimplicialComplex& c) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& l : c.labels()) out << ' ' << l;
  out << '\n';
  for (Face f : c.facets()) {
    bool first = true;
    for (int v : f.vertices()) {
      if (!first) out << ' ';
      out << c.label_of(v);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string load_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace chordal
