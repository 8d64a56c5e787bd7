#include "engelkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "engelkit/errors.hpp"

namespace engelkit {

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw ValidationError("permutation", "image list is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::then(const Permutation& q) const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[i] = q.images_[images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::extended(int degree) const {
  if (degree < this->degree())
    throw ValidationError("permutation", "cannot shrink degree");
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  for (size_t i = 0; i < images_.size(); ++i) im[i] = images_[i];
  return Permutation(std::move(im));
}

Permutation Permutation::parse(const std::string& text, int min_degree) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty cycle expression");
  int max_point = 0;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle expression");
    ++i;
    std::vector<int> cyc;
    std::vector<char> in_cyc;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {  // tolerate comma separators
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(std::string("unexpected character '") + text[i] +
                         "' in cycle");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw ParseError("point index too large");
        ++i;
      }
      if (v < 1) throw ParseError("points are 1-based");
      if (static_cast<size_t>(v) > in_cyc.size()) in_cyc.resize(v, 0);
      if (in_cyc[v - 1]) throw ParseError("repeated point in one cycle");
      in_cyc[v - 1] = 1;
      cyc.push_back(v - 1);
      max_point = std::max(max_point, v);
    }
    cycles.push_back(std::move(cyc));
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters after cycles");

  int deg = std::max(max_point, min_degree);
  Permutation result = Permutation::identity(deg);
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) continue;
    std::vector<int> im(deg);
    for (int j = 0; j < deg; ++j) im[j] = j;
    for (size_t j = 0; j < cyc.size(); ++j) im[cyc[j]] = cyc[(j + 1) % cyc.size()];
    result = result.then(Permutation(std::move(im)));
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::vector<char> seen(images_.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    int p = start;
    bool first = true;
    do {
      seen[p] = 1;
      if (!first) out << ' ';
      out << (p + 1);
      first = false;
      p = images_[p];
    } while (p != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::vector<NamedPermutation> parse_generator_file(const std::string& content) {
  std::vector<NamedPermutation> out;
  std::istringstream in(content);
  std::string line;
  int lineno = 0;
  int max_deg = 1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected `name = cycles`");
    std::string name = line.substr(0, eq);
    std::string rhs = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      size_t b = s.find_first_not_of(" \t\r");
      size_t e = s.find_last_not_of(" \t\r");
      s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
    };
    trim(name);
    trim(rhs);
    if (name.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty name");
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw ParseError("line " + std::to_string(lineno) + ": bad generator name \"" +
                         name + "\"");
    for (const auto& np : out)
      if (np.name == name)
        throw ParseError("line " + std::to_string(lineno) + ": duplicate generator \"" +
                         name + "\"");
    Permutation p = Permutation::parse(rhs);
    max_deg = std::max(max_deg, p.degree());
    out.push_back({std::move(name), std::move(p)});
  }
  if (out.empty()) throw ParseError("no generator bindings in file");
  for (auto& np : out) np.perm = np.perm.extended(max_deg);
  return out;
}

}  // namespace engelkit
