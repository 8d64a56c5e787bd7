#include "engelkit/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "engelkit/errors.hpp"

namespace engelkit::corpus {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Permutation cycle_1_to_n(int n, int deg) {
  std::vector<int> im(deg);
  for (int i = 0; i < deg; ++i) im[i] = i;
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return Permutation(std::move(im));
}

// Right regular representation: permutations e -> e*g for chosen generators
// of an abstract multiplication map.
std::vector<NamedPermutation> regular_rep(
    int size, const std::function<int(int, int)>& mult,
    const std::vector<std::pair<std::string, int>>& gens) {
  std::vector<NamedPermutation> out;
  for (const auto& [label, g] : gens) {
    std::vector<int> im(size);
    for (int e = 0; e < size; ++e) im[e] = mult(e, g);
    out.push_back({label, Permutation(std::move(im))});
  }
  return out;
}

}  // namespace

FiniteGroup cyclic(int n) {
  if (n < 1 || n > 512) throw ValidationError("family", "cyclic order out of range 1..512");
  std::vector<NamedPermutation> gens{{"a", cycle_1_to_n(n, std::max(n, 1))}};
  return FiniteGroup::close(std::move(gens), n + 1, "C" + std::to_string(n));
}

FiniteGroup dihedral(int n) {
  if (n < 2 || 2 * n > 512)
    throw ValidationError("family", "dihedral rotation order out of range 2..256");
  std::string name = "D" + std::to_string(n);
  if (n == 2) {
    std::vector<NamedPermutation> gens{{"r", Permutation::parse("(1 2)", 4)},
                                       {"s", Permutation::parse("(3 4)", 4)}};
    return FiniteGroup::close(std::move(gens), 5, name);
  }
  std::vector<int> refl(n);
  refl[0] = 0;
  for (int i = 1; i < n; ++i) refl[i] = n - i;
  std::vector<NamedPermutation> gens{{"r", cycle_1_to_n(n, n)},
                                     {"s", Permutation(std::move(refl))}};
  return FiniteGroup::close(std::move(gens), 2 * n + 1, name);
}

FiniteGroup dicyclic(int n) {
  if (n < 2 || 4 * n > 512)
    throw ValidationError("family", "dicyclic parameter out of range 2..128");
  const int m = 2 * n;  // order of the cyclic part
  const int size = 4 * n;
  // elements (i, j) = a^i b^j with 0 <= i < 2n, j in {0,1}; b^2 = a^n
  auto idx = [m](int i, int j) { return ((i % m) + m) % m + m * j; };
  auto mult = [m, idx](int e, int f) {
    int i = e % m, j = e / m, k = f % m, l = f / m;
    if (j == 0) return idx(i + k, l);
    if (l == 0) return idx(i - k, 1);
    return idx(i - k + m / 2, 0);
  };
  auto gens = regular_rep(size, mult, {{"a", idx(1, 0)}, {"b", idx(0, 1)}});
  std::string name = n == 2 ? "Q8" : "Dic" + std::to_string(n);
  return FiniteGroup::close(std::move(gens), size + 1, name);
}

FiniteGroup symmetric(int n) {
  if (n < 2 || n > 6) throw ValidationError("family", "symmetric degree out of range 2..6");
  if (n == 2) {
    std::vector<NamedPermutation> gens{{"a", Permutation::parse("(1 2)")}};
    return FiniteGroup::close(std::move(gens), 3, "S2");
  }
  std::vector<NamedPermutation> gens{{"a", Permutation::parse("(1 2)", n)},
                                     {"b", cycle_1_to_n(n, n)}};
  int order = 1;
  for (int k = 2; k <= n; ++k) order *= k;
  return FiniteGroup::close(std::move(gens), order + 1, "S" + std::to_string(n));
}

FiniteGroup alternating(int n) {
  if (n < 3 || n > 6) throw ValidationError("family", "alternating degree out of range 3..6");
  std::vector<NamedPermutation> gens;
  gens.push_back({"a", Permutation::parse("(1 2 3)", n)});
  if (n >= 4) {
    if (n % 2 == 1)
      gens.push_back({"b", cycle_1_to_n(n, n)});
    else {
      std::ostringstream c;
      c << '(';
      for (int i = 2; i <= n; ++i) c << (i == 2 ? "" : " ") << i;
      c << ')';
      gens.push_back({"b", Permutation::parse(c.str(), n)});
    }
  }
  int order = 1;
  for (int k = 2; k <= n; ++k) order *= k;
  order /= 2;
  return FiniteGroup::close(std::move(gens), order + 1, "A" + std::to_string(n));
}

FiniteGroup heisenberg(int p) {
  if (!is_prime(p) || p * p * p > 512)
    throw ValidationError("family", "heisenberg prime out of range (p^3 <= 512)");
  const int size = p * p * p;
  // elements (x, y, z), product adds coordinates with z-twist x*y'
  auto idx = [p](int x, int y, int z) {
    auto m = [p](int v) { return ((v % p) + p) % p; };
    return m(x) + p * m(y) + p * p * m(z);
  };
  auto mult = [p, idx](int e, int f) {
    int x = e % p, y = (e / p) % p, z = e / (p * p);
    int x2 = f % p, y2 = (f / p) % p, z2 = f / (p * p);
    return idx(x + x2, y + y2, z + z2 + x * y2);
  };
  auto gens = regular_rep(size, mult, {{"x", idx(1, 0, 0)}, {"y", idx(0, 1, 0)}});
  return FiniteGroup::close(std::move(gens), size + 1, "Heis" + std::to_string(p));
}

FiniteGroup elementary_abelian(int p, int k) {
  if (!is_prime(p) || k < 1) throw ValidationError("family", "bad elementary-abelian parameters");
  double sz = 1;
  for (int i = 0; i < k; ++i) sz *= p;
  if (sz > 512) throw ValidationError("family", "elementary-abelian order above 512");
  std::vector<NamedPermutation> gens;
  const int deg = p * k;
  for (int i = 0; i < k; ++i) {
    std::vector<int> im(deg);
    for (int j = 0; j < deg; ++j) im[j] = j;
    for (int j = 0; j < p; ++j) im[i * p + j] = i * p + (j + 1) % p;
    gens.push_back({std::string(1, static_cast<char>('a' + i)), Permutation(std::move(im))});
  }
  std::string name = "C" + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "");
  return FiniteGroup::close(std::move(gens), static_cast<int>(sz) + 1, name);
}

FiniteGroup frobenius20() {
  std::vector<NamedPermutation> gens{{"a", Permutation::parse("(1 2 3 4 5)")},
                                     {"b", Permutation::parse("(2 3 5 4)", 5)}};
  return FiniteGroup::close(std::move(gens), 21, "F20");
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const Permutation* pa = A.permutation_of(0);
  const Permutation* pb = B.permutation_of(0);
  if (!pa || !pb)
    throw ValidationError("family", "direct products need permutation-built factors");
  const int dA = pa->degree();
  const int dB = pb->degree();
  std::vector<NamedPermutation> gens;
  for (size_t i = 0; i < A.generator_elements().size(); ++i)
    gens.push_back({A.generator_labels()[i],
                    A.permutation_of(A.generator_elements()[i])->extended(dA + dB)});
  for (size_t i = 0; i < B.generator_elements().size(); ++i) {
    const Permutation& q = *B.permutation_of(B.generator_elements()[i]);
    std::vector<int> im(dA + dB);
    for (int j = 0; j < dA; ++j) im[j] = j;
    for (int j = 0; j < dB; ++j) im[dA + j] = dA + q.apply(j);
    std::string label = B.generator_labels()[i];
    bool clash = true;
    while (clash) {
      clash = false;
      for (const auto& g : gens)
        if (g.name == label) {
          label += "2";
          clash = true;
          break;
        }
    }
    gens.push_back({std::move(label), Permutation(std::move(im))});
  }
  return FiniteGroup::close(std::move(gens), A.order() * B.order() + 1,
                            A.name() + "x" + B.name());
}

const std::vector<FiniteGroup>& default_corpus() {
  static const std::vector<FiniteGroup> corpus = [] {
    std::vector<FiniteGroup> v;
    // abelian
    v.push_back(cyclic(1));
    v.push_back(cyclic(2));
    v.push_back(cyclic(3));
    v.push_back(cyclic(4));
    v.push_back(cyclic(6));
    v.push_back(cyclic(8));
    v.push_back(cyclic(9));
    v.push_back(cyclic(12));
    v.push_back(cyclic(16));
    v.push_back(cyclic(27));
    v.push_back(elementary_abelian(2, 2));
    v.push_back(elementary_abelian(2, 3));
    v.push_back(elementary_abelian(3, 2));
    v.push_back(elementary_abelian(2, 7));
    v.push_back(direct_product(cyclic(4), cyclic(4)));
    // nilpotent non-abelian 2-groups and 3-groups, orders 8..128
    v.push_back(dihedral(4));   // order 8
    v.push_back(dicyclic(2));   // Q8
    v.push_back(dihedral(8));   // order 16
    v.push_back(dicyclic(4));   // order 16
    v.push_back(dihedral(16));  // order 32
    v.push_back(dicyclic(8));   // order 32
    v.push_back(dihedral(32));  // order 64
    v.push_back(dihedral(64));  // order 128
    v.push_back(heisenberg(3)); // order 27
    v.push_back(heisenberg(5)); // order 125
    // non-nilpotent soluble
    v.push_back(symmetric(3));
    v.push_back(dihedral(5));   // order 10
    v.push_back(dihedral(6));   // order 12
    v.push_back(dicyclic(3));   // order 12
    v.push_back(alternating(4));
    v.push_back(dihedral(7));   // order 14
    v.push_back(dihedral(9));   // order 18
    v.push_back(dicyclic(5));   // order 20
    v.push_back(frobenius20());
    v.push_back(symmetric(4));
    v.push_back(dihedral(27));  // order 54
    // non-soluble
    v.push_back(alternating(5));
    v.push_back(symmetric(5));
    v.push_back(direct_product(alternating(5), cyclic(2)));
    // mixed direct products
    v.push_back(direct_product(symmetric(3), cyclic(4)));
    v.push_back(direct_product(dicyclic(2), cyclic(3)));
    v.push_back(direct_product(dihedral(5), cyclic(3)));
    v.push_back(direct_product(symmetric(3), symmetric(3)));
    v.push_back(direct_product(symmetric(4), cyclic(2)));
    // larger 2-groups exercising the sampled paths
    v.push_back(dihedral(128));  // order 256
    v.push_back(dihedral(256));  // order 512
    return v;
  }();
  return corpus;
}

const FiniteGroup& by_name(const std::string& name) {
  for (const auto& g : default_corpus())
    if (g.name() == name) return g;
  throw UnknownNameError("unknown group \"" + name + "\"");
}

FiniteGroup load_cayley_table(const std::string& content, std::string name) {
  std::istringstream in(content);
  std::string line;
  bool saw_order = false;
  long long n = -1;
  std::vector<std::int32_t> table;
  int rows = 0;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    if (line[a] == '#') {
      if (saw_order)
        throw ValidationError("cayley-shape", "comments are only allowed before the order line");
      continue;
    }
    std::istringstream ls(line);
    if (!saw_order) {
      if (!(ls >> n) || n < 1)
        throw ValidationError("cayley-shape", "first line must be the positive order");
      std::string junk;
      if (ls >> junk) throw ValidationError("cayley-shape", "order line has trailing tokens");
      saw_order = true;
      table.reserve(static_cast<size_t>(n) * n);
      continue;
    }
    long long v;
    int in_row = 0;
    while (ls >> v) {
      if (v < 0 || v >= n)
        throw ValidationError("cayley-range",
                              "entry " + std::to_string(v) + " out of range 0.." +
                                  std::to_string(n - 1));
      table.push_back(static_cast<std::int32_t>(v));
      ++in_row;
    }
    if (!ls.eof()) throw ValidationError("cayley-shape", "non-numeric token in table row");
    if (in_row != n)
      throw ValidationError("cayley-shape", "row " + std::to_string(rows) + " has " +
                                                std::to_string(in_row) + " entries, expected " +
                                                std::to_string(n));
    ++rows;
  }
  if (!saw_order) throw ValidationError("cayley-shape", "empty table file");
  if (rows != n)
    throw ValidationError("cayley-shape", "expected " + std::to_string(n) + " rows, got " +
                                              std::to_string(rows));
  return FiniteGroup::from_table(std::move(table), std::move(name));
}

FiniteGroup load_cayley_file(const std::string& path, std::string name) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_cayley_table(ss.str(), std::move(name));
}

FiniteGroup load_perm_file(const std::string& path, std::string name, int cap) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return FiniteGroup::close(parse_generator_file(ss.str()), cap, std::move(name));
}

}  // namespace engelkit::corpus
