#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "engelkit/group.hpp"

namespace engelkit {

using BigInt = boost::multiprecision::cpp_int;

// Basic commutator in the Hall basis. Generators have weight 1 and no
// components. Listing order: increasing weight, then by (left, right) ids.
struct BasicCommutator {
  int id = 0;
  int weight = 1;
  int left = -1;
  int right = -1;
  std::string label;
};

// Exponent vector over the Hall basis of the free nilpotent group of the
// given rank and class: the element z_1^{e_1} ... z_d^{e_d}. Exact integers;
// collection coefficients grow quickly.
struct NormalForm {
  int rank = 0;
  int cls = 0;
  std::vector<BigInt> e;

  bool operator==(const NormalForm&) const = default;
  bool is_identity() const {
    for (const auto& x : e)
      if (x != 0) return false;
    return true;
  }
};

struct GenFactor {
  int gen = 0;
  BigInt exp = 1;
};
using GenWord = std::vector<GenFactor>;

// "abab^{-1}" over generators a,b,c (first `rank` letters).
GenWord parse_gen_word(const std::string& text, int rank);

// Collection tables for one (rank, class); built once, immutable, shared.
// Commutation rules for basis pairs are derived by exact expansion in the
// degree-truncated free associative ring (the Magnus embedding) and cached;
// collection from the left then rewrites arbitrary words to normal form.
class Collector {
 public:
  static const Collector& get(int rank, int cls);  // rank 1..3, class 1..5

  int rank() const { return rank_; }
  int cls() const { return cls_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasicCommutator>& basis() const { return basis_; }
  int weight_of(int id) const { return basis_[id].weight; }
  const std::vector<int>& ids_of_weight(int w) const { return ids_of_weight_[w]; }

  NormalForm identity() const;
  NormalForm generator(int g) const;

  // Word over generator letters -> normal form, by collection.
  NormalForm collect(const GenWord& word) const;
  // Word over arbitrary basis letters (id, exponent) -> normal form.
  NormalForm collect_basis(const std::vector<std::pair<int, BigInt>>& word) const;

  NormalForm mul(const NormalForm& x, const NormalForm& y) const;
  NormalForm inv(const NormalForm& x) const;
  NormalForm conj(const NormalForm& x, const NormalForm& y) const;  // y^-1 x y
  NormalForm comm(const NormalForm& x, const NormalForm& y) const;  // [x,y]
  NormalForm pow(const NormalForm& x, const BigInt& k) const;

  std::string to_string(const NormalForm& x) const;

  // Normal form of [z_j^±1, z_i^±1] for j > i (empty when the weights
  // overflow the class). Exposed for tests.
  using NFWord = std::vector<std::pair<int, BigInt>>;
  const NFWord& rule(int j, int i, bool j_inverse, bool i_inverse) const;

  // Independent route for cross-checks: expand the word in the truncated
  // free associative ring and read the normal form off the embedding.
  NormalForm collect_via_magnus(const GenWord& word) const;

 private:
  Collector(int rank, int cls);

  // one full collection sweep over a letter list (callers keep sweeps small)
  NormalForm collect_sweep(const std::vector<std::pair<int, BigInt>>& word) const;

  // --- truncated free associative ring over Z ---
  using Poly = std::vector<BigInt>;  // coefficient per monomial
  Poly p_one() const;
  Poly p_gen(int g) const;
  Poly p_mul(const Poly& a, const Poly& b) const;
  Poly p_inv(const Poly& a) const;  // inverse of 1 + (augmentation part)
  std::vector<BigInt> magnus_to_nf(Poly t) const;

  void build_basis();
  void build_magnus();
  void build_rules();

  int rank_ = 0;
  int cls_ = 0;
  std::vector<BasicCommutator> basis_;
  std::vector<std::vector<int>> ids_of_weight_;  // [1..cls]

  // monomial indexing: offset per degree, base-rank digits
  std::vector<int> mon_offset_;
  int n_mons_ = 0;

  std::vector<Poly> magnus_;
  std::vector<Poly> magnus_inv_;

  // layer solver: per weight, pivot rows and inverse of the pivot submatrix
  struct LayerSolver;
  std::vector<LayerSolver> solvers_;

  std::unordered_map<int, std::array<NFWord, 4>> rules_;
  NFWord empty_rule_;
};

// Integer lattice kept in canonical Hermite normal form (row style: rows
// sorted by pivot column, positive pivots, entries above a pivot reduced).
class IntLattice {
 public:
  explicit IntLattice(int dim);
  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Returns true when the lattice grew.
  bool insert(std::vector<BigInt> v);
  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }
  // Product of the pivots when full-rank; nullopt = infinite index.
  std::optional<BigInt> index() const;

 private:
  void echelonize();
  int dim_;
  std::vector<std::vector<BigInt>> rows_;
};

struct Theorem2Verdict {
  bool verified = false;
  long long instances = 0;
  // layer_index[w-1] = index of the captured lattice in layer w, nullopt
  // when infinite. Verified iff the weight-5 index is 1.
  std::vector<std::optional<BigInt>> layer_index;
};

// Saturate the left-3-Engel relators [g, t, t, t] (t in {a,b}, g over all
// reduced words of length <= instance_len) with conjugates by reduced words
// of length <= conj_len, then decompose the generated normal subgroup down
// the lower-central filtration of the free class-5 group on 2 generators.
// Throws when the instance schedule exceeds max_instances.
Theorem2Verdict theorem2_symbolic(int instance_len, int conj_len,
                                  long long max_instances = 2000000);

// Decomposition on an explicit instance set (test hook; instances must lie
// in gamma_4, i.e. have support only in weights 4 and 5).
Theorem2Verdict theorem2_decompose(const std::vector<NormalForm>& instances);

}  // namespace engelkit
