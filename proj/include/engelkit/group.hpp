#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "engelkit/permutation.hpp"

namespace engelkit {

// A word over generator labels: product of label^exponent factors.
struct WordFactor {
  std::string label;
  long long exp = 1;
};
using Word = std::vector<WordFactor>;

// Parse a word like "abab^{-1}", "r^3 s", "x1*x2^-2". Tokenization is
// greedy-longest-match against `labels`, so single-letter generators may be
// juxtaposed. '^' takes an integer, optionally braced. Whitespace and '*'
// separate factors. "1" alone denotes the empty word.
Word parse_word(const std::string& text, const std::vector<std::string>& labels);
std::string word_to_string(const Word& w);

// Finite group materialized as a full multiplication table. Element 0 is the
// identity; numbering is BFS discovery order over the generator list, so all
// tables are deterministic. Immutable after construction.
class FiniteGroup {
 public:
  static constexpr int kDefaultOrderCap = 20000;

  // Breadth-first closure of permutation generators.
  static FiniteGroup close(std::vector<NamedPermutation> gens, int cap,
                           std::string name);

  // Wrap a raw table (validated: Latin square, identity at 0, associativity
  // exhaustively for order <= 512 and sampled above, inverses, generation).
  // Generators are chosen greedily if not supplied.
  static FiniteGroup from_table(std::vector<std::int32_t> table, std::string name);

  const std::string& name() const { return name_; }
  int order() const { return order_; }

  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int h) const { return mul(inv(h), mul(g, h)); }  // h^{-1} g h
  int comm(int g, int h) const {                                   // [g,h]
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }
  // [g,_n x]; n = 0 gives g
  int engel_comm(int g, int x, int n) const {
    int e = g;
    for (int k = 0; k < n; ++k) e = comm(e, x);
    return e;
  }
  int power(int g, long long e) const;
  int element_order(int g) const;
  bool is_abelian() const;

  const std::int32_t* mul_data() const { return mul_.data(); }
  const std::int32_t* inv_data() const { return inv_.data(); }

  const std::vector<std::string>& generator_labels() const { return gen_labels_; }
  const std::vector<int>& generator_elements() const { return gen_elems_; }

  // Element as a word in the generators (BFS word); identity is "1".
  std::string element_word(int g) const;

  int evaluate_word(const Word& w, const std::map<std::string, int>& assignment) const;
  // Convenience: parse `text` over this group's generator labels and evaluate
  // with each label bound to its generator.
  int element_by_word(const std::string& text) const;

  // Underlying permutation of an element when the group was closed from
  // permutations (empty degree otherwise).
  const Permutation* permutation_of(int g) const;

 private:
  enum class AssocCheck { kExhaustive, kSampled, kGeneratorColumns };

  FiniteGroup() = default;
  void build_words_and_check_generation();
  void validate_table(AssocCheck mode) const;
  void derive_inverses();

  std::string name_;
  int order_ = 0;
  std::vector<std::int32_t> mul_;
  std::vector<std::int32_t> inv_;
  std::vector<std::string> gen_labels_;
  std::vector<int> gen_elems_;
  // BFS parent chain: element g = via_parent_[g] * gen_elems_[via_gen_[g]]
  std::vector<std::int32_t> via_parent_;
  std::vector<std::int32_t> via_gen_;
  std::vector<Permutation> perms_;  // only for permutation-closed groups
};

}  // namespace engelkit
