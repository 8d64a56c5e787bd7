#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace engelkit {

// Bijection on {0..degree-1}. Text I/O is 1-based cycle notation; cycles in
// one expression compose left to right, so "(1 2)(2 3)" means apply (1 2)
// first, then (2 3).
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int degree);
  explicit Permutation(std::vector<int> images);  // validates bijection

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int p) const { return images_[p]; }

  // this, then q (left-to-right composition)
  Permutation then(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Same mapping on a larger point set (new points fixed).
  Permutation extended(int degree) const;

  auto operator<=>(const Permutation&) const = default;

  const std::vector<int>& images() const { return images_; }

  // Parse cycle notation over 1-based points, e.g. "(1 2 3)(4 5)".
  // Non-disjoint cycles compose left to right. "()" is the identity.
  // The result has degree max(largest point, min_degree).
  static Permutation parse(const std::string& text, int min_degree = 1);

  // Normalized cycle form: each cycle starts at its smallest point, cycles
  // sorted by that point; identity prints as "()".
  std::string to_cycles() const;

 private:
  std::vector<int> images_;
};

// One `name = cycles` binding per line; '#' starts a comment.
struct NamedPermutation {
  std::string name;
  Permutation perm;
};

// Parse a generator file (External interface of the group engine). All
// permutations are extended to the common degree.
std::vector<NamedPermutation> parse_generator_file(const std::string& content);

}  // namespace engelkit
