#pragma once

#include <optional>
#include <vector>

#include "engelkit/bitset.hpp"
#include "engelkit/group.hpp"

namespace engelkit {

struct Subgroup {
  const FiniteGroup* group = nullptr;
  Bitset members;
  std::vector<int> gens;

  int size() const { return members.count(); }
  bool contains(int g) const { return members.test(g); }
  bool is_trivial() const { return size() == 1; }
  bool is_whole() const { return size() == group->order(); }
};

// Descending chain of subgroups; terms.front() is the declared top.
struct Series {
  std::vector<Subgroup> terms;
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);

// Least subgroup containing gens (orbit of the identity under right
// multiplication by the generators).
Subgroup subgroup_generate(const FiniteGroup& G, const std::vector<int>& gens);

// Least subgroup containing gens that is stable under conjugation by all of
// `ambient` (gens must lie in ambient).
Subgroup normal_closure_in(const Subgroup& ambient, const std::vector<int>& gens);
Subgroup normal_closure(const FiniteGroup& G, const std::vector<int>& gens);

Subgroup centralizer(const FiniteGroup& G, const std::vector<int>& elems);
Subgroup center(const FiniteGroup& G);

// Subgroup generated by { [a,b] : a in A, b in B } over the full member sets.
Subgroup commutator_subgroup(const Subgroup& A, const Subgroup& B);

Series lower_central_series(const Subgroup& H);
// Least c with gamma_{c+1}(H) trivial; nullopt when H is not nilpotent.
// The trivial group has class 0.
std::optional<int> nilpotency_class(const Subgroup& H);

Series derived_series(const Subgroup& H);
std::optional<int> derived_length(const Subgroup& H);

bool is_abelian(const Subgroup& H);
// Stable under conjugation by the whole group.
bool is_normal(const Subgroup& H);

// Successive normal closures G >= ncl(H) >= ... stabilize exactly at H.
bool is_subnormal(const FiniteGroup& G, const Subgroup& H);

// Subgroup generated by elements whose cyclic subgroup is subnormal. For a
// finite group this is the Fitting subgroup; the generating element set is
// verified to already be closed.
Subgroup baer_radical(const FiniteGroup& G);

// Independent cross-check: subgroup generated by elements whose normal
// closure is nilpotent. Coincides with baer_radical on finite groups.
Subgroup fitting_oracle(const FiniteGroup& G);

}  // namespace engelkit
