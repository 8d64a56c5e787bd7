#pragma once

#include "engelkit/bitset.hpp"
#include "engelkit/group.hpp"

namespace engelkit {

enum class Side { kLeft, kRight };

// L_n(G) or R_n(G). Stored as a bitmask, not a Subgroup: these sets need not
// be subgroups.
struct EngelSet {
  const FiniteGroup* group = nullptr;
  Side side = Side::kLeft;
  int n = 0;
  Bitset members;
};

// { x : [g,_n x] = 1 for all g }. n = 0 gives {identity}.
EngelSet left_engel_set(const FiniteGroup& G, int n);
// { x : [x,_n g] = 1 for all g }.
EngelSet right_engel_set(const FiniteGroup& G, int n);

bool is_left_n_engel(const FiniteGroup& G, int x, int n);
bool is_right_n_engel(const FiniteGroup& G, int x, int n);

// { x : the normal closure of x is abelian }, packaged as a left-2 set.
// Independent of the brute-force computation; their equality is a theorem.
EngelSet l2_characterization(const FiniteGroup& G);

// { x : <x, x^y> is nilpotent of class <= 2 for every y }, packaged as a
// left-3 set. Independent of the brute-force computation.
EngelSet l3_characterization(const FiniteGroup& G);

}  // namespace engelkit
