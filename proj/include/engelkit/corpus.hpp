#pragma once

#include <string>
#include <vector>

#include "engelkit/group.hpp"

namespace engelkit::corpus {

// Families are built from explicit permutation generators and closed with
// FiniteGroup::close. Naming scheme (documented in the README):
//   Cn        cyclic of order n
//   Cp^k      elementary abelian, e.g. C2^3
//   Dn        dihedral with rotation order n (group order 2n), n >= 2
//   Dicn      dicyclic with cyclic part order 2n (group order 4n), n >= 2;
//             Q8 is an alias for Dic2
//   Sn / An   symmetric / alternating, n <= 6
//   Heisp     Heisenberg group over F_p (order p^3)
//   F20       Frobenius group of order 20
//   AxB       direct product, e.g. S3xC4

FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);
FiniteGroup dicyclic(int n);
FiniteGroup symmetric(int n);
FiniteGroup alternating(int n);
FiniteGroup heisenberg(int p);
FiniteGroup elementary_abelian(int p, int k);
FiniteGroup frobenius20();
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

// Deterministic built-in test universe: >= 30 groups, all orders <= 512,
// covering abelian and nilpotent p-groups, non-nilpotent soluble groups,
// non-soluble groups and mixed direct products.
const std::vector<FiniteGroup>& default_corpus();

// Lookup by name in the default corpus; throws UnknownNameError.
const FiniteGroup& by_name(const std::string& name);

// Cayley file format: optional leading '#' comment lines, then the order n,
// then n rows of n space-separated 0-based entries; element 0 is the
// identity.
FiniteGroup load_cayley_table(const std::string& content, std::string name);
FiniteGroup load_cayley_file(const std::string& path, std::string name);

// Permutation generator file (see parse_generator_file).
FiniteGroup load_perm_file(const std::string& path, std::string name,
                           int cap = FiniteGroup::kDefaultOrderCap);

}  // namespace engelkit::corpus
