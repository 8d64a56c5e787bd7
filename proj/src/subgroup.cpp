#include "engelkit/subgroup.hpp"

#include <algorithm>
#include <map>

#include "engelkit/errors.hpp"

namespace engelkit {

namespace {

// Deterministic small generating set for a member bitmask.
std::vector<int> greedy_generators(const FiniteGroup& G, const Bitset& members) {
  std::vector<int> gens;
  Bitset covered(G.order());
  covered.set(0);
  int ncov = 1;
  const int target = members.count();
  for (int cand = 1; cand < G.order() && ncov < target; ++cand) {
    if (!members.test(cand) || covered.test(cand)) continue;
    gens.push_back(cand);
    std::vector<int> queue = covered.to_list();
    for (size_t head = 0; head < queue.size(); ++head) {
      for (int ge : gens) {
        int t = G.mul(queue[head], ge);
        if (!covered.test(t)) {
          covered.set(t);
          ++ncov;
          queue.push_back(t);
        }
      }
    }
  }
  return gens;
}

}  // namespace

Subgroup trivial_subgroup(const FiniteGroup& G) {
  Subgroup s{&G, Bitset(G.order()), {}};
  s.members.set(0);
  return s;
}

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup s{&G, Bitset(G.order()), G.generator_elements()};
  for (int i = 0; i < G.order(); ++i) s.members.set(i);
  return s;
}

Subgroup subgroup_generate(const FiniteGroup& G, const std::vector<int>& gens) {
  Subgroup s{&G, Bitset(G.order()), {}};
  s.members.set(0);
  std::vector<int> queue{0};
  for (int g : gens)
    if (g != 0 && std::find(s.gens.begin(), s.gens.end(), g) == s.gens.end())
      s.gens.push_back(g);
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int ge : s.gens) {
      int t = G.mul(queue[head], ge);
      if (!s.members.test(t)) {
        s.members.set(t);
        queue.push_back(t);
      }
    }
  }
  return s;
}

Subgroup normal_closure_in(const Subgroup& ambient, const std::vector<int>& gens) {
  const FiniteGroup& G = *ambient.group;
  for (int g : gens)
    if (!ambient.contains(g))
      throw ValidationError("subgroup", "closure generators must lie in the ambient subgroup");
  std::vector<int> gset = gens;
  Subgroup s = subgroup_generate(G, gset);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto members = s.members.to_list();
    for (int m : members) {
      for (int c : ambient.gens) {
        int t = G.conj(m, c);
        if (!s.contains(t)) {
          gset.push_back(t);
          s = subgroup_generate(G, gset);
          grew = true;
        }
      }
      if (grew) break;
    }
  }
  return s;
}

Subgroup normal_closure(const FiniteGroup& G, const std::vector<int>& gens) {
  return normal_closure_in(whole_group(G), gens);
}

Subgroup centralizer(const FiniteGroup& G, const std::vector<int>& elems) {
  Subgroup s{&G, Bitset(G.order()), {}};
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int e : elems)
      if (G.mul(g, e) != G.mul(e, g)) {
        ok = false;
        break;
      }
    if (ok) s.members.set(g);
  }
  s.gens = greedy_generators(G, s.members);
  return s;
}

Subgroup center(const FiniteGroup& G) {
  std::vector<int> all(G.order());
  for (int i = 0; i < G.order(); ++i) all[i] = i;
  return centralizer(G, all);
}

Subgroup commutator_subgroup(const Subgroup& A, const Subgroup& B) {
  const FiniteGroup& G = *A.group;
  Bitset comms(G.order());
  A.members.for_each([&](int a) {
    B.members.for_each([&](int b) { comms.set(G.comm(a, b)); });
  });
  Subgroup s = subgroup_generate(G, comms.to_list());
  s.gens = greedy_generators(G, s.members);
  return s;
}

Series lower_central_series(const Subgroup& H) {
  Series series;
  series.terms.push_back(H);
  for (;;) {
    Subgroup next = commutator_subgroup(series.terms.back(), H);
    if (next.members == series.terms.back().members) break;
    series.terms.push_back(std::move(next));
  }
  return series;
}

std::optional<int> nilpotency_class(const Subgroup& H) {
  Series s = lower_central_series(H);
  if (!s.terms.back().is_trivial()) return std::nullopt;
  return static_cast<int>(s.terms.size()) - 1;
}

Series derived_series(const Subgroup& H) {
  Series series;
  series.terms.push_back(H);
  for (;;) {
    const Subgroup& last = series.terms.back();
    Subgroup next = commutator_subgroup(last, last);
    if (next.members == last.members) break;
    series.terms.push_back(std::move(next));
  }
  return series;
}

std::optional<int> derived_length(const Subgroup& H) {
  Series s = derived_series(H);
  if (!s.terms.back().is_trivial()) return std::nullopt;
  return static_cast<int>(s.terms.size()) - 1;
}

bool is_abelian(const Subgroup& H) {
  const FiniteGroup& G = *H.group;
  const auto members = H.members.to_list();
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (G.mul(members[i], members[j]) != G.mul(members[j], members[i])) return false;
  return true;
}

bool is_normal(const Subgroup& H) {
  const FiniteGroup& G = *H.group;
  const auto members = H.members.to_list();
  for (int m : members)
    for (int c : G.generator_elements())
      if (!H.contains(G.conj(m, c))) return false;
  return true;
}

bool is_subnormal(const FiniteGroup& G, const Subgroup& H) {
  Subgroup K = whole_group(G);
  for (;;) {
    Subgroup next = normal_closure_in(K, H.gens);
    if (next.members == K.members) break;
    K = std::move(next);
  }
  return K.members == H.members;
}

namespace {

// Shared scaffolding for the two radicals: collect qualifying elements,
// memoizing per cyclic subgroup since x qualifies iff <x> does.
template <typename Pred>
Bitset elements_with_cyclic_property(const FiniteGroup& G, Pred qualifies) {
  Bitset out(G.order());
  std::map<std::vector<int>, bool> memo;
  for (int x = 0; x < G.order(); ++x) {
    Subgroup cyc = subgroup_generate(G, {x});
    auto key = cyc.members.to_list();
    auto it = memo.find(key);
    bool ok = it != memo.end() ? it->second : qualifies(cyc);
    if (it == memo.end()) memo.emplace(std::move(key), ok);
    if (ok) out.set(x);
  }
  return out;
}

}  // namespace

Subgroup baer_radical(const FiniteGroup& G) {
  Bitset qual = elements_with_cyclic_property(
      G, [&](const Subgroup& cyc) { return is_subnormal(G, cyc); });
  Subgroup s = subgroup_generate(G, qual.to_list());
  if (!(s.members == qual))
    throw Error("baer radical: qualifying element set is not closed in " + G.name());
  s.gens = greedy_generators(G, s.members);
  return s;
}

Subgroup fitting_oracle(const FiniteGroup& G) {
  Bitset qual = elements_with_cyclic_property(G, [&](const Subgroup& cyc) {
    return nilpotency_class(normal_closure(G, cyc.gens)).has_value();
  });
  Subgroup s = subgroup_generate(G, qual.to_list());
  s.gens = greedy_generators(G, s.members);
  return s;
}

}  // namespace engelkit
