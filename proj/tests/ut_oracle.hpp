#pragma once

// Test-only oracle: the unitriangular group UT(6, F_p) is nilpotent of class
// 5, so any assignment of the two generators extends to a homomorphism from
// the free class-5 group. Collected normal forms are checked against direct
// word evaluation through such homomorphisms. Independent of the collection
// machinery by construction.

#include <random>

#include "engelkit/collector.hpp"

namespace engelkit::testing {

struct UT6 {
  int p;
  int m[6][6];

  static UT6 id(int p) {
    UT6 a{p, {}};
    for (int i = 0; i < 6; ++i) a.m[i][i] = 1;
    return a;
  }
  static UT6 random(int p, std::mt19937_64& rng) {
    UT6 a = id(p);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) a.m[i][j] = static_cast<int>(rng() % p);
    return a;
  }
  UT6 mul(const UT6& o) const {
    UT6 r{p, {}};
    for (int i = 0; i < 6; ++i)
      for (int k = i; k < 6; ++k) {
        if (m[i][k] == 0) continue;
        for (int j = k; j < 6; ++j) r.m[i][j] = (r.m[i][j] + m[i][k] * o.m[k][j]) % p;
      }
    return r;
  }
  UT6 inv() const {
    UT6 n{p, {}};
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) n.m[i][j] = m[i][j];
    UT6 acc = id(p);
    UT6 term = id(p);
    for (int k = 1; k <= 5; ++k) {
      term = term.mul(n);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) term.m[i][j] = (p - term.m[i][j]) % p;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) acc.m[i][j] = (acc.m[i][j] + term.m[i][j]) % p;
    }
    return acc;
  }
  UT6 comm(const UT6& o) const { return inv().mul(o.inv()).mul(*this).mul(o); }
  UT6 pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    UT6 acc = id(p);
    UT6 base = *this;
    while (e) {
      if (e & 1) acc = acc.mul(base);
      base = base.mul(base);
      e >>= 1;
    }
    return acc;
  }
  bool operator==(const UT6& o) const {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (m[i][j] != o.m[i][j]) return false;
    return true;
  }
};

inline UT6 eval_word(const GenWord& w, const std::vector<UT6>& images) {
  UT6 acc = UT6::id(images[0].p);
  for (const auto& f : w) acc = acc.mul(images[f.gen].pow(f.exp.convert_to<long long>()));
  return acc;
}

inline UT6 basis_image(const Collector& C, int id, const std::vector<UT6>& images) {
  const auto& bc = C.basis()[id];
  if (bc.left < 0) return images[id];
  return basis_image(C, bc.left, images).comm(basis_image(C, bc.right, images));
}

inline UT6 eval_nf(const Collector& C, const NormalForm& nf, const std::vector<UT6>& images) {
  UT6 acc = UT6::id(images[0].p);
  for (int id = 0; id < C.dim(); ++id) {
    if (nf.e[id] == 0) continue;
    acc = acc.mul(basis_image(C, id, images).pow(nf.e[id].convert_to<long long>()));
  }
  return acc;
}

inline GenWord random_word(std::mt19937_64& rng, int rank, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> gen(0, rank - 1);
  GenWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back({gen(rng), BigInt(rng() % 2 ? 1 : -1)});
  return w;
}

}  // namespace engelkit::testing
