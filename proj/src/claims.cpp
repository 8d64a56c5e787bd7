#include "engelkit/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "engelkit/corpus.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/errors.hpp"
#include "engelkit/exponent.hpp"
#include "engelkit/subgroup.hpp"

namespace engelkit {

namespace {

constexpr int kPairExhaustiveOrder = 256;  // above this, sample pairs
constexpr int kPairSamples = 10000;
constexpr long long kTripleExhaustive = 20000;
constexpr int kTripleSamples = 10000;
constexpr size_t kWitnessListCap = 12;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::optional<std::pair<int, int>> prime_power(int o) {
  if (o < 2) return std::nullopt;
  for (int p = 2; p * p <= o; ++p) {
    if (o % p == 0) {
      int n = 0;
      while (o % p == 0) {
        o /= p;
        ++n;
      }
      if (o != 1) return std::nullopt;
      return std::make_pair(p, n);
    }
  }
  return std::make_pair(o, 1);  // o itself prime
}

// --- per-group derived data, shared across claims ---------------------------

class Analysis {
 public:
  explicit Analysis(const FiniteGroup& G) : G_(G) {}

  const Bitset& left(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = left_.find(n);
    if (it == left_.end()) it = left_.emplace(n, left_engel_set(G_, n).members).first;
    return it->second;
  }
  const Bitset& right(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = right_.find(n);
    if (it == right_.end()) it = right_.emplace(n, right_engel_set(G_, n).members).first;
    return it->second;
  }
  const Bitset& l2char() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!l2char_) l2char_ = l2_characterization(G_).members;
    return *l2char_;
  }
  const Bitset& l3char() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!l3char_) l3char_ = l3_characterization(G_).members;
    return *l3char_;
  }
  const Subgroup& baer() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!baer_) baer_ = baer_radical(G_);
    return *baer_;
  }
  const Subgroup& fitting() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!fitting_) fitting_ = fitting_oracle(G_);
    return *fitting_;
  }

  struct PairInfo {
    Subgroup span;      // <a,b>
    Subgroup derived;   // [<a,b>, <a,b>]
    int cls = -1;       // -1 = not nilpotent
    bool metabelian = false;
  };

  const PairInfo& pair_info(int a, int b) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::minmax(a, b);
    auto it = pairs_.find(key);
    if (it != pairs_.end()) return *it->second;
    Subgroup H = subgroup_generate(G_, {key.first, key.second});
    auto mkey = H.members.to_list();
    auto mit = by_members_.find(mkey);
    std::shared_ptr<PairInfo> info;
    if (mit != by_members_.end()) {
      info = mit->second;
    } else {
      info = std::make_shared<PairInfo>();
      info->span = H;
      info->derived = commutator_subgroup(H, H);
      auto c = nilpotency_class(H);
      info->cls = c.value_or(-1);
      info->metabelian = is_abelian(info->derived);
      by_members_.emplace(std::move(mkey), info);
    }
    return *pairs_.emplace(key, std::move(info)).first->second;
  }

 private:
  const FiniteGroup& G_;
  std::mutex mu_;
  std::map<int, Bitset> left_, right_;
  std::optional<Bitset> l2char_, l3char_;
  std::optional<Subgroup> baer_, fitting_;
  std::map<std::pair<int, int>, std::shared_ptr<PairInfo>> pairs_;
  std::map<std::vector<int>, std::shared_ptr<PairInfo>> by_members_;
};

Analysis& analysis_for(const FiniteGroup& G) {
  static std::mutex mu;
  static std::map<const FiniteGroup*, std::unique_ptr<Analysis>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(&G);
  if (it == registry.end())
    it = registry.emplace(&G, std::make_unique<Analysis>(G)).first;
  return *it->second;
}

// Deterministic pair schedule: exhaustive for small orders, fixed-seed sample
// above. `universe` maps a flat index to an element (for loops over subsets).
class PairSchedule {
 public:
  PairSchedule(const std::string& tag, std::vector<int> universe, int group_order)
      : universe_(std::move(universe)) {
    exhaustive_ = group_order <= kPairExhaustiveOrder;
    if (!exhaustive_ && !universe_.empty()) {
      std::mt19937_64 rng(fnv1a(tag));
      std::uniform_int_distribution<size_t> d(0, universe_.size() - 1);
      for (int k = 0; k < kPairSamples; ++k)
        samples_.emplace_back(universe_[d(rng)], universe_[d(rng)]);
    }
  }

  template <typename F>  // F(a, b) -> bool (false aborts)
  void for_each(F f) const {
    if (exhaustive_) {
      for (int a : universe_)
        for (int b : universe_)
          if (!f(a, b)) return;
    } else {
      for (auto [a, b] : samples_)
        if (!f(a, b)) return;
    }
  }

  std::string mode() const {
    return exhaustive_ ? "exhaustive" : "sampled:" + std::to_string(kPairSamples);
  }

 private:
  std::vector<int> universe_;
  bool exhaustive_ = true;
  std::vector<std::pair<int, int>> samples_;
};

std::vector<int> all_elements(const FiniteGroup& G) {
  std::vector<int> v(G.order());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void set_fail(ClaimResult& res, std::map<std::string, std::string> witness) {
  res.status = ClaimStatus::kFail;
  for (auto& [k, v] : witness) res.witness[k] = v;
}

long long ipow(long long base, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// --- individual claims -------------------------------------------------------

void chk01_recursion(const FiniteGroup& G, Analysis&, ClaimResult& res) {
  PairSchedule sched("CHK-01:" + G.name(), all_elements(G), G.order());
  res.witness["pairs"] = sched.mode();
  sched.for_each([&](int g, int x) {
    if (G.engel_comm(g, x, 0) != g) {
      set_fail(res, {{"g", G.element_word(g)}, {"x", G.element_word(x)}, {"n", "0"}});
      return false;
    }
    int e = g;
    for (int n = 1; n <= 5; ++n) {
      e = G.comm(e, x);
      if (G.engel_comm(g, x, n) != e) {
        set_fail(res, {{"g", G.element_word(g)},
                       {"x", G.element_word(x)},
                       {"n", std::to_string(n)}});
        return false;
      }
    }
    return true;
  });
}

void chk02_l2(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  const Bitset& brute = A.left(2);
  const Bitset& chr = A.l2char();
  if (brute == chr) {
    res.witness["size"] = std::to_string(brute.count());
    return;
  }
  for (int x = 0; x < G.order(); ++x)
    if (brute.test(x) != chr.test(x)) {
      set_fail(res, {{"x", G.element_word(x)},
                     {"left-2-engel", brute.test(x) ? "yes" : "no"},
                     {"abelian-normal-closure", chr.test(x) ? "yes" : "no"}});
      return;
    }
}

void chk03_involution(const FiniteGroup& G, Analysis&, ClaimResult& res) {
  int involutions = 0;
  for (int a = 0; a < G.order(); ++a) {
    if (G.mul(a, a) != 0) continue;
    ++involutions;
    for (int x = 0; x < G.order(); ++x) {
      const int c = G.comm(x, a);
      int e = x;
      long long target = 1;  // (-2)^(m-1)
      for (int m = 1; m <= 6; ++m) {
        e = G.comm(e, a);
        if (e != G.power(c, target)) {
          set_fail(res, {{"a", G.element_word(a)},
                         {"x", G.element_word(x)},
                         {"m", std::to_string(m)}});
          return;
        }
        target *= -2;
      }
    }
  }
  res.witness["involutions"] = std::to_string(involutions);
}

void chk04_heineken(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  for (int n = 1; n <= 4; ++n) {
    const Bitset& rn = A.right(n);
    const Bitset& ln1 = A.left(n + 1);
    bool bad = false;
    rn.for_each([&](int x) {
      if (!bad && !ln1.test(G.inv(x))) {
        bad = true;
        set_fail(res, {{"x", G.element_word(x)}, {"n", std::to_string(n)}});
      }
    });
    if (bad) return;
  }
}

void chk05_kappe(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  const Bitset& r2 = A.right(2);
  const auto members = r2.to_list();
  for (int a : members) {
    if (!r2.test(G.inv(a))) {
      set_fail(res, {{"x", G.element_word(a)}, {"violation", "inverse leaves R2"}});
      return;
    }
    for (int b : members)
      if (!r2.test(G.mul(a, b))) {
        set_fail(res, {{"x", G.element_word(a)},
                       {"y", G.element_word(b)},
                       {"violation", "product leaves R2"}});
        return;
      }
    for (int c : G.generator_elements())
      if (!r2.test(G.conj(a, c))) {
        set_fail(res, {{"x", G.element_word(a)},
                       {"by", G.element_word(c)},
                       {"violation", "conjugate leaves R2"}});
        return;
      }
  }
  res.witness["size"] = std::to_string(r2.count());
}

void chk06_r2_in_l2(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  const Bitset& r2 = A.right(2);
  const Bitset& l2 = A.left(2);
  bool bad = false;
  r2.for_each([&](int x) {
    if (!bad && !l2.test(x)) {
      bad = true;
      set_fail(res, {{"x", G.element_word(x)}});
    }
  });
}

void chk07_newell(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  const Bitset& r3 = A.right(3);
  int max_cls = 0;
  bool bad = false;
  r3.for_each([&](int x) {
    if (bad) return;
    auto cls = nilpotency_class(normal_closure(G, {x}));
    if (!cls || *cls > 3) {
      bad = true;
      set_fail(res, {{"x", G.element_word(x)},
                     {"class", cls ? std::to_string(*cls) : "not nilpotent"}});
      return;
    }
    max_cls = std::max(max_cls, *cls);
  });
  if (!bad) res.witness["max_closure_class"] = std::to_string(max_cls);
}

void chk08_newell_remark(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  const Bitset& r3 = A.right(3);
  const Bitset& l3 = A.left(3);
  bool bad = false;
  r3.for_each([&](int x) {
    if (bad) return;
    if (!l3.test(G.power(x, 2))) {
      bad = true;
      set_fail(res, {{"x", G.element_word(x)}, {"violation", "x^2 not left 3-Engel"}});
      return;
    }
    if (!r3.test(G.power(x, 4))) {
      bad = true;
      set_fail(res, {{"x", G.element_word(x)}, {"violation", "x^4 not right 3-Engel"}});
    }
  });
}

void chk09_lemma1(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  PairSchedule sched("CHK-09:" + G.name(), all_elements(G), G.order());
  res.witness["pairs"] = sched.mode();
  sched.for_each([&](int x, int y) {
    const bool lhs =
        G.engel_comm(y, x, 3) == 0 && G.engel_comm(G.inv(y), x, 3) == 0;
    const auto& info = A.pair_info(x, G.conj(x, y));
    const bool rhs = info.cls >= 0 && info.cls <= 2;
    if (lhs != rhs) {
      set_fail(res, {{"x", G.element_word(x)},
                     {"y", G.element_word(y)},
                     {"engel-side", lhs ? "true" : "false"},
                     {"class-side", rhs ? "true" : "false"}});
      return false;
    }
    return true;
  });
}

void chk10_corollary1(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  const Bitset& brute = A.left(3);
  const Bitset& chr = A.l3char();
  if (!(brute == chr)) {
    for (int x = 0; x < G.order(); ++x)
      if (brute.test(x) != chr.test(x)) {
        set_fail(res, {{"x", G.element_word(x)},
                       {"left-3-engel", brute.test(x) ? "yes" : "no"},
                       {"characterization", chr.test(x) ? "yes" : "no"}});
        return;
      }
  }
  bool bad = false;
  brute.for_each([&](int x) {
    if (bad) return;
    const int o = G.element_order(x);
    for (int k = 0; k < o; ++k)
      if (!brute.test(G.power(x, k))) {
        bad = true;
        set_fail(res, {{"x", G.element_word(x)},
                       {"k", std::to_string(k)},
                       {"violation", "power leaves L3"}});
        return;
      }
  });
  if (!bad) res.witness["size"] = std::to_string(brute.count());
}

void chk11_coprime(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  const auto l3 = A.left(3).to_list();
  std::vector<int> orders(G.order());
  for (int x : l3) orders[x] = G.element_order(x);
  int checked = 0;
  for (int a : l3)
    for (int b : l3) {
      if (std::gcd(orders[a], orders[b]) != 1) continue;
      ++checked;
      if (G.comm(a, b) != 0) {
        set_fail(res, {{"a", G.element_word(a)}, {"b", G.element_word(b)}});
        return;
      }
    }
  res.witness["coprime_pairs"] = std::to_string(checked);
}

void chk12_lem11(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  const Bitset& l3 = A.left(3);
  const Bitset& l2 = A.left(2);
  bool bad = false;
  int checked = 0;
  l3.for_each([&](int x) {
    if (bad) return;
    auto pp = prime_power(G.element_order(x));
    if (!pp || pp->second < 2) return;
    ++checked;
    const int p = pp->first, n = pp->second;
    const int y = G.power(x, ipow(p, n - 1));
    if (!l2.test(y)) {
      bad = true;
      set_fail(res, {{"x", G.element_word(x)},
                     {"p", std::to_string(p)},
                     {"n", std::to_string(n)}});
    }
  });
  if (!bad) res.witness["checked"] = std::to_string(checked);
}

void chk13_thm1(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  const Bitset& l3 = A.left(3);
  const Subgroup& baer = A.baer();
  bool bad = false;
  int checked = 0, max_dl = 0;
  std::vector<std::string> listing;
  l3.for_each([&](int x) {
    if (bad) return;
    auto pp = prime_power(G.element_order(x));
    if (!pp) return;
    const int p = pp->first, n = pp->second;
    const int xp = G.power(x, p);
    ++checked;
    if (!baer.contains(xp)) {
      bad = true;
      set_fail(res, {{"x", G.element_word(x)},
                     {"p", std::to_string(p)},
                     {"violation", "x^p outside the Baer radical"}});
      return;
    }
    if (n >= 2) {
      auto dl = derived_length(normal_closure(G, {xp}));
      if (!dl || *dl > n - 1) {
        bad = true;
        set_fail(res, {{"x", G.element_word(x)},
                       {"p", std::to_string(p)},
                       {"n", std::to_string(n)},
                       {"derived_length", dl ? std::to_string(*dl) : "not soluble"}});
        return;
      }
      max_dl = std::max(max_dl, *dl);
      if (listing.size() < kWitnessListCap)
        listing.push_back(G.element_word(x) + ": p=" + std::to_string(p) +
                          " n=" + std::to_string(n) + " dl=" + std::to_string(*dl));
    }
  });
  if (!bad) {
    res.witness["checked"] = std::to_string(checked);
    res.witness["max_derived_length"] = std::to_string(max_dl);
    for (size_t i = 0; i < listing.size(); ++i)
      res.witness["x" + std::string(i < 9 ? "0" : "") + std::to_string(i + 1)] = listing[i];
  }
}

void chk14_remark1(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  const ExponentExpr square_rule = parse_exponent("2a-1");
  const ExponentExpr inverse_rule = parse_exponent("-a+2");
  const Bitset& l3 = A.left(3);
  bool bad = false;
  l3.for_each([&](int a) {
    if (bad) return;
    const std::map<char, int> env{{'a', a}};
    for (int x = 0; x < G.order(); ++x) {
      const int u = G.comm(a, x);
      const int lhs1 = G.conj(G.conj(u, a), a);
      if (lhs1 != eval_exponent(G, u, square_rule, env)) {
        bad = true;
        set_fail(res, {{"a", G.element_word(a)},
                       {"x", G.element_word(x)},
                       {"identity", "u^(a a) = u^(2a-1)"}});
        return;
      }
      const int lhs2 = G.conj(u, G.inv(a));
      if (lhs2 != eval_exponent(G, u, inverse_rule, env)) {
        bad = true;
        set_fail(res, {{"a", G.element_word(a)},
                       {"x", G.element_word(x)},
                       {"identity", "u^(a^-1) = u^(-a+2)"}});
        return;
      }
    }
  });
}

void chk15_lemma2(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  PairSchedule sched("CHK-15:" + G.name(), A.left(3).to_list(), G.order());
  res.witness["pairs"] = sched.mode();
  sched.for_each([&](int a, int b) {
    const auto& info = A.pair_info(a, b);
    const int c = G.comm(a, b);
    Subgroup n = subgroup_generate(
        G, {c, G.conj(c, a), G.conj(c, b), G.conj(c, G.mul(a, b))});
    if (!(n.members == info.derived.members)) {
      set_fail(res, {{"a", G.element_word(a)},
                     {"b", G.element_word(b)},
                     {"derived_size", std::to_string(info.derived.size())},
                     {"span_size", std::to_string(n.size())}});
      return false;
    }
    return true;
  });
}

void chk16_lemma3(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  PairSchedule sched("CHK-16:" + G.name(), A.left(3).to_list(), G.order());
  res.witness["pairs"] = sched.mode();
  sched.for_each([&](int a, int b) {
    const int c = G.comm(a, b);
    const int ca = G.conj(c, a);
    const int cb = G.conj(c, b);
    const int cab = G.conj(c, G.mul(a, b));
    const char* bad = nullptr;
    if (G.comm(c, ca) != 0) bad = "[c, c^a] != 1";
    else if (G.comm(c, cb) != 0) bad = "[c, c^b] != 1";
    else if (G.comm(cab, ca) != 0) bad = "[c^(ab), c^a] != 1";
    else if (G.comm(cab, cb) != 0) bad = "[c^(ab), c^b] != 1";
    if (bad) {
      set_fail(res, {{"a", G.element_word(a)}, {"b", G.element_word(b)}, {"violation", bad}});
      return false;
    }
    return true;
  });
}

void chk17_thm2(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  PairSchedule sched("CHK-17:" + G.name(), A.left(3).to_list(), G.order());
  res.witness["pairs"] = sched.mode();
  int max_cls = 0;
  sched.for_each([&](int a, int b) {
    const auto& info = A.pair_info(a, b);
    if (info.cls < 0 || info.cls > 4) {
      set_fail(res, {{"a", G.element_word(a)},
                     {"b", G.element_word(b)},
                     {"class", info.cls < 0 ? "not nilpotent" : std::to_string(info.cls)}});
      return false;
    }
    if (!info.metabelian) {
      set_fail(res, {{"a", G.element_word(a)},
                     {"b", G.element_word(b)},
                     {"violation", "derived subgroup not abelian"}});
      return false;
    }
    max_cls = std::max(max_cls, info.cls);
    return true;
  });
  if (res.status == ClaimStatus::kPass) res.witness["max_class"] = std::to_string(max_cls);
}

void chk18_macdonald(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  res.status = ClaimStatus::kInfo;
  const Bitset& r3 = A.right(3);
  std::vector<std::string> findings;
  r3.for_each([&](int x) {
    if (findings.size() >= kWitnessListCap) return;
    if (!r3.test(G.inv(x)))
      findings.push_back(G.element_word(x) + ": inverse not right 3-Engel");
    else if (!r3.test(G.power(x, 2)))
      findings.push_back(G.element_word(x) + ": square not right 3-Engel");
  });
  res.witness["findings"] = std::to_string(findings.size());
  for (size_t i = 0; i < findings.size(); ++i)
    res.witness["w" + std::to_string(i + 1)] = findings[i];
  if (findings.empty()) res.witness["note"] = "no witness in this group";
}

void chk19_rank3_survey(const FiniteGroup& G, Analysis& A, ClaimResult& res) {
  res.status = ClaimStatus::kInfo;
  const auto l3 = A.left(3).to_list();
  const long long total = static_cast<long long>(l3.size()) * l3.size() * l3.size();
  std::map<std::vector<int>, std::optional<int>> memo;
  long long nilpotent = 0, seen = 0;
  int max_cls = 0;
  auto probe = [&](int a, int b, int c) {
    Subgroup H = subgroup_generate(G, {a, b, c});
    auto key = H.members.to_list();
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(std::move(key), nilpotency_class(H)).first;
    ++seen;
    if (it->second) {
      ++nilpotent;
      max_cls = std::max(max_cls, *it->second);
    }
  };
  if (total <= kTripleExhaustive) {
    res.witness["triples"] = "exhaustive";
    for (int a : l3)
      for (int b : l3)
        for (int c : l3) probe(a, b, c);
  } else {
    res.witness["triples"] = "sampled:" + std::to_string(kTripleSamples);
    std::mt19937_64 rng(fnv1a("CHK-19:" + G.name()));
    std::uniform_int_distribution<size_t> d(0, l3.size() - 1);
    for (int k = 0; k < kTripleSamples; ++k) probe(l3[d(rng)], l3[d(rng)], l3[d(rng)]);
  }
  res.witness["nilpotent_triples"] = std::to_string(nilpotent);
  res.witness["checked"] = std::to_string(seen);
  res.witness["max_class"] = std::to_string(max_cls);
}

using ClaimFn = void (*)(const FiniteGroup&, Analysis&, ClaimResult&);

const std::vector<std::pair<Claim, ClaimFn>>& claim_table() {
  static const std::vector<std::pair<Claim, ClaimFn>> table = {
      {{"CHK-01", "cited-fact",
        "iterated Engel commutators satisfy the defining recursion"},
       &chk01_recursion},
      {{"CHK-02", "cited-fact",
        "L2 equals the set of elements with abelian normal closure"},
       &chk02_l2},
      {{"CHK-03", "cited-fact",
        "for a^2 = 1: [x,_m a] = [x,a]^((-2)^(m-1)) for 1 <= m <= 6"},
       &chk03_involution},
      {{"CHK-04", "cited-fact", "Heineken: inverses of R_n lie in L_{n+1}, n <= 4"},
       &chk04_heineken},
      {{"CHK-05", "cited-fact", "Kappe: R2 is a conjugation-stable subgroup"},
       &chk05_kappe},
      {{"CHK-06", "cited-fact", "R2 is contained in L2"}, &chk06_r2_in_l2},
      {{"CHK-07", "cited-fact",
        "Newell: normal closures of right 3-Engel elements have class <= 3"},
       &chk07_newell},
      {{"CHK-08", "cited-fact", "squares of R3 lie in L3; fourth powers stay in R3"},
       &chk08_newell_remark},
      {{"CHK-09", "lemma",
        "[y,_3 x] = [y^-1,_3 x] = 1 iff <x, x^y> is nilpotent of class <= 2"},
       &chk09_lemma1},
      {{"CHK-10", "corollary",
        "L3 equals the class-<=2 characterization and is closed under powers"},
       &chk10_corollary1},
      {{"CHK-11", "proposition",
        "left 3-Engel elements of coprime orders commute"},
       &chk11_coprime},
      {{"CHK-12", "lemma",
        "x in L3 of order p^n (n >= 2) has x^(p^(n-1)) in L2"},
       &chk12_lem11},
      {{"CHK-13", "theorem",
        "x in L3 of order p^n: x^p lies in the Baer radical and its normal "
        "closure is soluble of derived length <= n-1"},
       &chk13_thm1},
      {{"CHK-14", "remark",
        "for a in L3: [a,x]^(a a) = [a,x]^(2a-1) and [a,x]^(a^-1) = [a,x]^(-a+2)"},
       &chk14_remark1},
      {{"CHK-15", "lemma",
        "derived subgroup of <a,b> is generated by [a,b] and three conjugates"},
       &chk15_lemma2},
      {{"CHK-16", "lemma",
        "[a,b] and [a,b]^(ab) centralize [a,b]^a and [a,b]^b"},
       &chk16_lemma3},
      {{"CHK-17", "theorem",
        "two left 3-Engel elements generate a metabelian group of class <= 4"},
       &chk17_thm2},
      {{"CHK-18", "informational",
        "Macdonald witness search: inverse or square leaving R3"},
       &chk18_macdonald},
      {{"CHK-19", "informational",
        "survey of nilpotency classes of <a,b,c> for left 3-Engel triples"},
       &chk19_rank3_survey},
  };
  return table;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> v;
    for (const auto& [c, fn] : claim_table()) v.push_back(c);
    return v;
  }();
  return claims;
}

const Claim& claim_by_id(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw UnknownNameError("unknown claim \"" + id + "\"");
}

ClaimResult run_claim(const std::string& claim_id, const FiniteGroup& G) {
  const auto& table = claim_table();
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const auto& e) { return e.first.id == claim_id; });
  if (it == table.end()) throw UnknownNameError("unknown claim \"" + claim_id + "\"");
  ClaimResult res;
  res.claim = claim_id;
  res.group = G.name();
  const auto t0 = std::chrono::steady_clock::now();
  it->second(G, analysis_for(G), res);
  res.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
               .count();
  return res;
}

std::vector<ClaimResult> run_all(const RunOptions& options) {
  std::vector<const FiniteGroup*> groups;
  if (options.groups.empty()) {
    for (const auto& g : corpus::default_corpus()) groups.push_back(&g);
  } else {
    for (const auto& name : options.groups) groups.push_back(&corpus::by_name(name));
  }
  std::vector<std::string> claim_ids;
  if (options.claims.empty()) {
    for (const auto& c : claim_registry()) claim_ids.push_back(c.id);
  } else {
    for (const auto& id : options.claims) claim_ids.push_back(claim_by_id(id).id);
  }
  std::sort(claim_ids.begin(), claim_ids.end());
  std::sort(groups.begin(), groups.end(),
            [](const FiniteGroup* a, const FiniteGroup* b) { return a->name() < b->name(); });

  struct Task {
    std::string claim;
    const FiniteGroup* group;
  };
  std::vector<Task> tasks;
  for (const auto& id : claim_ids)
    for (const auto* g : groups) tasks.push_back({id, g});

  std::vector<ClaimResult> results(tasks.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < tasks.size(); ++i)
      results[i] = run_claim(tasks[i].claim, *tasks[i].group);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          results[i] = run_claim(tasks[i].claim, *tasks[i].group);
        }
      });
    for (auto& th : pool) th.join();
  }
  return results;
}

namespace {

const char* status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kInfo: return "info";
  }
  return "?";
}

}  // namespace

std::string report_text(const std::vector<ClaimResult>& results) {
  std::ostringstream out;
  int pass = 0, fail = 0, info = 0;
  for (const auto& r : results) {
    out << r.claim << "  " << r.group << "  " << status_name(r.status) << "  ("
        << r.ms << " ms)";
    if (!r.witness.empty()) {
      out << "  [";
      bool first = true;
      for (const auto& [k, v] : r.witness) {
        if (!first) out << "; ";
        out << k << "=" << v;
        first = false;
      }
      out << "]";
    }
    out << "\n";
    switch (r.status) {
      case ClaimStatus::kPass: ++pass; break;
      case ClaimStatus::kFail: ++fail; break;
      case ClaimStatus::kInfo: ++info; break;
    }
  }
  out << "passed " << pass << ", failed " << fail << ", info " << info << "\n";
  return out.str();
}

std::string report_json(const std::vector<ClaimResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json item;
    item["claim"] = r.claim;
    item["group"] = r.group;
    item["status"] = status_name(r.status);
    if (r.witness.empty()) {
      item["witness"] = nullptr;
    } else {
      nlohmann::json w = nlohmann::json::object();
      for (const auto& [k, v] : r.witness) w[k] = v;
      item["witness"] = w;
    }
    item["ms"] = 0;  // wall time varies; reports must be byte-stable
    arr.push_back(item);
  }
  return arr.dump(2) + "\n";
}

int report_exit_code(const std::vector<ClaimResult>& results) {
  for (const auto& r : results)
    if (r.status == ClaimStatus::kFail) return 1;
  return 0;
}

}  // namespace engelkit
