#include "engelkit/engel.hpp"

#include <map>
#include <utility>
#include <vector>

#include "engelkit/errors.hpp"
#include "engelkit/kernels.hpp"
#include "engelkit/subgroup.hpp"

namespace engelkit {

namespace {

bool sweep_all_identity(const std::vector<std::int32_t>& out) {
  for (auto v : out)
    if (v != 0) return false;
  return true;
}

}  // namespace

EngelSet left_engel_set(const FiniteGroup& G, int n) {
  if (n < 0) throw ValidationError("engel", "n must be >= 0");
  EngelSet s{&G, Side::kLeft, n, Bitset(G.order())};
  if (n == 0) {
    s.members.set(0);
    return s;
  }
  std::vector<std::int32_t> out(G.order());
  auto sweep = kernels::left_sweep();
  for (int x = 0; x < G.order(); ++x) {
    sweep(G.mul_data(), G.inv_data(), G.order(), x, n, out.data());
    if (sweep_all_identity(out)) s.members.set(x);
  }
  return s;
}

EngelSet right_engel_set(const FiniteGroup& G, int n) {
  if (n < 0) throw ValidationError("engel", "n must be >= 0");
  EngelSet s{&G, Side::kRight, n, Bitset(G.order())};
  if (n == 0) {
    s.members.set(0);
    return s;
  }
  std::vector<std::int32_t> out(G.order());
  auto sweep = kernels::right_sweep();
  for (int x = 0; x < G.order(); ++x) {
    sweep(G.mul_data(), G.inv_data(), G.order(), x, n, out.data());
    if (sweep_all_identity(out)) s.members.set(x);
  }
  return s;
}

bool is_left_n_engel(const FiniteGroup& G, int x, int n) {
  if (n < 0) throw ValidationError("engel", "n must be >= 0");
  if (n == 0) return x == 0;
  std::vector<std::int32_t> out(G.order());
  kernels::left_sweep()(G.mul_data(), G.inv_data(), G.order(), x, n, out.data());
  return sweep_all_identity(out);
}

bool is_right_n_engel(const FiniteGroup& G, int x, int n) {
  if (n < 0) throw ValidationError("engel", "n must be >= 0");
  if (n == 0) return x == 0;
  std::vector<std::int32_t> out(G.order());
  kernels::right_sweep()(G.mul_data(), G.inv_data(), G.order(), x, n, out.data());
  return sweep_all_identity(out);
}

EngelSet l2_characterization(const FiniteGroup& G) {
  EngelSet s{&G, Side::kLeft, 2, Bitset(G.order())};
  for (int x = 0; x < G.order(); ++x)
    if (is_abelian(normal_closure(G, {x}))) s.members.set(x);
  return s;
}

EngelSet l3_characterization(const FiniteGroup& G) {
  EngelSet s{&G, Side::kLeft, 3, Bitset(G.order())};
  // class(<x, x^y>) <= 2, memoized on the unordered generating pair and on
  // the generated member set.
  std::map<std::pair<int, int>, bool> pair_memo;
  std::map<std::vector<int>, bool> set_memo;
  for (int x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (int y = 0; y < G.order() && ok; ++y) {
      int xy = G.conj(x, y);
      auto key = std::minmax(x, xy);
      auto it = pair_memo.find(key);
      if (it != pair_memo.end()) {
        ok = it->second;
        continue;
      }
      Subgroup H = subgroup_generate(G, {key.first, key.second});
      auto mkey = H.members.to_list();
      auto mit = set_memo.find(mkey);
      bool le2;
      if (mit != set_memo.end()) {
        le2 = mit->second;
      } else {
        auto cls = nilpotency_class(H);
        le2 = cls.has_value() && *cls <= 2;
        set_memo.emplace(std::move(mkey), le2);
      }
      pair_memo.emplace(key, le2);
      ok = le2;
    }
    if (ok) s.members.set(x);
  }
  return s;
}

}  // namespace engelkit
