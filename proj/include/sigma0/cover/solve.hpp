#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

#include "sigma0/cover/instance.hpp"
#include "sigma0/cover/reduce.hpp"

namespace sigma0 {

namespace detail {

/// Bitset view of an instance shared by the bounds and the search.
struct CoverCore {
  std::size_t nu = 0, ns = 0;
  std::vector<Bits> set_bits;
  std::vector<std::vector<std::uint32_t>> cands;

  explicit CoverCore(const CoverInstance& inst) : nu(inst.universe), ns(inst.sets.size()), set_bits(ns, Bits(nu)) {
    cands = inst.candidates();
    for (std::size_t s = 0; s < ns; ++s)
      for (auto e : inst.sets[s].members) set_bits[s].set(e);
  }

  /// max(ceil(|U| / largest coverage), greedy count of elements sharing no candidate).
  std::size_t bound(const Bits& uncovered, const Bits& allowed) const {
    const auto left = uncovered.count();
    if (left == 0) return 0;
    std::size_t best = 0;
    for (auto s = allowed.find_first(); s != Bits::npos; s = allowed.find_next(s))
      best = std::max(best, (set_bits[s] & uncovered).count());
    if (best == 0) return nu + 1; // nothing can cover what is left
    const std::size_t by_size = (left + best - 1) / best;
    return std::max(by_size, independent(uncovered, allowed));
  }

  std::size_t independent(const Bits& uncovered, const Bits& allowed) const {
    // fewest candidates first
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order;
    for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
      std::uint32_t c = 0;
      for (auto s : cands[e]) c += allowed.test(s);
      order.emplace_back(c, static_cast<std::uint32_t>(e));
    }
    std::sort(order.begin(), order.end());
    Bits blocked(ns);
    std::size_t count = 0;
    for (auto [c, e] : order) {
      bool free = true;
      for (auto s : cands[e])
        if (allowed.test(s) && blocked.test(s)) {
          free = false;
          break;
        }
      if (!free) continue;
      ++count;
      for (auto s : cands[e])
        if (allowed.test(s)) blocked.set(s);
    }
    return count;
  }

  std::vector<std::uint32_t> greedy(Bits uncovered, const Bits& allowed) const {
    std::vector<std::uint32_t> chosen;
    while (uncovered.any()) {
      std::size_t best = 0, pick = ns;
      for (auto s = allowed.find_first(); s != Bits::npos; s = allowed.find_next(s)) {
        const auto c = (set_bits[s] & uncovered).count();
        if (c > best) {
          best = c;
          pick = s;
        }
      }
      if (pick == ns) throw precondition_error("greedy: instance is infeasible");
      chosen.push_back(static_cast<std::uint32_t>(pick));
      uncovered -= set_bits[pick];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }
};

class Search {
public:
  Search(const CoverCore& core, const Budget& budget) : core_(core), budget_(budget), start_(clock::now()) {}

  void seed(std::vector<std::uint32_t> incumbent) {
    best_size_ = incumbent.size();
    best_ = std::move(incumbent);
  }

  /// Prunes against a cover held elsewhere; best() stays empty unless the
  /// search beats it.
  void cap(std::size_t size) {
    best_size_ = size;
    best_.clear();
  }

  void run(const Bits& uncovered, const Bits& allowed) {
    std::vector<std::uint32_t> chosen;
    if (budget_.threads <= 1 || budget_.deterministic) {
      node(uncovered, allowed, chosen);
      return;
    }
    // split the root branching across workers
    const auto e = pick_element(uncovered, allowed);
    if (!e) {
      node(uncovered, allowed, chosen);
      return;
    }
    const auto order = branch_order(*e, uncovered, allowed);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < order.size();) {
        Bits a = allowed;
        for (std::size_t j = 0; j < i; ++j) a.reset(order[j]);
        std::vector<std::uint32_t> ch{order[i]};
        node(uncovered - core_.set_bits[order[i]], a, ch);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < budget_.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::uint32_t>& best() const { return best_; }
  double seconds() const { return std::chrono::duration<double>(clock::now() - start_).count(); }

private:
  using clock = std::chrono::steady_clock;

  std::optional<std::uint32_t> pick_element(const Bits& uncovered, const Bits& allowed) const {
    std::optional<std::uint32_t> pick;
    std::size_t fewest = SIZE_MAX;
    for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
      std::size_t c = 0;
      for (auto s : core_.cands[e]) c += allowed.test(s);
      if (c < fewest) {
        fewest = c;
        pick = static_cast<std::uint32_t>(e);
        if (c <= 1) break;
      }
    }
    return pick;
  }

  std::vector<std::uint32_t> branch_order(std::uint32_t e, const Bits& uncovered, const Bits& allowed) const {
    std::vector<std::pair<std::size_t, std::uint32_t>> opts;
    for (auto s : core_.cands[e])
      if (allowed.test(s)) opts.emplace_back((core_.set_bits[s] & uncovered).count(), s);
    std::sort(opts.begin(), opts.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<std::uint32_t> out;
    for (const auto& o : opts) out.push_back(o.second);
    return out;
  }

  bool out_of_budget() {
    const auto n = ++nodes_;
    if (n > budget_.max_nodes) exhausted_ = true;
    if ((n & 255u) == 0 && seconds() > budget_.max_seconds) exhausted_ = true;
    return exhausted_;
  }

  void node(const Bits& uncovered, Bits allowed, std::vector<std::uint32_t>& chosen) {
    if (out_of_budget()) return;
    if (uncovered.none()) {
      std::lock_guard lock(mu_);
      if (chosen.size() < best_size_) {
        best_ = chosen;
        std::sort(best_.begin(), best_.end());
        best_size_ = chosen.size();
      }
      return;
    }
    if (chosen.size() + 1 >= best_size_) return;
    if (chosen.size() + core_.bound(uncovered, allowed) >= best_size_) return;
    const auto e = pick_element(uncovered, allowed);
    for (auto s : branch_order(*e, uncovered, allowed)) {
      if (chosen.size() + 1 >= best_size_ || exhausted_) return;
      chosen.push_back(s);
      node(uncovered - core_.set_bits[s], allowed, chosen);
      chosen.pop_back();
      allowed.reset(s);
    }
  }

  const CoverCore& core_;
  Budget budget_;
  clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
  std::atomic<std::size_t> best_size_{SIZE_MAX};
  std::vector<std::uint32_t> best_;
  std::mutex mu_;
};

} // namespace detail

/// Repeatedly takes the set covering most uncovered elements, lowest index on ties.
inline CoverSolution greedy(const CoverInstance& inst) {
  const detail::CoverCore core(inst);
  Bits uncovered(inst.universe), allowed(inst.sets.size());
  uncovered.set();
  allowed.set();
  CoverSolution sol;
  sol.chosen = core.greedy(uncovered, allowed);
  sol.status = CoverStatus::upper_bound_only;
  return sol;
}

/// Combinatorial lower bound on the optimum: forced sets plus the larger of
/// the size bound and the incompatible-element bound on what remains.
inline std::size_t lower_bound(const CoverInstance& inst) {
  const auto r = reduce(inst);
  if (r.infeasible()) throw precondition_error("lower_bound: instance is infeasible");
  const auto plain = [](const CoverInstance& i) -> std::size_t {
    if (i.universe == 0) return 0;
    const detail::CoverCore core(i);
    Bits u(i.universe), a(i.sets.size());
    u.set();
    a.set();
    return core.bound(u, a);
  };
  return std::max(plain(inst), r.forced.size() + plain(r.instance));
}

/// Exact minimum cover by branch and bound: reduce, seed with greedy, branch
/// on the element with the fewest candidates (larger coverage first, earlier
/// siblings excluded), prune with lower bounds. Stops at the budget with the
/// incumbent and the root lower bound. A nonempty warm_start must be a cover
/// of inst; it replaces greedy as the incumbent when smaller.
inline CoverSolution solve_exact(const CoverInstance& inst, const Budget& budget = {},
                                 const std::vector<std::uint32_t>& warm_start = {}) {
  budget.validate();
  std::vector<std::uint32_t> warm = warm_start;
  std::sort(warm.begin(), warm.end());
  warm.erase(std::unique(warm.begin(), warm.end()), warm.end());
  if (!warm.empty() && !verify_cover(inst, warm)) throw precondition_error("solve_exact: warm start is not a cover");
  const auto t0 = std::chrono::steady_clock::now();
  CoverSolution sol;
  const auto red = reduce(inst);
  if (red.infeasible()) {
    sol.status = CoverStatus::infeasible;
    return sol;
  }
  const auto& rest = red.instance;
  std::vector<std::uint32_t> pick;
  std::size_t root_lb = 0;
  bool complete = true, use_warm = false;
  if (rest.universe > 0) {
    const detail::CoverCore core(rest);
    Bits uncovered(rest.universe), allowed(rest.sets.size());
    uncovered.set();
    allowed.set();
    root_lb = core.bound(uncovered, allowed);
    auto incumbent = core.greedy(uncovered, allowed);
    // forced.size() + opt(rest) is the optimum, so the warm start bounds opt(rest)
    use_warm = !warm.empty() && warm.size() < red.forced.size() + incumbent.size();
    const std::size_t target = use_warm ? warm.size() - red.forced.size() : incumbent.size();
    if (target > root_lb) {
      detail::Search search(core, budget);
      if (use_warm)
        search.cap(target);
      else
        search.seed(incumbent);
      search.run(uncovered, allowed);
      if (!search.best().empty()) {
        incumbent = search.best();
        use_warm = false;
      }
      sol.nodes = search.nodes();
      complete = !search.exhausted();
    }
    pick = incumbent;
  }
  if (use_warm) {
    sol.chosen = warm;
  } else {
    sol.chosen = red.lift(pick);
  }
  if (!verify_cover(inst, sol.chosen)) throw std::logic_error("solve_exact: produced a non-cover");
  sol.lower_bound = complete ? sol.chosen.size() : red.forced.size() + root_lb;
  sol.status = complete ? CoverStatus::optimal : CoverStatus::upper_bound_only;
  sol.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

} // namespace sigma0
