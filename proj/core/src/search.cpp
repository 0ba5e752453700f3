// Copyright 2026 The omsr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "omsr/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "omsr/group_automorphisms.hpp"
#include "omsr/verdict.hpp"

namespace omsr {

namespace {

constexpr int kMaxSearchOrder = 62;
constexpr int kMaxOrbitOrder = 24;

using Mask = std::uint64_t;

Mask bit(int e) { return Mask{1} << e; }

Mask permute_mask(Mask s, const std::vector<int>& perm) {
  Mask out = 0;
  while (s) {
    int e = __builtin_ctzll(s);
    s &= s - 1;
    out |= bit(perm[e]);
  }
  return out;
}

// Next mask with the same popcount (Gosper); 0 past the universe.
Mask next_combination(Mask x, int n) {
  Mask c = x & (~x + 1);
  Mask r = x + c;
  Mask next = (((r ^ x) >> 2) / c) | r;
  if (n < 64 && (next >> n)) return 0;
  if (next <= x) return 0;
  return next;
}

Mask first_combination(int k) { return k == 0 ? 0 : (k >= 64 ? ~Mask{0} : bit(k) - 1); }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct GroupMasks {
  int n;
  std::vector<int> inv;
  explicit GroupMasks(const FiniteGroup& g) : n(g.order()), inv(g.order()) {
    for (Element a = 0; a < n; ++a) inv[a] = g.inv(a);
  }
  Mask inverse(Mask s) const { return permute_mask(s, inv); }
  bool diagonal_ok(Mask s) const { return !(s & 1) && !(s & inverse(s)); }
  // Largest admissible diagonal cell: one from each pair {g, g^-1}, g^2 != 1.
  int max_diagonal() const {
    int c = 0;
    for (int a = 1; a < n; ++a)
      if (inv[a] != a) ++c;
    return c / 2;
  }
};

ElementSet to_set(int n, Mask m) {
  ElementSet s(n);
  while (m) {
    int e = __builtin_ctzll(m);
    m &= m - 1;
    s.insert(e);
  }
  return s;
}

Mask to_mask(const ElementSet& s) {
  Mask m = 0;
  for (Element e : s.elements()) m |= bit(e);
  return m;
}

struct WorkItem {
  int valency;
  SizeMatrix sizes;
  int first_cell;  // row-major index, -1 if every cell is empty
  Mask first;
};

struct ItemResult {
  std::uint64_t count = 0;
  bool witness = false;
  std::vector<Mask> cells;
  BigInt aut_order = 0;
};

class Enumerator {
 public:
  Enumerator(const FiniteGroup& g, GroupPtr gp, int m, const GroupMasks& gm,
             std::atomic<std::uint64_t>& global, const SearchLimits& limits,
             std::atomic<bool>& abort, std::chrono::steady_clock::time_point start)
      : g_(g), gp_(std::move(gp)), m_(m), gm_(gm), global_(global), limits_(limits),
        abort_(abort), start_(start) {}

  ItemResult run(const WorkItem& item) {
    result_ = {};
    cells_.assign(m_ * m_, 0);
    order_.clear();
    for (int c = 0; c < m_ * m_; ++c)
      if (item.sizes[c] > 0 && c != item.first_cell) order_.push_back(c);
    sizes_ = item.sizes;
    if (item.first_cell >= 0) cells_[item.first_cell] = item.first;
    go(0);
    return result_;
  }

 private:
  bool go(std::size_t depth) {
    if (abort_.load(std::memory_order_relaxed)) return true;
    if (depth == order_.size()) return leaf();
    int c = order_[depth];
    int i = c / m_, j = c % m_;
    int k = sizes_[c];
    Mask reverse_inv = (i > j) ? gm_.inverse(cells_[j * m_ + i]) : 0;
    for (Mask s = first_combination(k); s; s = next_combination(s, gm_.n)) {
      if (i == j) {
        if (!gm_.diagonal_ok(s)) continue;
      } else if (s & reverse_inv) {
        continue;
      }
      cells_[c] = s;
      if (go(depth + 1)) return true;
    }
    cells_[c] = 0;
    return false;
  }

  bool leaf() {
    ++result_.count;
    std::uint64_t total = global_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (limits_.max_candidates && total > limits_.max_candidates) {
      abort_ = true;
      return true;
    }
    if (limits_.max_seconds > 0 && (result_.count & 255) == 0) {
      double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (el > limits_.max_seconds) {
        abort_ = true;
        return true;
      }
    }
    ConnectionSets t(gp_, m_);
    for (int c = 0; c < m_ * m_; ++c) t.set(c / m_, c % m_, to_set(g_.order(), cells_[c]));
    CheckOptions opt;
    opt.early_exit = true;
    OmsrVerdict v = check_omsr(t, opt);
    if (v.is_omsr) {
      result_.witness = true;
      result_.cells = cells_;
      result_.aut_order = v.aut_order;
      return true;
    }
    return false;
  }

  const FiniteGroup& g_;
  GroupPtr gp_;
  int m_;
  const GroupMasks& gm_;
  std::atomic<std::uint64_t>& global_;
  const SearchLimits& limits_;
  std::atomic<bool>& abort_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Mask> cells_;
  std::vector<int> order_;
  SizeMatrix sizes_;
  ItemResult result_;
};

void enumerate_sizes(const GroupMasks& gm, int m, int d, int cell, SizeMatrix& s,
                     std::vector<int>& row, std::vector<int>& col,
                     std::vector<SizeMatrix>& out) {
  if (cell == m * m) {
    out.push_back(s);
    return;
  }
  int i = cell / m, j = cell % m;
  int cap = d - row[i];
  cap = std::min(cap, d - col[j]);
  if (i == j) {
    cap = std::min(cap, gm.max_diagonal());
  } else if (i > j) {
    cap = std::min(cap, gm.n - s[j * m + i]);
  } else {
    cap = std::min(cap, gm.n);
  }
  int lo = 0;
  if (j == m - 1) lo = d - row[i];  // the row must close here
  if (i == m - 1) lo = std::max(lo, d - col[j]);
  for (int k = lo; k <= cap; ++k) {
    if (j == m - 1 && row[i] + k != d) continue;
    if (i == m - 1 && col[j] + k != d) continue;
    s[cell] = k;
    row[i] += k;
    col[j] += k;
    enumerate_sizes(gm, m, d, cell + 1, s, row, col, out);
    row[i] -= k;
    col[j] -= k;
  }
  s[cell] = 0;
}


struct SearchOutcome {
  bool witness = false;
  std::vector<Mask> cells;
  BigInt aut_order = 0;
  std::uint64_t candidates = 0;
  std::vector<std::string> reductions;
};

SearchOutcome run_search(const SearchSpace& space, const SearchLimits& limits,
                         std::chrono::steady_clock::time_point start) {
  const FiniteGroup& g = *space.group;
  if (g.order() > kMaxSearchOrder)
    throw std::invalid_argument("search supports groups of order at most " +
                                std::to_string(kMaxSearchOrder));
  const int m = space.m;
  GroupMasks gm(g);
  bool use_aut = space.reductions.group_automorphism_orbits && g.order() <= kMaxOrbitOrder;
  bool use_parts = space.reductions.part_symmetry && m > 1 && m <= 7;

  SearchOutcome out;
  if (use_aut) out.reductions.push_back("group_automorphism_orbits");
  if (use_parts) out.reductions.push_back("part_symmetry");

  std::vector<WorkItem> items;
  for (int d = space.valency_lo(); d <= space.valency_hi(); ++d) {
    for (auto& s : size_matrices(g, m, d, use_parts)) {
      int first = -1;
      for (int c = 0; c < m * m && first < 0; ++c)
        if (s[c] > 0) first = c;
      if (first < 0) {
        items.push_back({d, s, -1, 0});
        continue;
      }
      bool diag = first / m == first % m;
      for (auto& rep : first_cell_representatives(g, s[first], diag, use_aut))
        items.push_back({d, s, first, to_mask(rep)});
    }
  }

  std::vector<ItemResult> results(items.size());
  std::vector<char> done(items.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> global{0};
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::mutex mu;
  std::exception_ptr error;

  auto worker = [&] {
    Enumerator en(g, space.group, m, gm, global, limits, abort, start);
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= items.size() || abort) return;
      if (k > best.load()) continue;
      try {
        ItemResult r = en.run(items[k]);
        if (abort) return;
        results[k] = std::move(r);
        done[k] = 1;
        if (results[k].witness) {
          std::size_t cur = best.load();
          while (k < cur && !best.compare_exchange_weak(cur, k)) {
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        abort = true;
        return;
      }
    }
  };

  int w = std::max(1, limits.workers);
  std::vector<std::thread> threads;
  for (int t = 1; t < w; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  if (abort) {
    std::ostringstream os;
    os << "search budget exhausted after " << global.load() << " candidates";
    throw BudgetExceeded(os.str());
  }

  std::size_t stop = std::min(best.load(), items.size());
  for (std::size_t k = 0; k < items.size() && k <= stop; ++k) {
    if (!done[k]) continue;
    out.candidates += results[k].count;
    if (k == stop) {
      out.witness = true;
      out.cells = results[k].cells;
      out.aut_order = results[k].aut_order;
    }
  }
  return out;
}

Certificate make_certificate(const SearchSpace& space, const SearchOutcome& o,
                             CertificateKind yes, CertificateKind no,
                             std::chrono::steady_clock::time_point start) {
  Certificate c;
  c.group = space.group->name();
  c.m = space.m;
  c.kind = o.witness ? yes : no;
  c.candidates_examined = o.candidates;
  c.reductions_used = o.reductions;
  c.space = space.describe();
  if (o.witness) {
    ConnectionSets t(space.group, space.m);
    for (int k = 0; k < space.m * space.m; ++k)
      t.set(k / space.m, k % space.m, to_set(space.group->order(), o.cells[k]));
    c.connection_sets = std::move(t);
    c.aut_order = o.aut_order;
  }
  c.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

}  // namespace

int SearchSpace::valency_lo() const { return min_valency.value_or(0); }

int SearchSpace::valency_hi() const {
  int bound = (m * group->order() - 1) / 2;
  return max_valency ? std::min(*max_valency, bound) : bound;
}

std::string SearchSpace::describe() const {
  std::ostringstream os;
  os << "oriented regular m-Cayley connection sets over " << group->name() << ", m=" << m
     << ", valency " << valency_lo() << ".." << valency_hi();
  return os.str();
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kOmsrWitness: return "omsr_witness";
    case CertificateKind::kNonexistence: return "nonexistence";
    case CertificateKind::kOrrWitness: return "orr_witness";
    case CertificateKind::kOrrNonexistence: return "orr_nonexistence";
  }
  return "unknown";
}

CertificateKind certificate_kind_from_string(const std::string& s) {
  for (auto k : {CertificateKind::kOmsrWitness, CertificateKind::kNonexistence,
                 CertificateKind::kOrrWitness, CertificateKind::kOrrNonexistence})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown certificate kind '" + s + "'");
}

std::vector<SizeMatrix> size_matrices(const FiniteGroup& g, int m, int d, bool part_symmetry) {
  GroupMasks gm(g);
  std::vector<SizeMatrix> all;
  SizeMatrix s(m * m, 0);
  std::vector<int> row(m, 0), col(m, 0);
  enumerate_sizes(gm, m, d, 0, s, row, col, all);
  if (!part_symmetry) return all;
  std::vector<SizeMatrix> out;
  for (auto& x : all)
    if (is_lex_min_under_relabelling(x, m)) out.push_back(x);
  return out;
}

bool is_lex_min_under_relabelling(const SizeMatrix& s, int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  SizeMatrix img(m * m);
  while (std::next_permutation(p.begin(), p.end())) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) img[p[i] * m + p[j]] = s[i * m + j];
    if (img < s) return false;
  }
  return true;
}

std::vector<ElementSet> first_cell_representatives(const FiniteGroup& g, int k, bool diagonal,
                                                   bool use_reduction) {
  const int n = g.order();
  GroupMasks gm(g);
  std::vector<ElementSet> out;
  if (!use_reduction || n > kMaxOrbitOrder) {
    for (Mask s = first_combination(k); s; s = next_combination(s, n))
      if (!diagonal || gm.diagonal_ok(s)) out.push_back(to_set(n, s));
    if (k == 0) out.push_back(ElementSet(n));
    return out;
  }
  if (k == 0) return {ElementSet(n)};
  std::vector<std::vector<int>> gens;
  GroupAutOptions opt;
  opt.order_bound = kMaxOrbitOrder;
  PermGroup aut = group_automorphisms(g, opt);
  for (auto& p : aut.generators()) gens.push_back(p.images());
  if (!diagonal) {
    for (auto& [label, s] : g.generators()) {
      std::vector<int> left(n), right(n);
      for (Element x = 0; x < n; ++x) {
        left[x] = g.mul(s, x);
        right[x] = g.mul(x, s);
      }
      gens.push_back(left);
      gens.push_back(right);
    }
  }
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::vector<Mask> queue;
  for (Mask s = first_combination(k); s; s = next_combination(s, n)) {
    if (seen[s] || (diagonal && !gm.diagonal_ok(s))) continue;
    out.push_back(to_set(n, s));
    seen[s] = true;
    queue.assign(1, s);
    while (!queue.empty()) {
      Mask x = queue.back();
      queue.pop_back();
      for (auto& p : gens) {
        Mask y = permute_mask(x, p);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return out;
}

ConnectionSets translate_parts(const ConnectionSets& t, const std::vector<Element>& c) {
  const FiniteGroup& g = t.group();
  ConnectionSets out(t.group_ptr(), t.m());
  for (int i = 0; i < t.m(); ++i)
    for (int j = 0; j < t.m(); ++j) {
      ElementSet s(g.order());
      for (Element x : t.at(i, j).elements()) s.insert(g.mul(g.mul(c[j], x), g.inv(c[i])));
      out.set(i, j, s);
    }
  return out;
}

ConnectionSets apply_group_automorphism(const ConnectionSets& t, const Permutation& phi) {
  ConnectionSets out(t.group_ptr(), t.m());
  for (int i = 0; i < t.m(); ++i)
    for (int j = 0; j < t.m(); ++j) {
      ElementSet s(t.group().order());
      for (Element x : t.at(i, j).elements()) s.insert(phi[x]);
      out.set(i, j, s);
    }
  return out;
}

ConnectionSets relabel_parts(const ConnectionSets& t, const std::vector<int>& perm) {
  ConnectionSets out(t.group_ptr(), t.m());
  for (int i = 0; i < t.m(); ++i)
    for (int j = 0; j < t.m(); ++j) out.set(perm[i], perm[j], t.at(i, j));
  return out;
}

Certificate prove_nonexistence(const SearchSpace& space, const SearchLimits& limits) {
  auto start = std::chrono::steady_clock::now();
  SearchOutcome o = run_search(space, limits, start);
  return make_certificate(space, o, CertificateKind::kOmsrWitness, CertificateKind::kNonexistence,
                          start);
}

Certificate find_omsr(const GroupPtr& g, int m, int valency_cap, const SearchLimits& limits,
                      const Reductions& reductions) {
  SearchSpace space;
  space.group = g;
  space.m = m;
  space.min_valency = 1;
  space.max_valency = valency_cap;
  space.reductions = reductions;
  return prove_nonexistence(space, limits);
}

Certificate find_orr(const GroupPtr& g, const SearchLimits& limits, const Reductions& reductions) {
  auto start = std::chrono::steady_clock::now();
  SearchSpace space;
  space.group = g;
  space.m = 1;
  space.reductions = reductions;
  SearchOutcome o = run_search(space, limits, start);
  return make_certificate(space, o, CertificateKind::kOrrWitness,
                          CertificateKind::kOrrNonexistence, start);
}

std::uint64_t z2_haar_space_size(int k, int lo, int hi) {
  int n = 1 << k;
  std::uint64_t total = 0;
  for (int d = lo; d <= hi; ++d) total += binomial(n, d) * binomial(n - d, d);
  return total;
}

}  // namespace omsr
