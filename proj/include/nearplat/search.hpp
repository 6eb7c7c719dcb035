#pragma once

// Exhaustive enumeration of k-regular plane maps by backtracking over the
// edge involution.
//
// Every vertex has k dart slots whose cyclic order is fixed; the search only
// decides which slots are joined by edges. Vertices are introduced in order,
// a fresh vertex always through its slot 0, so every labelled map reachable
// from a root dart is produced and duplicates are removed by canonical code.
//
// Partial face boundaries are tracked as open dart paths; a path that closes
// is a face of the final map, which drives the face-degree pruning. The
// embedded submap of placed edges must stay spherical, since removing edges
// from a plane map never raises its genus.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nearplat/canonical.hpp"
#include "nearplat/counting.hpp"
#include "nearplat/families.hpp"
#include "nearplat/planar_map.hpp"

namespace nearplat {

enum class SearchPolicy {
  kFaceConstrained,  // faces of degree d2 except exactly f1 disparate ones
  kUnconstrained,    // every k-regular plane map; d2, f1, d1 ignored
};

inline const char* to_string(SearchPolicy p) {
  return p == SearchPolicy::kFaceConstrained ? "face-constrained" : "unconstrained";
}

struct SearchTask {
  int k = 3;
  int d2 = 3;
  int f1 = 0;
  std::vector<int> d1;  // allowed disparate degrees; empty means any degree != d2
  int v_min = 0;        // 0: smallest possible
  int v_max = 0;
  SearchPolicy policy = SearchPolicy::kFaceConstrained;
};

struct SearchOptions {
  long long budget_nodes = 100'000'000;
  double budget_secs = 300;
  bool lemma3 = false;
  int threads = 1;
};

class ResourceBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CellStatus { kComplete, kUnknown, kPruned };

inline const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::kComplete: return "COMPLETE";
    case CellStatus::kUnknown: return "UNKNOWN";
    case CellStatus::kPruned: return "PRUNED";
  }
  return "?";
}

struct Witness {
  CanonicalCode code;
  PlanarMap map;
  Signature signature;
};

struct CellReport {
  int k = 0;
  int d2 = 0;
  int f1 = 0;
  std::vector<int> d1;   // empty: any degree != d2
  int v = 0;             // 0 when the vertex count is not an integer
  std::string v_text;    // exact vertex count as computed
  CellStatus status = CellStatus::kComplete;
  std::string pruned_identity;
  std::string pruned_detail;
  long long nodes = 0;
  double seconds = 0;
  std::vector<Witness> witnesses;  // sorted by code

  int class_count() const { return static_cast<int>(witnesses.size()); }
};

struct SearchReport {
  std::string kind = "search";
  std::vector<SearchTask> tasks;
  SearchOptions options;
  std::vector<CellReport> cells;
  double seconds = 0;

  bool complete() const {
    return std::none_of(cells.begin(), cells.end(),
                        [](const CellReport& c) { return c.status == CellStatus::kUnknown; });
  }
  int class_count() const {
    int n = 0;
    for (const auto& c : cells) n += c.class_count();
    return n;
  }
};

namespace detail {

struct CellSpec {
  int k = 3;
  int n = 0;
  bool constrained = true;
  int d2 = 3;
  int f1 = 0;
  int sigma = 0;               // exact sum of disparate degrees
  std::vector<char> allowed;   // allowed[d] for disparate degree d <= sigma
  int max_disparate = 0;
  bool lemma3 = false;
};

struct SharedBudget {
  long long node_limit = 0;
  std::chrono::steady_clock::time_point deadline;
  std::atomic<long long> nodes{0};
  std::atomic<bool> exceeded{false};
};

class Searcher {
 public:
  Searcher(const CellSpec& spec, SharedBudget& budget) : s_(spec), budget_(budget) {
    const int darts = s_.n * s_.k;
    alpha_.assign(darts, -1);
    pstart_.resize(darts);
    pend_.resize(darts);
    plen_.assign(darts, 1);
    for (int d = 0; d < darts; ++d) pstart_[d] = pend_[d] = d;
    adj_.assign(s_.n * s_.n, 0);
    dface_.assign(s_.n, 0);
    stamp_.assign(darts, 0);
    nused_ = 1;
  }

  using Move = std::pair<int, int>;

  // Runs the search below the current state. When `split_depth` > 0 the
  // states reached at that depth are recorded instead of explored.
  void run(int split_depth = 0) {
    split_depth_ = split_depth;
    dfs(0);
  }

  bool replay(const std::vector<Move>& moves) {
    for (const auto& [a, b] : moves) {
      path_.push_back({a, b});
      if (!place(a, b)) return false;
    }
    return true;
  }

  std::vector<std::vector<Move>> prefixes;
  std::map<CanonicalCode, int> found;  // code -> multiplicity (labelled leaves)
  long long local_nodes = 0;

 private:
  int succ(int d) const { return (d % s_.k == s_.k - 1) ? d - s_.k + 1 : d + 1; }

  void set(int& ref, int value) {
    trail_.emplace_back(&ref, ref);
    ref = value;
  }
  void set(char& ref, char value) {
    ctrail_.emplace_back(&ref, ref);
    ref = value;
  }
  void undo(std::size_t mark, std::size_t cmark) {
    while (trail_.size() > mark) {
      *trail_.back().first = trail_.back().second;
      trail_.pop_back();
    }
    while (ctrail_.size() > cmark) {
      *ctrail_.back().first = ctrail_.back().second;
      ctrail_.pop_back();
    }
  }

  bool close_face(int start, int len) {
    if (len == s_.d2 || !s_.constrained) return true;
    if (len < 3 || len > s_.sigma || !s_.allowed[len]) return false;
    if (closed_disp_ + 1 > s_.f1 || closed_sum_ + len > s_.sigma) return false;
    set(closed_disp_, closed_disp_ + 1);
    set(closed_sum_, closed_sum_ + len);
    if (s_.lemma3 && s_.f1 == 1) {
      std::vector<int> verts;
      int d = start;
      do {
        verts.push_back(d / s_.k);
        d = succ(alpha_[d]);
      } while (d != start);
      std::vector<int> sorted = verts;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return true;
      for (int u : verts) set(dface_[u], char(1));
      const int m = static_cast<int>(verts.size());
      for (int i = 0; i < m; ++i) {
        for (int j = i + 2; j < m; ++j) {
          if (i == 0 && j == m - 1) continue;
          if (adj_[verts[i] * s_.n + verts[j]]) return false;  // chord
        }
      }
    }
    return true;
  }

  bool link(int x, int y) {
    const int s = pstart_[x];
    if (s == y) return close_face(y, plen_[y]);
    const int t = pend_[y];
    set(pend_[s], t);
    set(pstart_[t], s);
    set(plen_[s], plen_[s] + plen_[y]);
    return true;
  }

  bool place(int a, int b) {
    const int ua = a / s_.k, ub = b / s_.k;
    if (s_.lemma3 && dface_[ua] && dface_[ub]) return false;
    set(alpha_[a], b);
    set(alpha_[b], a);
    set(adj_[ua * s_.n + ub], char(1));
    set(adj_[ub * s_.n + ua], char(1));
    set(paired_, paired_ + 2);
    if (ub == nused_) set(nused_, nused_ + 1);
    if (!link(a, succ(b))) return false;
    if (!link(b, succ(a))) return false;
    return true;
  }

  // Faces of the submap formed by the placed edges.
  bool submap_spherical() {
    ++stamp_value_;
    int faces = 0;
    const int darts = nused_ * s_.k;
    for (int d0 = 0; d0 < darts; ++d0) {
      if (alpha_[d0] < 0 || stamp_[d0] == stamp_value_) continue;
      ++faces;
      int d = d0;
      while (stamp_[d] != stamp_value_) {
        stamp_[d] = stamp_value_;
        int r = succ(alpha_[d]);
        while (alpha_[r] < 0) r = succ(r);
        d = r;
      }
    }
    const int e = paired_ / 2;
    return 2 - nused_ + e - faces == 0;
  }

  void leaf() {
    std::vector<std::vector<int>> rot(s_.n);
    for (int u = 0; u < s_.n; ++u) {
      for (int i = 0; i < s_.k; ++i) rot[u].push_back(alpha_[u * s_.k + i] / s_.k);
    }
    PlanarMap map(std::move(rot));
    if (genus(map) != 0) return;
    if (s_.constrained) {
      int count = 0, sum = 0;
      for (const auto& [deg, cnt] : face_vector(map)) {
        if (deg == s_.d2) continue;
        if (deg > s_.sigma || !s_.allowed[deg]) return;
        count += cnt;
        sum += deg * cnt;
      }
      if (count != s_.f1 || sum != s_.sigma) return;
    }
    ++found[canonical_code(map)];
  }

  bool over_budget() {
    ++local_nodes;
    if ((local_nodes & 1023) == 0) {
      const long long total = budget_.nodes.fetch_add(1024) + 1024;
      if (total > budget_.node_limit || std::chrono::steady_clock::now() > budget_.deadline) {
        budget_.exceeded = true;
      }
    }
    return budget_.exceeded.load(std::memory_order_relaxed);
  }

  void dfs(int depth) {
    if (over_budget()) return;
    if (paired_ > 0 && !submap_spherical()) return;
    const int darts = nused_ * s_.k;
    if (paired_ == s_.n * s_.k) {
      leaf();
      return;
    }
    // Branch on the end of the longest open boundary path.
    int best = -1, best_len = -1;
    int long_count = 0, long_sum = 0;
    for (int d = 0; d < darts; ++d) {
      if (alpha_[d] >= 0) continue;
      const int len = plen_[pstart_[d]];
      if (len > best_len) {
        best_len = len;
        best = d;
      }
      if (s_.constrained && len > s_.d2) {
        if (len > s_.max_disparate) return;
        ++long_count;
        long_sum += len;
      }
    }
    if (best < 0) return;  // all placed darts paired but vertices missing
    if (s_.constrained) {
      const int open_slots = s_.f1 - closed_disp_ - long_count;
      if (open_slots < 0) return;
      if (closed_sum_ + long_sum + 3 * open_slots > s_.sigma) return;
    }
    if (split_depth_ > 0 && depth == split_depth_) {
      prefixes.push_back(path_);
      return;
    }
    const int u = best / s_.k;
    auto try_move = [&](int b) {
      const std::size_t mark = trail_.size(), cmark = ctrail_.size();
      path_.push_back({best, b});
      if (place(best, b)) dfs(depth + 1);
      path_.pop_back();
      undo(mark, cmark);
    };
    for (int w = 0; w < nused_; ++w) {
      if (w == u || adj_[u * s_.n + w]) continue;
      for (int i = 0; i < s_.k; ++i) {
        const int b = w * s_.k + i;
        if (alpha_[b] < 0) try_move(b);
      }
    }
    if (nused_ < s_.n) try_move(nused_ * s_.k);
  }

  CellSpec s_;
  SharedBudget& budget_;
  std::vector<int> alpha_, pstart_, pend_, plen_;
  std::vector<char> adj_, dface_;
  std::vector<int> stamp_;
  int stamp_value_ = 0;
  int nused_ = 1;
  int paired_ = 0;
  int closed_disp_ = 0;
  int closed_sum_ = 0;
  int split_depth_ = 0;
  std::vector<Move> path_;
  std::vector<std::pair<int*, int>> trail_;
  std::vector<std::pair<char*, char>> ctrail_;
};

inline void run_cell(const CellSpec& spec, const SearchOptions& opt, CellReport& cell) {
  const auto t0 = std::chrono::steady_clock::now();
  SharedBudget budget;
  budget.node_limit = opt.budget_nodes;
  budget.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(opt.budget_secs));
  std::map<CanonicalCode, int> found;
  long long nodes = 0;
  if (opt.threads <= 1) {
    Searcher s(spec, budget);
    s.run();
    found = std::move(s.found);
    nodes = s.local_nodes;
  } else {
    Searcher root(spec, budget);
    root.run(3);
    nodes = root.local_nodes;
    found = std::move(root.found);  // leaves shallower than the split depth
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= root.prefixes.size()) break;
        Searcher s(spec, budget);
        if (s.replay(root.prefixes[i])) s.run();
        std::lock_guard lock(mu);
        for (const auto& [code, mult] : s.found) found[code] += mult;
        nodes += s.local_nodes;
      }
    };
    std::vector<std::jthread> pool;
    for (int t = 0; t < opt.threads; ++t) pool.emplace_back(worker);
  }
  cell.nodes = nodes;
  cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  cell.status = budget.exceeded ? CellStatus::kUnknown : CellStatus::kComplete;
  for (const auto& [code, mult] : found) {
    PlanarMap map = map_from_code(code);
    Signature sig = signature_of(map);
    cell.witnesses.push_back({code, std::move(map), std::move(sig)});
  }
}

// Necessary conditions for a cell of f1 disparate faces with degrees drawn
// from `allowed` (empty: any != d2) on v vertices.
inline Feasibility cell_feasibility(int k, int d2, int f1, const std::vector<int>& allowed, int v) {
  if ((static_cast<long long>(k) * v) % 2 != 0) {
    return Feasibility::fail(identity::kHandshakeParity, "kv=" + std::to_string(k * v));
  }
  const Rational sigma = disparate_degree_sum(k, d2, f1, v);
  if (f1 == 1) {
    if (!is_integral(sigma)) return Feasibility::fail(identity::kFaceCount, "d1=" + to_string(sigma));
    const int d1 = static_cast<int>(sigma);
    if (d1 < 3) return Feasibility::fail(identity::kFaceDegree, "d1=" + std::to_string(d1));
    if (d1 == d2) return Feasibility::fail(identity::kFaceCount, "d1=d2=" + std::to_string(d1));
    if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), d1) == allowed.end()) {
      return Feasibility::fail(identity::kFaceCount, "d1=" + std::to_string(d1) + " not allowed");
    }
    return feasibility_of_cell(k, d2, {d1}, v);
  }
  if (!is_integral(sigma)) return Feasibility::fail(identity::kFaceCount, "sum=" + to_string(sigma));
  const int s = static_cast<int>(sigma);
  const long long rest = static_cast<long long>(k) * v - s;
  if (s < 0 || rest < 0 || rest % d2 != 0) {
    return Feasibility::fail(identity::kFaceCount, "f2=" + to_string(Rational(rest, d2)));
  }
  // Can f1 allowed degrees sum to s?
  std::vector<std::vector<char>> reach(f1 + 1, std::vector<char>(s + 1, 0));
  reach[0][0] = 1;
  for (int j = 1; j <= f1; ++j) {
    for (int t = 0; t <= s; ++t) {
      for (int d = 3; d <= t; ++d) {
        if (d == d2) continue;
        if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), d) == allowed.end()) continue;
        if (reach[j - 1][t - d]) {
          reach[j][t] = 1;
          break;
        }
      }
    }
  }
  if (!reach[f1][s]) {
    return Feasibility::fail(identity::kHandshakeFaces,
                             "no " + std::to_string(f1) + " disparate degrees sum to " + std::to_string(s));
  }
  return Feasibility::ok();
}

inline CellSpec make_spec(const SearchTask& task, int v, const SearchOptions& opt) {
  CellSpec spec;
  spec.k = task.k;
  spec.n = v;
  spec.constrained = task.policy == SearchPolicy::kFaceConstrained;
  spec.d2 = task.d2;
  spec.f1 = task.f1;
  spec.lemma3 = opt.lemma3 && task.f1 == 1 && is_admissible(task.k, task.d2);
  if (spec.constrained) {
    spec.sigma = static_cast<int>(disparate_degree_sum(task.k, task.d2, task.f1, v));
    spec.allowed.assign(spec.sigma + 1, 0);
    for (int d = 3; d <= spec.sigma; ++d) {
      const bool listed =
          task.d1.empty() || std::find(task.d1.begin(), task.d1.end(), d) != task.d1.end();
      spec.allowed[d] = d != task.d2 && listed;
      if (spec.allowed[d]) spec.max_disparate = d;
    }
    spec.max_disparate = std::min(spec.max_disparate, spec.sigma - 3 * (task.f1 - 1));
  }
  return spec;
}

}  // namespace detail

inline void validate_task(const SearchTask& task) {
  if (task.k < 3) throw std::invalid_argument("search requires k >= 3");
  if (task.v_max > 255) throw std::invalid_argument("search supports at most 255 vertices");
  if (task.policy == SearchPolicy::kFaceConstrained) {
    if (task.f1 < 0 || task.f1 > 3) throw std::invalid_argument("f1 must be in 0..3");
    if (!is_admissible(task.k, task.d2)) {
      throw std::invalid_argument("(k,d2)=(" + std::to_string(task.k) + "," + std::to_string(task.d2) +
                                  ") is not admissible");
    }
  }
}

/// One cell per candidate vertex count (and, for one disparate face with an
/// explicit degree list, one cell per listed degree).
inline SearchReport enumerate(const SearchTask& task, const SearchOptions& opt = {}) {
  validate_task(task);
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport report;
  report.tasks = {task};
  report.options = opt;

  auto search_cell = [&](CellReport cell) {
    detail::run_cell(detail::make_spec(task, cell.v, opt), opt, cell);
    report.cells.push_back(std::move(cell));
  };
  auto base_cell = [&](std::vector<int> d1, int v, std::string v_text) {
    CellReport cell;
    cell.k = task.k;
    cell.d2 = task.policy == SearchPolicy::kFaceConstrained ? task.d2 : 0;
    cell.f1 = task.policy == SearchPolicy::kFaceConstrained ? task.f1 : 0;
    cell.d1 = std::move(d1);
    cell.v = v;
    cell.v_text = std::move(v_text);
    return cell;
  };
  auto prune = [&](CellReport cell, const Feasibility& f) {
    cell.status = CellStatus::kPruned;
    cell.pruned_identity = f.identity;
    cell.pruned_detail = f.detail;
    report.cells.push_back(std::move(cell));
  };

  const int v_lo = std::max(task.v_min, task.k + 1);
  if (task.policy == SearchPolicy::kUnconstrained) {
    for (int v = v_lo; v <= task.v_max; ++v) {
      if ((task.k * v) % 2 != 0) continue;
      search_cell(base_cell({}, v, std::to_string(v)));
    }
  } else if (task.f1 == 1 && !task.d1.empty()) {
    auto degrees = task.d1;
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int d1 : degrees) {
      if (d1 == task.d2) continue;
      const Rational vq = vertices_for_one_disparate(task.k, task.d2, d1);
      if (!is_integral(vq)) {
        prune(base_cell({d1}, 0, to_string(vq)),
              Feasibility::fail(identity::kOneDisparateIntegral, to_string(vq)));
        continue;
      }
      const int v = static_cast<int>(vq);
      if (v < v_lo || v > task.v_max) continue;
      auto cell = base_cell({d1}, v, to_string(vq));
      const auto f = feasibility_of_cell(task.k, task.d2, {d1}, v);
      if (!f.feasible) {
        prune(std::move(cell), f);
      } else {
        search_cell(std::move(cell));
      }
    }
  } else {
    for (int v = v_lo; v <= task.v_max; ++v) {
      auto cell = base_cell(task.d1, v, std::to_string(v));
      if (task.f1 == 0) {
        const auto f = feasibility_of_cell(task.k, task.d2, {}, v);
        if (!f.feasible) {
          prune(std::move(cell), f);
          continue;
        }
      } else {
        const auto f = detail::cell_feasibility(task.k, task.d2, task.f1, task.d1, v);
        if (!f.feasible) {
          prune(std::move(cell), f);
          continue;
        }
      }
      search_cell(std::move(cell));
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

struct TheoremBound {
  int k;
  int d2;
  int v_max;
};

/// Bounds used by the acceptance run.
inline std::vector<TheoremBound> default_theorem_bounds() {
  return {{3, 3, 14}, {3, 4, 12}, {3, 5, 14}, {4, 3, 12}, {5, 3, 16}};
}

/// Searches every one-disparate-face cell (k, d2, d1, v) with v <= bound.
/// Every cell is expected to come back empty.
inline SearchReport verify_theorem_one_disparate(const std::vector<TheoremBound>& bounds,
                                                 const SearchOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport report;
  report.kind = "verify-theorem1";
  report.options = opt;
  for (const auto& b : bounds) {
    // v grows with d1, so the bound fixes the largest d1 to try.
    SearchTask task{b.k, b.d2, 1, {}, 0, b.v_max, SearchPolicy::kFaceConstrained};
    for (int d1 = 3; vertices_for_one_disparate(b.k, b.d2, d1) <= b.v_max; ++d1) {
      if (d1 != b.d2) task.d1.push_back(d1);
    }
    report.tasks.push_back(task);
    if (task.d1.empty()) continue;  // no candidate degree within the bound
    auto sub = enumerate(task, opt);
    for (auto& c : sub.cells) report.cells.push_back(std::move(c));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

struct FamilyMatch {
  std::string family;
  int d = 0;
  int v = 0;
  bool coincident = false;  // the member is a Platonic map (no disparate faces)
  bool found = false;
};

struct ConjectureReport {
  SearchReport search;
  std::vector<Witness> unequal;    // two disparate faces of different degree
  std::vector<Witness> unmatched;  // equal degrees but no family member
  std::vector<FamilyMatch> members;

  bool complete() const { return search.complete(); }
};

/// Two-disparate-face maps up to v_max: every witness should have equal
/// disparate degrees and be a member of one of the known families.
inline ConjectureReport check_conjecture_equal_degrees(int k, int d2, int v_max,
                                                       const SearchOptions& opt = {}) {
  ConjectureReport out;
  SearchTask task{k, d2, 2, {}, 0, v_max, SearchPolicy::kFaceConstrained};
  out.search = enumerate(task, opt);
  out.search.kind = "check-conjecture1";

  std::map<CanonicalCode, std::size_t> member_index;
  for (auto f : kAllFamilies) {
    const auto& info = family_info(f);
    if (info.k != k || info.d2 != d2) continue;
    for (int d = info.d_min;; ++d) {
      const auto map = generate_family(f, d);
      if (map.vertex_count() > v_max) break;
      member_index.emplace(canonical_code(map), out.members.size());
      out.members.push_back({info.name, d, map.vertex_count(), collapses_to_platonic(f, d), false});
    }
  }

  for (const auto& cell : out.search.cells) {
    for (const auto& w : cell.witnesses) {
      std::vector<int> disparate;
      for (const auto& [deg, cnt] : w.signature.faces) {
        if (deg != d2) disparate.insert(disparate.end(), cnt, deg);
      }
      if (disparate.size() == 2 && disparate[0] != disparate[1]) {
        out.unequal.push_back(w);
        continue;
      }
      const auto it = member_index.find(w.code);
      if (it == member_index.end()) {
        out.unmatched.push_back(w);
      } else {
        out.members[it->second].found = true;
      }
    }
  }

  // Members whose disparate degree equals d2 are Platonic; look for them in
  // the zero-disparate search at their vertex count.
  for (auto& m : out.members) {
    if (!m.coincident) continue;
    SearchTask platonic{k, d2, 0, {}, m.v, m.v, SearchPolicy::kFaceConstrained};
    auto rep = enumerate(platonic, opt);
    const auto code = canonical_code(generate_family(*family_from_name(m.family), m.d));
    for (auto& c : rep.cells) {
      for (const auto& w : c.witnesses) m.found = m.found || w.code == code;
      out.search.cells.push_back(std::move(c));
    }
    out.search.tasks.push_back(platonic);
  }
  return out;
}

}  // namespace nearplat
