#include "symmine/engine.hpp"

#include <chrono>
#include <thread>

#include "symmine/error.hpp"
#include "symmine/set_ops.hpp"

namespace symmine {

namespace detail {

uint64_t checked_add(uint64_t a, uint64_t b) {
  uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw CountOverflowError("embedding count exceeds 64 bits");
  }
  return out;
}

}  // namespace detail

namespace {

// One worker's state: the partial embedding plus a materialized candidate
// set per level, each sized to the maximum degree (every candidate set is a
// refinement of some neighbor list).
class Executor {
 public:
  Executor(const Graph& g, const Plan& plan)
      : g_(g), plan_(plan), depth_(static_cast<int>(plan.levels.size())) {
    buffers_.resize(depth_);
    for (int i = 1; i < depth_; ++i) buffers_[i].resize(g.max_degree());
  }

  uint64_t count_range(VertexId lo, VertexId hi) {
    uint64_t total = 0;
    for (VertexId v = lo; v < hi; ++v) {
      values_[0] = v;
      total = detail::checked_add(total, count_from(1));
    }
    return total;
  }

  // Depth-first emit in ascending-per-level order; stops when emit returns
  // false.
  template <typename Emit>
  bool enumerate_all(Emit&& emit) {
    const size_t n = g_.vertex_count();
    for (VertexId v = 0; v < n; ++v) {
      values_[0] = v;
      if (!enumerate_from(1, emit)) return false;
    }
    return true;
  }

 private:
  size_t build_level(int level) {
    const PlanLevel& spec = plan_.levels[level];
    std::optional<VertexId> bound;
    if (plan_.options.use_bounds && spec.restriction_parent != kNoParent) {
      bound = values_[spec.restriction_parent];
    }
    VertexId* out = buffers_[level].data();
    const auto& isrc = spec.intersect_sources;
    const auto first = g_.neighbors(values_[isrc[0]]);
    size_t len;
    if (isrc.size() == 1) {
      len = difference_into(first, {}, bound, out);  // bounded copy
    } else {
      len = intersect_into(first, g_.neighbors(values_[isrc[1]]), bound, out);
      for (size_t k = 2; k < isrc.size(); ++k) {
        len = intersect_into({out, len}, g_.neighbors(values_[isrc[k]]), {}, out);
      }
    }
    for (int src : spec.diff_sources) {
      len = difference_into({out, len}, g_.neighbors(values_[src]), {}, out);
    }
    return len;
  }

  bool taken(VertexId c, int level) const {
    for (int j = 0; j < level; ++j) {
      if (values_[j] == c) return true;
    }
    return false;
  }

  uint64_t count_from(int level) {
    const size_t len = build_level(level);
    const VertexId* cands = buffers_[level].data();
    const PlanLevel& spec = plan_.levels[level];
    // With bounds off the parent check runs here instead; the candidate list
    // is sorted, so the first violation ends the level.
    const bool check_parent = !plan_.options.use_bounds && spec.restriction_parent != kNoParent;
    const VertexId parent_value = check_parent ? values_[spec.restriction_parent] : 0;
    if (level == depth_ - 1) {
      uint64_t leaf = 0;
      for (size_t i = 0; i < len; ++i) {
        const VertexId c = cands[i];
        if (check_parent && c >= parent_value) break;
        if (!taken(c, level)) ++leaf;
      }
      return leaf;
    }
    uint64_t total = 0;
    for (size_t i = 0; i < len; ++i) {
      const VertexId c = cands[i];
      if (check_parent && c >= parent_value) break;
      if (taken(c, level)) continue;
      values_[level] = c;
      total = detail::checked_add(total, count_from(level + 1));
    }
    return total;
  }

  template <typename Emit>
  bool enumerate_from(int level, Emit&& emit) {
    if (level == depth_) {
      return emit(std::span<const VertexId>(values_.data(), depth_));
    }
    const size_t len = build_level(level);
    const PlanLevel& spec = plan_.levels[level];
    const bool check_parent = !plan_.options.use_bounds && spec.restriction_parent != kNoParent;
    const VertexId parent_value = check_parent ? values_[spec.restriction_parent] : 0;
    for (size_t i = 0; i < len; ++i) {
      const VertexId c = buffers_[level][i];
      if (check_parent && c >= parent_value) break;
      if (taken(c, level)) continue;
      values_[level] = c;
      if (!enumerate_from(level + 1, emit)) return false;
    }
    return true;
  }

  const Graph& g_;
  const Plan& plan_;
  const int depth_;
  std::array<VertexId, kMaxPatternVertices> values_{};
  std::vector<std::vector<VertexId>> buffers_;
};

}  // namespace

CountResult count_instances(const Graph& g, const Plan& plan, unsigned workers) {
  if (workers == 0) workers = 1;
  const auto start = std::chrono::steady_clock::now();
  const size_t n = g.vertex_count();

  CountResult result;
  result.per_worker.assign(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  {
    const auto run_block = [&](unsigned w) {
      try {
        Executor exec(g, plan);
        const auto lo = static_cast<VertexId>(n * w / workers);
        const auto hi = static_cast<VertexId>(n * (w + 1) / workers);
        result.per_worker[w] = exec.count_range(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back(run_block, w);
    run_block(0);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  for (uint64_t part : result.per_worker) {
    result.count = detail::checked_add(result.count, part);
  }
  result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::vector<Embedding> enumerate_instances(const Graph& g, const Plan& plan,
                                           std::optional<uint64_t> limit) {
  std::vector<Embedding> out;
  if (limit && *limit == 0) return out;
  Executor exec(g, plan);
  exec.enumerate_all([&](std::span<const VertexId> values) {
    out.emplace_back(values.begin(), values.end());
    return !limit || out.size() < *limit;
  });
  return out;
}

std::vector<MotifEntry> motif_counts(const Graph& g, int k, const CostParams& params,
                                     unsigned workers) {
  if (k < 3 || k > 5) throw InputError("motif size must be in 3..5");
  std::vector<MotifEntry> out;
  for (Pattern& p : connected_patterns(k)) {
    const SelectedSchedule sel = select_schedule(p, params);
    const Plan plan = compile_plan(p, sel.choice.schedule, sel.choice.restrictions);
    MotifEntry entry{std::move(p), 0, count_instances(g, plan, workers).count};
    entry.key = canonical_key(entry.pattern);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace symmine
