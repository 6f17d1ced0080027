#include "ybe/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "ybe/brace.hpp"
#include "ybe/canonical.hpp"
#include "ybe/error.hpp"
#include "ybe/io.hpp"
#include "ybe/modular.hpp"
#include "ybe/quotients.hpp"

namespace ybe {

CensusFlags evaluate_flags(const Solution& s) {
  CensusFlags f;
  f.indecomposable = is_indecomposable(s);
  f.irretractable = is_irretractable(s);
  f.square_free = is_square_free(s);
  f.simple = s.size() >= 2 && is_simple(s).simple;
  return f;
}

void apply_constraints(CensusSpec& spec, std::string_view list) {
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view item = list.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "indecomposable") {
      spec.indecomposable = true;
    } else if (item == "irretractable") {
      spec.irretractable = true;
    } else if (item == "square_free" || item == "square-free") {
      spec.square_free = true;
    } else if (item == "simple") {
      spec.simple = true;
    } else if (item.substr(0, 11) == "block_form(" && item.back() == ')') {
      std::string num(item.substr(11, item.size() - 12));
      try {
        std::size_t used = 0;
        spec.block_form = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(num);
      } catch (const std::exception&) {
        throw HypothesisError("bad block_form argument: " + num);
      }
    } else if (!item.empty()) {
      throw HypothesisError("unknown constraint: " + std::string(item));
    }
    start = end + 1;
  }
}

bool satisfies(const CensusSpec& spec, const CensusFlags& f) {
  return (!spec.indecomposable || f.indecomposable) && (!spec.irretractable || f.irretractable) &&
         (!spec.square_free || f.square_free) && (!spec.simple || f.simple);
}

namespace {

struct ClassEntry {
  bool pass = false;
  CensusFlags flags;
  std::uint64_t count = 0;
};
using ClassMap = std::map<Table, ClassEntry>;

void record_leaf(const CensusSpec& spec, const Solution& s, ClassMap& out) {
  Table key = canonical_form(s);
  auto it = out.find(key);
  if (it == out.end()) {
    ClassEntry e;
    e.flags = evaluate_flags(s);
    e.pass = satisfies(spec, e.flags);
    it = out.emplace(std::move(key), e).first;
  }
  ++it->second.count;
}

// ---------------------------------------------------------------------
// Cycle-set search. Cells are filled row by row; the law
// T[T[x][y]][T[x][z]] = T[T[y][x]][T[y][z]] is checked, and outer cells
// forced, as soon as the four inner cells of an instance are known.

using Row = std::vector<std::int8_t>;

std::vector<unsigned> cycle_key(const std::vector<std::int8_t>& row, unsigned x) {
  const auto n = static_cast<unsigned>(row.size());
  std::vector<bool> seen(n, false);
  unsigned own = 0;
  std::vector<unsigned> others;
  for (unsigned s = 0; s < n; ++s) {
    if (seen[s]) continue;
    unsigned len = 0;
    bool has_x = false;
    for (unsigned c = s; !seen[c]; c = static_cast<unsigned>(row[c])) {
      seen[c] = true;
      has_x = has_x || c == x;
      ++len;
    }
    if (has_x)
      own = len;
    else
      others.push_back(len);
  }
  std::sort(others.begin(), others.end());
  others.insert(others.begin(), own);
  return others;
}

// Row 0 candidates: 0 -> 1 -> ... -> l-1 -> 0, then the remaining cycles
// on consecutive points in ascending length.
std::vector<Row> first_rows(unsigned n) {
  std::vector<Row> out;
  std::vector<std::vector<unsigned>> parts;
  // partitions of m into non-decreasing parts
  auto gen = [&](auto&& self, unsigned m, unsigned min_part, std::vector<unsigned>& cur) -> void {
    if (m == 0) {
      parts.push_back(cur);
      return;
    }
    for (unsigned p = min_part; p <= m; ++p) {
      cur.push_back(p);
      self(self, m - p, p, cur);
      cur.pop_back();
    }
  };
  for (unsigned own = 1; own <= n; ++own) {
    parts.clear();
    std::vector<unsigned> cur;
    gen(gen, n - own, 1, cur);
    for (const auto& rest : parts) {
      Row row;
      row.reserve(n);
      auto put_cycle = [&](unsigned len) {
        const auto base = static_cast<unsigned>(row.size());
        for (unsigned k = 0; k < len; ++k) row.push_back(static_cast<std::int8_t>(base + (k + 1) % len));
      };
      put_cycle(own);
      for (unsigned len : rest) put_cycle(len);
      out.push_back(row);
    }
  }
  return out;
}

class CycleSetSearch {
 public:
  explicit CycleSetSearch(unsigned n) : n_(n), T_(n * n, -1), pos_(n * n, -1), used_(n, 0) {}

  bool assign_row(unsigned r, const Row& row) {
    for (unsigned c = 0; c < n_; ++c)
      if (!assign(r, c, row[c]) || !propagate()) return false;
    return true;
  }

  std::int8_t at(unsigned r, unsigned c) const { return T_[r * n_ + c]; }
  Row row(unsigned r) const { return Row(T_.begin() + r * n_, T_.begin() + (r + 1) * n_); }
  bool row_complete(unsigned r) const { return used_[r] == full(); }

  // Depth-first search below the current state. `on_leaf` receives the
  // full table; `stop_rows` > 0 turns rows [0, stop_rows) being complete
  // into a leaf as well.
  template <class F>
  void run(unsigned stop_rows, F&& on_leaf) {
    key0_ = cycle_key(row(0), 0);
    dfs(stop_rows, on_leaf);
  }

  Table table() const {
    Table t(n_, std::vector<point_t>(n_));
    for (unsigned r = 0; r < n_; ++r)
      for (unsigned c = 0; c < n_; ++c) t[r][c] = static_cast<point_t>(at(r, c));
    return t;
  }

 private:
  std::uint32_t full() const { return (1u << n_) - 1; }

  bool assign(unsigned p, unsigned q, int v) {
    std::int8_t& cell = T_[p * n_ + q];
    if (cell >= 0) return cell == v;
    if (used_[p] & (1u << v)) return false;
    cell = static_cast<std::int8_t>(v);
    used_[p] |= 1u << v;
    pos_[p * n_ + v] = static_cast<std::int8_t>(q);
    trail_.push_back(static_cast<std::uint16_t>(p * n_ + q));
    queue_.push_back(static_cast<std::uint16_t>(p * n_ + q));
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const unsigned cell = trail_.back();
      trail_.pop_back();
      const unsigned p = cell / n_;
      const int v = T_[cell];
      used_[p] &= ~(1u << v);
      pos_[p * n_ + v] = -1;
      T_[cell] = -1;
    }
  }

  bool law(unsigned x, unsigned y, unsigned z) {
    if (x == y) return true;
    const int a = T_[x * n_ + y], b = T_[x * n_ + z], c = T_[y * n_ + x], d = T_[y * n_ + z];
    if (a < 0 || b < 0 || c < 0 || d < 0) return true;
    const int L = T_[a * n_ + b], R = T_[c * n_ + d];
    if (L >= 0 && R >= 0) return L == R;
    if (L >= 0) return assign(c, d, L);
    if (R >= 0) return assign(a, b, R);
    return true;
  }

  bool propagate() {
    std::size_t head = 0;
    bool ok = true;
    while (ok && head < queue_.size()) {
      const unsigned cell = queue_[head++];
      const unsigned p = cell / n_, q = cell % n_;
      const std::uint32_t free = full() & ~used_[p];
      if (free && !(free & (free - 1))) {
        unsigned c = 0;
        while (T_[p * n_ + c] >= 0) ++c;
        ok = assign(p, c, __builtin_ctz(free));
        if (!ok) break;
      }
      for (unsigned z = 0; z < n_ && ok; ++z) ok = law(p, q, z) && law(p, z, q);
      for (unsigned x = 0; x < n_ && ok; ++x) {
        const int y = pos_[x * n_ + p], z = pos_[x * n_ + q];
        if (y >= 0 && z >= 0) ok = law(x, static_cast<unsigned>(y), static_cast<unsigned>(z));
      }
    }
    queue_.clear();
    return ok;
  }

  bool keys_ok() const {
    for (unsigned r = 1; r < n_; ++r)
      if (row_complete(r) && cycle_key(row(r), r) < key0_) return false;
    return true;
  }

  template <class F>
  void dfs(unsigned stop_rows, F& on_leaf) {
    if (!keys_ok()) return;
    if (stop_rows > 0) {
      bool done = true;
      for (unsigned r = 0; r < stop_rows && done; ++r) done = row_complete(r);
      if (done) {
        on_leaf(*this);
        return;
      }
    }
    unsigned cell = 0;
    while (cell < n_ * n_ && T_[cell] >= 0) ++cell;
    if (cell == n_ * n_) {
      on_leaf(*this);
      return;
    }
    const unsigned p = cell / n_, q = cell % n_;
    for (unsigned v = 0; v < n_; ++v) {
      if (used_[p] & (1u << v)) continue;
      const std::size_t mark = trail_.size();
      if (assign(p, q, static_cast<int>(v)) && propagate()) dfs(stop_rows, on_leaf);
      queue_.clear();
      undo(mark);
    }
  }

  unsigned n_;
  std::vector<std::int8_t> T_, pos_;
  std::vector<std::uint32_t> used_;
  std::vector<std::uint16_t> trail_, queue_;
  std::vector<unsigned> key0_;
};

// A task fixes rows 0 .. k-1.
using Task = std::vector<Row>;

std::vector<Task> cycle_set_tasks(unsigned n, std::size_t depth) {
  std::vector<Task> tasks;
  const unsigned stop = static_cast<unsigned>(std::min<std::size_t>(n, depth + 1));
  for (const Row& r0 : first_rows(n)) {
    CycleSetSearch s(n);
    if (!s.assign_row(0, r0)) continue;
    s.run(stop, [&](const CycleSetSearch& st) {
      Task t;
      for (unsigned r = 0; r < stop; ++r) t.push_back(st.row(r));
      tasks.push_back(std::move(t));
    });
  }
  return tasks;
}

void solve_cycle_set_task(const CensusSpec& spec, const Task& task, ClassMap& out) {
  const auto n = static_cast<unsigned>(spec.n);
  CycleSetSearch s(n);
  for (unsigned r = 0; r < task.size(); ++r)
    if (!s.assign_row(r, task[r])) throw std::logic_error("census: task prefix no longer consistent");
  s.run(0, [&](const CycleSetSearch& st) {
    std::uint32_t seen = 0;
    for (unsigned x = 0; x < n; ++x) seen |= 1u << st.at(x, x);
    if (seen != (1u << n) - 1) return;
    record_leaf(spec, from_cycle_set(st.table()), out);
  });
}

// ---------------------------------------------------------------------
// Block shape on (Z/(p))^2. Conditions 2 and 3 together say that every
// d_{i,k} lies in the set of delta with
//   sigma_j sigma_{delta^-1(l)} = sigma_l sigma_{delta^-1(j)}  for all j, l,
// which depends on sigma only.

std::vector<Perm> all_perms(unsigned p) {
  std::vector<point_t> img(p);
  for (unsigned k = 0; k < p; ++k) img[k] = k;
  std::vector<Perm> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<std::vector<Perm>> block_sigma_tasks(unsigned p) {
  const auto perms = all_perms(p);
  std::vector<std::vector<Perm>> out;
  std::vector<std::size_t> idx(p, 0);
  while (true) {
    std::vector<Perm> sigma;
    for (auto i : idx) sigma.push_back(perms[i]);
    bool distinct = true;
    for (unsigned a = 0; a < p && distinct; ++a)
      for (unsigned b = a + 1; b < p && distinct; ++b) distinct = idx[a] != idx[b];
    if (distinct && is_transitive(sigma, p)) out.push_back(std::move(sigma));
    unsigned k = p;
    while (k > 0 && idx[k - 1] == perms.size() - 1) idx[--k] = 0;
    if (k == 0) break;
    ++idx[k - 1];
  }
  return out;
}

// Condition 4 with early exit.
bool block_cond4(const std::vector<Perm>& sinv, const std::vector<const Perm*>& d, unsigned p) {
  auto D = [&](point_t i, point_t k) -> const Perm& { return *d[i * p + k]; };
  for (point_t i = 0; i < p; ++i)
    for (point_t k = 0; k < p; ++k)
      for (point_t w = 0; w < p; ++w)
        for (point_t j = 0; j < p; ++j)
          for (point_t l = 0; l < p; ++l) {
            const Perm& a = D(sinv[j][k], sinv[j][w]);
            const Perm& b = D(sinv[l][i], sinv[l][w]);
            const Perm& c = D(i, w);
            const Perm& e = D(k, w);
            for (point_t v = 0; v < p; ++v)
              if (c[a[v]] != e[b[v]]) return false;
          }
  return true;
}

void solve_block_task(const CensusSpec& spec, const std::vector<Perm>& sigma, ClassMap& out) {
  const auto p = static_cast<unsigned>(*spec.block_form);
  std::vector<Perm> sinv;
  for (const auto& s : sigma) sinv.push_back(s.inverse());
  std::vector<Perm> allowed;
  for (const Perm& delta : all_perms(p)) {
    Perm di = delta.inverse();
    bool ok = true;
    for (point_t j = 0; j < p && ok; ++j)
      for (point_t l = 0; l < p && ok; ++l) {
        const Perm& a = sigma[di[l]];
        const Perm& b = sigma[di[j]];
        for (point_t u = 0; u < p && ok; ++u) ok = sigma[j][a[u]] == sigma[l][b[u]];
      }
    if (ok) allowed.push_back(std::move(delta));
  }
  if (allowed.empty()) return;
  std::vector<std::pair<point_t, point_t>> slots;
  for (point_t i = 0; i < p; ++i)
    for (point_t k = i; k < p; ++k) slots.emplace_back(i, k);
  std::vector<std::size_t> choice(slots.size(), 0);
  std::vector<const Perm*> d(p * p);
  while (true) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [i, k] = slots[s];
      d[i * p + k] = d[k * p + i] = &allowed[choice[s]];
    }
    if (block_cond4(sinv, d, p)) {
      BlockFormData data;
      data.y_size = data.z_size = p;
      data.sigma = sigma;
      for (auto* e : d) data.d.push_back(*e);
      BlockFormResult r = block_form(data);
      if (r.accepted()) record_leaf(spec, *r.solution, out);
    }
    std::size_t k = slots.size();
    while (k > 0 && choice[k - 1] == allowed.size() - 1) choice[--k] = 0;
    if (k == 0) break;
    ++choice[k - 1];
  }
}

// ---------------------------------------------------------------------
// Task runner with checkpointing.

Json spec_json(const CensusSpec& spec) {
  Json j;
  j["n"] = spec.n;
  j["indecomposable"] = spec.indecomposable;
  j["irretractable"] = spec.irretractable;
  j["square_free"] = spec.square_free;
  j["simple"] = spec.simple;
  j["block_form"] = spec.block_form ? Json(*spec.block_form) : Json(nullptr);
  return j;
}

Json class_map_json(const ClassMap& m) {
  Json arr = Json::array();
  for (const auto& [key, e] : m) {
    Json r;
    r["key"] = key;
    r["pass"] = e.pass;
    r["flags"] = flags_to_json(e.flags);
    r["count"] = e.count;
    arr.push_back(std::move(r));
  }
  return arr;
}

void write_checkpoint(const std::string& path, const CensusSpec& spec, std::size_t num_tasks,
                      const std::vector<bool>& done, const ClassMap& merged) {
  Json j;
  j["version"] = kCheckpointVersion;
  j["spec"] = spec_json(spec);
  j["split_depth"] = spec.split_depth;
  j["num_tasks"] = num_tasks;
  Json d = Json::array();
  for (std::size_t t = 0; t < done.size(); ++t)
    if (done[t]) d.push_back(t);
  j["done"] = std::move(d);
  j["classes"] = class_map_json(merged);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw CensusCheckpointError("cannot write checkpoint " + tmp);
    f << j.dump() << '\n';
    if (!f) throw CensusCheckpointError("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

// Loads a checkpoint for this spec. An empty or missing file means a
// fresh start.
bool read_checkpoint(const std::string& path, const CensusSpec& spec, std::size_t num_tasks,
                     std::vector<bool>& done, ClassMap& merged) {
  std::ifstream f(path);
  if (!f) return false;
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return false;
  try {
    Json j = Json::parse(text);
    if (j.at("version").get<int>() != kCheckpointVersion)
      throw CensusCheckpointError("checkpoint version mismatch");
    if (j.at("spec") != spec_json(spec)) throw CensusCheckpointError("checkpoint was written for a different spec");
    if (j.at("split_depth").get<std::size_t>() != spec.split_depth ||
        j.at("num_tasks").get<std::size_t>() != num_tasks)
      throw CensusCheckpointError("checkpoint task split does not match");
    for (const auto& t : j.at("done")) {
      auto k = t.get<std::size_t>();
      if (k >= num_tasks) throw CensusCheckpointError("checkpoint task index out of range");
      done[k] = true;
    }
    for (const auto& r : j.at("classes")) {
      ClassEntry e;
      e.pass = r.at("pass").get<bool>();
      e.flags = flags_from_json(r.at("flags"));
      e.count = r.at("count").get<std::uint64_t>();
      merged[r.at("key").get<Table>()] = e;
    }
  } catch (const Json::exception& e) {
    throw CensusCheckpointError(std::string("corrupt checkpoint: ") + e.what());
  }
  return true;
}

void merge_into(ClassMap& into, const ClassMap& from) {
  for (const auto& [key, e] : from) {
    auto [it, fresh] = into.emplace(key, e);
    if (!fresh) it->second.count += e.count;
  }
}

template <class TaskT, class Solve>
CensusResult run_tasks(const CensusSpec& spec, const std::vector<TaskT>& tasks, Solve solve) {
  const std::size_t total = tasks.size();
  std::vector<bool> done(total, false);
  ClassMap merged;
  if (spec.checkpoint_path) read_checkpoint(*spec.checkpoint_path, spec, total, done, merged);

  std::vector<std::size_t> todo;
  for (std::size_t t = 0; t < total; ++t)
    if (!done[t]) todo.push_back(t);
  std::size_t budget = todo.size();
  if (spec.max_tasks) budget = std::min(budget, *spec.max_tasks);

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto last_write = std::chrono::steady_clock::now();
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= budget) return;
      ClassMap local;
      try {
        solve(tasks[todo[k]], local);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = budget;
        return;
      }
      std::lock_guard lock(mu);
      merge_into(merged, local);
      done[todo[k]] = true;
      auto now = std::chrono::steady_clock::now();
      if (spec.checkpoint_path && now - last_write > std::chrono::seconds(2)) {
        write_checkpoint(*spec.checkpoint_path, spec, total, done, merged);
        last_write = now;
      }
    }
  };
  const unsigned jobs = std::max(1u, spec.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (spec.checkpoint_path) write_checkpoint(*spec.checkpoint_path, spec, total, done, merged);

  CensusResult res;
  res.tasks_total = total;
  res.tasks_done = static_cast<std::size_t>(std::count(done.begin(), done.end(), true));
  res.complete = res.tasks_done == total;
  for (const auto& [key, e] : merged)
    if (e.pass) res.records.push_back({key, e.flags, e.count, std::nullopt});
  return res;
}

void annotate_square_params(std::int64_t p, std::vector<CensusRecord>& records) {
  std::map<Table, SquareParams> seen;
  for (std::int64_t t : mod::units(p))
    for (const auto& j : symmetric_j_vectors(p)) {
      SquareParams sp{p, t, j};
      std::optional<Solution> s;
      try {
        s = square_formula(sp);
      } catch (const std::exception&) {
        continue;
      }
      seen.emplace(canonical_form(*s), sp);
    }
  for (auto& r : records) {
    auto it = seen.find(r.key);
    if (it != seen.end()) r.parameterization = it->second;
  }
}

}  // namespace

CensusResult enumerate(const CensusSpec& spec) {
  if (spec.n == 0) throw HypothesisError("census needs n >= 1");
  if (spec.block_form) {
    const std::int64_t p = *spec.block_form;
    if (p != 2 && p != 3) throw HypothesisError("block_form census is limited to p in {2, 3}");
    if (spec.n != static_cast<std::size_t>(p * p)) throw HypothesisError("block_form(p) requires n = p^2");
    auto tasks = block_sigma_tasks(static_cast<unsigned>(p));
    CensusResult res = run_tasks(spec, tasks, [&](const std::vector<Perm>& sigma, ClassMap& out) {
      solve_block_task(spec, sigma, out);
    });
    if (res.complete) annotate_square_params(p, res.records);
    return res;
  }
  if (spec.n > 7) throw HypothesisError("unconstrained census is limited to n <= 7");
  auto tasks = cycle_set_tasks(static_cast<unsigned>(spec.n), spec.split_depth);
  return run_tasks(spec, tasks, [&](const Task& t, ClassMap& out) { solve_cycle_set_task(spec, t, out); });
}

CensusResult enumerate_block_form(std::int64_t p, unsigned jobs) {
  CensusSpec spec;
  spec.n = static_cast<std::size_t>(p * p);
  spec.block_form = p;
  spec.indecomposable = true;
  spec.irretractable = true;
  spec.jobs = jobs;
  return enumerate(spec);
}

}  // namespace ybe
