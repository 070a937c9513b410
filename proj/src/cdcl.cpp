#include "mdt/cdcl.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <utility>

namespace mdt {

namespace {

// Internal literal encoding: 2*var + sign, var 0-based, sign 1 = negated.
constexpr int kUndef = -1;

int ivar(int l) { return l >> 1; }
int isign(int l) { return l & 1; }
int ineg(int l) { return l ^ 1; }

class CdclSolver final : public SatSolver {
 public:
  int new_var() override {
    assigns_.push_back(0);
    level_.push_back(0);
    reason_.push_back(kUndef);
    activity_.push_back(0.0);
    polarity_.push_back(1);  // default phase: false
    seen_.push_back(0);
    watches_.emplace_back();
    watches_.emplace_back();
    int v = static_cast<int>(assigns_.size());
    order_.push({0.0, v - 1});
    return v;
  }

  void add_clause(const std::vector<Lit>& lits) override {
    assert(decision_level() == 0);
    if (!ok_) return;
    std::vector<int> c;
    c.reserve(lits.size());
    for (Lit l : lits) {
      if (l == 0 || std::abs(l) > num_vars())
        throw std::invalid_argument("cdcl: literal out of range");
      c.push_back(2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0));
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    std::vector<int> kept;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i + 1 < c.size() && c[i + 1] == ineg(c[i])) return;  // tautology
      int v = value(c[i]);
      if (v > 0) return;  // satisfied at the root
      if (v == 0) kept.push_back(c[i]);
    }
    if (kept.empty()) {
      ok_ = false;
      return;
    }
    if (kept.size() == 1) {
      enqueue(kept[0], kUndef);
      if (propagate() != kUndef) ok_ = false;
      return;
    }
    attach(add(std::move(kept), false));
  }

  SatResult solve() override {
    if (!ok_) return SatResult::Unsat;
    cancel_until(0);
    if (propagate() != kUndef) {
      ok_ = false;
      return SatResult::Unsat;
    }
    int restart = 0;
    for (;;) {
      long budget = 100L * luby(++restart);
      int status = search(budget);
      if (status == 0) continue;  // restart
      cancel_until(0);
      if (status < 0) {
        ok_ = false;
        return SatResult::Unsat;
      }
      return SatResult::Sat;
    }
  }

  bool model_value(int var) const override {
    if (var < 1 || var > static_cast<int>(model_.size()))
      throw std::out_of_range("cdcl: model variable");
    return model_[var - 1];
  }

  int num_vars() const override { return static_cast<int>(assigns_.size()); }
  long conflicts() const override { return conflicts_; }

 private:
  struct Clause {
    std::vector<int> lits;
    double act = 0.0;
    bool learnt = false;
  };

  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_;  // per literal: clauses watching it
  std::vector<char> assigns_;              // 0 undef, 1 true, 2 false
  std::vector<int> level_, reason_, trail_, trail_lim_;
  std::vector<double> activity_;
  std::vector<char> polarity_, seen_;
  std::priority_queue<std::pair<double, int>> order_;  // lazy; stale entries
  std::vector<bool> model_;
  int qhead_ = 0;
  long conflicts_ = 0;
  long problem_clauses_ = 0;
  double var_inc_ = 1.0, cla_inc_ = 1.0;
  bool ok_ = true;

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  // Truth of an internal literal: +1 / -1 / 0 undef.
  int value(int l) const {
    char a = assigns_[ivar(l)];
    if (a == 0) return 0;
    return (a == 1) != static_cast<bool>(isign(l)) ? 1 : -1;
  }

  int add(std::vector<int> lits, bool learnt) {
    clauses_.push_back({std::move(lits), 0.0, learnt});
    if (!learnt) ++problem_clauses_;
    return static_cast<int>(clauses_.size()) - 1;
  }

  void attach(int ci) {
    const Clause& c = clauses_[ci];
    assert(c.lits.size() >= 2);
    watches_[c.lits[0]].push_back(ci);
    watches_[c.lits[1]].push_back(ci);
  }

  void enqueue(int l, int from) {
    assert(value(l) == 0);
    int v = ivar(l);
    assigns_[v] = isign(l) ? 2 : 1;
    level_[v] = decision_level();
    reason_[v] = from;
    trail_.push_back(l);
  }

  // Returns the conflicting clause index or kUndef.
  int propagate() {
    while (qhead_ < static_cast<int>(trail_.size())) {
      int p = trail_[qhead_++];
      int fl = ineg(p);  // literal that just became false
      auto& ws = watches_[fl];
      std::size_t j = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        int ci = ws[i];
        auto& lits = clauses_[ci].lits;
        if (lits[0] == fl) std::swap(lits[0], lits[1]);
        assert(lits[1] == fl);
        if (value(lits[0]) > 0) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (value(lits[k]) >= 0) {
            std::swap(lits[1], lits[k]);
            watches_[lits[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (value(lits[0]) < 0) {
          for (++i; i < ws.size(); ++i) ws[j++] = ws[i];
          ws.resize(j);
          qhead_ = static_cast<int>(trail_.size());
          return ci;
        }
        enqueue(lits[0], ci);
      }
      ws.resize(j);
    }
    return kUndef;
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[lvl];
         --i) {
      int v = ivar(trail_[i]);
      polarity_[v] = static_cast<char>(assigns_[v] == 2);
      assigns_[v] = 0;
      reason_[v] = kUndef;
      order_.push({activity_[v], v});
    }
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
    qhead_ = static_cast<int>(trail_.size());
  }

  void bump_var(int v) {
    if ((activity_[v] += var_inc_) > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    order_.push({activity_[v], v});
  }

  void bump_clause(Clause& c) {
    if ((c.act += cla_inc_) > 1e20) {
      for (auto& cl : clauses_)
        if (cl.learnt) cl.act *= 1e-20;
      cla_inc_ *= 1e-20;
    }
  }

  // First-UIP conflict analysis; fills learnt (learnt[0] = assertion literal)
  // and returns the backjump level.
  int analyze(int confl, std::vector<int>& learnt) {
    learnt.assign(1, 0);
    int counter = 0, p = kUndef;
    int index = static_cast<int>(trail_.size()) - 1;
    do {
      Clause& c = clauses_[confl];
      if (c.learnt) bump_clause(c);
      for (std::size_t i = (p == kUndef ? 0 : 1); i < c.lits.size(); ++i) {
        int q = c.lits[i];
        int v = ivar(q);
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        bump_var(v);
        if (level_[v] == decision_level())
          ++counter;
        else
          learnt.push_back(q);
      }
      while (!seen_[ivar(trail_[index])]) --index;
      p = trail_[index--];
      confl = reason_[ivar(p)];
      seen_[ivar(p)] = 0;
      --counter;
    } while (counter > 0);
    learnt[0] = ineg(p);

    // Minimize: drop literals whose full reason is already in the clause.
    std::vector<int> toclear(learnt.begin() + 1, learnt.end());
    std::size_t w = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      int r = reason_[ivar(learnt[i])];
      bool redundant = r != kUndef;
      if (redundant)
        for (int q : clauses_[r].lits)
          if (q != ineg(learnt[i]) && !seen_[ivar(q)] && level_[ivar(q)] > 0)
            redundant = false;
      if (!redundant) learnt[w++] = learnt[i];
    }
    learnt.resize(w);

    int bj = 0;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      if (level_[ivar(learnt[i])] > bj) {
        bj = level_[ivar(learnt[i])];
        std::swap(learnt[1], learnt[i]);
      }
    }
    seen_[ivar(learnt[0])] = 0;
    for (int q : toclear) seen_[ivar(q)] = 0;
    return bj;
  }

  int pick_branch() {
    while (!order_.empty()) {
      int v = order_.top().second;
      order_.pop();
      if (assigns_[v] == 0) return 2 * v + polarity_[v];
    }
    for (int v = 0; v < num_vars(); ++v)
      if (assigns_[v] == 0) return 2 * v + polarity_[v];
    return kUndef;
  }

  // Keeps the most active half of the learnt clauses (reasons always stay).
  void reduce_learnts() {
    assert(decision_level() == 0);
    std::vector<int> cand;
    for (int i = 0; i < static_cast<int>(clauses_.size()); ++i) {
      const Clause& c = clauses_[i];
      if (!c.learnt || c.lits.size() <= 2) continue;
      int v0 = ivar(c.lits[0]);
      if (assigns_[v0] != 0 && reason_[v0] == i) continue;
      cand.push_back(i);
    }
    std::nth_element(cand.begin(), cand.begin() + cand.size() / 2, cand.end(),
                     [&](int a, int b) { return clauses_[a].act < clauses_[b].act; });
    cand.resize(cand.size() / 2);
    std::vector<char> drop(clauses_.size(), 0);
    for (int i : cand) drop[i] = 1;

    std::vector<int> remap(clauses_.size(), kUndef);
    std::size_t w = 0;
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      if (drop[i]) continue;
      remap[i] = static_cast<int>(w);
      if (w != i) clauses_[w] = std::move(clauses_[i]);
      ++w;
    }
    clauses_.resize(w);
    for (auto& r : reason_)
      if (r != kUndef) r = remap[r];
    for (auto& wl : watches_) wl.clear();
    for (int i = 0; i < static_cast<int>(clauses_.size()); ++i) attach(i);
  }

  // 1 = Sat, -1 = Unsat, 0 = restart budget exhausted.
  int search(long budget) {
    long local = 0;
    std::vector<int> learnt;
    for (;;) {
      int confl = propagate();
      if (confl != kUndef) {
        ++conflicts_;
        ++local;
        if (decision_level() == 0) return -1;
        int bj = analyze(confl, learnt);
        cancel_until(bj);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kUndef);
        } else {
          int ci = add(learnt, true);
          attach(ci);
          enqueue(learnt[0], ci);
        }
        var_inc_ /= 0.95;
        cla_inc_ /= 0.999;
        continue;
      }
      if (local >= budget) {
        cancel_until(0);
        if (static_cast<long>(clauses_.size()) >
            2 * problem_clauses_ + 8192)
          reduce_learnts();
        return 0;
      }
      int next = pick_branch();
      if (next == kUndef) {
        model_.assign(num_vars(), false);
        for (int v = 0; v < num_vars(); ++v) model_[v] = assigns_[v] == 1;
        return 1;
      }
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      enqueue(next, kUndef);
    }
  }

  static long luby(int i) {
    // Luby sequence 1,1,2,1,1,2,4,...: find the finite subsequence ending at
    // position i and return its last element.
    int k = 1;
    while ((1L << k) - 1 < i) ++k;
    while ((1L << k) - 1 != i) {
      i -= static_cast<int>((1L << (k - 1)) - 1);
      k = 1;
      while ((1L << k) - 1 < i) ++k;
    }
    return 1L << (k - 1);
  }
};

}  // namespace

std::unique_ptr<SatSolver> make_cdcl_solver() {
  return std::make_unique<CdclSolver>();
}

}  // namespace mdt
