#pragma once

// Exact backtracking completion of a partial block family to a full
// quasisymmetric design. Branching is pair-driven: the search always
// extends the lexicographically smallest pair with residual coverage,
// trying only candidate blocks through that pair, in canonical order.
// Constraint propagation keeps residual pair coverages and point
// replications non-negative and enforces the counting identities
//
//     sum of residual coverages  = blocks_left * C(k,2)
//     residual coverage at x     = residual replication(x) * (k-1)
//
// which prune most dead branches immediately. Infeasible is reported only
// after provably complete exhaustion; node and wall-clock budgets otherwise
// end the run with BudgetExhausted.

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tightsrg/design.hpp"
#include "tightsrg/errors.hpp"

namespace tightsrg {

struct ExtensionProblem {
    BlockDesign base;        // existing blocks, e.g. the symmetric design
    QuasiSymParams target;   // full design to reach
    uint64_t max_nodes = 0;  // 0 = unlimited
    double max_seconds = 0;  // 0 = unlimited
};

struct ExtensionStats {
    uint64_t nodes = 0;
    int max_depth = 0;
    double elapsed_seconds = 0;
};

struct ExtensionResult {
    enum class Status { Found, Infeasible, BudgetExhausted };
    Status status = Status::Infeasible;
    std::optional<BlockDesign> design;  // base + completion, blocks sorted
    ExtensionStats stats;
};

namespace detail {

// block as a <=128-point bitmask
struct Mask128 {
    std::array<uint64_t, 2> w{0, 0};

    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    int intersect_count(const Mask128& o) const {
        return std::popcount(w[0] & o.w[0]) + std::popcount(w[1] & o.w[1]);
    }
};

class ExtensionSearch {
public:
    explicit ExtensionSearch(const ExtensionProblem& problem) : p_(problem) {
        vt_ = require_small(p_.target.v_tilde, "points");
        kt_ = require_small(p_.target.k_tilde, "block size");
        lt_ = require_small(p_.target.lambda_tilde, "pair coverage");
        rt_ = require_small(p_.target.r_tilde, "replication");
        s1_ = require_small(p_.target.s1, "s1");
        s2_ = require_small(p_.target.s2, "s2");
        total_blocks_ = require_small(p_.target.block_count, "block count");
        if (vt_ < 2 || vt_ > 128) throw Error("ground set must have 2..128 points");
        if (kt_ < 2 || kt_ > vt_) throw InvalidBase("block size outside [2, points]");
        if (s1_ > s2_ || s2_ > kt_) throw InvalidBase("need s1 <= s2 <= block size");
        if (Int(rt_) * (kt_ - 1) != Int(vt_ - 1) * lt_)
            throw InvalidBase("replication identity r(k-1) = (v-1)lambda fails");
        if (Int(total_blocks_) * kt_ != Int(vt_) * rt_)
            throw InvalidBase("block count inconsistent with replication");
    }

    ExtensionResult run() {
        auto start = std::chrono::steady_clock::now();
        init_state();
        build_candidates();

        ExtensionResult result;
        Step outcome = dfs(-1, 0);
        result.stats.nodes = nodes_;
        result.stats.max_depth = max_depth_;
        result.stats.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        switch (outcome) {
            case Step::Found: {
                BlockDesign d;
                d.point_count = vt_;
                d.blocks = p_.base.blocks;
                for (int ci : solution_) d.blocks.push_back(cand_blocks_[ci]);
                std::sort(d.blocks.begin(), d.blocks.end());
                result.status = ExtensionResult::Status::Found;
                result.design = std::move(d);
                break;
            }
            case Step::Exhausted:
                result.status = ExtensionResult::Status::Infeasible;
                break;
            case Step::Budget:
                result.status = ExtensionResult::Status::BudgetExhausted;
                break;
        }
        return result;
    }

private:
    enum class Step { Found, Exhausted, Budget };

    static int require_small(const Int& x, const char* what) {
        if (x < 0 || x > 1'000'000) throw InvalidBase(std::string("unreasonable ") + what);
        return static_cast<int>(to_long(x));
    }

    bool allowed(int s) const { return s == s1_ || s == s2_ || s == kt_; }

    int pair_id(int x, int y) const { return x * vt_ + y; }  // x < y

    void init_state() {
        lam_.assign(static_cast<size_t>(vt_) * vt_, 0);
        for (int x = 0; x < vt_; ++x)
            for (int y = x + 1; y < vt_; ++y) lam_[pair_id(x, y)] = lt_;
        rep_.assign(vt_, rt_);
        pairsum_.assign(vt_, (vt_ - 1) * lt_);
        total_ = vt_ * (vt_ - 1) / 2 * lt_;
        need_ = total_blocks_ - static_cast<int>(p_.base.blocks.size());
        if (need_ < 0) throw InvalidBase("base already has more blocks than the target");

        base_masks_.clear();
        for (const auto& b : p_.base.blocks) {
            if (static_cast<int>(b.size()) != kt_)
                throw InvalidBase("base block of size " + std::to_string(b.size()) +
                                  ", target block size is " + std::to_string(kt_));
            Mask128 m;
            for (int x : b) {
                if (x < 0 || x >= vt_) throw InvalidBase("base block index out of range");
                m.set(x);
            }
            base_masks_.push_back(m);
            apply_block(b);
            for (int x : b)
                if (rep_[x] < 0)
                    throw InvalidBase("point " + std::to_string(x) +
                                      " over-replicated by the base");
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = i + 1; j < b.size(); ++j)
                    if (lam_[pair_id(b[i], b[j])] < 0)
                        throw InvalidBase("pair {" + std::to_string(b[i]) + "," +
                                          std::to_string(b[j]) +
                                          "} covered more than lambda times by the base");
        }
        for (size_t i = 0; i < base_masks_.size(); ++i)
            for (size_t j = i + 1; j < base_masks_.size(); ++j) {
                int s = base_masks_[i].intersect_count(base_masks_[j]);
                if (!allowed(s))
                    throw InvalidBase("base blocks " + std::to_string(i) + " and " +
                                      std::to_string(j) + " meet in " + std::to_string(s) +
                                      " points");
            }
    }

    // all k-subsets compatible with every base block, in lexicographic order
    void build_candidates() {
        std::vector<int> pick(kt_);
        for (int i = 0; i < kt_; ++i) pick[i] = i;
        while (true) {
            Mask128 m;
            for (int x : pick) m.set(x);
            bool ok = true;
            for (const auto& b : base_masks_)
                if (!allowed(m.intersect_count(b))) { ok = false; break; }
            if (ok) {
                int ci = static_cast<int>(cand_blocks_.size());
                cand_blocks_.push_back(pick);
                cand_masks_.push_back(m);
                for (int i = 0; i < kt_ && ok; ++i)
                    for (int j = i + 1; j < kt_; ++j)
                        pair_cands_[pair_id(pick[i], pick[j])].push_back(ci);
            }
            // next combination
            int i = kt_ - 1;
            while (i >= 0 && pick[i] == vt_ - kt_ + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < kt_; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    void apply_block(const std::vector<int>& b) {
        for (size_t i = 0; i < b.size(); ++i) {
            --rep_[b[i]];
            pairsum_[b[i]] -= kt_ - 1;
            for (size_t j = i + 1; j < b.size(); ++j) {
                --lam_[pair_id(b[i], b[j])];
                --total_;
            }
        }
    }

    void undo_block(const std::vector<int>& b) {
        for (size_t i = 0; i < b.size(); ++i) {
            ++rep_[b[i]];
            pairsum_[b[i]] += kt_ - 1;
            for (size_t j = i + 1; j < b.size(); ++j) {
                ++lam_[pair_id(b[i], b[j])];
                ++total_;
            }
        }
    }

    bool out_of_budget() {
        if (p_.max_nodes && nodes_ > p_.max_nodes) return true;
        if (p_.max_seconds > 0 && (nodes_ & 1023) == 0) {
            double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                           budget_clock_start_)
                                 .count();
            if (elapsed > p_.max_seconds) return true;
        }
        return false;
    }

    // scan_from: pairs below this id are already saturated on this path
    Step dfs(int last_pair, int scan_from) {
        ++nodes_;
        max_depth_ = std::max(max_depth_, static_cast<int>(chosen_.size()));
        if (out_of_budget()) return Step::Budget;

        int pair = -1;
        int from = scan_from;
        for (int x = from / vt_; x < vt_ && pair < 0; ++x)
            for (int y = (x == from / vt_ ? std::max(x + 1, from % vt_) : x + 1); y < vt_; ++y)
                if (lam_[pair_id(x, y)] > 0) { pair = pair_id(x, y); break; }

        if (pair < 0) {
            if (need_ != 0) return Step::Exhausted;  // all pairs covered, blocks missing
            for (int x = 0; x < vt_; ++x)
                if (rep_[x] != 0) return Step::Exhausted;
            solution_ = chosen_;
            return Step::Found;
        }
        if (need_ == 0) return Step::Exhausted;
        if (total_ != static_cast<long long>(need_) * kt_ * (kt_ - 1) / 2)
            return Step::Exhausted;

        auto it = pair_cands_.find(pair);
        if (it == pair_cands_.end()) return Step::Exhausted;
        const int lo = pair == last_pair ? min_ci_ : 0;

        for (int ci : it->second) {
            if (ci < lo) continue;
            const auto& block = cand_blocks_[ci];
            const auto& mask = cand_masks_[ci];

            bool ok = true;
            for (int cj : chosen_)
                if (!allowed(mask.intersect_count(cand_masks_[cj]))) { ok = false; break; }
            if (ok)
                for (int x : block)
                    if (rep_[x] < 1) { ok = false; break; }
            if (ok)
                for (size_t i = 0; i < block.size() && ok; ++i)
                    for (size_t j = i + 1; j < block.size(); ++j)
                        if (lam_[pair_id(block[i], block[j])] < 1) { ok = false; break; }
            if (!ok) continue;

            apply_block(block);
            bool consistent = true;
            for (int x : block)
                if (pairsum_[x] != rep_[x] * (kt_ - 1)) { consistent = false; break; }
            if (consistent) {
                chosen_.push_back(ci);
                --need_;
                int saved_min = min_ci_;
                min_ci_ = ci;
                Step r = dfs(pair, pair);
                min_ci_ = saved_min;
                ++need_;
                chosen_.pop_back();
                if (r != Step::Exhausted) {
                    undo_block(block);
                    return r;
                }
            }
            undo_block(block);
        }
        return Step::Exhausted;
    }

    ExtensionProblem p_;
    int vt_, kt_, lt_, rt_, s1_, s2_, total_blocks_;

    std::vector<int> lam_;       // residual pair coverage, indexed x*vt+y (x<y)
    std::vector<int> rep_;       // residual replication
    std::vector<int> pairsum_;   // sum of residual coverages at each point
    long long total_ = 0;        // sum of all residual coverages
    int need_ = 0;

    std::vector<Mask128> base_masks_;
    std::vector<std::vector<int>> cand_blocks_;
    std::vector<Mask128> cand_masks_;
    std::map<int, std::vector<int>> pair_cands_;

    std::vector<int> chosen_;
    std::vector<int> solution_;
    int min_ci_ = 0;
    uint64_t nodes_ = 0;
    int max_depth_ = 0;
    std::chrono::steady_clock::time_point budget_clock_start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

inline ExtensionResult extend_design(const ExtensionProblem& problem) {
    detail::ExtensionSearch search(problem);
    return search.run();
}

inline const char* to_string(ExtensionResult::Status s) {
    switch (s) {
        case ExtensionResult::Status::Found: return "found";
        case ExtensionResult::Status::Infeasible: return "infeasible";
        case ExtensionResult::Status::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

}  // namespace tightsrg
