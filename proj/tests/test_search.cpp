#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "tightsrg/graph.hpp"
#include "tightsrg/m22.hpp"
#include "tightsrg/search.hpp"

using namespace tightsrg;

namespace {

QuasiSymParams target_of(long v, long k, long lambda, long s1, long s2, long blocks) {
    QuasiSymParams q;
    q.v_tilde = v;
    q.k_tilde = k;
    q.lambda_tilde = lambda;
    q.r_tilde = Int(v - 1) * lambda / (k - 1);
    q.s1 = s1;
    q.s2 = s2;
    q.block_count = blocks;
    return q;
}

// Exhaustive multiset oracle for tiny ground sets: tries every nondecreasing
// sequence of candidate blocks, rejecting a prefix only when it already
// violates the target's defining properties (coverage caps and allowed
// intersections), and checks every finished design directly. Independent of
// the pair-driven search.
bool brute_completable(const BlockDesign& base, const QuasiSymParams& target) {
    const int vt = static_cast<int>(to_long(target.v_tilde));
    const int kt = static_cast<int>(to_long(target.k_tilde));
    const long lt = to_long(target.lambda_tilde);
    const long rt = to_long(target.r_tilde);
    std::vector<std::vector<int>> cands;
    std::vector<int> pick(kt);
    for (int i = 0; i < kt; ++i) pick[i] = i;
    while (true) {
        cands.push_back(pick);
        int i = kt - 1;
        while (i >= 0 && pick[i] == vt - kt + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < kt; ++j) pick[j] = pick[j - 1] + 1;
    }
    auto inter = [](const std::vector<int>& a, const std::vector<int>& b) {
        int c = 0;
        for (int x : a)
            for (int y : b)
                if (x == y) ++c;
        return c;
    };
    auto allowed = [&](int s) {
        return Int(s) == target.s1 || Int(s) == target.s2 || Int(s) == target.k_tilde;
    };
    const int need = static_cast<int>(to_long(target.block_count)) -
                     static_cast<int>(base.blocks.size());
    if (need < 0) return false;

    std::vector<long> cover(static_cast<size_t>(vt) * vt, 0), rep(vt, 0);
    auto add = [&](const std::vector<int>& b, long delta) {
        for (size_t i = 0; i < b.size(); ++i) {
            rep[b[i]] += delta;
            for (size_t j = i + 1; j < b.size(); ++j)
                cover[static_cast<size_t>(b[i]) * vt + b[j]] += delta;
        }
    };
    for (const auto& b : base.blocks) add(b, 1);

    std::vector<const std::vector<int>*> all_blocks;
    for (const auto& b : base.blocks) all_blocks.push_back(&b);

    std::function<bool(int)> rec = [&](int from) -> bool {
        if (static_cast<int>(all_blocks.size()) ==
            static_cast<int>(base.blocks.size()) + need) {
            BlockDesign full = base;
            for (size_t i = base.blocks.size(); i < all_blocks.size(); ++i)
                full.blocks.push_back(*all_blocks[i]);
            try {
                auto chk = check_2design(full);
                return chk.lambda_tilde == target.lambda_tilde &&
                       chk.r_tilde == target.r_tilde;
            } catch (const NotDesign&) {
                return false;
            }
        }
        for (int ci = from; ci < static_cast<int>(cands.size()); ++ci) {
            const auto& b = cands[ci];
            bool ok = true;
            for (size_t i = 0; i < b.size() && ok; ++i) {
                if (rep[b[i]] + 1 > rt) ok = false;
                for (size_t j = i + 1; j < b.size() && ok; ++j)
                    if (cover[static_cast<size_t>(b[i]) * vt + b[j]] + 1 > lt) ok = false;
            }
            for (size_t i = 0; i < all_blocks.size() && ok; ++i)
                if (!allowed(inter(*all_blocks[i], b))) ok = false;
            if (!ok) continue;
            add(b, 1);
            all_blocks.push_back(&cands[ci]);
            if (rec(ci)) return true;
            all_blocks.pop_back();
            add(b, -1);
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("petersen base completes uniquely") {
    // base = symmetric 2-(3,2,1) embedded on the 4-point ground set
    ExtensionProblem p;
    p.base = BlockDesign{4, {{1, 2}, {1, 3}, {2, 3}}};
    p.target = target_of(4, 2, 1, 0, 1, 6);
    p.max_nodes = 1000;
    auto res = extend_design(p);
    REQUIRE(res.status == ExtensionResult::Status::Found);
    REQUIRE(res.design.has_value());
    // the unique completion adds the three pairs through point 0
    BlockDesign expect{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    CHECK(*res.design == expect);
    CHECK(check_2design(*res.design).lambda_tilde == 1);
}

TEST_CASE("kneser(6,2) base completes") {
    ExtensionProblem p;
    p.base = BlockDesign{5, {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}}};
    p.target = target_of(5, 3, 3, 1, 2, 10);
    p.max_nodes = 100000;
    auto res = extend_design(p);
    REQUIRE(res.status == ExtensionResult::Status::Found);
    auto chk = check_2design(*res.design);
    CHECK(chk.r_tilde == 6);
    CHECK(chk.lambda_tilde == 3);
    for (auto& [size, count] : intersection_profile(*res.design))
        CHECK((size == 1 || size == 2));
}

TEST_CASE("infeasible target is proven infeasible") {
    // a 2-(6,3,2) design with intersections {0,1} cannot exist: the two
    // blocks through a pair would share at least that pair
    ExtensionProblem p;
    p.base = BlockDesign{6, {}};
    p.target = target_of(6, 3, 2, 0, 1, 10);
    p.max_nodes = 1000000;
    auto res = extend_design(p);
    CHECK(res.status == ExtensionResult::Status::Infeasible);
    CHECK_FALSE(brute_completable(p.base, p.target));
}

TEST_CASE("search agrees with the brute-force oracle on tiny instances") {
    struct Case {
        BlockDesign base;
        QuasiSymParams target;
    };
    std::vector<Case> cases = {
        {BlockDesign{4, {{1, 2}, {1, 3}, {2, 3}}}, target_of(4, 2, 1, 0, 1, 6)},
        {BlockDesign{4, {}}, target_of(4, 2, 1, 0, 1, 6)},
        {BlockDesign{4, {}}, target_of(4, 2, 2, 0, 1, 12)},   // doubled pairs
        {BlockDesign{6, {}}, target_of(6, 3, 2, 0, 1, 10)},   // infeasible
        {BlockDesign{5, {{0, 1, 2}}}, target_of(5, 3, 3, 1, 2, 10)},
        {BlockDesign{6, {{0, 1, 2}, {3, 4, 5}}}, target_of(6, 3, 2, 0, 3, 10)},
    };
    for (auto& c : cases) {
        ExtensionProblem p{c.base, c.target, 10000000, 0};
        auto res = extend_design(p);
        bool feasible = brute_completable(c.base, c.target);
        INFO("blocks=" << c.base.blocks.size() << " target v=" << c.target.v_tilde);
        REQUIRE(res.status != ExtensionResult::Status::BudgetExhausted);
        CHECK((res.status == ExtensionResult::Status::Found) == feasible);
        if (res.design) {
            auto chk = check_2design(*res.design);
            CHECK(chk.lambda_tilde == c.target.lambda_tilde);
        }
    }
}

TEST_CASE("invalid bases are rejected with witnesses") {
    // a pair covered more often than lambda allows
    ExtensionProblem p;
    p.base = BlockDesign{4, {{0, 1}, {0, 1}}};
    p.target = target_of(4, 2, 1, 0, 1, 6);
    p.max_nodes = 10;
    CHECK_THROWS_AS(extend_design(p), InvalidBase);

    // base blocks of the wrong size
    p.base = BlockDesign{4, {{0, 1, 2}}};
    CHECK_THROWS_AS(extend_design(p), InvalidBase);

    // base blocks meeting in a forbidden size
    p.base = BlockDesign{6, {{0, 1, 2}, {0, 1, 3}}};
    p.target = target_of(6, 3, 2, 0, 3, 10);
    CHECK_THROWS_AS(extend_design(p), InvalidBase);

    // inconsistent target bookkeeping
    p.base = BlockDesign{4, {}};
    p.target = target_of(4, 2, 1, 0, 1, 6);
    p.target.block_count = 7;
    CHECK_THROWS_AS(extend_design(p), InvalidBase);
}

TEST_CASE("m22 biplane base completes to the quasisymmetric design") {
    Graph g = m22_graph();
    auto cocliques = enumerate_delsarte_cocliques(g);
    BlockDesign quasi = extract_quasisym_design(g, cocliques[0]);

    // embed the 16 blocks coming from the second coclique on the 21 points
    std::vector<char> in_z(g.n(), 0);
    for (int v : cocliques[1].vertices) in_z[v] = 1;
    std::vector<int> index(g.n(), -1);
    for (size_t i = 0; i < cocliques[0].vertices.size(); ++i)
        index[cocliques[0].vertices[i]] = static_cast<int>(i);
    BlockDesign base{21, {}};
    int outside_pos = 0;
    for (int w = 0; w < g.n(); ++w) {
        if (index[w] >= 0) continue;
        if (in_z[w]) base.blocks.push_back(quasi.blocks[outside_pos]);
        ++outside_pos;
    }
    REQUIRE(base.blocks.size() == 16);

    ExtensionProblem p;
    p.base = base;
    p.target = target_of(21, 6, 4, 0, 2, 56);
    p.max_nodes = 100000000;  // 1e8
    auto res = extend_design(p);
    REQUIRE(res.status == ExtensionResult::Status::Found);
    auto chk = check_2design(*res.design);
    CHECK(chk.r_tilde == 16);
    CHECK(chk.lambda_tilde == 4);
    auto profile = intersection_profile(*res.design);
    for (auto& [size, count] : profile) CHECK((size == 0 || size == 2));

    SECTION("identical runs are deterministic") {
        auto res2 = extend_design(p);
        CHECK(res2.status == res.status);
        CHECK(res2.stats.nodes == res.stats.nodes);
        CHECK(res2.stats.max_depth == res.stats.max_depth);
        CHECK(*res2.design == *res.design);
    }

    SECTION("node budget is honoured") {
        p.max_nodes = 10;
        auto res3 = extend_design(p);
        CHECK(res3.status == ExtensionResult::Status::BudgetExhausted);
        CHECK_FALSE(res3.design.has_value());
    }
}
