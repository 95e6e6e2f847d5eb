#pragma once

// Concrete graphs: dense bitset adjacency, combinatorial SRG verification,
// Delsarte-coclique certification and exhaustive enumeration, and the
// design extractions attached to cocliques. Everything here is counting;
// eigenvalue data comes from the exact parameter arithmetic, never from a
// numerical eigensolver.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tightsrg/arith.hpp"
#include "tightsrg/design.hpp"
#include "tightsrg/errors.hpp"
#include "tightsrg/srg.hpp"

namespace tightsrg {

// Simple undirected graph on n vertices; row i is the neighbour bitset of i.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

    int n() const { return n_; }
    int words() const { return words_; }

    void add_edge(int u, int v) {
        if (u == v) throw Error("no loops");
        word(u, v / 64) |= 1ull << (v % 64);
        word(v, u / 64) |= 1ull << (u % 64);
    }

    bool has_edge(int u, int v) const {
        return (word(u, v / 64) >> (v % 64)) & 1ull;
    }

    const uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }

    int degree(int u) const {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(row(u)[w]);
        return d;
    }

    int common_neighbors(int u, int v) const {
        int c = 0;
        const uint64_t *a = row(u), *b = row(v);
        for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
        return c;
    }

    long long edge_count() const {
        long long total = 0;
        for (int u = 0; u < n_; ++u) total += degree(u);
        return total / 2;
    }

    bool operator==(const Graph&) const = default;

private:
    uint64_t& word(int u, int w) { return bits_[static_cast<size_t>(u) * words_ + w]; }
    const uint64_t& word(int u, int w) const {
        return bits_[static_cast<size_t>(u) * words_ + w];
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

// Kneser graph K(n,2): vertices are the 2-subsets of {0..n-1} in
// lexicographic order, adjacent iff disjoint (the complement of the
// triangular graph T(n)).
inline Graph kneser2(int n) {
    if (n < 5) throw TooSmall("kneser2 needs n >= 5, got " + std::to_string(n));
    std::vector<std::pair<int, int>> verts;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) verts.emplace_back(i, j);
    Graph g(static_cast<int>(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b) {
            auto [i, j] = verts[a];
            auto [x, y] = verts[b];
            if (i != x && i != y && j != x && j != y)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

inline Graph petersen() { return kneser2(5); }

// The 2-subset behind vertex index i of kneser2(n).
inline std::pair<int, int> kneser2_vertex(int n, int index) {
    int i = 0, rem = index;
    while (rem >= n - 1 - i) {
        rem -= n - 1 - i;
        ++i;
    }
    return {i, i + 1 + rem};
}

// All pairs containing element e, as vertex indices of kneser2(n) — a
// Delsarte coclique of the triangular-graph complement.
inline std::vector<int> kneser2_star(int n, int e) {
    std::vector<int> out;
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if (i == e || j == e) out.push_back(idx);
    return out;
}

// Combinatorial SRG check by exhaustive common-neighbour counting.
// Throws NotRegular / NotStronglyRegular with a witness.
inline SrgParams verify_srg(const Graph& g) {
    const int n = g.n();
    if (n < 2) throw NotRegular("need at least 2 vertices");
    const int k = g.degree(0);
    for (int u = 1; u < n; ++u)
        if (g.degree(u) != k)
            throw NotRegular("vertex " + std::to_string(u) + " has degree " +
                             std::to_string(g.degree(u)) + ", expected " + std::to_string(k));
    int lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c = g.common_neighbors(u, v);
            int& slot = g.has_edge(u, v) ? lambda : mu;
            if (slot == -1) slot = c;
            else if (slot != c)
                throw NotStronglyRegular("pair (" + std::to_string(u) + "," +
                                         std::to_string(v) + ") has " + std::to_string(c) +
                                         " common neighbours, expected " +
                                         std::to_string(slot));
        }
    return SrgParams{n, k, lambda < 0 ? 0 : lambda, mu < 0 ? 0 : mu};
}

// An independent set meeting the ratio bound, together with the constant
// outside degree -e- that certifies it.
struct CocliqueCertificate {
    std::vector<int> vertices;  // sorted
    Int outside_degree;         // -e-

    bool operator==(const CocliqueCertificate&) const = default;
};

// Certifies ys as a Delsarte coclique: correct size, independent, and every
// outside vertex sees exactly -e- members. The outside-degree condition is
// equivalent to |Y|(e- - k) = v e-.
inline CocliqueCertificate verify_delsarte_coclique(const Graph& g,
                                                    std::vector<int> ys) {
    SrgParams p = verify_srg(g);
    Rat bound = hoffman_bound(p);
    if (!is_integer(bound))
        throw WrongSize("Hoffman bound " + numerator(bound).str() + "/" +
                        denominator(bound).str() + " is not an integer");
    std::sort(ys.begin(), ys.end());
    if (Int(static_cast<long>(ys.size())) != numerator(bound))
        throw WrongSize("coclique has " + std::to_string(ys.size()) +
                        " vertices, Delsarte size is " + numerator(bound).str());

    for (size_t i = 0; i < ys.size(); ++i)
        for (size_t j = i + 1; j < ys.size(); ++j)
            if (g.has_edge(ys[i], ys[j]))
                throw NotIndependent("edge (" + std::to_string(ys[i]) + "," +
                                     std::to_string(ys[j]) + ") inside the set");

    Spectrum s = spectrum_of(p);
    const Int expected = -s.e_minus;
    std::vector<char> in_set(g.n(), 0);
    for (int v : ys) in_set[v] = 1;
    for (int u = 0; u < g.n(); ++u) {
        if (in_set[u]) continue;
        Int d = 0;
        for (int v : ys)
            if (g.has_edge(u, v)) ++d;
        if (d != expected)
            throw OutsideDegreeViolated("vertex " + std::to_string(u) + " has " + d.str() +
                                        " neighbours in the set, expected " + expected.str());
    }
    return CocliqueCertificate{std::move(ys), expected};
}

namespace detail {

struct CocliqueSearch {
    const Graph& g;
    int n, words, target, cap;
    std::vector<uint64_t> avail_stack;
    std::vector<int> cnt;     // chosen-neighbour count per vertex
    std::vector<int> chosen;
    std::vector<std::vector<int>>& out;

    CocliqueSearch(const Graph& graph, int tgt, int c, std::vector<std::vector<int>>& sink)
        : g(graph), n(graph.n()), words(graph.words()), target(tgt), cap(c),
          cnt(graph.n(), 0), out(sink) {}

    int pool_size(const uint64_t* avail) const {
        int s = 0;
        for (int w = 0; w < words; ++w) s += std::popcount(avail[w]);
        return s;
    }

    // Every vertex already outside the set must still be able to reach
    // exactly `cap` chosen neighbours: cap - cnt[w] candidates adjacent to w
    // must remain available.
    bool fillable(const uint64_t* avail) const {
        for (int w = 0; w < n; ++w) {
            if ((avail[w / 64] >> (w % 64)) & 1ull) continue;
            bool is_chosen = cnt[w] == 0 && std::binary_search(chosen.begin(), chosen.end(), w);
            if (is_chosen) continue;
            int reachable = 0;
            const uint64_t* row = g.row(w);
            for (int x = 0; x < words; ++x) reachable += std::popcount(row[x] & avail[x]);
            if (cnt[w] + reachable < cap) return false;
        }
        return true;
    }

    void run(const uint64_t* avail) {
        if (static_cast<int>(chosen.size()) == target) {
            out.push_back(chosen);
            return;
        }
        if (pool_size(avail) < target - static_cast<int>(chosen.size())) return;
        std::vector<uint64_t> next(words);
        for (int w = 0; w < words; ++w) {
            uint64_t m = avail[w];
            while (m) {
                int v = w * 64 + std::countr_zero(m);
                m &= m - 1;

                bool ok = true;
                const uint64_t* row = g.row(v);
                for (int x = 0; x < words && ok; ++x) {
                    uint64_t nb = row[x];
                    while (nb) {
                        int u = x * 64 + std::countr_zero(nb);
                        nb &= nb - 1;
                        if (cnt[u] + 1 > cap) { ok = false; break; }
                    }
                }
                if (ok) {
                    for (int x = 0; x < words; ++x) next[x] = avail[x] & ~row[x];
                    // drop v and everything below it; subsets come out sorted
                    next[w] &= ~((v % 64 == 63) ? ~0ull : ((1ull << (v % 64 + 1)) - 1));
                    for (int x = 0; x < w; ++x) next[x] = 0;
                    for (int x = 0; x < words; ++x) {
                        uint64_t nb = row[x];
                        while (nb) {
                            ++cnt[x * 64 + std::countr_zero(nb)];
                            nb &= nb - 1;
                        }
                    }
                    chosen.push_back(v);
                    if (fillable(next.data())) run(next.data());
                    chosen.pop_back();
                    for (int x = 0; x < words; ++x) {
                        uint64_t nb = row[x];
                        while (nb) {
                            --cnt[x * 64 + std::countr_zero(nb)];
                            nb &= nb - 1;
                        }
                    }
                }
            }
        }
    }
};

}  // namespace detail

// Complete, duplicate-free, lexicographically sorted list of all Delsarte
// cocliques: depth-first search in index order, pruning on (i) independence,
// (ii) the -e- cap on chosen-neighbour counts, (iii) pool reachability, and
// the outside-degree completion constraint.
inline std::vector<CocliqueCertificate> enumerate_delsarte_cocliques(const Graph& g) {
    SrgParams p = verify_srg(g);
    if (!is_tight(p))
        throw NotTight("graph parameters are not tight: (" + p.v.str() + "," + p.k.str() +
                       "," + p.lambda.str() + "," + p.mu.str() + ")");
    Spectrum s = spectrum_of(p);
    const int target = static_cast<int>(to_long(s.m_minus));
    const int cap = static_cast<int>(to_long(-s.e_minus));

    std::vector<std::vector<int>> hits;
    detail::CocliqueSearch search(g, target, cap, hits);
    std::vector<uint64_t> all(g.words(), 0);
    for (int v = 0; v < g.n(); ++v) all[v / 64] |= 1ull << (v % 64);
    search.run(all.data());

    std::vector<CocliqueCertificate> out;
    out.reserve(hits.size());
    for (auto& h : hits) out.push_back(verify_delsarte_coclique(g, std::move(h)));
    return out;
}

// The quasisymmetric design blocks b_z = {y in Y : y ~ z} for z outside Y,
// over the ground set Y re-indexed 0..m- - 1 in sorted vertex order.
inline BlockDesign extract_quasisym_design(const Graph& g, const CocliqueCertificate& y) {
    std::vector<int> index(g.n(), -1);
    for (size_t i = 0; i < y.vertices.size(); ++i) index[y.vertices[i]] = static_cast<int>(i);
    BlockDesign d;
    d.point_count = static_cast<int>(y.vertices.size());
    for (int z = 0; z < g.n(); ++z) {
        if (index[z] >= 0) continue;
        std::vector<int> block;
        for (int v : y.vertices)
            if (g.has_edge(z, v)) block.push_back(index[v]);
        d.blocks.push_back(std::move(block));
    }
    return d;
}

// Symmetric design from two distinct Delsarte cocliques: blocks b_w for
// w in Z\Y over the ground set Y\Z. Verifies the constant intersection s2,
// the symmetric-design identity, |Y∩Z| = pairwise intersection, and that
// every block of the quasisymmetric design outside Z meets Y∩Z in exactly
// e+ points.
inline BlockDesign extract_symmetric_design(const Graph& g, const CocliqueCertificate& y,
                                            const CocliqueCertificate& z) {
    if (y.vertices == z.vertices) throw SameCoclique("the two cocliques are identical");
    SrgParams p = verify_srg(g);
    Spectrum s = spectrum_of(p);
    TightParams t{p, s, s.m_minus};

    std::vector<char> in_y(g.n(), 0), in_z(g.n(), 0);
    for (int v : y.vertices) in_y[v] = 1;
    for (int v : z.vertices) in_z[v] = 1;

    std::vector<int> ground;  // Y \ Z
    for (int v : y.vertices)
        if (!in_z[v]) ground.push_back(v);
    std::vector<int> index(g.n(), -1);
    for (size_t i = 0; i < ground.size(); ++i) index[ground[i]] = static_cast<int>(i);

    Int meet = 0;
    for (int v : y.vertices)
        if (in_z[v]) ++meet;
    if (Rat(meet) != pairwise_intersection(t))
        throw VerificationFailed("|Y∩Z| = " + meet.str() +
                                 " disagrees with the pairwise intersection formula");

    BlockDesign d;
    d.point_count = static_cast<int>(ground.size());
    for (int w : z.vertices) {
        if (in_y[w]) continue;
        std::vector<int> block;
        for (int v : y.vertices)
            if (g.has_edge(w, v)) {
                if (index[v] < 0)
                    throw VerificationFailed("block touches Y∩Z");  // Z is independent
                block.push_back(index[v]);
            }
        d.blocks.push_back(std::move(block));
    }

    const Int s2 = -s.e_plus * s.e_plus - s.e_minus;
    if (!lemma_symmetric_check(d, s2))
        throw VerificationFailed("extracted block family is not a symmetric design");

    // remaining quasisymmetric blocks (w outside Y∪Z) meet Y∩Z in exactly e+
    for (int w = 0; w < g.n(); ++w) {
        if (in_y[w] || in_z[w]) continue;
        Int c = 0;
        for (int v : y.vertices)
            if (in_z[v] && g.has_edge(w, v)) ++c;
        if (c != s.e_plus)
            throw VerificationFailed("vertex " + std::to_string(w) + " meets Y∩Z in " +
                                     c.str() + " points, expected " + s.e_plus.str());
    }
    return d;
}

struct InducedComplementResult {
    SrgParams params;
    bool imprimitive;  // mu' = 0 (the conclusion degenerates)
};

// Induced subgraph on the complement of a Delsarte coclique: strongly
// regular with degree k' = k + e-, mu' = e+(e- + e+) + k', lambda' =
// 2e+ + e- + mu'.
inline InducedComplementResult induced_complement_srg(const Graph& g,
                                                      const CocliqueCertificate& y) {
    SrgParams p = verify_srg(g);
    Spectrum s = spectrum_of(p);

    std::vector<char> in_y(g.n(), 0);
    for (int v : y.vertices) in_y[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!in_y[v]) keep.push_back(v);

    Graph h(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));

    SrgParams q = verify_srg(h);
    const Int k_prime = p.k + s.e_minus;
    const Int mu_prime = s.e_plus * (s.e_minus + s.e_plus) + k_prime;
    const Int lambda_prime = 2 * s.e_plus + s.e_minus + mu_prime;
    if (q.k != k_prime)
        throw VerificationFailed("induced degree " + q.k.str() + ", expected " +
                                 k_prime.str());
    if (q.mu != mu_prime || q.lambda != lambda_prime)
        throw VerificationFailed("induced parameters (" + q.lambda.str() + "," + q.mu.str() +
                                 ") differ from (" + lambda_prime.str() + "," +
                                 mu_prime.str() + ")");
    return InducedComplementResult{q, mu_prime == 0};
}

// Coclique-extension construction for the lambda = 0 family with parameters
// ((q^2+2q-1)(q^2+3q+1), q^2(q+2), 0, q^2): given all m- + 1 Delsarte
// cocliques, adjoin one vertex per coclique plus an apex to obtain an SRG
// with parameters (q^2(q+3)^2, q^3+3q^2+q, 0, q^2+q).
inline Graph lemma71_extend(const Graph& g, const std::vector<CocliqueCertificate>& cocliques) {
    SrgParams p = verify_srg(g);
    Int q_root;
    if (!is_perfect_square(p.mu, &q_root) || q_root < 1)
        throw WrongFamily("mu = " + p.mu.str() + " is not a positive square");
    const Int q = q_root;
    SrgParams expected{(q * q + 2 * q - 1) * (q * q + 3 * q + 1), q * q * (q + 2), 0, q * q};
    if (!(p == expected))
        throw WrongFamily("parameters (" + p.v.str() + "," + p.k.str() + "," +
                          p.lambda.str() + "," + p.mu.str() + ") are not of the form (" +
                          expected.v.str() + "," + expected.k.str() + ",0," +
                          expected.mu.str() + ")");

    Spectrum s = spectrum_of(p);
    const Int want = s.m_minus + 1;
    if (Int(static_cast<long>(cocliques.size())) != want)
        throw WrongCount("need m- + 1 = " + want.str() + " cocliques, got " +
                         std::to_string(cocliques.size()));
    for (size_t i = 0; i < cocliques.size(); ++i) {
        verify_delsarte_coclique(g, cocliques[i].vertices);
        for (size_t j = i + 1; j < cocliques.size(); ++j)
            if (cocliques[i].vertices == cocliques[j].vertices)
                throw WrongCount("cocliques are not distinct");
    }

    const int n = g.n();
    const int extra = static_cast<int>(cocliques.size());
    Graph ext(n + extra + 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) ext.add_edge(u, v);
    for (int c = 0; c < extra; ++c) {
        for (int v : cocliques[c].vertices) ext.add_edge(v, n + c);
        ext.add_edge(n + c, n + extra);  // apex
    }

    SrgParams r = verify_srg(ext);
    SrgParams target{q * q * (q + 3) * (q + 3), q * q * q + 3 * q * q + q, 0, q * q + q};
    if (!(r == target))
        throw SrgAssertionFailed("extended graph has parameters (" + r.v.str() + "," +
                                 r.k.str() + "," + r.lambda.str() + "," + r.mu.str() +
                                 "), expected (" + target.v.str() + "," + target.k.str() +
                                 ",0," + target.mu.str() + ")");
    return ext;
}

}  // namespace tightsrg
