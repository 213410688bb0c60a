#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "ncshuffle/rational.hpp"
#include "ncshuffle/word.hpp"

namespace ncs {

// Blocks are sorted index sets (1-based), pairwise disjoint, covering [n],
// listed by minimal element.
struct NoncrossingPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    bool operator==(const NoncrossingPartition&) const = default;
};

// A non-crossing partition with an increasing bijection blocks -> [|pi|]:
// labels[b] is the label of blocks[b], and nested blocks carry larger labels
// than the blocks they sit inside.
struct MonotonePartition {
    NoncrossingPartition base;
    std::vector<int> labels;

    bool operator==(const MonotonePartition&) const = default;
};

// Nesting forest: one node per block, children are the immediately nested
// blocks. Node i corresponds to base.blocks[i].
struct RootedForest {
    struct Node {
        int block = -1;
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    std::vector<int> roots;
};

enum class PartitionFamily { Nc, NcIrr, Interval, Monotone, MonotoneIrr };

inline const char* family_name(PartitionFamily f) {
    switch (f) {
        case PartitionFamily::Nc: return "nc";
        case PartitionFamily::NcIrr: return "nc_irr";
        case PartitionFamily::Interval: return "interval";
        case PartitionFamily::Monotone: return "monotone";
        case PartitionFamily::MonotoneIrr: return "monotone_irr";
    }
    return "?";
}

// Canonical encoding: block index of each position, blocks numbered by first
// appearance (a restricted growth string).
inline std::vector<int> block_vector(const NoncrossingPartition& p) {
    std::vector<int> v(p.n, -1);
    for (int b = 0; b < p.block_count(); ++b)
        for (int i : p.blocks[b]) v[i - 1] = b;
    return v;
}

inline bool is_valid_partition(const NoncrossingPartition& p) {
    if (p.n < 1) return false;
    std::vector<int> seen(p.n, 0);
    int last_min = 0;
    for (const auto& b : p.blocks) {
        if (b.empty()) return false;
        if (!std::is_sorted(b.begin(), b.end())) return false;
        if (b.front() <= last_min) return false;
        last_min = b.front();
        for (int i : b) {
            if (i < 1 || i > p.n || seen[i - 1]) return false;
            seen[i - 1] = 1;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

// Linear-time check on the block vector: scanning left to right, a block may
// only continue while it is the innermost open one.
inline bool is_noncrossing(const NoncrossingPartition& p) {
    std::vector<int> v = block_vector(p);
    if (std::any_of(v.begin(), v.end(), [](int b) { return b < 0; })) return false;
    std::vector<int> last(p.blocks.size(), 0);
    for (int i = 0; i < p.n; ++i) last[v[i]] = i;
    std::vector<int> stack;
    std::vector<char> open(p.blocks.size(), 0);
    for (int i = 0; i < p.n; ++i) {
        int b = v[i];
        if (!open[b]) {
            open[b] = 1;
            stack.push_back(b);
        } else if (stack.back() != b) {
            return false;
        }
        if (last[b] == i) stack.pop_back();
    }
    return true;
}

// Brute-force form straight from the definition (no a<b<c<d with a,c and b,d
// in two different blocks); kept as the oracle the fast check is tested
// against.
inline bool is_noncrossing_definition(const NoncrossingPartition& p) {
    std::vector<int> v = block_vector(p);
    for (int a = 0; a < p.n; ++a)
        for (int b = a + 1; b < p.n; ++b)
            for (int c = b + 1; c < p.n; ++c)
                for (int d = c + 1; d < p.n; ++d)
                    if (v[a] == v[c] && v[b] == v[d] && v[a] != v[b]) return false;
    return true;
}

inline void validate_noncrossing(const NoncrossingPartition& p) {
    if (!is_valid_partition(p)) throw error("partition: blocks do not partition [n]");
    if (!is_noncrossing(p)) throw error("partition: crossing blocks");
}

// 1 and n in the same block.
inline bool is_irreducible(const NoncrossingPartition& p) {
    return !p.blocks.empty() && p.blocks.front().back() == p.n;
}

inline int span_min(const std::vector<int>& block) { return block.front(); }
inline int span_max(const std::vector<int>& block) { return block.back(); }

// In a non-crossing partition, block B is nested inside block A exactly when
// B's span lies strictly inside A's span.
inline bool nested_inside(const std::vector<int>& inner, const std::vector<int>& outer) {
    return span_min(outer) < span_min(inner) && span_max(inner) < span_max(outer);
}

struct Classification {
    std::vector<int> outer_blocks;
    std::vector<int> inner_blocks;
    std::vector<NoncrossingPartition> components;  // reindexed to [span length]
    std::vector<std::pair<int, int>> spans;        // original [lo, hi] per component
};

inline Classification classify(const NoncrossingPartition& p) {
    validate_noncrossing(p);
    Classification out;
    for (int b = 0; b < p.block_count(); ++b) {
        bool inner = false;
        for (int a = 0; a < p.block_count() && !inner; ++a)
            inner = (a != b) && nested_inside(p.blocks[b], p.blocks[a]);
        (inner ? out.inner_blocks : out.outer_blocks).push_back(b);
    }
    int lo = 1;
    while (lo <= p.n) {
        int hi = lo;
        for (const auto& b : p.blocks)
            if (span_min(b) == lo) hi = span_max(b);
        NoncrossingPartition comp;
        comp.n = hi - lo + 1;
        for (const auto& b : p.blocks) {
            if (span_min(b) < lo || span_min(b) > hi) continue;
            std::vector<int> shifted;
            shifted.reserve(b.size());
            for (int i : b) shifted.push_back(i - lo + 1);
            comp.blocks.push_back(std::move(shifted));
        }
        out.spans.emplace_back(lo, hi);
        out.components.push_back(std::move(comp));
        lo = hi + 1;
    }
    return out;
}

inline RootedForest nesting_forest(const NoncrossingPartition& p) {
    validate_noncrossing(p);
    RootedForest f;
    f.nodes.resize(p.block_count());
    std::vector<int> parent(p.block_count(), -1);
    for (int b = 0; b < p.block_count(); ++b) {
        f.nodes[b].block = b;
        for (int a = 0; a < p.block_count(); ++a) {
            if (a == b || !nested_inside(p.blocks[b], p.blocks[a])) continue;
            // innermost enclosing block = largest span minimum
            if (parent[b] == -1 || span_min(p.blocks[a]) > span_min(p.blocks[parent[b]]))
                parent[b] = a;
        }
    }
    for (int b = 0; b < p.block_count(); ++b) {
        if (parent[b] == -1)
            f.roots.push_back(b);
        else
            f.nodes[parent[b]].children.push_back(b);
    }
    return f;
}

// t! = |t| t_1! ... t_s! per tree, multiplicative over the forest.
inline Integer tree_factorial(const RootedForest& f) {
    std::function<std::pair<Integer, int>(int)> go = [&](int node) {
        Integer fact = 1;
        int size = 1;
        for (int c : f.nodes[node].children) {
            auto [cf, cs] = go(c);
            fact *= cf;
            size += cs;
        }
        return std::pair<Integer, int>{fact * size, size};
    };
    Integer total = 1;
    for (int r : f.roots) total *= go(r).first;
    return total;
}

inline Integer tree_factorial(const NoncrossingPartition& p) {
    return tree_factorial(nesting_forest(p));
}

// m(pi) = |pi|! / t(pi)!, the number of monotone labelings of pi.
inline Integer monotone_count(const NoncrossingPartition& p) {
    Integer num = factorial(p.block_count());
    Integer den = tree_factorial(p);
    return num / den;
}

namespace detail {

// Parent index per block; relies on blocks being listed by minimal element,
// which makes the list order a topological order of the nesting forest.
inline std::vector<int> nesting_parents(const NoncrossingPartition& p) {
    std::vector<int> parent(p.block_count(), -1);
    for (int b = 0; b < p.block_count(); ++b) {
        for (int a = 0; a < p.block_count(); ++a) {
            if (a == b || !nested_inside(p.blocks[b], p.blocks[a])) continue;
            if (parent[b] == -1 || span_min(p.blocks[a]) > span_min(p.blocks[parent[b]]))
                parent[b] = a;
        }
    }
    return parent;
}

}  // namespace detail

// omega_k(pi): number of surjective maps f: blocks -> [k] that strictly
// increase along the nesting order. Plain backtracking; blocks in list order
// are already parent-before-child.
inline long long omega_k(const NoncrossingPartition& p, int k) {
    if (!is_irreducible(p)) throw error("omega: partition must be irreducible");
    if (k < 1 || k > p.block_count()) return 0;
    const std::vector<int> parent = detail::nesting_parents(p);
    const int m = p.block_count();
    std::vector<int> assigned(m, 0);
    long long count = 0;
    std::function<void(int, unsigned)> go = [&](int b, unsigned used) {
        if (b == m) {
            if (used == (1u << k) - 1) ++count;
            return;
        }
        const int lo = (parent[b] == -1) ? 1 : assigned[parent[b]] + 1;
        for (int v = lo; v <= k; ++v) {
            assigned[b] = v;
            go(b + 1, used | (1u << (v - 1)));
        }
    };
    go(0, 0);
    return count;
}

// omega(pi) = sum_{k=1}^{|pi|} (-1)^{k-1} omega_k(pi) / k.
inline Rational omega(const NoncrossingPartition& p) {
    Rational acc = 0;
    for (int k = 1; k <= p.block_count(); ++k)
        acc += make_rational((k % 2 == 1) ? omega_k(p, k) : -omega_k(p, k), k);
    acc.canonicalize();
    return acc;
}

// Subword of w at the (1-based) positions in block, in increasing order.
inline Word restrict_word(const Word& w, const std::vector<int>& block) {
    Word out;
    out.reserve(block.size());
    for (int i : block) {
        if (i < 1 || i > static_cast<int>(w.size())) throw error("restrict: index out of range");
        out.push_back(w[i - 1]);
    }
    return out;
}

namespace detail {

// Non-crossing partitions of the interval [lo, hi] by first-block recursion:
// pick the block of lo, then partition each gap between consecutive chosen
// elements independently.
inline void nc_interval(int lo, int hi, std::vector<std::vector<int>>& acc,
                        const std::function<void()>& emit) {
    if (lo > hi) {
        emit();
        return;
    }
    std::vector<int> chosen{lo};  // the block containing lo
    std::function<void(int)> choose = [&](int next) {
        if (next > hi) {
            acc.push_back(chosen);
            // every other block lives inside one gap of the chosen block
            std::function<void(std::size_t)> gaps = [&](std::size_t gi) {
                if (gi == chosen.size()) {
                    emit();
                    return;
                }
                int a = chosen[gi] + 1;
                int b = (gi + 1 < chosen.size()) ? chosen[gi + 1] - 1 : hi;
                nc_interval(a, b, acc, [&] { gaps(gi + 1); });
            };
            gaps(0);
            acc.pop_back();
            return;
        }
        choose(next + 1);
        chosen.push_back(next);
        choose(next + 1);
        chosen.pop_back();
    };
    choose(lo + 1);
}

}  // namespace detail

inline constexpr int kDefaultNcLimit = 12;
inline constexpr int kDefaultMonotoneLimit = 10;

// All non-crossing partitions of [n] in canonical order (lexicographic on the
// block-of-each-index vector).
inline std::vector<NoncrossingPartition> enumerate_nc(int n, int limit = kDefaultNcLimit) {
    if (n < 1 || n > limit)
        throw error("enumerate: n out of range for family nc (1 <= n <= " + std::to_string(limit) +
                    ")");
    std::vector<NoncrossingPartition> out;
    std::vector<std::vector<int>> acc;
    detail::nc_interval(1, n, acc, [&] {
        NoncrossingPartition p;
        p.n = n;
        p.blocks = acc;
        std::sort(p.blocks.begin(), p.blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        out.push_back(std::move(p));
    });
    std::sort(out.begin(), out.end(), [](const NoncrossingPartition& a,
                                         const NoncrossingPartition& b) {
        return block_vector(a) < block_vector(b);
    });
    return out;
}

inline std::vector<NoncrossingPartition> enumerate_nc_irr(int n, int limit = kDefaultNcLimit) {
    std::vector<NoncrossingPartition> all = enumerate_nc(n, limit);
    std::erase_if(all, [](const NoncrossingPartition& p) { return !is_irreducible(p); });
    return all;
}

inline std::vector<NoncrossingPartition> enumerate_interval(int n, int limit = kDefaultNcLimit) {
    if (n < 1 || n > limit)
        throw error("enumerate: n out of range for family interval (1 <= n <= " +
                    std::to_string(limit) + ")");
    std::vector<NoncrossingPartition> out;
    // compositions of n
    std::function<void(int, std::vector<int>&)> go = [&](int left, std::vector<int>& parts) {
        if (left == 0) {
            NoncrossingPartition p;
            p.n = n;
            int start = 1;
            for (int len : parts) {
                std::vector<int> block(len);
                for (int i = 0; i < len; ++i) block[i] = start + i;
                p.blocks.push_back(std::move(block));
                start += len;
            }
            out.push_back(std::move(p));
            return;
        }
        for (int len = 1; len <= left; ++len) {
            parts.push_back(len);
            go(left - len, parts);
            parts.pop_back();
        }
    };
    std::vector<int> parts;
    go(n, parts);
    std::sort(out.begin(), out.end(), [](const NoncrossingPartition& a,
                                         const NoncrossingPartition& b) {
        return block_vector(a) < block_vector(b);
    });
    return out;
}

// Monotone labelings of a fixed base partition: linear extensions of the
// nesting forest, generated by picking the block of each successive label
// among the currently available ones in block-list order.
inline void for_each_labeling(const NoncrossingPartition& p,
                              const std::function<void(const std::vector<int>&)>& visit) {
    const std::vector<int> parent = detail::nesting_parents(p);
    const int m = p.block_count();
    std::vector<int> labels(m, 0);
    std::function<void(int)> go = [&](int next_label) {
        if (next_label > m) {
            visit(labels);
            return;
        }
        for (int b = 0; b < m; ++b) {
            if (labels[b] != 0) continue;
            if (parent[b] != -1 && labels[parent[b]] == 0) continue;
            labels[b] = next_label;
            go(next_label + 1);
            labels[b] = 0;
        }
    };
    go(1);
}

inline void for_each_monotone(int n, bool irreducible_only,
                              const std::function<void(const MonotonePartition&)>& visit,
                              int limit = kDefaultMonotoneLimit) {
    if (n < 1 || n > limit)
        throw error("enumerate: n out of range for family " +
                    std::string(irreducible_only ? "monotone_irr" : "monotone") + " (1 <= n <= " +
                    std::to_string(limit) + ")");
    for (const NoncrossingPartition& p : enumerate_nc(n, limit)) {
        if (irreducible_only && !is_irreducible(p)) continue;
        for_each_labeling(p, [&](const std::vector<int>& labels) {
            visit(MonotonePartition{p, labels});
        });
    }
}

inline std::vector<MonotonePartition> enumerate_monotone(int n, bool irreducible_only,
                                                         int limit = kDefaultMonotoneLimit) {
    std::vector<MonotonePartition> out;
    std::size_t base_start = 0;
    NoncrossingPartition current_base;
    auto flush = [&] {
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(base_start), out.end(),
                  [](const MonotonePartition& a, const MonotonePartition& b) {
                      return a.labels < b.labels;
                  });
    };
    for_each_monotone(n, irreducible_only,
                      [&](const MonotonePartition& mp) {
                          if (!out.empty() && !(mp.base == current_base)) {
                              flush();
                              base_start = out.size();
                          }
                          current_base = mp.base;
                          out.push_back(mp);
                      },
                      limit);
    if (!out.empty()) flush();
    return out;
}

// Test oracle: every set partition of [n] via restricted growth strings,
// optionally filtered to the non-crossing ones.
inline std::vector<NoncrossingPartition> set_partitions_oracle(int n, bool noncrossing_only) {
    if (n < 1) throw error("set_partitions_oracle: n must be >= 1");
    std::vector<NoncrossingPartition> out;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> go = [&](int i, int max_used) {
        if (i == n) {
            NoncrossingPartition p;
            p.n = n;
            p.blocks.assign(max_used + 1, {});
            for (int j = 0; j < n; ++j) p.blocks[rgs[j]].push_back(j + 1);
            if (!noncrossing_only || is_noncrossing_definition(p)) out.push_back(std::move(p));
            return;
        }
        for (int v = 0; v <= max_used + 1; ++v) {
            rgs[i] = v;
            go(i + 1, std::max(max_used, v));
        }
    };
    rgs[0] = 0;
    go(1, 0);
    return out;
}

}  // namespace ncs
