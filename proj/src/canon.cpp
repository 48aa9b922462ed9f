#include "cpg/canon.hpp"

#include <algorithm>
#include <numeric>

#include "cpg/graph6.hpp"

namespace cpg {

namespace {

// Ordered partition of the vertex set. Cells occupy contiguous position
// ranges; cell_start[p] is the first position of the cell containing
// position p, cell_len[s] is stored at cell starts only.
struct Partition {
    int n = 0;
    std::array<uint8_t, kMaxN> pos_to_v{};
    std::array<uint8_t, kMaxN> v_to_pos{};
    std::array<uint8_t, kMaxN> cell_start{};
    std::array<uint8_t, kMaxN> cell_len{};

    bool discrete() const {
        for (int p = 0; p < n;) {
            if (cell_len[p] != 1) return false;
            ++p;
        }
        return true;
    }
};

struct Searcher {
    const Graph& g;
    int n;

    bool have_first = false;
    std::string first_cert;
    Permutation first_lab{};
    std::string best_cert;
    Permutation best_lab{};
    std::vector<Permutation> gens;

    explicit Searcher(const Graph& g_) : g(g_), n(g_.n) {}

    // Splits every non-singleton cell by neighbor counts into every cell
    // until the partition is equitable. Deterministic and label-equivariant:
    // subcells are ordered by ascending count.
    void refine(Partition& p) const {
        bool changed = true;
        std::array<int, kMaxN> cnt{};
        while (changed) {
            changed = false;
            for (int ws = 0; ws < n; ws += p.cell_len[ws]) {
                // Splitter cell: collect its membership mask.
                VertexSet wmask;
                for (int i = 0; i < p.cell_len[ws]; ++i) wmask.add(p.pos_to_v[ws + i]);
                for (int xs = 0; xs < n;) {
                    int xl = p.cell_len[xs];
                    if (xl > 1) {
                        int lo = 4, hi = -1;
                        for (int i = 0; i < xl; ++i) {
                            int v = p.pos_to_v[xs + i];
                            cnt[v] = (g.nbr[v] & wmask).count();
                            lo = std::min(lo, cnt[v]);
                            hi = std::max(hi, cnt[v]);
                        }
                        if (lo != hi) {
                            changed = true;
                            // Stable bucket sort of the cell by count.
                            std::array<uint8_t, kMaxN> tmp;
                            int out = xs;
                            for (int c = lo; c <= hi; ++c) {
                                int bucket_start = out;
                                for (int i = 0; i < xl; ++i) {
                                    int v = p.pos_to_v[xs + i];
                                    if (cnt[v] == c) tmp[out++] = static_cast<uint8_t>(v);
                                }
                                if (out > bucket_start) {
                                    p.cell_len[bucket_start] = static_cast<uint8_t>(out - bucket_start);
                                    for (int q = bucket_start; q < out; ++q)
                                        p.cell_start[q] = static_cast<uint8_t>(bucket_start);
                                }
                            }
                            for (int q = xs; q < xs + xl; ++q) {
                                p.pos_to_v[q] = tmp[q];
                                p.v_to_pos[tmp[q]] = static_cast<uint8_t>(q);
                            }
                        }
                    }
                    xs += xl;
                }
            }
        }
    }

    std::string leaf_cert(const Partition& p) const {
        // v_to_pos is the labeling; build graph6 of the relabeled graph.
        Graph h(n);
        for (int u = 0; u < n; ++u)
            for (int i = 0; i < g.deg[u]; ++i) {
                int v = g.adj[u][i];
                if (u < v) h.add_edge(p.v_to_pos[u], p.v_to_pos[v]);
            }
        return encode_graph6(h);
    }

    void record_automorphism(const Permutation& lab_a, const Permutation& lab_b) {
        // lab_a and lab_b produce identical relabeled graphs, so
        // sigma = lab_b^-1 . lab_a is an automorphism.
        Permutation inv_b{};
        for (int v = 0; v < n; ++v) inv_b[lab_b[v]] = static_cast<uint8_t>(v);
        Permutation sigma{};
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            sigma[v] = inv_b[lab_a[v]];
            if (sigma[v] != v) identity = false;
        }
        if (identity) return;
        for (const auto& gperm : gens)
            if (std::equal(gperm.begin(), gperm.begin() + n, sigma.begin())) return;
        gens.push_back(sigma);
    }

    void leaf(const Partition& p) {
        std::string cert = leaf_cert(p);
        Permutation lab{};
        std::copy(p.v_to_pos.begin(), p.v_to_pos.begin() + n, lab.begin());
        if (!have_first) {
            have_first = true;
            first_cert = cert;
            first_lab = lab;
            best_cert = cert;
            best_lab = lab;
            return;
        }
        if (cert == first_cert) record_automorphism(lab, first_lab);
        if (cert > best_cert) {
            best_cert = cert;
            best_lab = lab;
        } else if (cert == best_cert && cert != first_cert) {
            record_automorphism(lab, best_lab);
        }
    }

    // Union-find over vertices for the subgroup generated by the known
    // automorphisms that fix `prefix` pointwise.
    void prefix_orbits(const std::vector<uint8_t>& prefix, std::array<uint8_t, kMaxN>& root) const {
        for (int v = 0; v < n; ++v) root[v] = static_cast<uint8_t>(v);
        auto find = [&](int v) {
            while (root[v] != v) {
                root[v] = root[root[v]];
                v = root[v];
            }
            return v;
        };
        for (const auto& gp : gens) {
            bool fixes = true;
            for (uint8_t q : prefix)
                if (gp[q] != q) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(gp[v]);
                if (a != b) root[a] = static_cast<uint8_t>(b);
            }
        }
        for (int v = 0; v < n; ++v) root[v] = static_cast<uint8_t>(find(v));
    }

    void search(const Partition& p, std::vector<uint8_t>& prefix) {
        int ts = -1;
        for (int s = 0; s < n; s += p.cell_len[s]) {
            if (p.cell_len[s] > 1) {
                ts = s;
                break;
            }
        }
        if (ts < 0) {
            leaf(p);
            return;
        }
        int tl = p.cell_len[ts];
        std::array<uint8_t, kMaxN> members;
        for (int i = 0; i < tl; ++i) members[i] = p.pos_to_v[ts + i];

        std::vector<uint8_t> done;
        std::array<uint8_t, kMaxN> root{};
        for (int i = 0; i < tl; ++i) {
            int v = members[i];
            if (!done.empty()) {
                // Skip vertices equivalent to an explored sibling under
                // automorphisms fixing the current prefix: their subtrees
                // are mirror images with identical leaf certificates.
                prefix_orbits(prefix, root);
                bool dup = false;
                for (uint8_t u : done)
                    if (root[u] == root[v]) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
            }
            Partition q = p;
            // Individualize: v becomes a singleton cell in front of the rest.
            int vpos = q.v_to_pos[v];
            int other = q.pos_to_v[ts];
            q.pos_to_v[ts] = static_cast<uint8_t>(v);
            q.pos_to_v[vpos] = static_cast<uint8_t>(other);
            q.v_to_pos[v] = static_cast<uint8_t>(ts);
            q.v_to_pos[other] = static_cast<uint8_t>(vpos);
            q.cell_len[ts] = 1;
            q.cell_start[ts] = static_cast<uint8_t>(ts);
            q.cell_len[ts + 1] = static_cast<uint8_t>(tl - 1);
            for (int pos = ts + 1; pos < ts + tl; ++pos) q.cell_start[pos] = static_cast<uint8_t>(ts + 1);
            refine(q);
            prefix.push_back(static_cast<uint8_t>(v));
            search(q, prefix);
            prefix.pop_back();
            done.push_back(static_cast<uint8_t>(v));
        }
    }
};

}  // namespace

CanonResult canonical_form(const Graph& g, const std::vector<int>& colors) {
    assert(static_cast<int>(colors.size()) == g.n);
    Searcher s(g);
    int n = g.n;

    CanonResult out;
    if (n == 0) {
        out.cert = encode_graph6(g);
        return out;
    }

    // Initial partition: cells ordered by ascending color.
    Partition p;
    p.n = n;
    std::array<uint8_t, kMaxN> idx;
    std::iota(idx.begin(), idx.begin() + n, 0);
    std::stable_sort(idx.begin(), idx.begin() + n, [&](uint8_t a, uint8_t b) { return colors[a] < colors[b]; });
    int start = 0;
    for (int i = 0; i < n; ++i) {
        p.pos_to_v[i] = idx[i];
        p.v_to_pos[idx[i]] = static_cast<uint8_t>(i);
        if (i > 0 && colors[idx[i]] != colors[idx[i - 1]]) start = i;
        p.cell_start[i] = static_cast<uint8_t>(start);
        p.cell_len[start] = static_cast<uint8_t>(i - start + 1);
    }

    s.refine(p);
    std::vector<uint8_t> prefix;
    s.search(p, prefix);

    out.labeling = s.best_lab;
    out.cert = std::move(s.best_cert);
    out.gens = std::move(s.gens);
    return out;
}

CanonResult canonical_form(const Graph& g) {
    std::vector<int> colors(g.n);
    for (int v = 0; v < g.n; ++v) colors[v] = g.deg[v];
    return canonical_form(g, colors);
}

std::vector<int> pair_orbits(int n, const std::vector<Permutation>& gens,
                             const std::vector<std::pair<int, int>>& pairs) {
    // Union-find over all unordered pairs, closed under every generator.
    std::vector<int> root(n * n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) {
            root[x] = root[root[x]];
            x = root[x];
        }
        return x;
    };
    auto key = [&](int u, int v) { return u < v ? u * n + v : v * n + u; };
    for (const auto& gp : gens) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int a = find(key(u, v));
                int b = find(key(gp[u], gp[v]));
                if (a != b) root[a] = b;
            }
    }
    std::vector<int> ids(pairs.size());
    std::vector<int> first_of(n * n, -1);
    for (size_t i = 0; i < pairs.size(); ++i) {
        int r = find(key(pairs[i].first, pairs[i].second));
        if (first_of[r] < 0) first_of[r] = static_cast<int>(i);
        ids[i] = first_of[r];
    }
    return ids;
}

std::pair<int, int> edge_orbit_label(const CanonResult& cr, int n, Edge e) {
    // Close the edge orbit under the generators, then take the largest
    // canonical (max, min) label.
    auto key = [&](int u, int v) { return u < v ? u * n + v : v * n + u; };
    std::vector<char> seen(n * n, 0);
    std::vector<std::pair<uint8_t, uint8_t>> stack{{e.a, e.b}};
    seen[key(e.a, e.b)] = 1;
    std::pair<int, int> best{-1, -1};
    while (!stack.empty()) {
        auto [u, v] = stack.back();
        stack.pop_back();
        int cu = cr.labeling[u], cv = cr.labeling[v];
        std::pair<int, int> lab{std::max(cu, cv), std::min(cu, cv)};
        best = std::max(best, lab);
        for (const auto& gp : cr.gens) {
            int gu = gp[u], gv = gp[v];
            if (!seen[key(gu, gv)]) {
                seen[key(gu, gv)] = 1;
                stack.push_back({static_cast<uint8_t>(gu), static_cast<uint8_t>(gv)});
            }
        }
    }
    return best;
}

std::pair<int, int> edge_orbit_label(const Graph& g, Edge e) {
    CanonResult cr = canonical_form(g);
    return edge_orbit_label(cr, g.n, e);
}

namespace {

void extend_bijection(const Graph& a, const Graph& b, Permutation& map, std::array<int8_t, kMaxN>& used,
                      int v, std::vector<Permutation>* all, bool* found) {
    if (*found && all == nullptr) return;
    if (v == a.n) {
        if (all)
            all->push_back(map);
        else
            *found = true;
        return;
    }
    for (int w = 0; w < b.n; ++w) {
        if (used[w]) continue;
        if (a.deg[v] != b.deg[w]) continue;
        bool ok = true;
        for (int i = 0; i < a.deg[v] && ok; ++i) {
            int x = a.adj[v][i];
            if (x < v && !b.has_edge(map[x], w)) ok = false;
        }
        // also reject extra adjacencies in b among already-mapped vertices
        for (int x = 0; x < v && ok; ++x)
            if (b.has_edge(map[x], w) && !a.has_edge(x, v)) ok = false;
        if (!ok) continue;
        map[v] = static_cast<uint8_t>(w);
        used[w] = 1;
        extend_bijection(a, b, map, used, v + 1, all, found);
        used[w] = 0;
        if (*found && all == nullptr) return;
    }
}

}  // namespace

std::vector<Permutation> all_automorphisms_bruteforce(const Graph& g) {
    std::vector<Permutation> all;
    Permutation map{};
    std::array<int8_t, kMaxN> used{};
    bool found = false;
    extend_bijection(g, g, map, used, 0, &all, &found);
    return all;
}

bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m != b.m) return false;
    Permutation map{};
    std::array<int8_t, kMaxN> used{};
    bool found = false;
    extend_bijection(a, b, map, used, 0, nullptr, &found);
    return found;
}

}  // namespace cpg
