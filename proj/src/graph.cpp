// Colored labeled graphs: parsing, built-in families, twin reduction, line
// graph recognition by forbidden induced subgraphs and by constructive edge
// clique partition, and structure isomorphism for tests.

#include "qclifford/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qclifford/errors.hpp"

namespace qcl {

namespace {

constexpr int kMaxVertices = 4096;

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-'))
            return false;
    return true;
}

} // namespace

int ColoredGraph::add_vertex(const std::string& name, bool is_black, const Rational& label) {
    if (!valid_name(name)) throw input_error("bad vertex name: '" + name + "'");
    if (index_of(name) >= 0) throw input_error("duplicate vertex: '" + name + "'");
    if (n() >= kMaxVertices) throw input_error("too many vertices (cap 4096)");
    if (label == 0) throw input_error("vertex label must be nonzero: '" + name + "'");
    names.push_back(name);
    black.push_back(is_black);
    labels.push_back(label);
    const int nn = n();
    for (BitVec& row : adj) {
        BitVec grown(nn);
        for (int b : row.bits()) grown.set(b);
        row = std::move(grown);
    }
    adj.push_back(BitVec(nn));
    return nn - 1;
}

void ColoredGraph::add_edge(int i, int j) {
    if (i == j) throw input_error("self loop on vertex '" + names[i] + "'");
    adj[i].set(j);
    adj[j].set(i);
}

ColoredGraph ColoredGraph::induced(const std::vector<int>& verts) const {
    ColoredGraph out;
    const int k = int(verts.size());
    out.names.reserve(k);
    for (int v : verts) {
        out.names.push_back(names[v]);
        out.black.push_back(black[v]);
        out.labels.push_back(labels[v]);
    }
    out.adj.assign(k, BitVec(k));
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (edge(verts[a], verts[b])) out.add_edge(a, b);
    return out;
}

ColoredGraph parse_graph(std::istream& in) {
    ColoredGraph g;
    std::string line;
    int lineno = 0;
    std::vector<std::pair<std::string, std::string>> pending_edges;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        const std::string at = " (line " + std::to_string(lineno) + ")";
        if (kind == "vertex") {
            std::string name, color, label_text;
            if (!(ls >> name >> color)) throw input_error("vertex needs NAME and COLOR" + at);
            bool is_black;
            if (color == "black")
                is_black = true;
            else if (color == "white")
                is_black = false;
            else
                throw input_error("color must be black or white" + at);
            Rational label = 1;
            if (ls >> label_text) label = parse_rational(label_text);
            std::string extra;
            if (ls >> extra) throw input_error("trailing tokens after vertex" + at);
            g.add_vertex(name, is_black, label);
        } else if (kind == "edge") {
            std::string a, b;
            if (!(ls >> a >> b)) throw input_error("edge needs two vertex names" + at);
            std::string extra;
            if (ls >> extra) throw input_error("trailing tokens after edge" + at);
            pending_edges.emplace_back(a, b);
        } else {
            throw input_error("unknown directive '" + kind + "'" + at);
        }
    }
    if (g.n() == 0) throw input_error("graph has no vertices");
    for (const auto& [a, b] : pending_edges) {
        const int i = g.index_of(a), j = g.index_of(b);
        if (i < 0) throw input_error("edge references unknown vertex '" + a + "'");
        if (j < 0) throw input_error("edge references unknown vertex '" + b + "'");
        g.add_edge(i, j);
    }
    return g;
}

ColoredGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return parse_graph(in);
}

namespace {

int parse_count(const std::string& text, const std::string& what) {
    int value = 0;
    const auto* begin = text.data();
    const auto* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || value < 0)
        throw input_error("bad " + what + " in family spec: '" + text + "'");
    return value;
}

ColoredGraph blank_family(int n, int white_prefix = 0) {
    if (n < 1) throw input_error("family needs at least one vertex");
    if (n > kMaxVertices) throw input_error("family too large (cap 4096)");
    ColoredGraph g;
    g.names.reserve(n);
    for (int i = 0; i < n; ++i) {
        g.names.push_back("v" + std::to_string(i + 1));
        g.black.push_back(i >= white_prefix);
        g.labels.push_back(1);
    }
    g.adj.assign(n, BitVec(n));
    return g;
}

} // namespace

ColoredGraph family_graph(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) throw input_error("family spec needs ':': '" + spec + "'");
    const std::string fam = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);

    if (fam == "Cl") {
        const std::size_t comma = args.find(',');
        if (comma == std::string::npos) throw input_error("Cl spec needs p,q: '" + spec + "'");
        const int p = parse_count(args.substr(0, comma), "p");
        const int q = parse_count(args.substr(comma + 1), "q");
        if (p + q < 1) throw input_error("Cl:p,q needs p+q >= 1");
        ColoredGraph g = blank_family(p + q, p);
        for (int i = 0; i < g.n(); ++i)
            for (int j = i + 1; j < g.n(); ++j) g.add_edge(i, j);
        return g;
    }

    const int n = parse_count(args, "vertex count");
    if (fam == "A") {
        ColoredGraph g = blank_family(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    if (fam == "D") {
        if (n < 4) throw input_error("D:n needs n >= 4");
        ColoredGraph g = blank_family(n);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        for (int i = 2; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    if (fam == "E") {
        if (n < 6) throw input_error("E:n needs n >= 6");
        ColoredGraph g = blank_family(n);
        g.add_edge(0, 2); // chain v1-v3-v4-...-vn, branch v2-v4
        g.add_edge(1, 3);
        for (int i = 2; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    if (fam == "K") {
        ColoredGraph g = blank_family(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }
    throw input_error("unknown family '" + fam + "'");
}

std::string graph_json(const ColoredGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (int i = 0; i < g.n(); ++i)
        j["vertices"].push_back({{"name", g.names[i]},
                                 {"color", g.black[i] ? "black" : "white"},
                                 {"label", rational_str(g.labels[i])}});
    j["edges"] = nlohmann::json::array();
    for (int i = 0; i < g.n(); ++i)
        for (int k = i + 1; k < g.n(); ++k)
            if (g.edge(i, k)) j["edges"].push_back({g.names[i], g.names[k]});
    return j.dump(2) + "\n";
}

bool is_connected(const ColoredGraph& g) {
    if (g.n() == 0) return false;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[v].bits()) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.n();
}

QuadSpace build_space(const ColoredGraph& g) {
    QuadSpace s(g.n());
    for (int i = 0; i < g.n(); ++i) {
        BitVec row = g.adj[i];
        for (int j = 0; j <= i; ++j) row.clear(j);
        if (g.black[i]) row.set(i);
        s.gram[i] = std::move(row);
    }
    return s;
}

ReductionReport reduce_graph(const ColoredGraph& g) {
    ReductionReport rep;
    rep.class_of.assign(g.n(), -1);
    std::map<std::vector<std::uint64_t>, int> seen;
    std::vector<int> reps;
    for (int i = 0; i < g.n(); ++i) {
        auto [it, fresh] = seen.try_emplace(g.adj[i].w, int(reps.size()));
        if (fresh) {
            reps.push_back(i);
            rep.classes.push_back({});
        }
        rep.class_of[i] = it->second;
        rep.classes[it->second].push_back(i);
    }
    rep.reduced = g.induced(reps);
    return rep;
}

namespace {

ColoredGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    ColoredGraph g = blank_family(n);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
}

} // namespace

const std::vector<ColoredGraph>& line_graph_obstructions() {
    static const std::vector<ColoredGraph> nine = [] {
        std::vector<ColoredGraph> v;
        v.push_back(graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}})); // the claw
        v.push_back(graph_from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}));
        v.push_back(graph_from_edges(
            5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
        v.push_back(graph_from_edges(6, {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}));
        v.push_back(graph_from_edges(
            6, {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
        v.push_back(graph_from_edges(
            6, {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}}));
        v.push_back(
            graph_from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}}));
        v.push_back(graph_from_edges(6, {{0, 1},
                                         {0, 2},
                                         {0, 3},
                                         {0, 4},
                                         {0, 5},
                                         {1, 2},
                                         {1, 3},
                                         {1, 4},
                                         {1, 5},
                                         {2, 5},
                                         {3, 4}}));
        v.push_back(graph_from_edges(
            6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}}));
        return v;
    }();
    return nine;
}

namespace {

// Backtracking induced-subgraph search. Pattern vertices are matched in an
// order where each (after the first in its component) touches an already
// matched vertex, so candidates come from mapped neighborhoods.
struct InducedSearch {
    const ColoredGraph& host;
    const ColoredGraph& pat;
    std::vector<int> order;
    std::vector<int> image;     // pattern index -> host index (-1 unset)
    std::vector<char> used;

    InducedSearch(const ColoredGraph& h, const ColoredGraph& p) : host(h), pat(p) {
        const int k = pat.n();
        std::vector<char> placed(k, 0);
        for (int step = 0; step < k; ++step) {
            int best = -1, best_score = -1;
            for (int v = 0; v < k; ++v) {
                if (placed[v]) continue;
                int score = 0;
                for (int u = 0; u < k; ++u)
                    if (placed[u] && pat.edge(u, v)) ++score;
                score = score * 64 + pat.adj[v].popcount();
                if (score > best_score) {
                    best_score = score;
                    best = v;
                }
            }
            order.push_back(best);
            placed[best] = 1;
        }
        image.assign(k, -1);
        used.assign(host.n(), 0);
    }

    bool extend(std::size_t step) {
        if (step == order.size()) return true;
        const int p = order[step];
        for (int cand = 0; cand < host.n(); ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (std::size_t s = 0; s < step && ok; ++s) {
                const int q = order[s];
                ok = pat.edge(p, q) == host.edge(cand, image[q]);
            }
            if (!ok) continue;
            image[p] = cand;
            used[cand] = 1;
            if (extend(step + 1)) return true;
            used[cand] = 0;
            image[p] = -1;
        }
        return false;
    }
};

} // namespace

bool has_induced_subgraph(const ColoredGraph& host, const ColoredGraph& pattern) {
    if (pattern.n() > host.n()) return false;
    InducedSearch search(host, pattern);
    return search.extend(0);
}

bool is_line_graph_by_obstructions(const ColoredGraph& g) {
    for (const ColoredGraph& bad : line_graph_obstructions())
        if (has_induced_subgraph(g, bad)) return false;
    return true;
}

namespace {

// Edge clique partition search: cover every edge by exactly one clique with
// every vertex in at most two cliques. Candidate cliques through the lowest
// uncovered edge are tried largest first, lexicographically within a size.
struct KrauszSearch {
    const ColoredGraph& g;
    int n;
    std::vector<std::uint64_t> adj;       // mask form (cap 64 vertices)
    std::vector<std::uint64_t> covered;   // covered[v] bit w: edge (v,w) covered
    std::vector<int> cnt;                 // cliques containing v
    std::vector<std::vector<int>> cliques;
    long long budget = 5'000'000;

    explicit KrauszSearch(const ColoredGraph& graph) : g(graph), n(graph.n()) {
        adj.assign(n, 0);
        for (int v = 0; v < n; ++v) adj[v] = graph.adj[v].low_mask();
        covered.assign(n, 0);
        cnt.assign(n, 0);
    }

    void spend() {
        if (--budget < 0) throw input_error("line graph recognition exceeded its search budget");
    }

    bool solve() {
        spend();
        int u = -1, v = -1;
        for (int a = 0; a < n; ++a) {
            const std::uint64_t open = adj[a] & ~covered[a];
            if (open) {
                u = a;
                v = std::countr_zero(open);
                break;
            }
        }
        if (u < 0) return true; // every edge covered
        if (cnt[u] == 2 || cnt[v] == 2) return false;

        std::vector<int> ext;
        const std::uint64_t both = adj[u] & adj[v] & ~covered[u] & ~covered[v];
        for (int w = 0; w < n; ++w)
            if (((both >> w) & 1) && cnt[w] < 2) ext.push_back(w);

        const int m = int(ext.size());
        std::vector<int> pick;
        for (int size = m; size >= 0; --size) {
            pick.assign(size, 0);
            if (!try_combinations(u, v, ext, size, 0, 0, pick)) continue;
            return true;
        }
        return false;
    }

    // Enumerate size-`size` subsets of ext (lexicographic) that extend {u,v}
    // to a clique with all internal edges uncovered; recurse on each.
    bool try_combinations(int u, int v, const std::vector<int>& ext, int size, int from, int got,
                          std::vector<int>& pick) {
        if (got == size) return apply_and_recurse(u, v, pick);
        for (int i = from; i <= int(ext.size()) - (size - got); ++i) {
            spend();
            const int w = ext[i];
            bool ok = true;
            for (int s = 0; s < got && ok; ++s) {
                const int x = pick[s];
                ok = ((adj[w] >> x) & 1) && !((covered[w] >> x) & 1);
            }
            if (!ok) continue;
            pick[got] = w;
            if (try_combinations(u, v, ext, size, i + 1, got + 1, pick)) return true;
        }
        return false;
    }

    bool apply_and_recurse(int u, int v, const std::vector<int>& pick) {
        std::vector<int> clique{u, v};
        clique.insert(clique.end(), pick.begin(), pick.end());
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b) {
                covered[clique[a]] |= std::uint64_t(1) << clique[b];
                covered[clique[b]] |= std::uint64_t(1) << clique[a];
            }
        for (int c : clique) ++cnt[c];
        cliques.push_back(clique);
        if (solve()) return true;
        cliques.pop_back();
        for (int c : clique) --cnt[c];
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b) {
                covered[clique[a]] &= ~(std::uint64_t(1) << clique[b]);
                covered[clique[b]] &= ~(std::uint64_t(1) << clique[a]);
            }
        return false;
    }
};

} // namespace

RootReport line_graph_root(const ColoredGraph& g) {
    if (g.n() > 64) throw input_error("line graph root construction capped at 64 vertices");
    if (!is_connected(g)) throw connectivity_error("line graph root needs a connected graph");
    RootReport rep;
    if (g.n() == 1) {
        // K_1 = L(K_2).
        rep.is_line_graph = true;
        rep.root = graph_from_edges(2, {{0, 1}});
        return rep;
    }
    if (g.n() == 3 && g.edge(0, 1) && g.edge(0, 2) && g.edge(1, 2)) {
        // The triangle is the one graph with two roots (itself and the
        // 3-star); the identification convention picks the triangle.
        rep.is_line_graph = true;
        rep.root = graph_from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
        return rep;
    }
    KrauszSearch search(g);
    if (!search.solve()) return rep;
    rep.is_line_graph = true;

    // Root: one vertex per clique, plus pendant vertices so that every
    // g-vertex (a root edge) has two endpoints. Two cliques share at most one
    // g-vertex, so no parallel edges arise.
    const int k = int(search.cliques.size());
    std::vector<std::vector<int>> endpoint(g.n());
    for (int c = 0; c < k; ++c)
        for (int v : search.cliques[c]) endpoint[v].push_back(c);
    int extra = k;
    std::vector<std::pair<int, int>> root_edges;
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> ends = endpoint[v];
        while (ends.size() < 2) ends.push_back(extra++);
        root_edges.emplace_back(ends[0], ends[1]);
    }
    rep.root = graph_from_edges(extra, root_edges);
    return rep;
}

ColoredGraph line_graph(const ColoredGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.edge(i, j)) edges.emplace_back(i, j);
    ColoredGraph lg;
    const int m = int(edges.size());
    if (m == 0) throw input_error("line graph of an edgeless graph is empty");
    for (int e = 0; e < m; ++e) {
        lg.names.push_back(g.names[edges[e].first] + "-" + g.names[edges[e].second]);
        lg.black.push_back(true);
        lg.labels.push_back(1);
    }
    lg.adj.assign(m, BitVec(m));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto& [p, q] = edges[a];
            const auto& [r, s] = edges[b];
            if (p == r || p == s || q == r || q == s) lg.add_edge(a, b);
        }
    return lg;
}

namespace {

// Iterated neighborhood-color refinement; returns stable colors. New ids are
// assigned by signature rank, not encounter order, so the coloring is
// invariant under vertex renumbering (two isomorphic graphs always end up
// with the same color multiset).
std::vector<int> wl_colors(const ColoredGraph& g) {
    std::vector<int> color(g.n(), 0);
    for (int i = 0; i < g.n(); ++i) color[i] = g.adj[i].popcount();
    for (int round = 0; round < g.n(); ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(g.n());
        for (int v = 0; v < g.n(); ++v) {
            std::vector<int> around;
            for (int w : g.adj[v].bits()) around.push_back(color[w]);
            std::sort(around.begin(), around.end());
            sig[v] = {color[v], std::move(around)};
        }
        std::map<std::pair<int, std::vector<int>>, int> palette;
        for (const auto& s : sig) palette.emplace(s, 0);
        int id = 0;
        for (auto& entry : palette) entry.second = id++;
        std::vector<int> next(g.n());
        for (int v = 0; v < g.n(); ++v) next[v] = palette.at(sig[v]);
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

} // namespace

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.n() != b.n()) return false;
    int ea = 0, eb = 0;
    for (int i = 0; i < a.n(); ++i) ea += a.adj[i].popcount();
    for (int i = 0; i < b.n(); ++i) eb += b.adj[i].popcount();
    if (ea != eb) return false;

    const std::vector<int> ca = wl_colors(a), cb = wl_colors(b);
    std::vector<int> sa(ca), sb(cb);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    // Match rarest colors first.
    std::map<int, int> freq;
    for (int c : ca) ++freq[c];
    std::vector<int> order(a.n());
    for (int i = 0; i < a.n(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (freq[ca[x]] != freq[ca[y]]) return freq[ca[x]] < freq[ca[y]];
        return x < y;
    });

    std::vector<int> image(a.n(), -1);
    std::vector<char> used(b.n(), 0);
    auto extend = [&](auto&& self, std::size_t step) -> bool {
        if (step == order.size()) return true;
        const int v = order[step];
        for (int cand = 0; cand < b.n(); ++cand) {
            if (used[cand] || cb[cand] != ca[v]) continue;
            bool ok = true;
            for (std::size_t s = 0; s < step && ok; ++s) {
                const int u = order[s];
                ok = a.edge(v, u) == b.edge(cand, image[u]);
            }
            if (!ok) continue;
            image[v] = cand;
            used[cand] = 1;
            if (self(self, step + 1)) return true;
            used[cand] = 0;
            image[v] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

std::optional<std::vector<int>> find_minus6_subgraph(const ColoredGraph& g) {
    if (g.n() < 6) return std::nullopt;
    if (g.n() > 24) throw input_error("minus-type subgraph search capped at 24 vertices");
    std::vector<int> pick(6);
    for (int i = 0; i < 6; ++i) pick[i] = i;
    const QuadClass target{6, 0, QType::MINUS};
    for (;;) {
        if (classify_quadratic(build_space(g.induced(pick))) == target) return pick;
        // next lexicographic 6-combination
        int i = 5;
        while (i >= 0 && pick[i] == g.n() - 6 + i) --i;
        if (i < 0) return std::nullopt;
        ++pick[i];
        for (int j = i + 1; j < 6; ++j) pick[j] = pick[j - 1] + 1;
    }
}

} // namespace qcl
