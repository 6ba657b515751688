#include "shiftlab/symbolic/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace shiftlab {

void LabeledGraph::add_edge(int from, int to, Symbol label) {
    if (from < 0 || from >= vertex_count || to < 0 || to >= vertex_count)
        throw error("edge endpoint outside graph");
    alphabet.require(label);
    edges.push_back({from, to, label});
}

std::vector<LabeledGraph::Edge> LabeledGraph::out_edges(int v) const {
    std::vector<Edge> out;
    for (const Edge& e : edges)
        if (e.from == v) out.push_back(e);
    return out;
}

bool LabeledGraph::every_vertex_extends() const {
    std::vector<int> outdeg(vertex_count, 0);
    for (const Edge& e : edges) ++outdeg[e.from];
    return std::all_of(outdeg.begin(), outdeg.end(), [](int d) { return d > 0; });
}

bool LabeledGraph::right_resolving() const {
    std::set<std::pair<int, Symbol>> seen;
    for (const Edge& e : edges)
        if (!seen.insert({e.from, e.label}).second) return false;
    return true;
}

std::vector<std::vector<int>> LabeledGraph::scc_components() const {
    // Tarjan, iterative.
    std::vector<std::vector<int>> adj(vertex_count);
    for (const Edge& e : edges) adj[e.from].push_back(e.to);
    std::vector<int> index(vertex_count, -1), low(vertex_count, 0);
    std::vector<bool> on_stack(vertex_count, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    struct Frame {
        int v;
        size_t child;
    };
    for (int root = 0; root < vertex_count; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    std::vector<int> comp;
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp.push_back(w);
                        if (w == f.v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    return comps;
}

bool LabeledGraph::strongly_connected() const {
    return vertex_count > 0 && scc_components().size() == 1;
}

std::vector<int> LabeledGraph::step(const std::vector<int>& states, Symbol a) const {
    std::set<int> next;
    for (const Edge& e : edges)
        if (e.label == a && std::binary_search(states.begin(), states.end(), e.from))
            next.insert(e.to);
    return {next.begin(), next.end()};
}

std::string LabeledGraph::vertex_name(int v) const {
    if (v < static_cast<int>(vertex_names.size()) && !vertex_names[v].empty())
        return vertex_names[v];
    return "v" + std::to_string(v);
}

std::string LabeledGraph::to_dot(const std::string& name) const {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=LR;\n";
    for (int v = 0; v < vertex_count; ++v)
        out << "  " << v << " [label=\"" << vertex_name(v) << "\"];\n";
    for (const Edge& e : edges)
        out << "  " << e.from << " -> " << e.to << " [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

namespace {

std::string subset_name(const LabeledGraph& g, const std::vector<int>& s) {
    std::string n = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) n += ",";
        n += g.vertex_name(s[i]);
    }
    return n + "}";
}

}  // namespace

LabeledGraph determinize(const LabeledGraph& g) {
    if (g.vertex_count == 0) throw error("empty graph");
    std::vector<int> top(g.vertex_count);
    for (int i = 0; i < g.vertex_count; ++i) top[i] = i;

    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    auto intern = [&](const std::vector<int>& s) {
        auto [it, fresh] = ids.emplace(s, static_cast<int>(subsets.size()));
        if (fresh) subsets.push_back(s);
        return it->second;
    };

    LabeledGraph d(g.alphabet, 0);
    intern(top);
    for (size_t i = 0; i < subsets.size(); ++i) {
        for (Symbol a = 0; a < g.alphabet.size; ++a) {
            std::vector<int> nxt = g.step(subsets[i], a);
            if (nxt.empty()) continue;
            int j = intern(nxt);
            d.edges.push_back({static_cast<int>(i), j, a});
        }
    }
    d.vertex_count = static_cast<int>(subsets.size());
    for (const auto& s : subsets) d.vertex_names.push_back(subset_name(g, s));
    return d;
}

LabeledGraph follower_merge(const LabeledGraph& g) {
    if (!g.right_resolving()) throw error("follower_merge needs a right-resolving graph");
    const int n = g.vertex_count;
    const int k = g.alphabet.size;
    // transition[v][a] = target or -1
    std::vector<std::vector<int>> tr(n, std::vector<int>(k, -1));
    for (const auto& e : g.edges) tr[e.from][e.label] = e.to;

    std::vector<int> cls(n, 0);
    int classes = 1;
    while (true) {
        // signature: class of each labeled successor (-1 for absent)
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig{cls[v]};
            for (Symbol a = 0; a < k; ++a)
                sig.push_back(tr[v][a] == -1 ? -1 : cls[tr[v][a]]);
            auto [it, fresh] = sig_ids.emplace(sig, static_cast<int>(sig_ids.size()));
            (void)fresh;
            next_cls[v] = it->second;
        }
        int next_count = static_cast<int>(sig_ids.size());
        cls = std::move(next_cls);
        if (next_count == classes) break;
        classes = next_count;
    }

    LabeledGraph m(g.alphabet, classes);
    m.vertex_names.assign(classes, "");
    for (int v = 0; v < n; ++v) {
        if (m.vertex_names[cls[v]].empty())
            m.vertex_names[cls[v]] = g.vertex_name(v);
    }
    std::set<LabeledGraph::Edge> dedup;
    for (int v = 0; v < n; ++v)
        for (Symbol a = 0; a < k; ++a)
            if (tr[v][a] != -1) dedup.insert({cls[v], cls[tr[v][a]], a});
    m.edges.assign(dedup.begin(), dedup.end());
    return m;
}

std::vector<Word> graph_language(const LabeledGraph& g, size_t n) {
    std::vector<Word> out;
    std::vector<int> all(g.vertex_count);
    for (int i = 0; i < g.vertex_count; ++i) all[i] = i;
    // depth-first over (word, survivor set)
    struct Item {
        Word w;
        std::vector<int> states;
    };
    std::vector<Item> frontier{{Word(), all}};
    for (size_t depth = 0; depth < n; ++depth) {
        std::vector<Item> next;
        for (const Item& it : frontier) {
            for (Symbol a = 0; a < g.alphabet.size; ++a) {
                std::vector<int> s = g.step(it.states, a);
                if (s.empty()) continue;
                Word w = it.w;
                w.syms.push_back(a);
                next.push_back({std::move(w), std::move(s)});
            }
        }
        frontier = std::move(next);
    }
    out.reserve(frontier.size());
    for (auto& it : frontier) out.push_back(std::move(it.w));
    std::sort(out.begin(), out.end());
    return out;
}

LabeledGraph fischer_cover(const LabeledGraph& g, size_t language_check_horizon) {
    if (!g.every_vertex_extends())
        throw error("cover has a stranded vertex (out-degree 0)");
    LabeledGraph merged = follower_merge(determinize(g));

    // Terminal components: no edge leaves the component.
    auto comps = merged.scc_components();
    std::vector<int> comp_of(merged.vertex_count, -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<bool> terminal(comps.size(), true);
    for (const auto& e : merged.edges)
        if (comp_of[e.from] != comp_of[e.to]) terminal[comp_of[e.from]] = false;

    std::vector<int> candidates;
    for (size_t c = 0; c < comps.size(); ++c)
        if (terminal[c]) candidates.push_back(static_cast<int>(c));
    if (candidates.size() != 1)
        throw error("no unique terminal component: shift is reducible (" +
                    std::to_string(candidates.size()) + " terminal components)");

    const auto& keep = comps[candidates[0]];
    std::vector<int> remap(merged.vertex_count, -1);
    LabeledGraph out(merged.alphabet, static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) {
        remap[keep[i]] = static_cast<int>(i);
        out.vertex_names.push_back(merged.vertex_name(keep[i]));
    }
    for (const auto& e : merged.edges)
        if (remap[e.from] != -1 && remap[e.to] != -1)
            out.edges.push_back({remap[e.from], remap[e.to], e.label});

    for (size_t n = 1; n <= language_check_horizon; ++n)
        if (graph_language(out, n) != graph_language(g, n))
            throw error("terminal component language deviates at length " +
                        std::to_string(n) + ": shift is reducible");
    return out;
}

LabeledGraph golden_mean_cover() {
    LabeledGraph g(Alphabet(2), 2);
    g.vertex_names = {"A", "B"};
    g.add_edge(0, 0, 0);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 0, 0);
    return g;
}

LabeledGraph even_shift_cover() {
    LabeledGraph g(Alphabet(2), 2);
    g.vertex_names = {"A", "B"};
    g.add_edge(0, 0, 1);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 0, 0);
    return g;
}

}  // namespace shiftlab
