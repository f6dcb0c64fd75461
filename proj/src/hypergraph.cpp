#include "dg/hypergraph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dg/error.hpp"

namespace dg {

Edge canonical_edge(Edge e) {
    for (auto& part : e) std::sort(part.begin(), part.end());
    std::sort(e.begin(), e.end());
    return e;
}

ABHypergraph::ABHypergraph(int vertex_count, int a, int b,
                           std::vector<Edge> edges)
    : n_(vertex_count), a_(a), b_(b) {
    if (n_ < 0 || a_ < 2 || b_ < 1)
        throw PreconditionViolation("hypergraph needs a >= 2, b >= 1");
    for (Edge& e : edges) {
        e = canonical_edge(std::move(e));
        if (static_cast<int>(e.size()) != b_)
            throw PreconditionViolation("edge has wrong part count");
        std::set<int> support;
        for (const auto& part : e) {
            if (static_cast<int>(part.size()) != a_)
                throw PreconditionViolation("edge part has wrong size");
            for (int v : part) {
                if (v < 0 || v >= n_)
                    throw PreconditionViolation("edge vertex out of range");
                if (!support.insert(v).second)
                    throw PreconditionViolation("edge parts are not disjoint");
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

bool is_valid_colouring(const ABHypergraph& h, const Colouring& colouring) {
    if (static_cast<int>(colouring.size()) != h.vertex_count())
        throw PreconditionViolation("colouring is not total on the vertices");
    for (const Edge& e : h.edges()) {
        bool all_mono = true;
        for (const auto& part : e) {
            int c0 = colouring[static_cast<std::size_t>(part[0])];
            for (int v : part)
                if (colouring[static_cast<std::size_t>(v)] != c0) {
                    all_mono = false;
                    break;
                }
            if (!all_mono) break;
        }
        if (all_mono) return false;
    }
    return true;
}

std::optional<Colouring> random_colouring_search(const ABHypergraph& h,
                                                 int colours,
                                                 std::uint64_t trials,
                                                 std::uint64_t seed) {
    if (colours < 1) throw PreconditionViolation("need at least one colour");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, colours);
    Colouring colouring(static_cast<std::size_t>(h.vertex_count()));
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (auto& c : colouring) c = pick(rng);
        if (is_valid_colouring(h, colouring)) return colouring;
    }
    return std::nullopt;
}

namespace {

// Backtracking over vertices; prunes a partial colouring as soon as some
// edge is fully coloured monochromatically in all parts.
struct ChromaSearch {
    const ABHypergraph& h;
    // edges touching each vertex, to localize the violation check
    std::vector<std::vector<int>> touching;
    Colouring colouring;

    explicit ChromaSearch(const ABHypergraph& hh)
        : h(hh), touching(static_cast<std::size_t>(hh.vertex_count())),
          colouring(static_cast<std::size_t>(hh.vertex_count()), 0) {
        for (std::size_t ei = 0; ei < h.edges().size(); ++ei)
            for (const auto& part : h.edges()[ei])
                for (int v : part)
                    touching[static_cast<std::size_t>(v)].push_back(
                        static_cast<int>(ei));
    }

    bool edge_violated(const Edge& e) const {
        for (const auto& part : e) {
            int c0 = colouring[static_cast<std::size_t>(part[0])];
            if (c0 == 0) return false;  // incomplete part: not a violation yet
            for (int v : part) {
                int c = colouring[static_cast<std::size_t>(v)];
                if (c == 0 || c != c0) goto next_part_ok;
            }
            continue;  // this part is monochromatic; check the rest
        next_part_ok:
            return false;
        }
        return true;  // every part complete and monochromatic
    }

    bool try_colour(int v, int max_colours, int used) {
        if (v == h.vertex_count()) return true;
        int limit = std::min(max_colours, used + 1);  // symmetry breaking
        for (int c = 1; c <= limit; ++c) {
            colouring[static_cast<std::size_t>(v)] = c;
            bool ok = true;
            for (int ei : touching[static_cast<std::size_t>(v)])
                if (edge_violated(h.edges()[static_cast<std::size_t>(ei)])) {
                    ok = false;
                    break;
                }
            if (ok && try_colour(v + 1, max_colours, std::max(used, c)))
                return true;
        }
        colouring[static_cast<std::size_t>(v)] = 0;
        return false;
    }
};

}  // namespace

int exact_chromatic_number(const ABHypergraph& h) {
    if (h.vertex_count() > 32)
        throw CapExceeded("exact chromatic number limited to 32 vertices");
    if (h.vertex_count() == 0) return 0;
    for (int c = 1; c <= h.vertex_count(); ++c) {
        ChromaSearch search(h);
        if (search.try_colour(0, c, 0)) return c;
    }
    return h.vertex_count();
}

Edge apply_to_edge(const Perm& g, const Edge& e) {
    Edge img = e;
    for (auto& part : img)
        for (int& v : part) v = g[v];
    return canonical_edge(std::move(img));
}

namespace {

std::vector<Edge> edge_orbit(const PermGroup& g, const Edge& seed) {
    std::set<Edge> seen{canonical_edge(seed)};
    std::vector<Edge> frontier{*seen.begin()};
    while (!frontier.empty()) {
        std::vector<Edge> next;
        for (const Edge& e : frontier)
            for (const Perm& gen : g.generators()) {
                Edge img = apply_to_edge(gen, e);
                if (seen.insert(img).second) next.push_back(std::move(img));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool parts_transitive(const std::vector<Perm>& stab, const Edge& e) {
    // orbit of part 0 under the stabilizer's action on the edge's parts
    std::set<std::vector<int>> seen{e[0]};
    std::vector<std::vector<int>> frontier{e[0]};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& part : frontier)
            for (const Perm& s : stab) {
                std::vector<int> img;
                img.reserve(part.size());
                for (int v : part) img.push_back(s[v]);
                std::sort(img.begin(), img.end());
                if (seen.insert(img).second) next.push_back(std::move(img));
            }
        frontier = std::move(next);
    }
    return seen.size() == e.size();
}

bool support_transitive(const std::vector<Perm>& stab, const Edge& e) {
    std::vector<int> support;
    for (const auto& part : e) support.insert(support.end(), part.begin(), part.end());
    std::sort(support.begin(), support.end());
    std::set<int> seen{support[0]};
    std::vector<int> frontier{support[0]};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier)
            for (const Perm& s : stab) {
                int w = s[v];
                if (seen.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    return seen.size() == support.size();
}

}  // namespace

bool is_special(const PermGroup& g, const ABHypergraph& h) {
    if (g.degree() != h.vertex_count())
        throw PreconditionViolation("group degree must match vertex count");
    if (h.edges().empty()) return false;
    std::set<Edge> edge_set(h.edges().begin(), h.edges().end());
    for (const Perm& gen : g.generators())
        for (const Edge& e : h.edges())
            if (!edge_set.count(apply_to_edge(gen, e)))
                throw ActionDoesNotPreserveEdges(
                    "a generator maps an edge outside the edge set");
    if (!is_transitive(g)) return false;
    // edge-transitive: the orbit of the first edge is everything
    if (edge_orbit(g, h.edges().front()).size() != h.edges().size())
        return false;
    // one edge suffices for the stabilizer conditions, by edge-transitivity
    const Edge& e = h.edges().front();
    std::vector<Perm> stab;
    for (const Perm& x : g.elements())
        if (apply_to_edge(x, e) == e) stab.push_back(x);
    if (!parts_transitive(stab, e)) return false;
    if (h.part_size() == 2) return true;
    return support_transitive(stab, e);
}

namespace {

// All partitions of `subset` into parts of size a, parts ordered by their
// smallest element (canonical set-partition generation).
void partitions_rec(std::vector<int> remaining, int a, Edge& acc,
                    std::vector<Edge>& out) {
    if (remaining.empty()) {
        out.push_back(acc);
        return;
    }
    int first = remaining.front();
    // choose a-1 companions for `first` from the rest
    std::vector<int> rest(remaining.begin() + 1, remaining.end());
    int k = a - 1;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k > static_cast<int>(rest.size())) return;
    while (true) {
        std::vector<int> part{first};
        for (int i : idx) part.push_back(rest[static_cast<std::size_t>(i)]);
        std::vector<int> next_remaining;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (std::find(idx.begin(), idx.end(), static_cast<int>(i)) == idx.end())
                next_remaining.push_back(rest[i]);
        acc.push_back(part);
        partitions_rec(std::move(next_remaining), a, acc, out);
        acc.pop_back();
        // next combination
        int pos = k - 1;
        while (pos >= 0 &&
               idx[static_cast<std::size_t>(pos)] ==
                   static_cast<int>(rest.size()) - k + pos)
            --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

void subsets_rec(int n, int k, int start, std::vector<int>& acc,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == k) {
        out.push_back(acc);
        return;
    }
    for (int v = start; v <= n - (k - static_cast<int>(acc.size())); ++v) {
        acc.push_back(v);
        subsets_rec(n, k, v + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<ABHypergraph> enumerate_special_hypergraphs(const PermGroup& g,
                                                        int a, int b) {
    int n = g.degree();
    if (a * b > n) return {};
    std::vector<std::vector<int>> subsets;
    std::vector<int> acc;
    subsets_rec(n, a * b, 0, acc, subsets);
    std::set<std::vector<Edge>> seen_edge_sets;
    std::vector<ABHypergraph> out;
    for (const auto& subset : subsets) {
        std::vector<Edge> seeds;
        Edge eacc;
        partitions_rec(subset, a, eacc, seeds);
        for (Edge& seed : seeds) {
            seed = canonical_edge(std::move(seed));
            std::vector<Edge> orbit = edge_orbit(g, seed);
            if (!seen_edge_sets.insert(orbit).second) continue;
            ABHypergraph h(n, a, b, orbit);
            try {
                if (is_special(g, h)) out.push_back(std::move(h));
            } catch (const ActionDoesNotPreserveEdges&) {
                // cannot happen for a full orbit; keep the guard anyway
            }
        }
    }
    return out;
}

std::optional<Edge> point_stabilizer_fixes_edge(const PermGroup& stabilizer,
                                                const ABHypergraph& h) {
    for (const Edge& e : h.edges()) {
        bool fixed = true;
        for (const Perm& s : stabilizer.elements())
            if (apply_to_edge(s, e) != e) {
                fixed = false;
                break;
            }
        if (fixed) return e;
    }
    return std::nullopt;
}

std::string serialize_hypergraph(const ABHypergraph& h) {
    std::ostringstream out;
    out << "vertices: " << h.vertex_count() << "\n";
    out << "a: " << h.part_size() << "\n";
    out << "b: " << h.part_count() << "\n";
    for (const Edge& e : h.edges()) {
        out << "edge: [";
        for (std::size_t p = 0; p < e.size(); ++p) {
            if (p) out << ",";
            out << "[";
            for (std::size_t i = 0; i < e[p].size(); ++i) {
                if (i) out << ",";
                out << e[p][i];
            }
            out << "]";
        }
        out << "]\n";
    }
    return out.str();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ABHypergraph parse_hypergraph(std::istream& in) {
    int n = -1, a = -1, b = -1;
    std::vector<Edge> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, "expected 'key: value'");
        std::string key = strip(s.substr(0, colon));
        std::string val = strip(s.substr(colon + 1));
        try {
            if (key == "vertices") n = std::stoi(val);
            else if (key == "a") a = std::stoi(val);
            else if (key == "b") b = std::stoi(val);
            else if (key == "edge") {
                Edge e;
                std::vector<int> part;
                int depth = 0;
                std::string num;
                auto flush_num = [&] {
                    if (!num.empty()) {
                        part.push_back(std::stoi(num));
                        num.clear();
                    }
                };
                for (char ch : val) {
                    if (ch == '[') {
                        ++depth;
                        if (depth == 2) part.clear();
                    } else if (ch == ']') {
                        flush_num();
                        if (depth == 2) e.push_back(part);
                        --depth;
                    } else if (ch == ',') {
                        flush_num();
                    } else if (ch >= '0' && ch <= '9') {
                        num.push_back(ch);
                    } else if (ch != ' ' && ch != '\t') {
                        throw ParseError(lineno, "bad character in edge");
                    }
                }
                if (depth != 0) throw ParseError(lineno, "unbalanced brackets");
                edges.push_back(std::move(e));
            } else {
                throw ParseError(lineno, "unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw ParseError(lineno, "bad number");
        } catch (const std::out_of_range&) {
            throw ParseError(lineno, "number out of range");
        }
    }
    if (n < 0 || a < 0 || b < 0)
        throw ParseError(lineno, "missing vertices/a/b header");
    return ABHypergraph(n, a, b, std::move(edges));
}

}  // namespace dg
