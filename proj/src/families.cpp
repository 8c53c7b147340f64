#include "wedge/families.hpp"

#include <algorithm>
#include <cctype>
#include <array>
#include <stdexcept>

namespace wedge {

namespace {

const std::array<std::pair<FamilyId, const char*>, 25> kNames = {{
    {FamilyId::COMPLETE, "complete"},
    {FamilyId::BICLIQUE, "biclique"},
    {FamilyId::STAR, "star"},
    {FamilyId::CYCLE, "cycle"},
    {FamilyId::PATH, "path"},
    {FamilyId::GSTAR, "gstar"},
    {FamilyId::HSTAR, "hstar"},
    {FamilyId::H1, "h1"},
    {FamilyId::H2, "h2"},
    {FamilyId::H3, "h3"},
    {FamilyId::F11, "f11"},
    {FamilyId::F12, "f12"},
    {FamilyId::F21, "f21"},
    {FamilyId::F22, "f22"},
    {FamilyId::F3, "f3"},
    {FamilyId::F4, "f4"},
    {FamilyId::G11, "g11"},
    {FamilyId::G12, "g12"},
    {FamilyId::G21, "g21"},
    {FamilyId::G22, "g22"},
    {FamilyId::G23, "g23"},
    {FamilyId::G31, "g31"},
    {FamilyId::G32, "g32"},
    {FamilyId::BLOWUP, "blowup"},
    {FamilyId::PRODUCT, "product"},
}};

int param(const FamilySpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw std::invalid_argument(family_name(spec.family_id) +
                                    ": missing parameter '" + key + "'");
    return it->second;
}

void require(bool ok, const std::string& constraint) {
    if (!ok) throw std::invalid_argument("constraint violated: " + constraint);
}

void expect_keys(const FamilySpec& spec, const std::vector<std::string>& keys) {
    for (const auto& [key, value] : spec.params)
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw std::invalid_argument(family_name(spec.family_id) +
                                        ": unknown parameter '" + key + "'");
    for (const std::string& key : keys) param(spec, key);
}

Graph k4_variant(int leaves, bool remove_edge) {
    Graph g(4 + leaves);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    if (remove_edge) g.remove_edge(0, 1);
    for (int i = 0; i < leaves; ++i) g.add_edge(0, 4 + i);
    return g;
}

// Shared constraint shape of the blow-up definitions: a-1 >= b >= 1 and
// a-1 >= c >= 1, reported with the caller's parameter names.
void check_bounds(int a, int b, int c, const std::string& an,
                  const std::string& bn, const std::string& cn) {
    require(a - 1 >= b, an + "-1 >= " + bn);
    require(b >= 1, bn + " >= 1");
    require(a - 1 >= c, an + "-1 >= " + cn);
    require(c >= 1, cn + " >= 1");
}

void check_nrs(int n, int r, int s) { check_bounds(n, r, s, "n", "r", "s"); }

}  // namespace

Graph gstar() {
    return from_edge_list(
        11, {{0, 1}, {0, 4}, {0, 9}, {1, 2}, {1, 10}, {2, 3}, {2, 7}, {3, 4},
             {3, 6}, {4, 5}, {4, 8}, {5, 6}, {6, 7}, {8, 9}, {9, 10}});
}

Graph hstar() { return blowup(gstar(), {1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0}); }

Graph standard(FamilyId kind, const std::vector<int>& sizes) {
    auto arity = [&](std::size_t want) {
        if (sizes.size() != want)
            throw std::invalid_argument(family_name(kind) + ": expected " +
                                        std::to_string(want) + " size(s)");
    };
    switch (kind) {
        case FamilyId::COMPLETE: {
            arity(1);
            int n = sizes[0];
            require(n >= 1, "n >= 1");
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            return g;
        }
        case FamilyId::BICLIQUE: {
            arity(2);
            int r = sizes[0], s = sizes[1];
            require(r >= 1 && s >= 1, "r >= 1, s >= 1");
            Graph g(r + s);
            for (int u = 0; u < r; ++u)
                for (int v = 0; v < s; ++v) g.add_edge(u, r + v);
            return g;
        }
        case FamilyId::STAR: {
            arity(1);
            int n = sizes[0];
            require(n >= 1, "n >= 1");
            Graph g(n + 1);
            for (int v = 1; v <= n; ++v) g.add_edge(0, v);
            return g;
        }
        case FamilyId::CYCLE: {
            arity(1);
            int n = sizes[0];
            require(n >= 3, "n >= 3");
            Graph g(n);
            for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
            return g;
        }
        case FamilyId::PATH: {
            arity(1);
            int n = sizes[0];
            require(n >= 1, "n >= 1");
            Graph g(n);
            for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            return g;
        }
        default:
            throw std::invalid_argument("standard: not a standard family");
    }
}

Graph build(const FamilySpec& spec) {
    switch (spec.family_id) {
        case FamilyId::COMPLETE:
            expect_keys(spec, {"n"});
            return standard(FamilyId::COMPLETE, {param(spec, "n")});
        case FamilyId::BICLIQUE:
            expect_keys(spec, {"r", "s"});
            return standard(FamilyId::BICLIQUE,
                            {param(spec, "r"), param(spec, "s")});
        case FamilyId::STAR:
            expect_keys(spec, {"n"});
            return standard(FamilyId::STAR, {param(spec, "n")});
        case FamilyId::CYCLE:
            expect_keys(spec, {"n"});
            return standard(FamilyId::CYCLE, {param(spec, "n")});
        case FamilyId::PATH:
            expect_keys(spec, {"n"});
            return standard(FamilyId::PATH, {param(spec, "n")});
        case FamilyId::GSTAR:
            expect_keys(spec, {});
            return gstar();
        case FamilyId::HSTAR:
            expect_keys(spec, {});
            return hstar();
        case FamilyId::H1: {
            expect_keys(spec, {"leaves"});
            int leaves = param(spec, "leaves");
            require(leaves >= 1, "leaves >= 1");
            return k4_variant(leaves, false);
        }
        case FamilyId::H2: {
            expect_keys(spec, {"leaves"});
            int leaves = param(spec, "leaves");
            require(leaves >= 1, "leaves >= 1");
            return k4_variant(leaves, true);
        }
        case FamilyId::H3: {
            expect_keys(spec, {});
            Graph g(5);
            for (int u = 0; u < 4; ++u)
                for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
            g.remove_edge(0, 1);
            g.add_edge(4, 0);  // a degree-2 vertex of K4 - e
            g.add_edge(4, 2);  // a degree-3 vertex
            return g;
        }
        case FamilyId::F11: {
            expect_keys(spec, {"n"});
            int n = param(spec, "n");
            require(n >= 1, "n >= 1");
            return blowup(gstar(), {1, 1, 1, 1, 1, n, n, 0, 0, 0, 0});
        }
        case FamilyId::F12: {
            expect_keys(spec, {"n"});
            int n = param(spec, "n");
            require(n >= 1, "n >= 1");
            return blowup(gstar(), {1, 1, 1, 0, 1, n + 1, n + 1, 1, 0, 0, 0});
        }
        case FamilyId::F21: {
            expect_keys(spec, {"n", "r", "s"});
            int n = param(spec, "n"), r = param(spec, "r"), s = param(spec, "s");
            check_nrs(n, r, s);
            require(n >= r + s, "n >= r+s");
            return blowup(gstar(), {1, 1, 1, n - r - s + 1, 1, r, n, s, 0, 0, 0});
        }
        case FamilyId::F22: {
            expect_keys(spec, {"n", "r", "s"});
            int n = param(spec, "n"), r = param(spec, "r"), s = param(spec, "s");
            check_nrs(n, r, s);
            require(n >= r + s, "n >= r+s");
            return blowup(gstar(),
                          {1, 1, 1, n - r - s, 1, r + 1, n + 1, s + 1, 0, 0, 0});
        }
        case FamilyId::F3: {
            expect_keys(spec, {"n", "r", "s"});
            int n = param(spec, "n"), r = param(spec, "r"), s = param(spec, "s");
            check_nrs(n, r, s);
            return blowup(gstar(),
                          {1, 1, r + 1, s + 1, 1, 0, n - s, n - r, 0, 0, 0});
        }
        case FamilyId::F4: {
            expect_keys(spec, {"n", "r", "s"});
            int n = param(spec, "n"), r = param(spec, "r"), s = param(spec, "s");
            check_nrs(n, r, s);
            require(n >= r + s, "n >= r+s");
            return blowup(gstar(),
                          {r + 1, n + 1, s + 1, 1, 1, 0, 0, 0, 0, 0, n - r - s});
        }
        case FamilyId::G11: {
            expect_keys(spec, {"m", "n"});
            int m = param(spec, "m"), n = param(spec, "n");
            require(n >= 1, "n >= 1");
            require(m >= 1, "m >= 1");
            return blowup(gstar(),
                          {m + 1, m + 1, 1, 0, 1, 1, n + 1, n + 1, 0, 0, 0});
        }
        case FamilyId::G12: {
            expect_keys(spec, {"m", "n", "r", "s"});
            int m = param(spec, "m"), n = param(spec, "n"), r = param(spec, "r"),
                s = param(spec, "s");
            require(m >= 1, "m >= 1");
            check_nrs(n, r, s);
            require(n >= r + s, "n >= r+s");
            return blowup(gstar(), {m + 1, m + 1, 1, n - r - s, 1, r + 1, n + 1,
                                    s + 1, 0, 0, 0});
        }
        case FamilyId::G21: {
            expect_keys(spec, {"m", "n", "r", "s"});
            int m = param(spec, "m"), n = param(spec, "n"), r = param(spec, "r"),
                s = param(spec, "s");
            require(m >= 1, "m >= 1");
            check_nrs(n, r, s);
            require(n >= r + s, "n >= r+s");
            return blowup(gstar(),
                          {1, 1, 1, n - r - s + 1, 1, r, n, s, 0, m, m});
        }
        case FamilyId::G22: {
            expect_keys(spec, {"m", "n", "r", "s"});
            int m = param(spec, "m"), n = param(spec, "n"), r = param(spec, "r"),
                s = param(spec, "s");
            require(m >= 1, "m >= 1");
            check_nrs(n, r, s);
            return blowup(gstar(),
                          {1, 1, r + 1, s + 1, 1, 0, n - s, n - r, 0, m, m});
        }
        case FamilyId::G23: {
            expect_keys(spec, {"m", "n", "r", "s"});
            int m = param(spec, "m"), n = param(spec, "n"), r = param(spec, "r"),
                s = param(spec, "s");
            require(m >= 1, "m >= 1");
            check_nrs(n, r, s);
            require(n >= r + s, "n >= r+s");
            return blowup(gstar(),
                          {r + 1, n + 1, s + 1, 1, 1, m, m, 0, 0, 0, n - r - s});
        }
        case FamilyId::G31: {
            expect_keys(spec, {"k", "l", "m", "n", "r", "s"});
            int k = param(spec, "k"), l = param(spec, "l"), m = param(spec, "m"),
                n = param(spec, "n"), r = param(spec, "r"), s = param(spec, "s");
            check_nrs(n, r, s);
            require(n >= r + s, "n >= r+s");
            check_bounds(m, l, k, "m", "l", "k");
            require(m >= k + l, "m >= k+l");
            return blowup(gstar(), {m - k - l + 1, 1, 1, n - r - s + 1, 1, r, n,
                                    s, l, m, k});
        }
        case FamilyId::G32: {
            expect_keys(spec, {"k", "l", "m", "n", "r", "s"});
            int k = param(spec, "k"), l = param(spec, "l"), m = param(spec, "m"),
                n = param(spec, "n"), r = param(spec, "r"), s = param(spec, "s");
            check_nrs(n, r, s);
            require(n >= r + s, "n >= r+s");
            check_bounds(m, l, k, "m", "l", "k");
            require(m >= k + l, "m >= k+l");
            return blowup(gstar(), {k + 1, l + 1, 1, n - r - s + 1, 1, r, n, s,
                                    0, m - l, m - k});
        }
        case FamilyId::BLOWUP: {
            std::vector<int> mults(11);
            std::vector<std::string> keys;
            for (int i = 1; i <= 11; ++i) keys.push_back("m" + std::to_string(i));
            expect_keys(spec, keys);
            for (int i = 0; i < 11; ++i) {
                mults[i] = param(spec, keys[i]);
                require(mults[i] >= 0, keys[i] + " >= 0");
            }
            return blowup(gstar(), mults);
        }
        case FamilyId::PRODUCT: {
            expect_keys(spec, {"p", "q"});
            int p = param(spec, "p"), q = param(spec, "q");
            require(p >= 1 && q >= 1, "product: p, q >= 1");
            return cartesian_product(standard(FamilyId::COMPLETE, {p}),
                                     standard(FamilyId::COMPLETE, {q}));
        }
    }
    throw std::invalid_argument("build: unknown family");
}

namespace {

FamilySpec make(FamilyId id, std::initializer_list<std::pair<const char*, int>> kv) {
    FamilySpec spec{id, {}};
    for (const auto& [key, value] : kv) spec.params.emplace(key, value);
    return spec;
}

}  // namespace

std::vector<FamilySpec> parameter_grid(FamilyId id, int max_order) {
    if (max_order < 1) throw std::invalid_argument("parameter_grid: max_order >= 1");
    std::vector<FamilySpec> out;
    auto nrs_grid = [&](int order_base, bool need_sum) {
        // order = order_base + 2n for every (r, s)
        for (int n = 2; order_base + 2 * n <= max_order; ++n)
            for (int r = 1; r <= n - 1; ++r)
                for (int s = 1; s <= n - 1; ++s) {
                    if (need_sum && n < r + s) continue;
                    out.push_back(make(id, {{"n", n}, {"r", r}, {"s", s}}));
                }
    };
    switch (id) {
        case FamilyId::COMPLETE:
        case FamilyId::PATH:
            for (int n = 1; n <= max_order; ++n)
                out.push_back(make(id, {{"n", n}}));
            break;
        case FamilyId::CYCLE:
            for (int n = 3; n <= max_order; ++n)
                out.push_back(make(id, {{"n", n}}));
            break;
        case FamilyId::STAR:
            for (int n = 1; n + 1 <= max_order; ++n)
                out.push_back(make(id, {{"n", n}}));
            break;
        case FamilyId::BICLIQUE:
            for (int r = 1; r < max_order; ++r)
                for (int s = 1; r + s <= max_order; ++s)
                    out.push_back(make(id, {{"r", r}, {"s", s}}));
            break;
        case FamilyId::GSTAR:
            if (max_order >= 11) out.push_back(make(id, {}));
            break;
        case FamilyId::HSTAR:
            if (max_order >= 7) out.push_back(make(id, {}));
            break;
        case FamilyId::H1:
        case FamilyId::H2:
            for (int leaves = 1; 4 + leaves <= max_order; ++leaves)
                out.push_back(make(id, {{"leaves", leaves}}));
            break;
        case FamilyId::H3:
            if (max_order >= 5) out.push_back(make(id, {}));
            break;
        case FamilyId::F11:
            for (int n = 1; 5 + 2 * n <= max_order; ++n)
                out.push_back(make(id, {{"n", n}}));
            break;
        case FamilyId::F12:
            for (int n = 1; 7 + 2 * n <= max_order; ++n)
                out.push_back(make(id, {{"n", n}}));
            break;
        case FamilyId::F21:
            nrs_grid(5, true);
            break;
        case FamilyId::F22:
            nrs_grid(7, true);
            break;
        case FamilyId::F3:
            nrs_grid(5, false);
            break;
        case FamilyId::F4:
            nrs_grid(5, true);
            break;
        case FamilyId::G11:
            for (int m = 1; 2 * m + 9 <= max_order; ++m)
                for (int n = 1; 2 * m + 2 * n + 7 <= max_order; ++n)
                    out.push_back(make(id, {{"m", m}, {"n", n}}));
            break;
        case FamilyId::G12:
        case FamilyId::G21:
        case FamilyId::G22:
        case FamilyId::G23: {
            int base = id == FamilyId::G12 ? 7 : 5;  // order is 2m + 2n + base
            bool need_sum = id != FamilyId::G22;
            for (int m = 1; 2 * m + base + 4 <= max_order; ++m)
                for (int n = 2; 2 * m + 2 * n + base <= max_order; ++n)
                    for (int r = 1; r <= n - 1; ++r)
                        for (int s = 1; s <= n - 1; ++s) {
                            if (need_sum && n < r + s) continue;
                            out.push_back(make(
                                id, {{"m", m}, {"n", n}, {"r", r}, {"s", s}}));
                        }
            break;
        }
        case FamilyId::G31:
        case FamilyId::G32:
            // order = 2m + 2n + 5 with m, n >= 2
            for (int k = 1; k + 1 <= max_order; ++k)
                for (int l = 1; l + 1 <= max_order; ++l)
                    for (int m = k + l; 2 * m + 9 <= max_order; ++m) {
                        if (m - 1 < k || m - 1 < l) continue;
                        for (int n = 2; 2 * m + 2 * n + 5 <= max_order; ++n)
                            for (int r = 1; r <= n - 1; ++r)
                                for (int s = 1; s <= n - 1; ++s) {
                                    if (n < r + s) continue;
                                    out.push_back(make(id, {{"k", k},
                                                            {"l", l},
                                                            {"m", m},
                                                            {"n", n},
                                                            {"r", r},
                                                            {"s", s}}));
                                }
                    }
            break;
        case FamilyId::BLOWUP:
        case FamilyId::PRODUCT:
            throw std::invalid_argument("parameter_grid: not defined for " +
                                        family_name(id));
    }
    std::sort(out.begin(), out.end(), [](const FamilySpec& a, const FamilySpec& b) {
        return a.params < b.params;
    });
    return out;
}

std::string family_name(FamilyId id) {
    for (const auto& [fid, name] : kNames)
        if (fid == id) return name;
    return "?";
}

std::optional<FamilyId> family_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (const auto& [fid, fname] : kNames)
        if (lower == fname) return fid;
    return std::nullopt;
}

std::vector<FamilyId> all_family_ids() {
    std::vector<FamilyId> out;
    for (const auto& [fid, name] : kNames) out.push_back(fid);
    return out;
}

}  // namespace wedge
