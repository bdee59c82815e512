#include "metrics/compute.hpp"

#include "support/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace ckmet::metrics {

namespace {

using model::CodeGraph;

// Methods that belong to a class's method set for counting purposes:
// locally declared, never synthetic initializer bodies, constructors only
// when the option asks for them, optionally public only.
std::vector<std::int32_t> counted_methods(const CodeGraph& g, std::int32_t c,
                                          const MetricsOptions& o, bool public_only) {
    std::vector<std::int32_t> out;
    for (std::int32_t mi : g.classes[static_cast<std::size_t>(c)].methods) {
        const auto& m = g.methods[static_cast<std::size_t>(mi)];
        if (m.is_synthetic) continue;
        if (m.is_constructor && !o.constructors_count) continue;
        if (public_only && !m.is_public) continue;
        out.push_back(mi);
    }
    return out;
}

// Accessed fields of method m that are declared by `owner`, sorted.
std::vector<std::int32_t> own_fields_of(const CodeGraph& g, std::int32_t m,
                                        std::int32_t owner) {
    std::vector<std::int32_t> out;
    for (std::int32_t fi : g.methods[static_cast<std::size_t>(m)].accessed_fields)
        if (g.fields[static_cast<std::size_t>(fi)].owner == owner) out.push_back(fi);
    return out;
}

bool shares_any(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

void require_corpus(const CodeGraph& g, std::int32_t c) {
    if (!g.is_corpus(c)) raise_internal("metric requested for a non-corpus class");
}

struct UseSets {
    std::vector<std::vector<std::int32_t>> out; // classes whose members c uses
    std::vector<std::vector<std::int32_t>> in;  // classes using members of c
};

// Member-use edges only: a resolved call or field access whose target is
// declared by another corpus class. Type usages and inheritance stay out.
UseSets build_use_sets(const CodeGraph& g) {
    UseSets u;
    u.out.resize(g.classes.size());
    u.in.resize(g.classes.size());
    for (std::size_t ci = 0; ci < g.classes.size(); ++ci) {
        const auto& cls = g.classes[ci];
        if (cls.is_external) continue;
        auto self = static_cast<std::int32_t>(ci);
        auto& uses = u.out[ci];
        for (std::int32_t mi : cls.methods) {
            const auto& m = g.methods[static_cast<std::size_t>(mi)];
            for (std::int32_t t : m.invoked_methods) {
                std::int32_t owner = g.methods[static_cast<std::size_t>(t)].owner;
                if (owner != self && g.is_corpus(owner)) uses.push_back(owner);
            }
            for (std::int32_t fi : m.accessed_fields) {
                std::int32_t owner = g.fields[static_cast<std::size_t>(fi)].owner;
                if (owner != self && g.is_corpus(owner)) uses.push_back(owner);
            }
        }
        std::sort(uses.begin(), uses.end());
        uses.erase(std::unique(uses.begin(), uses.end()), uses.end());
    }
    for (std::size_t ci = 0; ci < g.classes.size(); ++ci)
        for (std::int32_t d : u.out[ci]) u.in[static_cast<std::size_t>(d)].push_back(static_cast<std::int32_t>(ci));
    return u;
}

long long cbo_from_sets(const UseSets& u, std::int32_t c, const MetricsOptions& o) {
    const auto& out = u.out[static_cast<std::size_t>(c)];
    if (!o.cbo_bidirectional) return static_cast<long long>(out.size());
    std::vector<std::int32_t> both = out;
    const auto& in = u.in[static_cast<std::size_t>(c)];
    both.insert(both.end(), in.begin(), in.end());
    std::sort(both.begin(), both.end());
    both.erase(std::unique(both.begin(), both.end()), both.end());
    return static_cast<long long>(both.size());
}

// Corpus supertypes reached over one extends/implements edge, deduplicated.
std::vector<std::int32_t> corpus_parents(const CodeGraph& g, std::int32_t c) {
    std::vector<std::int32_t> parents;
    const auto& cls = g.classes[static_cast<std::size_t>(c)];
    if (g.is_corpus(cls.super_class)) parents.push_back(cls.super_class);
    for (std::int32_t i : cls.interfaces)
        if (g.is_corpus(i)) parents.push_back(i);
    std::sort(parents.begin(), parents.end());
    parents.erase(std::unique(parents.begin(), parents.end()), parents.end());
    return parents;
}

// Longest corpus inheritance path. Cycles are rejected upstream; a defensive
// guard treats a revisited node as a root rather than recursing forever.
long long dit_value(const CodeGraph& g, std::int32_t c, std::vector<std::int32_t>& memo,
                    std::vector<std::int8_t>& state) {
    auto idx = static_cast<std::size_t>(c);
    if (state[idx] == 2) return memo[idx];
    if (state[idx] == 1) return 0;
    state[idx] = 1;
    long long depth = 0;
    for (std::int32_t p : corpus_parents(g, c))
        depth = std::max(depth, 1 + dit_value(g, p, memo, state));
    state[idx] = 2;
    memo[idx] = static_cast<std::int32_t>(depth);
    return depth;
}

std::vector<std::int32_t> noc_counts(const CodeGraph& g) {
    std::vector<std::int32_t> counts(g.classes.size(), 0);
    for (std::size_t ci = 0; ci < g.classes.size(); ++ci) {
        if (g.classes[ci].is_external) continue;
        for (std::int32_t p : corpus_parents(g, static_cast<std::int32_t>(ci)))
            ++counts[static_cast<std::size_t>(p)];
    }
    return counts;
}

// c plus every corpus class reachable over extends/implements edges.
std::unordered_set<std::int32_t> corpus_ancestry(const CodeGraph& g, std::int32_t c) {
    std::unordered_set<std::int32_t> seen;
    std::vector<std::int32_t> stack{c};
    seen.insert(c);
    while (!stack.empty()) {
        std::int32_t cur = stack.back();
        stack.pop_back();
        for (std::int32_t p : corpus_parents(g, cur))
            if (seen.insert(p).second) stack.push_back(p);
    }
    return seen;
}

} // namespace

long long cbo(const CodeGraph& g, std::int32_t c, const MetricsOptions& o) {
    require_corpus(g, c);
    UseSets u = build_use_sets(g);
    return cbo_from_sets(u, c, o);
}

long long dac(const CodeGraph& g, std::int32_t c) {
    require_corpus(g, c);
    const auto& cls = g.classes[static_cast<std::size_t>(c)];
    std::vector<std::int32_t> types;
    for (std::int32_t fi : cls.fields) {
        std::int32_t t = g.fields[static_cast<std::size_t>(fi)].declared_type;
        if (t != c && g.is_corpus(t)) types.push_back(t);
    }
    for (std::int32_t t : cls.used_types)
        if (t != c && g.is_corpus(t)) types.push_back(t);
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    return static_cast<long long>(types.size());
}

long long mpc(const CodeGraph& g, std::int32_t c, const MetricsOptions& o) {
    require_corpus(g, c);
    long long sites = 0;
    std::unordered_set<std::int32_t> distinct;
    for (std::int32_t mi : g.classes[static_cast<std::size_t>(c)].methods) {
        for (std::int32_t t : g.methods[static_cast<std::size_t>(mi)].invoked_methods) {
            const auto& target = g.methods[static_cast<std::size_t>(t)];
            if (target.is_external || target.owner == c) continue;
            if (o.mpc_count_sites)
                ++sites;
            else
                distinct.insert(t);
        }
    }
    return o.mpc_count_sites ? sites : static_cast<long long>(distinct.size());
}

long long dit(const CodeGraph& g, std::int32_t c) {
    require_corpus(g, c);
    std::vector<std::int32_t> memo(g.classes.size(), 0);
    std::vector<std::int8_t> state(g.classes.size(), 0);
    return dit_value(g, c, memo, state);
}

long long noc(const CodeGraph& g, std::int32_t c) {
    require_corpus(g, c);
    return noc_counts(g)[static_cast<std::size_t>(c)];
}

long long lcom(const CodeGraph& g, std::int32_t c, const MetricsOptions& o) {
    require_corpus(g, c);
    auto ms = counted_methods(g, c, o, false);
    std::vector<std::vector<std::int32_t>> fields(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) fields[i] = own_fields_of(g, ms[i], c);
    long long p = 0;
    long long q = 0;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            (shares_any(fields[i], fields[j]) ? q : p) += 1;
    return p > q ? p - q : 0;
}

long long ilcom(const CodeGraph& g, std::int32_t c, const MetricsOptions& o) {
    require_corpus(g, c);
    auto ms = counted_methods(g, c, o, false);
    if (ms.empty()) return 1;
    std::vector<std::vector<std::int32_t>> fields(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) fields[i] = own_fields_of(g, ms[i], c);

    std::vector<std::size_t> parent(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

    auto calls = [&](std::size_t i, std::size_t j) {
        const auto& inv = g.methods[static_cast<std::size_t>(ms[i])].invoked_methods;
        return std::find(inv.begin(), inv.end(), ms[j]) != inv.end();
    };
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (shares_any(fields[i], fields[j]) || calls(i, j) || calls(j, i)) unite(i, j);

    std::unordered_set<std::size_t> roots;
    for (std::size_t i = 0; i < ms.size(); ++i) roots.insert(find(i));
    return static_cast<long long>(roots.size());
}

double tcc(const CodeGraph& g, std::int32_t c, const MetricsOptions& o) {
    require_corpus(g, c);
    auto ms = counted_methods(g, c, o, true);
    std::size_t p = ms.size();
    if (p < 2) return 0.0;
    std::vector<std::vector<std::int32_t>> fields(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) fields[i] = own_fields_of(g, ms[i], c);
    long long connected = 0;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (shares_any(fields[i], fields[j])) ++connected;
    return static_cast<double>(connected) /
           (static_cast<double>(p) * static_cast<double>(p - 1) / 2.0);
}

double ld(const CodeGraph& g, std::int32_t c) {
    require_corpus(g, c);
    std::unordered_set<std::int32_t> accessed;
    for (std::int32_t mi : g.classes[static_cast<std::size_t>(c)].methods)
        for (std::int32_t fi : g.methods[static_cast<std::size_t>(mi)].accessed_fields)
            accessed.insert(fi);
    if (accessed.empty()) return 0.0;
    auto local_owners = corpus_ancestry(g, c);
    long long local = 0;
    for (std::int32_t fi : accessed)
        if (local_owners.count(g.fields[static_cast<std::size_t>(fi)].owner)) ++local;
    return static_cast<double>(local) / static_cast<double>(accessed.size());
}

long long nom(const CodeGraph& g, std::int32_t c, const MetricsOptions& o) {
    require_corpus(g, c);
    return static_cast<long long>(counted_methods(g, c, o, false).size());
}

long long nam(const CodeGraph& g, std::int32_t c, const MetricsOptions& o) {
    require_corpus(g, c);
    return nom(g, c, o) +
           static_cast<long long>(g.classes[static_cast<std::size_t>(c)].fields.size());
}

long long rfc(const CodeGraph& g, std::int32_t c, const MetricsOptions& o) {
    require_corpus(g, c);
    std::unordered_set<std::int32_t> responses;
    for (std::int32_t mi : counted_methods(g, c, o, false)) responses.insert(mi);
    std::vector<std::int32_t> frontier;
    for (std::int32_t mi : g.classes[static_cast<std::size_t>(c)].methods)
        for (std::int32_t t : g.methods[static_cast<std::size_t>(mi)].invoked_methods)
            if (responses.insert(t).second) frontier.push_back(t);
    if (!o.rfc_one_level) {
        while (!frontier.empty()) {
            std::int32_t cur = frontier.back();
            frontier.pop_back();
            const auto& m = g.methods[static_cast<std::size_t>(cur)];
            if (m.is_external) continue;
            for (std::int32_t t : m.invoked_methods)
                if (responses.insert(t).second) frontier.push_back(t);
        }
    }
    return static_cast<long long>(responses.size());
}

long long wmc(const CodeGraph& g, std::int32_t c) {
    require_corpus(g, c);
    long long total = 0;
    for (std::int32_t mi : g.classes[static_cast<std::size_t>(c)].methods)
        total += g.methods[static_cast<std::size_t>(mi)].cyclomatic_complexity;
    return total;
}

long long len(const CodeGraph& g, std::int32_t c) {
    require_corpus(g, c);
    return static_cast<long long>(g.classes[static_cast<std::size_t>(c)].simple_name.size());
}

double lod(const CodeGraph& g, std::int32_t c, const MetricsOptions& o) {
    require_corpus(g, c);
    auto ms = counted_methods(g, c, o, false);
    long long expected = 1 + static_cast<long long>(ms.size());
    long long present = g.classes[static_cast<std::size_t>(c)].has_comment ? 1 : 0;
    for (std::int32_t mi : ms)
        if (g.methods[static_cast<std::size_t>(mi)].has_comment) ++present;
    double v = static_cast<double>(expected - present) / static_cast<double>(expected);
    return std::clamp(v, 0.0, 1.0);
}

std::vector<ClassMetricsRecord> compute_all(const CodeGraph& g, const MetricsOptions& o) {
    static const struct {
        int loc = metric_index("loc");
        int cbo = metric_index("cbo");
        int dac = metric_index("dac");
        int dit = metric_index("dit");
        int ilcom = metric_index("ilcom");
        int lcom = metric_index("lcom");
        int ld = metric_index("ld");
        int len = metric_index("len");
        int lod = metric_index("lod");
        int mpc = metric_index("mpc");
        int nam = metric_index("nam");
        int noc = metric_index("noc");
        int nom = metric_index("nom");
        int rfc = metric_index("rfc");
        int tcc = metric_index("tcc");
        int wmc = metric_index("wmc");
    } col;

    std::vector<std::int32_t> order;
    for (std::size_t ci = 0; ci < g.classes.size(); ++ci)
        if (!g.classes[ci].is_external) order.push_back(static_cast<std::int32_t>(ci));
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        return g.classes[static_cast<std::size_t>(a)].qualified_name <
               g.classes[static_cast<std::size_t>(b)].qualified_name;
    });

    UseSets uses = build_use_sets(g);
    std::vector<std::int32_t> dit_memo(g.classes.size(), 0);
    std::vector<std::int8_t> dit_state(g.classes.size(), 0);
    std::vector<std::int32_t> children = noc_counts(g);

    std::vector<ClassMetricsRecord> records;
    records.reserve(order.size());
    for (std::int32_t c : order) {
        ClassMetricsRecord r;
        r.version_id = g.version_id;
        r.class_name = g.classes[static_cast<std::size_t>(c)].qualified_name;
        long long loc_value = std::max<std::int64_t>(1, count_effective_loc(g, c));
        r.value(static_cast<std::size_t>(col.loc)) = static_cast<double>(loc_value);
        r.value(static_cast<std::size_t>(col.cbo)) =
            static_cast<double>(cbo_from_sets(uses, c, o));
        r.value(static_cast<std::size_t>(col.dac)) = static_cast<double>(dac(g, c));
        r.value(static_cast<std::size_t>(col.dit)) =
            static_cast<double>(dit_value(g, c, dit_memo, dit_state));
        r.value(static_cast<std::size_t>(col.ilcom)) = static_cast<double>(ilcom(g, c, o));
        r.value(static_cast<std::size_t>(col.lcom)) = static_cast<double>(lcom(g, c, o));
        r.value(static_cast<std::size_t>(col.ld)) = ld(g, c);
        r.value(static_cast<std::size_t>(col.len)) = static_cast<double>(len(g, c));
        r.value(static_cast<std::size_t>(col.lod)) = lod(g, c, o);
        r.value(static_cast<std::size_t>(col.mpc)) = static_cast<double>(mpc(g, c, o));
        r.value(static_cast<std::size_t>(col.nam)) = static_cast<double>(nam(g, c, o));
        r.value(static_cast<std::size_t>(col.noc)) =
            static_cast<double>(children[static_cast<std::size_t>(c)]);
        r.value(static_cast<std::size_t>(col.nom)) = static_cast<double>(nom(g, c, o));
        r.value(static_cast<std::size_t>(col.rfc)) = static_cast<double>(rfc(g, c, o));
        r.value(static_cast<std::size_t>(col.tcc)) = tcc(g, c, o);
        r.value(static_cast<std::size_t>(col.wmc)) = static_cast<double>(wmc(g, c));
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace ckmet::metrics
