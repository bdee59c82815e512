#pragma once

#include "metrics/records.hpp"
#include "model/graph.hpp"

#include <vector>

namespace ckmet::metrics {

// Definitional choices whose originals are unpublished; defaults are the
// documented decisions. These are library-level probes for sensitivity
// analysis, deliberately not exposed on the command line.
struct MetricsOptions {
    bool cbo_bidirectional = true;   // false: count outgoing uses only
    bool mpc_count_sites = true;     // false: distinct foreign target methods
    bool rfc_one_level = true;       // false: transitive closure over corpus calls
    bool constructors_count = false; // true: constructors join the method set of
                                     // NOM/NAM/LCOM/ILCOM/TCC/LOD
};

// All operations require a resolved graph and a non-external class index.
long long cbo(const model::CodeGraph& g, std::int32_t c, const MetricsOptions& o = {});
long long dac(const model::CodeGraph& g, std::int32_t c);
long long mpc(const model::CodeGraph& g, std::int32_t c, const MetricsOptions& o = {});
long long dit(const model::CodeGraph& g, std::int32_t c);
long long noc(const model::CodeGraph& g, std::int32_t c);
long long lcom(const model::CodeGraph& g, std::int32_t c, const MetricsOptions& o = {});
long long ilcom(const model::CodeGraph& g, std::int32_t c, const MetricsOptions& o = {});
double tcc(const model::CodeGraph& g, std::int32_t c, const MetricsOptions& o = {});
double ld(const model::CodeGraph& g, std::int32_t c);
long long nom(const model::CodeGraph& g, std::int32_t c, const MetricsOptions& o = {});
long long nam(const model::CodeGraph& g, std::int32_t c, const MetricsOptions& o = {});
long long rfc(const model::CodeGraph& g, std::int32_t c, const MetricsOptions& o = {});
long long wmc(const model::CodeGraph& g, std::int32_t c);
long long len(const model::CodeGraph& g, std::int32_t c);
double lod(const model::CodeGraph& g, std::int32_t c, const MetricsOptions& o = {});

// One record per non-external class, sorted by qualified class name.
std::vector<ClassMetricsRecord> compute_all(const model::CodeGraph& g,
                                            const MetricsOptions& o = {});

} // namespace ckmet::metrics
