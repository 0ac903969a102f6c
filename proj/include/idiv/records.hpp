#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "idiv/divgraph.hpp"
#include "idiv/divset.hpp"
#include "idiv/permlocal.hpp"
#include "idiv/zsigmondy.hpp"

namespace idiv {

inline constexpr const char* kToolName = "idiv";
inline constexpr const char* kToolVersion = "0.1.0";

// Echo of the interesting parts of a run configuration.  Worker count and
// output destination are deliberately excluded so identical inputs produce
// byte-identical records regardless of how the work was scheduled.
struct RecordConfig {
    std::string poly;
    std::uint64_t window_bound = 0; // 0 = not applicable
    std::uint64_t prime_bound = 0;
    std::uint64_t n_max = 0;
    std::uint64_t bit_budget = 0;
    std::map<std::string, std::string> extras; // command-specific settings
};

// One self-describing JSON document per run: tool/version provenance, the
// config echo, and the command results.  All output is deterministic.
std::string divset_records(const RecordConfig& config, const DivisibilitySetWindow& window,
                           const ClosureReport* closure = nullptr);
std::string graph_records(const RecordConfig& config, const DivGraph& graph);
std::string zsig_records(const RecordConfig& config, const std::vector<PrimitiveSplit>& splits,
                         const std::vector<std::uint64_t>& zsig_window,
                         const std::vector<GrowthCheck>& growth,
                         const FinitenessVerdict* verdict = nullptr);
std::string perm_records(const RecordConfig& config, const PermutationProfile& profile,
                         const RestrictionReport* restrictions, bool injective);
std::string density_records(const RecordConfig& config, const DensityResult& result);
std::string survey_records(const RecordConfig& config, const std::vector<ScanResult>& results);

// Line-oriented CSV for the tabular shapes.
std::string divset_csv(const DivisibilitySetWindow& window);
std::string graph_csv(const DivGraph& graph);
std::string zsig_csv(const std::vector<PrimitiveSplit>& splits);

const char* restriction_name(Restriction r);
const char* parity_name(PermParity p);
const char* finiteness_name(Finiteness f);

} // namespace idiv
