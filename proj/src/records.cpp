#include "idiv/records.hpp"

#include <json.hpp>

#include "idiv/orbit.hpp"

namespace idiv {

namespace {

using Json = nlohmann::ordered_json;

Json header(const char* command, const RecordConfig& config) {
    Json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["command"] = command;
    Json cfg;
    if (!config.poly.empty()) cfg["poly"] = config.poly;
    if (config.window_bound) cfg["N"] = config.window_bound;
    if (config.prime_bound) cfg["P"] = config.prime_bound;
    if (config.n_max) cfg["n_max"] = config.n_max;
    if (config.bit_budget) cfg["bit_budget"] = config.bit_budget;
    for (const auto& [key, value] : config.extras) cfg[key] = value;
    doc["config"] = std::move(cfg);
    return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json member_rows(const DivisibilitySetWindow& window) {
    Json rows = Json::array();
    for (std::uint64_t n : window.members) {
        ModularOrbit orbit(window.f, n);
        rows.push_back({{"n", n}, {"tail", orbit.tail()}, {"cycle", orbit.cycle()}});
    }
    return rows;
}

} // namespace

const char* restriction_name(Restriction r) {
    switch (r) {
        case Restriction::EvenExponent: return "EvenExponent";
        case Restriction::EvenQuotient: return "EvenQuotient";
        case Restriction::OrderNotDividing: return "OrderNotDividing";
        case Restriction::GcdTooSmall: return "GcdTooSmall";
        case Restriction::LinearCase: return "LinearCase";
        case Restriction::ParityRestriction: return "ParityRestriction";
    }
    return "?";
}

const char* parity_name(PermParity p) {
    switch (p) {
        case PermParity::Even: return "Even";
        case PermParity::Odd: return "Odd";
        case PermParity::NotApplicable: return "NotApplicable";
    }
    return "?";
}

const char* finiteness_name(Finiteness f) {
    switch (f) {
        case Finiteness::FiniteTrivial: return "FiniteTrivial";
        case Finiteness::Infinite: return "Infinite";
        case Finiteness::Degenerate: return "Degenerate";
    }
    return "?";
}

std::string divset_records(const RecordConfig& config, const DivisibilitySetWindow& window,
                           const ClosureReport* closure) {
    Json doc = header("divset", config);
    Json results;
    results["degenerate"] = window.degenerate;
    results["member_count"] = window.members.size();
    results["members"] = member_rows(window);
    if (closure != nullptr) {
        Json checks = Json::array();
        for (const PropertyCheck& check : closure->checks) {
            checks.push_back({{"name", check.name},
                              {"applicable", check.applicable},
                              {"instances", check.instances},
                              {"counterexamples", check.counterexamples}});
        }
        results["closure"] = {{"rigidity_witness", closure->rigidity_witness},
                              {"witness_exact", closure->witness_exact},
                              {"all_passed", closure->all_passed()},
                              {"checks", std::move(checks)}};
    }
    doc["results"] = std::move(results);
    return dump(doc);
}

std::string graph_records(const RecordConfig& config, const DivGraph& graph) {
    Json doc = header("graph", config);
    doc["results"] = Json::parse(export_graph_records(graph));
    return dump(doc);
}

std::string zsig_records(const RecordConfig& config, const std::vector<PrimitiveSplit>& splits,
                         const std::vector<std::uint64_t>& zsig_window,
                         const std::vector<GrowthCheck>& growth,
                         const FinitenessVerdict* verdict) {
    Json doc = header("zsig", config);
    Json results;
    Json split_rows = Json::array();
    for (const PrimitiveSplit& split : splits) {
        split_rows.push_back({{"n", split.n},
                              {"primitive", split.primitive.str()},
                              {"nonprimitive", split.nonprimitive.str()}});
    }
    results["splits"] = std::move(split_rows);
    results["zsigmondy_window"] = zsig_window;
    Json growth_rows = Json::array();
    for (const GrowthCheck& check : growth) {
        growth_rows.push_back({{"n", check.n},
                               {"cube_bound_ok", check.cube_bound_ok},
                               {"product_bound_ok", check.product_bound_ok}});
    }
    results["growth"] = std::move(growth_rows);
    if (verdict != nullptr) {
        results["finiteness"] = {{"classification", finiteness_name(verdict->classification)},
                                 {"consistent", verdict->consistent},
                                 {"members", verdict->evidence.members}};
    }
    doc["results"] = std::move(results);
    return dump(doc);
}

std::string perm_records(const RecordConfig& config, const PermutationProfile& profile,
                         const RestrictionReport* restrictions, bool injective) {
    Json doc = header("perm", config);
    Json results;
    results["p"] = profile.p;
    results["is_permutation"] = profile.is_permutation;
    results["image_size"] = profile.image_size;
    results["cycle_type"] = profile.cycle_type;
    results["parity"] = parity_name(profile.parity);
    results["zero_tail"] = profile.zero_tail;
    results["zero_cycle"] = profile.zero_cycle;
    results["injective"] = injective;
    if (restrictions != nullptr) {
        Json fired = Json::array();
        for (Restriction r : restrictions->fired) fired.push_back(restriction_name(r));
        results["restrictions"] = {{"fired", std::move(fired)},
                                   {"excluded", restrictions->excluded}};
    }
    doc["results"] = std::move(results);
    return dump(doc);
}

std::string density_records(const RecordConfig& config, const DensityResult& result) {
    Json doc = header("perm-density", config);
    doc["results"] = {{"prime_bound", result.prime_bound},
                      {"primes", result.primes},
                      {"qualifying", result.qualifying},
                      {"fraction", result.fraction}};
    return dump(doc);
}

std::string survey_records(const RecordConfig& config, const std::vector<ScanResult>& results) {
    Json doc = header("survey", config);
    Json rows = Json::array();
    std::uint64_t total_untyped = 0;
    for (const ScanResult& result : results) {
        Json untyped = Json::array();
        for (const Edge& edge : result.untyped) {
            untyped.push_back({{"from", edge.from}, {"to", edge.to}, {"prime", edge.prime}});
        }
        total_untyped += result.untyped.size();
        rows.push_back({{"poly", render_poly(result.f)},
                        {"members", result.members},
                        {"edges_checked", result.edges_checked},
                        {"untyped", std::move(untyped)}});
    }
    doc["results"] = {{"total_untyped", total_untyped}, {"scans", std::move(rows)}};
    return dump(doc);
}

std::string divset_csv(const DivisibilitySetWindow& window) {
    std::string out = "n,tail,cycle\n";
    for (std::uint64_t n : window.members) {
        ModularOrbit orbit(window.f, n);
        out += std::to_string(n) + "," + std::to_string(orbit.tail()) + "," +
               std::to_string(orbit.cycle()) + "\n";
    }
    return out;
}

std::string graph_csv(const DivGraph& graph) {
    std::string out = "from,to,prime,type\n";
    for (const Edge& e : graph.edges) {
        out += std::to_string(e.from) + "," + std::to_string(e.to) + "," +
               std::to_string(e.prime) + ",\"" + e.flags.label() + "\"\n";
    }
    return out;
}

std::string zsig_csv(const std::vector<PrimitiveSplit>& splits) {
    std::string out = "n,primitive,nonprimitive\n";
    for (const PrimitiveSplit& split : splits) {
        out += std::to_string(split.n) + "," + split.primitive.str() + "," +
               split.nonprimitive.str() + "\n";
    }
    return out;
}

} // namespace idiv
