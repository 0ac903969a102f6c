#include "idiv/divgraph.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "idiv/parallel.hpp"
#include "idiv/primes.hpp"

namespace idiv {

std::string EdgeFlags::label() const {
    if (type1 && type2) return "1,2";
    if (type1) return "1";
    if (type2) return "2";
    return "";
}

bool DivGraph::has_vertex(std::uint64_t n) const {
    return std::binary_search(vertices.begin(), vertices.end(), n);
}

EdgeClassifier::EdgeClassifier(const IntPolynomial& f) : f_(f) {}

EdgeClassifier::EdgeClassifier(const IntPolynomial& f,
                               std::function<bool(std::uint64_t)> prime_membership)
    : f_(f), membership_(std::move(prime_membership)) {}

const ModularOrbit& EdgeClassifier::orbit(std::uint64_t m) {
    auto it = orbits_.find(m);
    if (it == orbits_.end()) it = orbits_.emplace(m, ModularOrbit(f_, m)).first;
    return it->second;
}

bool EdgeClassifier::prime_in_div_set(std::uint64_t p) {
    auto it = in_d_.find(p);
    if (it == in_d_.end()) {
        bool member = membership_ ? membership_(p) : orbit(p).residue_at(p) == 0;
        it = in_d_.emplace(p, member).first;
    }
    return it->second;
}

std::optional<EdgeFlags> EdgeClassifier::classify(std::uint64_t n, std::uint64_t p) {
    if (n < 1 || !is_prime(p)) throw std::invalid_argument("classify: need n >= 1 and p prime");
    EdgeFlags flags;
    flags.type2 = (n % p != 0) && prime_in_div_set(p);

    // p | f^n(0) iff the rank of apparition mod p exists and divides n: once the
    // orbit hits 0 mod p it replays from f(0), so zeros sit exactly at the
    // multiples of the first one.
    auto rank = orbit(p).rank();
    if (rank && n % *rank == 0) {
        std::uint32_t vp = 0;
        for (std::uint64_t q = n; q % p == 0; q /= p) ++vp;
        if (vp == 0) {
            flags.type1 = true;
        } else {
            auto modulus = checked_pow(p, vp + 1);
            if (!modulus) throw std::invalid_argument("classify: p^(v_p(n)+1) exceeds word size");
            flags.type1 = orbit(*modulus).residue_at(n) == 0;
        }
    }
    if (!flags.any()) return std::nullopt;
    return flags;
}

std::optional<EdgeFlags> classify_edge(const IntPolynomial& f, std::uint64_t n, std::uint64_t p,
                                       const std::function<bool(std::uint64_t)>& prime_membership) {
    EdgeClassifier classifier(f, prime_membership);
    return classifier.classify(n, p);
}

std::optional<EdgeFlags> classify_edge(const IntPolynomial& f, std::uint64_t n, std::uint64_t p) {
    EdgeClassifier classifier(f);
    return classifier.classify(n, p);
}

DivGraph build_graph(const IntPolynomial& f, std::uint64_t bound, unsigned workers) {
    if (bound < 1) throw std::invalid_argument("build_graph: bound must be >= 1");
    const std::vector<std::uint64_t> primes = prime_sieve(bound);

    // Membership and rank for every candidate prime, computed up front; each
    // prime is independent work.
    std::vector<char> prime_member(primes.size(), 0);
    for_each_index(primes.size(), workers, [&](std::uint64_t i) {
        ModularOrbit orbit(f, primes[i]);
        prime_member[i] = orbit.residue_at(primes[i]) == 0 ? 1 : 0;
    });
    std::map<std::uint64_t, bool> membership;
    for (std::size_t i = 0; i < primes.size(); ++i) membership[primes[i]] = prime_member[i] != 0;

    EdgeClassifier classifier(f, [&membership](std::uint64_t p) { return membership.at(p); });

    DivGraph graph{f, bound, {}, {}};
    std::vector<char> vertex(bound + 1, 0);
    vertex[1] = 1;
    // Edges only increase the vertex value, so one increasing sweep reaches the
    // fixed point.
    for (std::uint64_t n = 1; n <= bound; ++n) {
        if (!vertex[n]) continue;
        graph.vertices.push_back(n);
        for (std::uint64_t p : primes) {
            if (p > bound / n) break;
            if (auto flags = classifier.classify(n, p)) {
                vertex[n * p] = 1;
                graph.edges.push_back({n, n * p, p, *flags});
            }
        }
    }
    return graph;
}

std::vector<Edge> reconstruct_from_set(const DivisibilitySetWindow& window) {
    EdgeClassifier classifier(window.f);
    const std::vector<std::uint64_t> primes = prime_sieve(window.bound);
    std::vector<Edge> edges;
    for (std::uint64_t m : window.members) {
        for (std::uint64_t p : primes) {
            if (p > window.bound / m) break;
            if (!window.contains(m * p)) continue;
            auto flags = classifier.classify(m, p);
            edges.push_back({m, m * p, p, flags.value_or(EdgeFlags{})});
        }
    }
    return edges;
}

std::vector<std::uint64_t> path_to(const DivGraph& graph, std::uint64_t n) {
    if (!graph.has_vertex(n)) throw std::invalid_argument("path_to: n is not a vertex");
    std::vector<std::uint64_t> path{1};
    std::uint64_t current = 1;
    for (const auto& [p, e] : factorize(n)) {
        for (std::uint32_t i = 0; i < e; ++i) {
            current *= p;
            path.push_back(current);
        }
    }
    return path;
}

std::vector<ScanResult> open_question_scan(const std::vector<IntPolynomial>& family,
                                           std::uint64_t bound, unsigned workers) {
    std::vector<ScanResult> results(family.size());
    const unsigned resolved = resolve_workers(workers);
    const bool parallel_outer = family.size() >= resolved;
    for_each_index(family.size(), parallel_outer ? resolved : 1, [&](std::uint64_t i) {
        const IntPolynomial& f = family[i];
        DivisibilitySetWindow window = div_set_window(f, bound, parallel_outer ? 1 : resolved);
        std::vector<Edge> edges = reconstruct_from_set(window);
        ScanResult& r = results[i];
        r.f = f;
        r.members = window.members.size();
        r.edges_checked = edges.size();
        for (const Edge& edge : edges) {
            if (!edge.flags.any()) r.untyped.push_back(edge);
        }
    });
    return results;
}

std::string export_dot(const DivGraph& graph) {
    std::string out = "digraph D {\n";
    for (std::uint64_t v : graph.vertices) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (const Edge& e : graph.edges) {
        out += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to) + " [type=\"" +
               e.flags.label() + "\"];\n";
    }
    out += "}\n";
    return out;
}

std::string export_graph_records(const DivGraph& graph) {
    nlohmann::ordered_json doc;
    doc["poly"] = render_poly(graph.f);
    doc["bound"] = graph.bound;
    doc["vertices"] = graph.vertices;
    doc["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : graph.edges) {
        doc["edges"].push_back({{"from", e.from},
                                {"to", e.to},
                                {"prime", e.prime},
                                {"type", e.flags.label()}});
    }
    return doc.dump(2) + "\n";
}

DivGraph parse_graph_records(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    DivGraph graph;
    graph.f = parse_poly(doc.at("poly").get<std::string>());
    graph.bound = doc.at("bound").get<std::uint64_t>();
    graph.vertices = doc.at("vertices").get<std::vector<std::uint64_t>>();
    for (const auto& item : doc.at("edges")) {
        Edge e;
        e.from = item.at("from").get<std::uint64_t>();
        e.to = item.at("to").get<std::uint64_t>();
        e.prime = item.at("prime").get<std::uint64_t>();
        std::string label = item.at("type").get<std::string>();
        e.flags.type1 = label == "1" || label == "1,2";
        e.flags.type2 = label == "2" || label == "1,2";
        graph.edges.push_back(e);
    }
    return graph;
}

} // namespace idiv
