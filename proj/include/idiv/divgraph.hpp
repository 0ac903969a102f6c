#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idiv/divset.hpp"
#include "idiv/orbit.hpp"
#include "idiv/poly.hpp"

namespace idiv {

// The justifications are independent; an edge may carry both.
struct EdgeFlags {
    bool type1 = false; // v_p(n) < v_p(f^n(0))
    bool type2 = false; // v_p(n) = 0 and p in D

    bool any() const { return type1 || type2; }
    std::string label() const; // "1", "2", "1,2" or "" when untyped

    bool operator==(const EdgeFlags&) const = default;
};

struct Edge {
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    std::uint64_t prime = 0;
    EdgeFlags flags;

    bool operator==(const Edge&) const = default;
};

// Rooted at 1; vertices and edges sorted by value / (from, to).
struct DivGraph {
    IntPolynomial f;
    std::uint64_t bound = 1;
    std::vector<std::uint64_t> vertices;
    std::vector<Edge> edges;

    bool has_vertex(std::uint64_t n) const;
    bool operator==(const DivGraph&) const = default;
};

// Caches per-prime orbits and prime membership for one f, so bulk edge
// classification stays O(1) per query after the first touch of each prime.
class EdgeClassifier {
public:
    explicit EdgeClassifier(const IntPolynomial& f);
    EdgeClassifier(const IntPolynomial& f, std::function<bool(std::uint64_t)> prime_membership);

    bool prime_in_div_set(std::uint64_t p);
    std::optional<EdgeFlags> classify(std::uint64_t n, std::uint64_t p);

private:
    const ModularOrbit& orbit(std::uint64_t m);

    IntPolynomial f_;
    std::function<bool(std::uint64_t)> membership_;
    std::map<std::uint64_t, ModularOrbit> orbits_;
    std::map<std::uint64_t, bool> in_d_;
};

// Both flags of the candidate edge (n, np), or nullopt when neither holds.
// The prime-membership oracle decides "p in D" for the type-2 test.
std::optional<EdgeFlags> classify_edge(const IntPolynomial& f, std::uint64_t n, std::uint64_t p,
                                       const std::function<bool(std::uint64_t)>& prime_membership);
std::optional<EdgeFlags> classify_edge(const IntPolynomial& f, std::uint64_t n, std::uint64_t p);

// Fixed point of the edge rule restricted to [1, bound], built by an increasing
// sweep from the root; candidate primes at n are those with np <= bound, and
// the type-2 oracle is direct membership checking of each prime.  Workers only
// speed up the per-prime precomputation; the result is deterministic.
DivGraph build_graph(const IntPolynomial& f, std::uint64_t bound, unsigned workers = 1);

// All pairs (m, n) of window members with prime quotient, classified with the
// same flags as build_graph; untyped pairs come back with empty flags.
std::vector<Edge> reconstruct_from_set(const DivisibilitySetWindow& window);

// Vertex path 1 -> ... -> n ascending the prime factorization of n smallest
// prime first, each power grouped innermost.  Throws when n is not a vertex.
std::vector<std::uint64_t> path_to(const DivGraph& graph, std::uint64_t n);

struct ScanResult {
    IntPolynomial f;
    std::uint64_t members = 0;
    std::uint64_t edges_checked = 0;
    std::vector<Edge> untyped;
};

// The per-f window/reconstruct/classify sweep hunting for an edge of the
// divisibility set that is neither type 1 nor type 2.
std::vector<ScanResult> open_question_scan(const std::vector<IntPolynomial>& family,
                                           std::uint64_t bound, unsigned workers = 1);

std::string export_dot(const DivGraph& graph);

// Record schema round-trip (JSON text); parse_graph_records(export_graph_records(g)) == g.
std::string export_graph_records(const DivGraph& graph);
DivGraph parse_graph_records(const std::string& text);

} // namespace idiv
