#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atcert/common.hpp"
#include "atcert/configurations.hpp"
#include "atcert/plane_graph.hpp"

namespace atcert {

// Charge lives on vertices and faces.
struct Element {
    bool is_face = false;
    int id = 0;
    bool operator==(const Element&) const = default;
};

struct Transfer {
    Element from, to;
    Rational amount;
    std::string rule;
};

struct ChargeLedger {
    std::vector<Rational> vertex_initial, face_initial;
    std::vector<Rational> vertex_final, face_final;
    std::vector<Transfer> transfers;

    Rational sum_initial() const;
    Rational sum_final() const;
    Rational received(const Element& e) const;
    Rational sent(const Element& e) const;
};

// ch(x) = d(x) - 4 on vertices and faces; total is -8 on a connected plane graph.
ChargeLedger initial_charges(const PlaneGraph& g);

// Executes the section's rules for the given l exactly once each, from an
// immutable snapshot of the initial charges. Throws NotInClass.
ChargeLedger apply_rules(const PlaneGraph& g, int l);

struct AuditBound {
    std::string name;
    bool applicable = false;
    bool holds = true;
    std::string value;  // exact rational
    std::string bound;
    std::string note;
};

struct AuditNegative {
    Element element;
    std::string value;
    bool config_attached = false;
    std::optional<Configuration> config;
};

struct AuditReport {
    bool conservation_initial = false;
    bool conservation_final = false;
    std::string sum_initial, sum_final;
    std::vector<AuditNegative> negatives;  // ch* < 0 other than v0, f0
    bool configuration_free = false;       // hypothetical: detect found nothing
    std::string derived_contradiction_sum; // -8 - ch*(v0) - ch*(f0), when configuration_free
    std::string contradiction_bound;       // -35/12 or -13/4
    bool theorem_violation_evidence = false;
    std::vector<AuditBound> bounds;
    bool all_pass() const;
};

// Mirrors the paper's "check charge" paragraphs: conservation, the v0/f0
// lower bounds under their structural hypotheses, and the two qualifying
// 6-face bounds for l=5. Negative elements are reported together with a
// reducible configuration; a negative without any configuration present is
// theorem-violation evidence.
AuditReport audit(const ChargeLedger& ledger, const PlaneGraph& g, int l);

// Re-checks every logged transfer against its rule's guard. Returns the
// first offending transfer's description, or nullopt if all pass.
std::optional<std::string> check_transfer_guards(const PlaneGraph& g, int l,
                                                 const ChargeLedger& ledger);

}  // namespace atcert
