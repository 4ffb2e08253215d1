#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "halg/errors.hpp"

namespace halg {

// One failing identity instance: which axiom, which basis elements it
// was evaluated on, and the nonzero residual (label, coefficient) pairs.
struct Witness {
    std::string axiom;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> residual;
};

struct CheckReport {
    std::string check;
    bool ok = true;
    std::size_t failure_count = 0;
    std::vector<Witness> witnesses;

    // Witnesses beyond this cap are counted but not stored.
    static constexpr std::size_t max_witnesses = 16;

    void add_failure(Witness w) {
        ok = false;
        ++failure_count;
        if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(w));
    }

    void merge(const CheckReport& sub) {
        if (sub.ok) return;
        ok = false;
        failure_count += sub.failure_count;
        for (const auto& w : sub.witnesses) {
            if (witnesses.size() >= max_witnesses) break;
            witnesses.push_back(w);
        }
    }

    std::string summary() const;
};

// Raised by constructions whose input fails a required check; the
// failing report travels with the exception.
struct PreconditionFailed : Error {
    CheckReport report;
    PreconditionFailed(const std::string& what, CheckReport r)
        : Error(what), report(std::move(r)) {}
};

// Raised by theorem verifiers whose hypothesis fails on the given data.
struct HypothesisFailed : Error {
    CheckReport report;
    HypothesisFailed(const std::string& what, CheckReport r)
        : Error(what), report(std::move(r)) {}
};

// Raised by the central-extension builder when the given form is not
// a 2-cocycle.
struct NotACocycle : Error {
    CheckReport report;
    NotACocycle(const std::string& what, CheckReport r)
        : Error(what), report(std::move(r)) {}
};

} // namespace halg
