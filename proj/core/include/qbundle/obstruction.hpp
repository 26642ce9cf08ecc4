#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbundle/rational.hpp"
#include "qbundle/winding.hpp"

namespace qbundle {

struct ForcingStep {
    std::string name;
    std::string status;  ///< "pass", "fail" or "vacuous"
    std::string detail;
};

/// Symbolic chain forcing noncommutativity down to the circle fiber:
/// (i) the basic commutator has exact normal form (1 - q^2) gamma gamma^*,
/// (ii) its scalar is nonzero, which fails to bite exactly when q^2 = 1,
/// (iii) the circle projection of the unit relation survives, so the fiber
/// copy of the circle is faithfully present.
struct ForcingReport {
    std::vector<ForcingStep> steps;
    bool chain_holds = false;  ///< all steps pass
    bool vacuous = false;      ///< step (ii) degenerates (q^2 = 1)
    std::string commutator;    ///< printed normal form of [alpha, alpha^*]
};

/// Runs the chain at formal q (nullopt) or at a fixed numeric q0.
ForcingReport symbolic_forcing(const std::optional<Rational>& q0);

struct WindingResult {
    int samples = 0;
    int degree = 0;
    double min_modulus = 0.0;
    double max_unit_deviation = 0.0;  ///< max | |t| - 1 | over samples
};

struct ObstructionReport {
    ForcingReport forcing;
    std::vector<WindingResult> windings;  ///< clutching degree per sample count
    int constant_control_degree = 0;      ///< constant loop, expect 0
    int squared_control_degree = 0;       ///< squared transition, expect twice the degree
    std::string verdict;                  ///< "obstructed" or "not obstructed"
    std::string classical_control;        ///< verdict for the trivial clutching, expect "not obstructed"
    std::string caveat;
};

/// Combines the symbolic forcing chain with the sampled clutching degree of
/// the equator transition function. Obstructed means the chain holds and
/// every requested sampling sees the same nonzero degree.
ObstructionReport obstruction_verdict(const GridPtr& grid, const std::vector<int>& sample_counts,
                                      const std::optional<Rational>& q0);

}  // namespace qbundle
