#pragma once

#include <vector>

#include "greendt/central_charge.hpp"
#include "greendt/quiver.hpp"

namespace greendt {

enum class RunStatus {
    MaximalReached,
    BudgetExceeded,
};

struct GreenStep {
    int vertex = 0;            // mutated (green) vertex
    ClassVector stable_class;  // its c-vector before the mutation
    double phase_display = 0;  // float phase of the class, display only
};

// Transcript of one mutation-method execution.
struct GreenRun {
    Quiver quiver;
    CentralCharge charge;
    std::vector<GreenStep> steps;
    RunStatus status;
    FramedQuiver final;
};

// The mutation method: starting from frame(q), repeatedly mutate at the
// unique green vertex whose c-vector has maximal phase under the charge,
// recording that c-vector; stop when every vertex is red (MaximalReached)
// or after `budget` steps (BudgetExceeded). The recorded classes are the
// stable classes in strictly decreasing phase order. A phase tie between
// two green vertices means the charge is not discrete: hard error.
GreenRun run_mutation_method(const Quiver& q, const CentralCharge& charge,
                             long long budget = 1000);

std::vector<ClassVector> stable_classes(const GreenRun& run);

// For a MaximalReached run: the permutation pi with final c-vectors
// c_j = -e_{pi(j)} and principal_part(final).count(i,j) ==
// quiver.count(pi(i), pi(j)). Both are theorems for valid runs; failure
// indicates an implementation bug and throws SelfDualityViolatedError.
std::vector<int> self_duality_check(const GreenRun& run);

struct MgsEnumeration {
    std::vector<std::vector<int>> sequences; // lexicographic order
    bool complete = true;                    // false: node budget hit, partial list
};

// Depth-first search over green mutations from frame(q): every mutation
// sequence of length <= max_len ending all-red.
MgsEnumeration enumerate_mgs(const Quiver& q, int max_len, long long node_budget);

} // namespace greendt
