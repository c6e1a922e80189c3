#include "greendt/green.hpp"

#include <algorithm>

#include "greendt/errors.hpp"

namespace greendt {

namespace {

std::string class_str(const ClassVector& a) { return to_string(a); }

// The unique green vertex of maximal phase; a tie means the charge is
// not discrete (distinct stable classes would share a phase).
int select_green(const FramedQuiver& f, const std::vector<int>& green,
                 const CentralCharge& z) {
    int best = green.front();
    RationalComplex best_val = evaluate(z, c_vector(f, best));
    for (size_t i = 1; i < green.size(); ++i) {
        const RationalComplex val = evaluate(z, c_vector(f, green[i]));
        const auto cmp = phase_cmp(val, best_val);
        if (cmp == std::strong_ordering::greater) {
            best = green[i];
            best_val = val;
        }
    }
    for (int g : green) {
        if (g == best)
            continue;
        const RationalComplex val = evaluate(z, c_vector(f, g));
        if (phase_cmp(val, best_val) == std::strong_ordering::equal)
            throw NondiscreteChargeError(
                "classes " + class_str(c_vector(f, g)) + " and " +
                class_str(c_vector(f, best)) + " tie for maximal phase");
    }
    return best;
}

} // namespace

GreenRun run_mutation_method(const Quiver& q, const CentralCharge& charge,
                             long long budget) {
    if (charge.size() != q.size())
        throw DimensionMismatchError("charge rank " + std::to_string(charge.size()) +
                                     " does not match quiver size " +
                                     std::to_string(q.size()));
    if (budget < 1)
        throw InvalidInputError("budget must be >= 1");
    GreenRun run{q, charge, {}, RunStatus::MaximalReached, frame(q)};
    while (true) {
        const std::vector<int> green = green_vertices(run.final);
        if (green.empty()) {
            run.status = RunStatus::MaximalReached;
            break;
        }
        if (static_cast<long long>(run.steps.size()) == budget) {
            run.status = RunStatus::BudgetExceeded;
            break;
        }
        const int k = select_green(run.final, green, charge);
        ClassVector c = c_vector(run.final, k);
        const double phase = phase_float(evaluate(charge, c));
        run.steps.push_back({k, std::move(c), phase});
        run.final = mutate(run.final, k);
    }
    return run;
}

std::vector<ClassVector> stable_classes(const GreenRun& run) {
    std::vector<ClassVector> classes;
    classes.reserve(run.steps.size());
    for (const GreenStep& s : run.steps)
        classes.push_back(s.stable_class);
    return classes;
}

std::vector<int> self_duality_check(const GreenRun& run) {
    if (run.status != RunStatus::MaximalReached)
        throw NotMaximalError("self_duality_check needs a MaximalReached run");
    const int n = run.quiver.size();
    std::vector<int> pi(n, 0);
    std::vector<bool> hit(n, false);
    for (int j = 1; j <= n; ++j) {
        const ClassVector c = c_vector(run.final, j);
        int image = 0;
        for (int i = 0; i < n; ++i) {
            if (c[i] == 0)
                continue;
            if (c[i] != -1 || image != 0)
                throw SelfDualityViolatedError("final c-vector of vertex " +
                                               std::to_string(j) + " is " +
                                               class_str(c) +
                                               ", not a negative unit vector");
            image = i + 1;
        }
        if (image == 0 || hit[image - 1])
            throw SelfDualityViolatedError("final c-vectors do not form a permutation");
        hit[image - 1] = true;
        pi[j - 1] = image;
    }
    const Quiver pp = principal_part(run.final);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (pp.count(i, j) != run.quiver.count(pi[i - 1], pi[j - 1]))
                throw SelfDualityViolatedError(
                    "final principal part is not the permuted original quiver");
    return pi;
}

namespace {

struct DfsState {
    int max_len;
    long long node_budget;
    long long nodes = 0;
    std::vector<int> path;
    std::vector<std::vector<int>> found;
    bool complete = true;
};

void dfs(const FramedQuiver& f, DfsState& st) {
    const std::vector<int> green = green_vertices(f);
    if (green.empty()) {
        if (!st.path.empty())
            st.found.push_back(st.path);
        return;
    }
    if (static_cast<int>(st.path.size()) == st.max_len)
        return;
    for (int g : green) {
        if (st.nodes == st.node_budget) {
            st.complete = false;
            return;
        }
        ++st.nodes;
        st.path.push_back(g);
        dfs(mutate(f, g), st);
        st.path.pop_back();
        if (!st.complete)
            return;
    }
}

} // namespace

MgsEnumeration enumerate_mgs(const Quiver& q, int max_len, long long node_budget) {
    if (max_len < 1 || node_budget < 1)
        throw InvalidInputError("enumerate_mgs bounds must be >= 1");
    DfsState st;
    st.max_len = max_len;
    st.node_budget = node_budget;
    dfs(frame(q), st);
    std::sort(st.found.begin(), st.found.end());
    return {std::move(st.found), st.complete};
}

} // namespace greendt
