#pragma once

#include "flatcomp/completion.hpp"
#include "flatcomp/enumerate.hpp"
#include "flatcomp/json_io.hpp"

namespace flatcomp {

struct unknown_suite : std::runtime_error {
    explicit unknown_suite(const std::string& name)
        : std::runtime_error("unknown suite \"" + name + "\"") {}
};

struct SuiteFailure {
    std::string claim;
    Json counterexample;
};

/// Outcome of one exhaustive law-checking run. The instance counter is
/// deterministic for a given grid; a failure carries the first (hence
/// smallest, in enumeration order) offending instance as a re-runnable
/// document.
struct SuiteReport {
    std::string suite;
    long long instances = 0;
    std::vector<SuiteFailure> failures;

    bool passed() const { return failures.empty(); }
};

Json to_json(const SuiteReport& report);

/// Registered suite names, in registry order.
std::vector<std::string> suite_names();

/// Runs the named suite with its default parameters.
SuiteReport run_suite(const std::string& name);

/// Runs the named suite over the given grid. Suites that enumerate
/// preorders use the grid's object cap (clamped to 4); a few suites with a
/// fixed internal population ignore the grid.
SuiteReport run_suite(const std::string& name, const InstanceGrid& grid);

namespace detail {

/// Harness self-audit hooks: the real suites call these with the library's
/// own decision procedures; tests may substitute a broken one and must see
/// the suite fail with a small counterexample.
using ClassifyFn = std::function<Classification(const PrincipalFilter&)>;
using BoolFlatFn = std::function<BoolFlatResult(const Preorder&, const std::vector<int>&)>;

SuiteReport run_inclusion_chain(const InstanceGrid& grid, const ClassifyFn& classifier);
SuiteReport run_bool_flat(int max_objects, const BoolFlatFn& checker);

}  // namespace detail

}  // namespace flatcomp
