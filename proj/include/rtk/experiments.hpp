#ifndef RTK_EXPERIMENTS_HPP
#define RTK_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "rational.hpp"

namespace rtk {

enum class ExperimentStatus { PASS, FAIL, CONJECTURE_HOLDS_TO_DEPTH, ERROR };

std::string status_name(ExperimentStatus s);

struct Mismatch {
    std::string where;
    std::string computed;
    std::string expected;
};

struct ExperimentReport {
    std::string name;
    ExperimentStatus status = ExperimentStatus::ERROR;
    long depth = 0;
    bool conjecture = false;
    std::vector<std::string> computed;  // headline value lists, labelled "label: v,v,v"
    std::vector<std::string> expected;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> notes;
};

// Registered experiment names in canonical (registration) order.
std::vector<std::string> experiment_names();

bool is_experiment(const std::string& name);
bool experiment_is_conjecture(const std::string& name);
long experiment_default_depth(const std::string& name);

// depth < 0 means "use the experiment's default depth".
ExperimentReport run_experiment(const std::string& name, long depth = -1);

std::vector<ExperimentReport> run_all_experiments();

} // namespace rtk

#endif
