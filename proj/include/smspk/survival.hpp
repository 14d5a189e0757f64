#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "smspk/clustering.hpp"
#include "smspk/cohort.hpp"

namespace smspk {

struct KMStep {
    double time = 0.0;
    double survival = 1.0;
    int at_risk = 0;
    int events = 0;
};

// Product-limit curve for one group; steps only at death times.
struct KMCurve {
    std::string group;
    std::vector<KMStep> steps;
};

KMCurve kaplan_meier(const SurvivalTable& table, const std::vector<std::string>& members,
                     std::string group_id);

struct LogRankResult {
    double statistic = 0.0;
    int degrees_of_freedom = 0;
    double p_value = 1.0;
};

// k-sample log-rank: hypergeometric observed-vs-expected accumulation at each
// death time, statistic (O-E)' V^+ (O-E) over the first k-1 groups, p from the
// chi-square upper tail with k-1 degrees of freedom. V^+ is a generalized
// inverse with rank cutoff 1e-10 so degenerate groupings stay finite.
LogRankResult logrank_test(const std::vector<double>& times, const std::vector<int>& events,
                           const std::vector<int>& groups, int k);
LogRankResult logrank_test(const SurvivalTable& table, const ClusterAssignment& a);

// Q(df/2, x/2), the chi-square survival function.
double chi_square_upper_tail(double x, int df);

// Plot-ready CSV: header `group,time,survival,at_risk,events`.
std::string km_curves_to_csv(const std::vector<KMCurve>& curves);
void write_km_csv(const std::vector<KMCurve>& curves, const std::filesystem::path& path);

}  // namespace smspk
