#include "smspk/survival.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <utility>

#include "smspk/errors.hpp"
#include "smspk/text.hpp"

namespace smspk {

namespace {

struct Entry {
    double time;
    int event;
    int group;
};

std::vector<Entry> sorted_entries(const std::vector<double>& times,
                                  const std::vector<int>& events,
                                  const std::vector<int>& groups) {
    std::vector<Entry> entries(times.size());
    for (std::size_t i = 0; i < times.size(); ++i)
        entries[i] = {times[i], events[i], groups[i]};
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.time < b.time; });
    return entries;
}

}  // namespace

KMCurve kaplan_meier(const SurvivalTable& table, const std::vector<std::string>& members,
                     std::string group_id) {
    if (members.empty()) throw DataError("Kaplan-Meier group '" + group_id + "' is empty");

    std::vector<double> times;
    std::vector<int> events;
    times.reserve(members.size());
    events.reserve(members.size());
    for (const auto& id : members) {
        const SurvivalRecord* record = table.find(id);
        if (!record) throw DataError("patient '" + id + "' has no clinical record");
        times.push_back(record->time);
        events.push_back(record->event);
    }

    const std::vector<int> groups(times.size(), 0);
    const std::vector<Entry> entries = sorted_entries(times, events, groups);

    KMCurve curve;
    curve.group = std::move(group_id);
    double survival = 1.0;
    int at_risk = static_cast<int>(entries.size());
    std::size_t i = 0;
    while (i < entries.size()) {
        const double t = entries[i].time;
        int deaths = 0;
        std::size_t j = i;
        // Everyone tied at t, censored included, counts as at risk here:
        // deaths are processed before censorings.
        while (j < entries.size() && entries[j].time == t) {
            deaths += entries[j].event;
            ++j;
        }
        if (deaths > 0) {
            survival *= 1.0 - static_cast<double>(deaths) / static_cast<double>(at_risk);
            curve.steps.push_back({t, survival, at_risk, deaths});
        }
        at_risk -= static_cast<int>(j - i);
        i = j;
    }
    return curve;
}

double chi_square_upper_tail(double x, int df) {
    if (x < 0.0) throw ConfigError("chi-square statistic is negative");
    if (df <= 0) throw ConfigError("degrees of freedom must be positive");
    return boost::math::gamma_q(static_cast<double>(df) / 2.0, x / 2.0);
}

LogRankResult logrank_test(const std::vector<double>& times, const std::vector<int>& events,
                           const std::vector<int>& groups, int k) {
    const std::size_t n = times.size();
    if (events.size() != n || groups.size() != n)
        throw DataError("log-rank inputs have mismatched lengths");
    if (k < 2) throw ConfigError("log-rank test needs at least two groups");

    std::vector<int> at_risk(static_cast<std::size_t>(k), 0);
    int total_events = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (groups[i] < 0 || groups[i] >= k)
            throw DataError("log-rank group index out of range");
        ++at_risk[static_cast<std::size_t>(groups[i])];
        total_events += events[i];
    }
    for (int g = 0; g < k; ++g)
        if (at_risk[static_cast<std::size_t>(g)] == 0)
            throw DataError("log-rank group " + std::to_string(g) + " is empty");
    if (total_events == 0) throw DataError("log-rank test is undefined without any events");

    const std::vector<Entry> entries = sorted_entries(times, events, groups);

    Eigen::VectorXd observed = Eigen::VectorXd::Zero(k);
    Eigen::VectorXd expected = Eigen::VectorXd::Zero(k);
    Eigen::MatrixXd variance = Eigen::MatrixXd::Zero(k, k);

    std::size_t i = 0;
    int total_at_risk = static_cast<int>(n);
    while (i < entries.size()) {
        const double t = entries[i].time;
        std::vector<int> deaths(static_cast<std::size_t>(k), 0);
        int death_total = 0;
        std::size_t j = i;
        while (j < entries.size() && entries[j].time == t) {
            if (entries[j].event == 1) {
                ++deaths[static_cast<std::size_t>(entries[j].group)];
                ++death_total;
            }
            ++j;
        }
        if (death_total > 0) {
            const double nn = static_cast<double>(total_at_risk);
            const double d = static_cast<double>(death_total);
            for (int g = 0; g < k; ++g) {
                const double ng = static_cast<double>(at_risk[static_cast<std::size_t>(g)]);
                observed(g) += static_cast<double>(deaths[static_cast<std::size_t>(g)]);
                expected(g) += d * ng / nn;
            }
            if (total_at_risk > 1) {
                const double scale = d * (nn - d) / (nn - 1.0);
                for (int g = 0; g < k; ++g) {
                    const double ng = static_cast<double>(at_risk[static_cast<std::size_t>(g)]);
                    for (int h = 0; h < k; ++h) {
                        const double nh =
                            static_cast<double>(at_risk[static_cast<std::size_t>(h)]);
                        const double delta = g == h ? ng / nn : 0.0;
                        variance(g, h) += scale * (delta - ng * nh / (nn * nn));
                    }
                }
            }
        }
        for (std::size_t r = i; r < j; ++r) --at_risk[static_cast<std::size_t>(entries[r].group)];
        total_at_risk -= static_cast<int>(j - i);
        i = j;
    }

    // Drop the last group; its O-E is determined by the others.
    const int m = k - 1;
    const Eigen::VectorXd z = (observed - expected).head(m);
    const Eigen::MatrixXd v = variance.topLeftCorner(m, m);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(v);
    if (solver.info() != Eigen::Success)
        throw DataError("log-rank variance eigendecomposition failed");
    const Eigen::VectorXd eigenvalues = solver.eigenvalues();
    const double cutoff = 1e-10 * std::max(1.0, eigenvalues.cwiseAbs().maxCoeff());

    double statistic = 0.0;
    const Eigen::VectorXd projected = solver.eigenvectors().transpose() * z;
    for (int g = 0; g < m; ++g)
        if (eigenvalues(g) > cutoff) statistic += projected(g) * projected(g) / eigenvalues(g);
    statistic = std::max(0.0, statistic);

    LogRankResult result;
    result.statistic = statistic;
    result.degrees_of_freedom = m;
    result.p_value = chi_square_upper_tail(statistic, m);
    return result;
}

LogRankResult logrank_test(const SurvivalTable& table, const ClusterAssignment& a) {
    std::vector<double> times;
    std::vector<int> events;
    std::vector<int> groups;
    times.reserve(a.patients.size());
    events.reserve(a.patients.size());
    groups.reserve(a.patients.size());
    for (std::size_t i = 0; i < a.patients.size(); ++i) {
        const SurvivalRecord* record = table.find(a.patients[i]);
        if (!record)
            throw DataError("patient '" + a.patients[i] + "' has no clinical record");
        times.push_back(record->time);
        events.push_back(record->event);
        groups.push_back(a.labels[i]);
    }
    return logrank_test(times, events, groups, a.k);
}

std::string km_curves_to_csv(const std::vector<KMCurve>& curves) {
    std::string out = "group,time,survival,at_risk,events\n";
    for (const auto& curve : curves) {
        for (const auto& step : curve.steps) {
            out += curve.group;
            out += ',';
            out += format_g12(step.time);
            out += ',';
            out += format_g12(step.survival);
            out += ',';
            out += std::to_string(step.at_risk);
            out += ',';
            out += std::to_string(step.events);
            out += '\n';
        }
    }
    return out;
}

void write_km_csv(const std::vector<KMCurve>& curves, const std::filesystem::path& path) {
    write_text_file(path, km_curves_to_csv(curves));
}

}  // namespace smspk
