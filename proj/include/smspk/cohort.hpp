#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "smspk/pathway.hpp"

namespace smspk {

enum class Impact { neutral, low, medium, high };

Impact impact_from_string(const std::string& s, int line = 0);

inline std::set<Impact> default_kept_impacts() {
    return {Impact::low, Impact::medium, Impact::high};
}

// Per-patient gene alteration sets, after the functional-impact filter.
// Patient order is lexicographic so it never depends on file row order.
struct MutationCatalog {
    std::vector<std::string> patients;
    std::unordered_map<std::string, std::unordered_set<std::string>> mutated;

    bool has_patient(const std::string& id) const { return mutated.count(id) > 0; }
    const std::unordered_set<std::string>& genes_of(const std::string& id) const;
};

// Mutation TSV: header "patient\tgene\timpact".
MutationCatalog load_mutations(const std::string& text,
                               const std::set<Impact>& keep = default_kept_impacts());
MutationCatalog load_mutations_file(const std::filesystem::path& path,
                                    const std::set<Impact>& keep = default_kept_impacts());

// Binary labels aligned to a pathway's vertex order.
struct LabelVector {
    std::string pathway_id;
    std::string patient_id;
    std::vector<std::uint8_t> labels;
};

LabelVector label_vector(const MutationCatalog& catalog, const std::string& patient,
                         const PathwayGraph& g);

// Patient-by-gene 0/1 matrix, rows in the given cohort order. Patients absent
// from the catalog get all-zero rows.
Eigen::MatrixXd label_matrix(const MutationCatalog& catalog,
                             const std::vector<std::string>& patients,
                             const PathwayGraph& g);

struct SurvivalRecord {
    std::string patient;
    double time = 0.0;  // days
    int event = 0;      // 1 death, 0 censored
};

struct SurvivalTable {
    std::vector<SurvivalRecord> records;

    const SurvivalRecord* find(const std::string& patient) const;
    std::vector<std::string> patients_sorted() const;
};

// Clinical TSV: header "patient\ttime_days\tevent".
SurvivalTable load_clinical(const std::string& text);
SurvivalTable load_clinical_file(const std::filesystem::path& path);

}  // namespace smspk
