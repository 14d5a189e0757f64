#include "smspk/cohort.hpp"

#include <algorithm>
#include <sstream>

#include "smspk/errors.hpp"
#include "smspk/text.hpp"

namespace smspk {

Impact impact_from_string(const std::string& s, int line) {
    if (s == "neutral") return Impact::neutral;
    if (s == "low") return Impact::low;
    if (s == "medium") return Impact::medium;
    if (s == "high") return Impact::high;
    throw ParseError("unknown impact category '" + s + "'", line);
}

const std::unordered_set<std::string>& MutationCatalog::genes_of(const std::string& id) const {
    auto it = mutated.find(id);
    if (it == mutated.end()) throw DataError("unknown patient '" + id + "'");
    return it->second;
}

MutationCatalog load_mutations(const std::string& text, const std::set<Impact>& keep) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw ParseError("empty mutation file", 1);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (split_fields(line, '\t') != std::vector<std::string>{"patient", "gene", "impact"}) {
        throw ParseError("mutation file must start with header: patient\\tgene\\timpact", 1);
    }

    MutationCatalog catalog;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line, '\t');
        if (fields.size() != 3) {
            throw ParseError("expected 3 tab-separated fields", lineno);
        }
        const std::string& patient = fields[0];
        const std::string& gene = fields[1];
        if (patient.empty() || gene.empty()) {
            throw ParseError("empty patient or gene field", lineno);
        }
        const Impact impact = impact_from_string(fields[2], lineno);
        auto& genes = catalog.mutated[patient];  // patient exists even if all rows filtered
        if (keep.count(impact)) genes.insert(gene);
    }

    catalog.patients.reserve(catalog.mutated.size());
    for (const auto& [patient, genes] : catalog.mutated) catalog.patients.push_back(patient);
    std::sort(catalog.patients.begin(), catalog.patients.end());
    return catalog;
}

MutationCatalog load_mutations_file(const std::filesystem::path& path,
                                    const std::set<Impact>& keep) {
    return load_mutations(read_text_file(path), keep);
}

LabelVector label_vector(const MutationCatalog& catalog, const std::string& patient,
                         const PathwayGraph& g) {
    const auto& genes = catalog.genes_of(patient);
    LabelVector lv;
    lv.pathway_id = g.id;
    lv.patient_id = patient;
    lv.labels.resize(g.genes.size(), 0);
    for (std::size_t i = 0; i < g.genes.size(); ++i) {
        if (genes.count(g.genes[i])) lv.labels[i] = 1;
    }
    return lv;
}

Eigen::MatrixXd label_matrix(const MutationCatalog& catalog,
                             const std::vector<std::string>& patients,
                             const PathwayGraph& g) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(static_cast<long>(patients.size()),
                                              g.vertex_count());
    for (std::size_t row = 0; row < patients.size(); ++row) {
        auto it = catalog.mutated.find(patients[row]);
        if (it == catalog.mutated.end()) continue;
        for (int col = 0; col < g.vertex_count(); ++col) {
            if (it->second.count(g.genes[col])) x(static_cast<long>(row), col) = 1.0;
        }
    }
    return x;
}

const SurvivalRecord* SurvivalTable::find(const std::string& patient) const {
    for (const auto& r : records) {
        if (r.patient == patient) return &r;
    }
    return nullptr;
}

std::vector<std::string> SurvivalTable::patients_sorted() const {
    std::vector<std::string> ids;
    ids.reserve(records.size());
    for (const auto& r : records) ids.push_back(r.patient);
    std::sort(ids.begin(), ids.end());
    return ids;
}

SurvivalTable load_clinical(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw ParseError("empty clinical file", 1);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (split_fields(line, '\t') != std::vector<std::string>{"patient", "time_days", "event"}) {
        throw ParseError("clinical file must start with header: patient\\ttime_days\\tevent", 1);
    }

    SurvivalTable table;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line, '\t');
        if (fields.size() != 3) {
            throw ParseError("expected 3 tab-separated fields", lineno);
        }
        SurvivalRecord rec;
        rec.patient = fields[0];
        if (rec.patient.empty()) throw ParseError("empty patient field", lineno);
        if (!seen.insert(rec.patient).second) {
            throw ParseError("duplicate patient '" + rec.patient + "'", lineno);
        }
        rec.time = parse_double(fields[1], lineno);
        if (rec.time < 0.0) throw ParseError("negative survival time", lineno);
        const long event = parse_long(fields[2], lineno);
        if (event != 0 && event != 1) {
            throw ParseError("event must be 0 (censored) or 1 (death)", lineno);
        }
        rec.event = static_cast<int>(event);
        table.records.push_back(std::move(rec));
    }
    return table;
}

SurvivalTable load_clinical_file(const std::filesystem::path& path) {
    return load_clinical(read_text_file(path));
}

}  // namespace smspk
