#include "nk/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace nk {

std::string format_sig12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
    os << "algorithm,k,mean_fitness,se_fitness,mean_hamming,se_hamming,"
          "mean_steps,early_term_rate,iterations\n";
    for (const auto& r : rows)
        os << algorithm_name(r.algorithm) << ',' << r.k << ','
           << format_sig12(r.mean_fitness) << ',' << format_sig12(r.se_fitness) << ','
           << format_sig12(r.mean_hamming) << ',' << format_sig12(r.se_hamming) << ','
           << format_sig12(r.mean_steps) << ',' << format_sig12(r.early_term_rate) << ','
           << r.count << '\n';
}

void write_records_csv(std::ostream& os, const std::vector<ReplicateRecord>& records) {
    os << "algorithm,k,replicate_index,best_fitness,hamming,steps_executed,"
          "terminated_early,seed_used\n";
    for (const auto& r : records)
        os << algorithm_name(r.algorithm) << ',' << r.k << ',' << r.replicate_index << ','
           << format_sig12(r.best_fitness) << ',' << r.hamming << ',' << r.steps_executed << ','
           << (r.terminated_early ? 1 : 0) << ',' << r.seed_used << '\n';
}

void write_trace_csv(std::ostream& os, const std::vector<int>& k_values,
                     const std::vector<MovesTrace>& traces) {
    os << "k,step,mean_moves_available\n";
    for (std::size_t i = 0; i < k_values.size(); ++i)
        for (std::size_t t = 0; t < traces[i].mean_moves.size(); ++t)
            os << k_values[i] << ',' << (t + 1) << ','
               << format_sig12(traces[i].mean_moves[t]) << '\n';
}

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

CsvTable read_csv(std::istream& is) {
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (line.back() == ',') fields.emplace_back();
        if (first) {
            table.header = std::move(fields);
            first = false;
        } else {
            table.rows.push_back(std::move(fields));
        }
    }
    return table;
}

} // namespace nk
