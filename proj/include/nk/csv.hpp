#ifndef NK_CSV_HPP
#define NK_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nk/harness.hpp"

namespace nk {

// Numeric rendering used in every CSV cell: 12 significant digits.
std::string format_sig12(double v);

// summary: algorithm,k,mean_fitness,se_fitness,mean_hamming,se_hamming,
//          mean_steps,early_term_rate,iterations
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);

// records: algorithm,k,replicate_index,best_fitness,hamming,steps_executed,
//          terminated_early,seed_used
void write_records_csv(std::ostream& os, const std::vector<ReplicateRecord>& records);

// trace: k,step,mean_moves_available (steps numbered from 1)
void write_trace_csv(std::ostream& os, const std::vector<int>& k_values,
                     const std::vector<MovesTrace>& traces);

// Minimal CSV table reader for the chart command. No quoting: the schemas
// above never emit commas inside fields.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const; // -1 when absent
};

CsvTable read_csv(std::istream& is);

} // namespace nk

#endif
