// Plain-text persistence: the trial CSV interchange format, single-column
// sample files, and the per-subject triples table.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssrt/racesim.hpp"
#include "ssrt/tsbpa.hpp"

namespace ssrt {

struct CsvError : std::runtime_error {
    CsvError(const std::string& what, int line_number)
        : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
          line(line_number) {}
    int line;
};

// Milliseconds with at most three decimals, trailing zeros trimmed; the
// formatter behind every CSV time cell so outputs are byte-stable.
std::string format_ms(double value);

// Trial CSV: header `index,kind,ssd_ms,rt_ms,inhibited`, empty fields for
// non-applicable cells, UTF-8.
std::string trials_to_csv(const SstDataset& d);
void write_trials_csv(const std::string& path, const SstDataset& d);
SstDataset read_trials_csv(const std::string& path);
SstDataset parse_trials_csv(const std::string& text);

// One `value` column.
void write_sample_csv(const std::string& path, const std::vector<double>& values);
std::vector<double> read_sample_csv(const std::string& path);

// Columns `subject,mu,sigma,tau`.
SubjectTriples read_triples_csv(const std::string& path, ClusterType cluster);
void write_triples_csv(const std::string& path, const SubjectTriples& triples);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace ssrt
