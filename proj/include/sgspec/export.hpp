#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgspec/catalog.hpp"
#include "sgspec/graph_oracle.hpp"
#include "sgspec/julia.hpp"
#include "sgspec/weyl.hpp"

// Delimited-text and JSON renderings of the library's data types. All CSV is
// comma-separated with a header row and LF line endings; floating values are
// printed with 17 significant digits so output round-trips bit-exactly.

namespace sgspec {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double v);

void write_catalog_csv(std::ostream& os, const std::vector<SpectralLine>& lines);
ordered_json catalog_json(const std::vector<SpectralLine>& lines);

void write_primitive_csv(std::ostream& os, int family,
                         const std::vector<PrimitiveEigenvalue>& entries);
ordered_json primitive_json(int family, const std::vector<PrimitiveEigenvalue>& entries);

void write_count_csv(std::ostream& os, const CountingResult& c);
ordered_json count_json(const CountingResult& c);

void write_weyl_scan_csv(std::ostream& os, const std::vector<WeylSample>& samples);
ordered_json weyl_scan_json(const std::vector<WeylSample>& samples);

void write_cover_csv(std::ostream& os, const std::vector<CoverInterval>& intervals);
void write_gaps_csv(std::ostream& os, int depth);  // heap-ordered B intervals
ordered_json julia_measure_json(int depth_max);
ordered_json classify_json(double t, int depth);

// One row per eigenvalue group; `statuses` (when given) must align with
// s.groups and fills the closure_status column, which is "-" otherwise.
void write_graph_spectrum_csv(std::ostream& os, const GraphSpectrum& s,
                              const std::vector<std::string>* statuses = nullptr);
ordered_json closure_report_json(const ClosureReport& rep);

ordered_json theorem_report_json(const TheoremReport& rep);

}  // namespace sgspec
