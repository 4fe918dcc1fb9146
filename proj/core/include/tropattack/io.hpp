#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "tropattack/expgen.hpp"
#include "tropattack/matrix.hpp"

namespace tropattack {

// Matrix document: {"rows": r, "cols": c, "data": [[...], ...]} where each
// entry is a JSON integer, a string "p/q", or the string "-inf". Integer
// entries round-trip as JSON numbers, so serialization is bit-exact.
std::string serialize_matrix(const TropMatrix& m);
TropMatrix parse_matrix(const std::string& text);

void save_matrix(const std::filesystem::path& path, const TropMatrix& m);
TropMatrix load_matrix(const std::filesystem::path& path);

// Tab-separated rows, entries rendered like to_string(TropScalar).
std::string matrix_to_tsv(const TropMatrix& m);

// Experiment CSV schemas (stable):
//   records: d,trial,seed,kind,success,branch,elapsed_ms,m,n
//   summary: d,kind,success_rate,mean_ms,max_ms
std::string records_csv(const std::vector<ExperimentRecord>& records);
std::string summary_csv(const std::vector<DimSummary>& summary);
void write_records_csv(const std::filesystem::path& path,
                       const std::vector<ExperimentRecord>& records);
void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<DimSummary>& summary);

// Bundles named matrices and named integers into one JSON document; used to
// archive failing instances for later replay.
void save_instance(const std::filesystem::path& path,
                   const std::vector<std::pair<std::string, TropMatrix>>& matrices,
                   const std::vector<std::pair<std::string, long long>>& scalars);

}  // namespace tropattack
