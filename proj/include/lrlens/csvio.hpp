#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lrlens {

struct CsvSchema {
    std::string name;
    int version = 1;
    std::vector<std::string> columns;

    std::string header_line() const;
    std::string file_name() const { return name + ".v" + std::to_string(version) + ".schema"; }
};

extern const CsvSchema kLandscapeSummarySchema;
extern const CsvSchema kPcaSummarySchema;
extern const CsvSchema kBarriersSchema;
extern const CsvSchema kSpectraSchema;
extern const CsvSchema kActivationsSchema;
extern const CsvSchema kFeaturesSchema;
extern const CsvSchema kPredictionsSchema;
extern const CsvSchema kTargetSchema;
const std::vector<const CsvSchema*>& all_csv_schemas();

// Shortest round-trip decimal text; non-finite values spelled inf/-inf/nan.
std::string format_double(double v);
double parse_double(const std::string& s);

// CSV files open with one comment line recording schema, config hash and
// seed, then the schema's column header.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const CsvSchema& schema, const std::string& config_hash,
              uint64_t seed);
    void row(const std::vector<std::string>& cells);
    void close(); // atomic rename into place
    ~CsvWriter();

private:
    std::string path_, tmp_path_;
    const CsvSchema& schema_;
    std::string buffer_;
    bool closed_ = false;
};

struct CsvData {
    std::string schema_name;
    int schema_version = 0;
    std::string config_hash;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    int64_t col(const std::string& name) const; // -1 when absent
    const std::string& cell(int64_t row, const std::string& name) const;
};

CsvData read_csv(const std::string& path);

// Compares a CSV's header against the committed schema file in schema_dir.
void validate_csv_schema(const std::string& csv_path, const std::string& schema_dir);

} // namespace lrlens
