#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lashlab/surgdesc.hpp"
#include "lashlab/traintrack.hpp"

namespace lashlab {

/// Indices of the named families: K(a3, a2, a1, m, b1) are the 1/b1-lashings
/// in S^3 and K'(a3, a2, a1, m, b1) their S^1 x S^2 variants; b2 extends the
/// surgery diagram (0 in the published tables).
struct FamilyParams {
    Int a3, a2, a1, m, b1;
    Int b2 = 0;
    SurgeryVariant variant = SurgeryVariant::S3;

    /// The 1/b1-lashing parameters: a = (a1, a2, a3), p = 1, q = b1.
    LashingParams lashing() const;
};

enum class GenusStatus { Match, Mismatch, NoReference };

struct ReportRow {
    FamilyParams params;
    std::string error;  // non-empty: the remaining fields are unset

    std::optional<Int> lambda_alt;      // S3 rows
    std::optional<Int> genus_formula;   // S3 rows
    std::optional<Int> genus_table;     // tabulated genus, when published
    GenusStatus genus_status = GenusStatus::NoReference;
    std::optional<Int> strand_model;    // S3 rows

    bool h1_finite = false;
    std::optional<Int> h1_order;        // set when finite
    AbelianGroup h1_group;

    std::optional<bool> dual_route_ok;  // S3: lambda_alt == h1_order at r = 0
    std::optional<bool> winding_ok;     // S1xS2: order is a perfect square
    std::optional<Int> winding_root;    // braid-index prediction when it is
};

/// Computes one cross-validated row at r = 0.
ReportRow row(const FamilyParams& params);

/// Grid of parameter values keyed by "a3", "a2", "a1", "m", "b1", "b2";
/// rows are emitted in lexicographic order of (a3, a2, a1, m, b1, b2).
/// Per-row failures are recorded in the row, not thrown.
std::vector<ReportRow> table(const std::map<std::string, std::vector<Int>>& grid,
                             SurgeryVariant variant);

/// Parses "a3=0..1,a2=1,b1=1,2" style grid specs: comma-separated
/// assignments, each value a single integer, a lo..hi range, or a comma
/// list continued after the assignment.
std::map<std::string, std::vector<Int>> parse_grid(const std::string& text);

enum class TableFormat { Tsv, Kv };
std::string format_table(const std::vector<ReportRow>& rows, TableFormat format);
std::string format_row_kv(const ReportRow& r);

struct CheckReport {
    bool all_pass = true;
    int fixtures = 0;
    int failures = 0;
    std::string text;
};

/// Runs the built-in fixtures transcribed from the published tables: the ten
/// S^3 alternating-surgery orders, the dual-route equality, the closed-form
/// order polynomial grid, the six S^1 x S^2 groups with their winding
/// squares, the positive-braid genus profiles, the randomized twist/continued
/// fraction equivalence, and the genus-formula reconciliation report.
/// Deterministic across runs.
CheckReport run_check(bool verbose);

/// Writes the 16-component diagram file for the row, preceded by a comment
/// header recording the parameters, lambda_alt (S3) and H_1.
void export_diagram_file(const FamilyParams& params, const std::string& path);

/// The published S^3 rows: parameters, genus, alternating-surgery order.
struct Table1Row {
    int a3, a2, a1, m, b1;
    long genus;
    long order;
};
const std::vector<Table1Row>& table1_rows();

/// The published S^1 x S^2 rows: parameters, braid index, |H_1| structure.
struct Table2Row {
    int a3, a2, a1, m, b1;
    long braid_index;
    std::vector<long> torsion;
};
const std::vector<Table2Row>& table2_rows();

} // namespace lashlab
