#ifndef CUBESLICE_REPORT_HPP
#define CUBESLICE_REPORT_HPP

#include <string>

#include "cubeslice/classifier.hpp"
#include "cubeslice/color.hpp"

namespace cubeslice {

/// Reference rows transcribed from the published tables; empty when the
/// paper has no row for the requested dimension.
namespace refs {
/// Total type counts (affine d=3..6, central d=3..7, generic rows d>=2).
int affine_total(int d);
int central_total(int d);
int generic_affine(int d);
int generic_central(int d);
/// Per-k breakdown rows with bracketed new-type counts.
struct BreakdownRow {
    std::vector<int> per_k;
    std::vector<int> per_k_new;  // entries for k = 1..
    bool known = false;
};
BreakdownRow breakdown(Mode mode, int d);
/// Master / one-vertex cell counts (threshold and resonance sequences).
long long master_cells(int d);     // affine C_d master arrangement
long long one_vertex_cells(int d); // cells of a one-vertex flat
/// Color class counts for d = 3,4,5.
int color_classes(int d);
}  // namespace refs

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Computed run against the published totals and per-k rows.
std::vector<CheckResult> check_tables(const ClassificationRun& run);

/// Master and one-vertex cell counts against the quoted sequence terms for
/// dimensions 3..d_max.
std::vector<CheckResult> check_oeis(int d_max, Mode mode, int workers = 1);

/// Color class count at dimension d against 12 / 61 / 484.
CheckResult check_color_classes(int d, int workers = 1);

/// Conjecture: every pairwise S_k intersection is the cube type (central).
CheckResult check_conjecture(const ClassificationRun& central_run);

/// Edge-criterion grouping matches type classes (central, d <= 4).
CheckResult check_thm22(int d, int workers = 1);

/// (canonical key, affine k) pairs realized by central slices, computed from
/// a central run; used to mark central-realizable entries in affine tables.
std::set<std::pair<std::string, int>> central_marks(const ClassificationRun& central_run);

/// Emit {d}cube{f|u|s}{c}{scope}.txt files for the run into out_dir.
/// kinds is a subset of {"f","u","s"}. Returns the written paths.
std::vector<std::string> emit_run_files(const ClassificationRun& run, const std::string& out_dir,
                                        const std::set<std::string>& kinds);

/// Color class files: {d}cubeGraphClasses.txt (vertex count, sorted edge
/// list, color bit-string per line) and {d}cubeGraphVerts.txt (slice vertex
/// coordinates per line).
std::vector<std::string> emit_graph_files(int d, const std::map<std::string, Slice>& classes,
                                          const std::string& out_dir);

/// CSV "vertex_count,affine_all,affine_generic,central_all,central_generic".
std::string histogram_csv(const ClassificationRun* affine_run, const ClassificationRun* central_run);

/// Human-readable per-k summary of a run (breakdown-table style).
std::string render_summary(const ClassificationRun& run);

/// f-vectors by k with central markers (Table-5 style), affine run plus the
/// matching central run.
std::string render_fvector_table(const ClassificationRun& affine_run,
                                 const ClassificationRun& central_run);

}  // namespace cubeslice

#endif
