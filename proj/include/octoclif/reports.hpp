#pragma once

#include "octoclif/checks.hpp"
#include "octoclif/format.hpp"
#include "octoclif/rotation.hpp"
#include "octoclif/split_octonion.hpp"

#include <string>
#include <vector>

namespace octoclif {

inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr const char *kSchemaVersion = "1";

enum class Format { text, json, csv, latex };

Format parse_format(const std::string &name); // throws std::invalid_argument
std::string format_name(Format f);

/// Provenance block embedded in every report: tool version, basis source,
/// convention, and the printed-source labels of all fixtures consulted.
struct ReportContext {
    std::string command;
    std::string basis_source = "split";
    std::string convention = "A";
    std::vector<std::string> fixtures;
};

json signature_to_json(const SignatureReport &sig);
json diff_report_to_json(const DiffReport &d);

std::string render_generators(const GeneratorSet &g, Format f, const ReportContext &ctx);
std::string render_u_table(Format f, const ReportContext &ctx);
std::string render_e_table(Format f, const ReportContext &ctx);
std::string render_left_mul(Format f, const ReportContext &ctx);
std::string render_summary(const SuiteResult &s, Format f, const ReportContext &ctx);
std::string render_rotation(const RotationOutcome &out, Format f, const ReportContext &ctx);
std::string render_table2(const TransformTable &derived, const Table2Diff &diff, Format f,
                          const ReportContext &ctx);

/// The full discrepancy ledger: signature census of all four generator
/// sources, every pairwise construction diff, the printed-fixture findings,
/// and the verification totals.
std::string render_full_report(Format f, const ReportContext &ctx);

} // namespace octoclif
