#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commutant/commutativity.hpp"
#include "commutant/system.hpp"

namespace commutant {

enum class CommClass { Never, Conditional, Always };

const char* comm_class_name(CommClass c);

/// One commutativity condition of a catalog entry: the parameter
/// substitutions and the resulting final-form coefficient templates.
struct ConditionChoice {
  std::string label;                     // e.g. "v = -0.5"
  std::string roman;                     // "i", "ii", ... ("" when single)
  std::map<std::string, double> substitutions;
  std::string a2, a1, a0;                // final-form templates
  std::optional<std::string> forcing;    // parseable final-form forcing
  std::optional<std::string> printed_note;  // where the printed row differs
};

/// Closed-form conjugate templates over the entry parameters plus c2, c1, c0.
struct Table4Row {
  std::string label;  // matching condition label; "no condition" for rows 9/13
  std::string b2, b1, b0;
  std::optional<std::string> printed_note;
  bool erratum = false;  // documented paper erratum (symmetric-top mu row)
};

struct CatalogEntry {
  int id = 0;                 // Table 1 line number
  std::string key;            // CLI lookup name, e.g. "bessel-wave"
  std::string name;           // display name, e.g. "Bessel DE-wave"
  std::string formula;        // Table 1 one-liner, for listings
  std::string a2, a1, a0;     // general-form templates (a0 may be
                              // non-parseable when evaluable is false)
  std::optional<std::string> forcing;          // parseable template
  std::optional<std::string> forcing_display;  // as printed when not parseable
  std::vector<std::pair<std::string, double>> params;  // ordered defaults
  Domain domain;
  CommClass expected_class;   // Table 2
  std::vector<ConditionChoice> conditions;  // Table 3
  std::vector<Table4Row> table4;            // Table 4 (empty if absent)
  bool evaluable = true;      // false: general form needs sn(x, k)
  std::vector<std::string> notes;

  Params default_params() const;
  bool in_table4() const { return !table4.empty(); }
};

/// The paper's 30-equation catalog as immutable static data.
class Catalog {
 public:
  static const Catalog& standard();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  /// Lookup by key ("bessel") or by Table 1 line number ("4").
  const CatalogEntry* find(const std::string& key_or_id) const;
  const CatalogEntry& at(int id) const;

  std::vector<CatalogEntry> entries_;  // mutable copies allowed for tests
};

/// Builds the LtvSystem for an entry. `condition` selects a final form by
/// label (whitespace-insensitive) or roman numeral. Overrides are applied
/// on top of the defaults. Throws SystemError for unknown conditions or a
/// non-evaluable general form.
LtvSystem instantiate(const CatalogEntry& entry, const Params& overrides = {},
                      std::optional<Domain> domain = std::nullopt,
                      const std::optional<std::string>& condition = std::nullopt);

const ConditionChoice* find_condition(const CatalogEntry& entry,
                                      const std::string& label);

struct Classification {
  int id = 0;
  std::string key;
  CommClass expected;
  std::optional<CommClass> computed;  // empty: metadata-only entry
  bool metadata_only = false;
  bool agrees = false;
  std::optional<CommutativityReport> general_report;
  std::vector<std::pair<std::string, Verdict>> condition_verdicts;
};

/// Runs check_commutativity on the general form and on each condition's
/// final form; computed class is Always / Conditional / Never accordingly.
Classification classify(const CatalogEntry& entry, int grid_n = kProbeGridSize,
                        double tol = 1e-9);

/// Instantiates the Table 4 closed form with the given constants. Throws
/// SystemError when the entry is absent from Table 4.
LtvSystem table4_conjugate_of(const CatalogEntry& entry,
                              const std::optional<std::string>& condition,
                              const PairConstants& c);

struct VerifyIssue {
  int id = 0;
  std::string key;
  std::string table;    // "table2" / "table3" / "table4"
  std::string detail;
  bool documented = false;  // expected erratum from the allowlist
};

struct VerifyReport {
  double tolerance = 0.0;
  std::vector<Classification> classifications;
  std::vector<VerifyIssue> issues;   // documented errata and unexpected ones
  std::vector<std::string> notes;    // informational catalog notes
  int checks_run = 0;

  bool ok() const;   // true iff every issue is a documented erratum
  std::string to_text() const;
};

/// Cross-checks Tables 2-4 numerically: classification agreement,
/// substituted templates vs final forms, final-form constancy, and
/// synthesized conjugates vs Table 4 templates (3 random constant triples
/// per row, c2 in (0,2]). Disagreements are report content, not failures.
VerifyReport verify_tables(const Catalog& catalog, double tol = 1e-9,
                           unsigned seed = 0x5eedu,
                           Exec exec = Exec::Parallel);

}  // namespace commutant
