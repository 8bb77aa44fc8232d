#include "commutant/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <sstream>

namespace commutant {

namespace detail {
std::vector<CatalogEntry> build_catalog_entries();  // catalog_data.cpp
}

const char* comm_class_name(CommClass c) {
  switch (c) {
    case CommClass::Never: return "Never";
    case CommClass::Conditional: return "Conditional";
    case CommClass::Always: return "Always";
  }
  return "?";
}

Params CatalogEntry::default_params() const {
  Params p;
  for (const auto& [k, v] : params) p[k] = v;
  return p;
}

const Catalog& Catalog::standard() {
  static const Catalog instance{detail::build_catalog_entries()};
  return instance;
}

const CatalogEntry* Catalog::find(const std::string& key_or_id) const {
  for (const CatalogEntry& e : entries_)
    if (e.key == key_or_id) return &e;
  try {
    const int id = std::stoi(key_or_id);
    for (const CatalogEntry& e : entries_)
      if (e.id == id) return &e;
  } catch (...) {
  }
  return nullptr;
}

const CatalogEntry& Catalog::at(int id) const {
  for (const CatalogEntry& e : entries_)
    if (e.id == id) return e;
  throw std::out_of_range("no catalog entry with id " + std::to_string(id));
}

namespace {

std::string squeeze(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const ConditionChoice* find_condition(const CatalogEntry& entry,
                                      const std::string& label) {
  const std::string want = squeeze(label);
  for (const ConditionChoice& c : entry.conditions) {
    if (squeeze(c.label) == want) return &c;
    if (!c.roman.empty() && squeeze(c.roman) == want) return &c;
  }
  return nullptr;
}

LtvSystem instantiate(const CatalogEntry& entry, const Params& overrides,
                      std::optional<Domain> domain,
                      const std::optional<std::string>& condition) {
  const ConditionChoice* choice = nullptr;
  if (condition) {
    choice = find_condition(entry, *condition);
    if (!choice) {
      std::ostringstream os;
      os << "unknown condition '" << *condition << "' for " << entry.name
         << "; available:";
      for (const auto& c : entry.conditions) os << " [" << c.label << "]";
      if (entry.conditions.empty()) os << " none";
      throw SystemError(os.str());
    }
  } else if (!entry.evaluable) {
    throw SystemError(entry.name +
                      " general form is not numerically evaluable: it "
                      "requires the Jacobi elliptic builtin sn(x, k); use a "
                      "condition-reduced form");
  }

  Params params = entry.default_params();
  for (const auto& [k, v] : overrides) {
    if (!params.count(k))
      throw SystemError("unknown parameter '" + k + "' for " + entry.name);
    params[k] = v;
  }
  if (choice)
    for (const auto& [k, v] : choice->substitutions) params[k] = v;

  const Domain dom = domain.value_or(entry.domain);
  std::string name = entry.name;
  if (choice && choice->label != "no condition")
    name += " [" + choice->label + "]";

  const std::string& a2 = choice ? choice->a2 : entry.a2;
  const std::string& a1 = choice ? choice->a1 : entry.a1;
  const std::string& a0 = choice ? choice->a0 : entry.a0;
  std::optional<std::string> forcing =
      choice ? choice->forcing : entry.forcing;
  return make_system(std::move(name), a2, a1, a0, forcing, std::move(params),
                     dom);
}

Classification classify(const CatalogEntry& entry, int grid_n, double tol) {
  Classification out;
  out.id = entry.id;
  out.key = entry.key;
  out.expected = entry.expected_class;

  if (!entry.evaluable) {
    out.metadata_only = true;
    out.agrees = true;  // expected class reported as metadata only
    for (const ConditionChoice& c : entry.conditions) {
      const LtvSystem sys = instantiate(entry, {}, std::nullopt, c.label);
      out.condition_verdicts.emplace_back(
          c.label, check_commutativity(sys, grid_n, tol, Exec::Serial).verdict);
    }
    return out;
  }

  const LtvSystem general = instantiate(entry);
  out.general_report = check_commutativity(general, grid_n, tol, Exec::Serial);

  bool any_condition_always = false;
  for (const ConditionChoice& c : entry.conditions) {
    const LtvSystem sys = instantiate(entry, {}, std::nullopt, c.label);
    const Verdict v =
        check_commutativity(sys, grid_n, tol, Exec::Serial).verdict;
    out.condition_verdicts.emplace_back(c.label, v);
    any_condition_always |= (v == Verdict::Always);
  }

  if (out.general_report->verdict == Verdict::Always)
    out.computed = CommClass::Always;
  else if (any_condition_always)
    out.computed = CommClass::Conditional;
  else
    out.computed = CommClass::Never;
  out.agrees = (*out.computed == out.expected);
  return out;
}

LtvSystem table4_conjugate_of(const CatalogEntry& entry,
                              const std::optional<std::string>& condition,
                              const PairConstants& c) {
  if (!entry.in_table4())
    throw SystemError(entry.name + " is absent from Table 4");
  const Table4Row* row = nullptr;
  if (condition) {
    const std::string want = squeeze(*condition);
    for (const Table4Row& r : entry.table4)
      if (squeeze(r.label) == want) row = &r;
    if (!row) {
      const ConditionChoice* choice = find_condition(entry, *condition);
      if (choice)
        for (const Table4Row& r : entry.table4)
          if (squeeze(r.label) == squeeze(choice->label)) row = &r;
    }
    if (!row)
      throw SystemError("no Table 4 row for condition '" + *condition +
                        "' of " + entry.name);
  } else {
    row = &entry.table4.front();
  }

  Params params = entry.default_params();
  if (const ConditionChoice* choice = find_condition(entry, row->label))
    for (const auto& [k, v] : choice->substitutions) params[k] = v;
  params["c2"] = c.c2;
  params["c1"] = c.c1;
  params["c0"] = c.c0;
  return make_system(entry.name + " Table-4 conjugate [" + row->label + "]",
                     row->b2, row->b1, row->b0, std::nullopt,
                     std::move(params), entry.domain);
}

// ---------------------------------------------------------------------------
// verify_tables
// ---------------------------------------------------------------------------

namespace {

struct EntryScratch {
  Classification cls;
  std::vector<VerifyIssue> issues;
  std::vector<std::string> notes;
  int checks = 0;
};

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// Pointwise coefficient comparison of two systems over n probe points.
// Returns an offending description, or empty on agreement.
std::string compare_systems(const LtvSystem& x, const LtvSystem& y, int n,
                            double tol) {
  const auto ts = uniform_grid(x.domain().lo, x.domain().hi, n);
  static const char* kNames[3] = {"a2", "a1", "a0"};
  for (double t : ts) {
    const auto cx = x.coeff_values(t);
    const auto cy = y.coeff_values(t);
    for (int j = 0; j < 3; ++j) {
      if (!rel_close(cx[j], cy[j], tol)) {
        std::ostringstream os;
        os << kNames[j] << "(" << t << "): " << cx[j] << " vs " << cy[j];
        return os.str();
      }
    }
  }
  return {};
}

void verify_entry(const CatalogEntry& entry, double tol, unsigned seed,
                  EntryScratch& out) {
  out.cls = classify(entry, kProbeGridSize, tol);
  for (const std::string& n : entry.notes)
    out.notes.push_back(entry.key + ": " + n);

  // (i) Table 2 classification agreement.
  ++out.checks;
  if (!out.cls.metadata_only && !out.cls.agrees) {
    std::ostringstream os;
    os << "computed " << comm_class_name(*out.cls.computed) << ", Table 2 says "
       << comm_class_name(out.cls.expected);
    out.issues.push_back(VerifyIssue{entry.id, entry.key, "table2", os.str(),
                                     entry.key == "baer"});
  }

  std::mt19937 rng(seed + static_cast<unsigned>(entry.id) * 7919u);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (std::size_t ci = 0; ci < entry.conditions.size(); ++ci) {
    const ConditionChoice& cond = entry.conditions[ci];
    if (cond.printed_note)
      out.notes.push_back(entry.key + " [" + cond.label +
                          "]: " + *cond.printed_note);

    LtvSystem final_sys = instantiate(entry, {}, std::nullopt, cond.label);

    // (ii) Substituted general templates match the final form.
    if (entry.evaluable) {
      ++out.checks;
      Params params = entry.default_params();
      for (const auto& [k, v] : cond.substitutions) params[k] = v;
      const LtvSystem substituted =
          make_system(entry.name + " (substituted)", entry.a2, entry.a1,
                      entry.a0, std::nullopt, std::move(params), entry.domain);
      const std::string diff =
          compare_systems(substituted, final_sys, kProbeGridSize, tol);
      if (!diff.empty())
        out.issues.push_back(
            VerifyIssue{entry.id, entry.key, "table3",
                        "condition [" + cond.label +
                            "]: substituted general form differs from the "
                            "final form at " +
                            diff,
                        false});
    }

    // (iii) The final form must satisfy the constancy test.
    ++out.checks;
    const CommutativityReport rep =
        check_commutativity(final_sys, kProbeGridSize, tol, Exec::Serial);
    if (!rep.always())
      out.issues.push_back(
          VerifyIssue{entry.id, entry.key, "table3",
                      "condition [" + cond.label +
                          "]: final form verdict is not Always (" +
                          std::string(verdict_name(rep.verdict)) + ")",
                      false});

    // (iv) Synthesized conjugate vs the Table 4 closed form.
    const Table4Row* row = nullptr;
    for (const Table4Row& r : entry.table4)
      if (squeeze(r.label) == squeeze(cond.label)) row = &r;
    if (row) {
      if (row->printed_note)
        out.notes.push_back(entry.key + " [" + row->label +
                            "]: " + *row->printed_note);
      if (row->erratum)
        out.issues.push_back(VerifyIssue{
            entry.id, entry.key, "table4",
            "row [" + row->label + "]: " +
                row->printed_note.value_or("printed row is erroneous"),
            true});
      for (int trial = 0; trial < 3; ++trial) {
        ++out.checks;
        PairConstants c;
        c.c2 = 2.0 - 2.0 * unit(rng);              // c2 in (0, 2]
        c.c1 = -2.0 + 4.0 * unit(rng);
        c.c0 = -2.0 + 4.0 * unit(rng);
        try {
          const LtvSystem synth = synthesize_pair(final_sys, c);
          const LtvSystem tab = table4_conjugate_of(entry, cond.label, c);
          const std::string diff = compare_systems(synth, tab, 101, tol);
          if (!diff.empty()) {
            std::ostringstream os;
            os << "row [" << row->label << "] (c2=" << c.c2 << ", c1=" << c.c1
               << ", c0=" << c.c0 << "): synthesized conjugate differs at "
               << diff;
            out.issues.push_back(VerifyIssue{entry.id, entry.key, "table4",
                                             os.str(), false});
          }
        } catch (const std::exception& ex) {
          out.issues.push_back(VerifyIssue{
              entry.id, entry.key, "table4",
              "row [" + row->label + "]: " + ex.what(), false});
        }
      }
    }
  }
}

struct VerifyCtx {
  const std::vector<CatalogEntry>& entries;
  double tol;
  unsigned seed;
  std::vector<EntryScratch>& scratch;
  std::vector<std::string>& errors;
};

}  // namespace

VerifyReport verify_tables(const Catalog& catalog, double tol, unsigned seed,
                           Exec exec) {
  const auto& entries = catalog.entries();
  std::vector<EntryScratch> scratch(entries.size());
  std::vector<std::string> errors(entries.size());

  VerifyCtx ctx{entries, tol, seed, scratch, errors};
  auto body = [](void* p, std::size_t i) {
    auto& c = *static_cast<VerifyCtx*>(p);
    try {
      verify_entry(c.entries[i], c.tol, c.seed, c.scratch[i]);
    } catch (const std::exception& ex) {
      c.errors[i] = ex.what();
    }
  };
  if (exec == Exec::Parallel) {
    detail::parallel_indices(entries.size(), &ctx, body);
  } else {
    for (std::size_t i = 0; i < entries.size(); ++i) body(&ctx, i);
  }

  // Merge in id order regardless of execution order.
  VerifyReport report;
  report.tolerance = tol;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!errors[i].empty())
      report.issues.push_back(VerifyIssue{entries[i].id, entries[i].key,
                                          "internal",
                                          "verification aborted: " + errors[i],
                                          false});
    report.classifications.push_back(std::move(scratch[i].cls));
    for (auto& issue : scratch[i].issues)
      report.issues.push_back(std::move(issue));
    for (auto& note : scratch[i].notes)
      report.notes.push_back(std::move(note));
    report.checks_run += scratch[i].checks;
  }
  return report;
}

bool VerifyReport::ok() const {
  return std::all_of(issues.begin(), issues.end(),
                     [](const VerifyIssue& i) { return i.documented; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "verify-tables (tol " << tolerance << ", " << checks_run
     << " checks)\n\n";
  os << "classification vs Table 2:\n";
  for (const Classification& c : classifications) {
    os << "  " << (c.id < 10 ? " " : "") << c.id << " " << c.key;
    for (std::size_t i = c.key.size(); i < 28; ++i) os << ' ';
    os << "expected " << comm_class_name(c.expected);
    if (c.metadata_only) {
      os << ", metadata-only (general form not evaluable)";
    } else {
      os << ", computed " << comm_class_name(*c.computed) << " -> "
         << (c.agrees ? "ok" : "MISMATCH");
    }
    os << "\n";
  }
  int documented = 0, unexpected = 0;
  for (const VerifyIssue& i : issues) (i.documented ? documented : unexpected)++;
  os << "\nerrata (documented): " << documented << "\n";
  for (const VerifyIssue& i : issues)
    if (i.documented)
      os << "  - [" << i.table << "] " << i.key << ": " << i.detail << "\n";
  os << "\nunexpected mismatches: " << unexpected << "\n";
  for (const VerifyIssue& i : issues)
    if (!i.documented)
      os << "  - [" << i.table << "] " << i.key << ": " << i.detail << "\n";
  if (!notes.empty()) {
    os << "\nnotes:\n";
    for (const std::string& n : notes) os << "  - " << n << "\n";
  }
  os << "\nverdict: " << (ok() ? "OK" : "MISMATCH") << "\n";
  return os.str();
}

}  // namespace commutant
