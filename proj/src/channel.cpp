#include "commutant/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace commutant {

std::string SwitchStructure::label() const {
  std::string s(transmitter.begin(), transmitter.end());
  s += "->";
  s.append(receiver.begin(), receiver.end());
  return s;
}

std::vector<SwitchStructure> enumerate_structures(int count_a, int count_b) {
  if (count_a < 0 || count_b < 0 || count_a + count_b < 2)
    throw std::invalid_argument(
        "a switching structure needs at least 2 stages");
  const int total = count_a + count_b;

  std::vector<char> sorted;
  sorted.insert(sorted.end(), static_cast<std::size_t>(count_a), 'A');
  sorted.insert(sorted.end(), static_cast<std::size_t>(count_b), 'B');

  std::vector<SwitchStructure> out;
  for (int split = 1; split < total; ++split) {
    SwitchStructure s;
    s.transmitter.assign(sorted.begin(), sorted.begin() + split);
    s.receiver.assign(sorted.begin() + split, sorted.end());
    out.push_back(std::move(s));
  }
  if (count_a == 1 && count_b == 1) {
    out.push_back(SwitchStructure{{'B'}, {'A'}});
  } else if (count_a == count_b && count_a >= 2) {
    // The interleaved word (AB)^n split at its midpoint.
    std::vector<char> inter;
    for (int i = 0; i < count_a; ++i) {
      inter.push_back('A');
      inter.push_back('B');
    }
    SwitchStructure s;
    s.transmitter.assign(inter.begin(), inter.begin() + count_a);
    s.receiver.assign(inter.begin() + count_a, inter.end());
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

struct RunCtx {
  const LtvSystem& a;
  const LtvSystem& b;
  const InputSignal& input;
  std::span<const SwitchStructure> structures;
  double t0, t1, dt;
  std::vector<StructureRun>& runs;
  std::vector<std::string>& errors;
};

void run_one(RunCtx& ctx, std::size_t i) {
  const SwitchStructure& st = ctx.structures[i];
  std::vector<LtvSystem> chain;
  chain.reserve(st.stages());
  for (char label : st.transmitter)
    chain.push_back(label == 'A' ? ctx.a : ctx.b);
  for (char label : st.receiver)
    chain.push_back(label == 'A' ? ctx.a : ctx.b);

  StructureRun run;
  run.structure = st;
  run.trajectory = simulate_chain(chain, ctx.input, {}, ctx.t0, ctx.t1,
                                  ctx.dt);
  run.transmitted_column = "y" + std::to_string(st.transmitter.size());
  run.output_column = "y" + std::to_string(st.stages());
  ctx.runs[i] = std::move(run);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const std::vector<double>& a,
                    const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

DemoReport run_demo(const LtvSystem& sys_a, const LtvSystem& sys_b,
                    const InputSignal& input,
                    std::span<const SwitchStructure> structures, double t0,
                    double t1, double dt, double eps_out, double delta_min,
                    bool force, Exec exec) {
  if (structures.empty())
    throw std::invalid_argument("no switching structures given");

  DemoReport report;
  report.eps_out = eps_out;
  report.delta_min = delta_min;

  std::string why;
  const auto constants = verify_pair(sys_a, sys_b, 1e-6, &why);
  if (constants) {
    std::ostringstream os;
    os << "pair verified: b = (c2 a2, c2 a1 + c1 sqrt(a2), c2 a0 + c1 f_A + "
       << "c0) with c2=" << constants->c2 << ", c1=" << constants->c1
       << ", c0=" << constants->c0;
    report.notes.push_back(os.str());
  } else if (force) {
    report.notes.push_back("pair NOT verified (" + why +
                           "); proceeding because force was requested");
  } else {
    throw SystemError("systems do not form a commutative pair: " + why);
  }

  report.runs.resize(structures.size());
  std::vector<std::string> errors(structures.size());
  RunCtx ctx{sys_a, sys_b,  input, structures, t0,
             t1,    dt,     report.runs, errors};
  auto body = [](void* p, std::size_t i) {
    auto& c = *static_cast<RunCtx*>(p);
    try {
      run_one(c, i);
    } catch (const std::exception& ex) {
      c.errors[i] = ex.what();
    }
  };
  if (exec == Exec::Parallel) {
    detail::parallel_indices(structures.size(), &ctx, body);
  } else {
    for (std::size_t i = 0; i < structures.size(); ++i) body(&ctx, i);
  }
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty())
      throw IntegrationError("structure " + structures[i].label() + ": " +
                             errors[i]);

  double out_scale = 0.0, tx_scale = 0.0;
  for (const StructureRun& r : report.runs) {
    out_scale = std::max(out_scale, max_abs(r.trajectory.column(r.output_column)));
    tx_scale = std::max(tx_scale,
                        max_abs(r.trajectory.column(r.transmitted_column)));
  }
  out_scale = std::max(out_scale, 1e-300);
  tx_scale = std::max(tx_scale, 1e-300);

  double worst_output = 0.0;
  double best_divergence = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    for (std::size_t j = i + 1; j < report.runs.size(); ++j) {
      const auto& ri = report.runs[i];
      const auto& rj = report.runs[j];
      worst_output = std::max(
          worst_output, max_abs_diff(ri.trajectory.column(ri.output_column),
                                     rj.trajectory.column(rj.output_column)) /
                            out_scale);
      best_divergence = std::min(
          best_divergence,
          max_abs_diff(ri.trajectory.column(ri.transmitted_column),
                       rj.trajectory.column(rj.transmitted_column)) /
              tx_scale);
    }
  }
  if (report.runs.size() < 2) best_divergence = 0.0;

  report.output_agreement = worst_output;
  report.transmitted_divergence = best_divergence;
  report.output_pass = worst_output <= eps_out;
  report.divergence_pass = best_divergence >= delta_min;
  return report;
}

std::string DemoReport::summary_text() const {
  std::ostringstream os;
  os << "structures:";
  for (const StructureRun& r : runs) os << " " << r.structure.label();
  os << "\noutput_agreement     = " << output_agreement
     << "  (eps_out " << eps_out << ") -> "
     << (output_pass ? "PASS" : "FAIL");
  os << "\ntransmitted_divergence = " << transmitted_divergence
     << "  (delta_min " << delta_min << ") -> "
     << (divergence_pass ? "PASS" : "FAIL");
  os << "\nverdict: " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const std::string& n : notes) os << "note: " << n << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Demo preset systems
// ---------------------------------------------------------------------------

LtvSystem paper5_system_a(double w0, Domain domain) {
  return make_system(
      "paper5-A", "1", "2 + 2*sin(w0*t)",
      "5 - (1/2)*cos(2*w0*t) + 2*sin(w0*t) + w0*cos(w0*t)",
      std::nullopt, Params{{"w0", w0}}, domain);
}

LtvSystem paper5_system_b(double w0, double k0, Domain domain) {
  const LtvSystem a = paper5_system_a(w0, domain);
  return synthesize_pair(a, PairConstants{kPaper5K2, kPaper5K1, k0});
}

ExprPtr paper5_printed_b0() {
  return parse_expr(
      "409/32 - (1/4)*cos(2*w0*t) + (3/4)*sin(w0*t) + (1/2)*w0*cos(w0*t)");
}

double paper5_derive_k0(double w0) {
  const LtvSystem a = paper5_system_a(w0);
  const ExprPtr printed = bind_params(paper5_printed_b0(), {{"w0", w0}});
  const auto ts =
      uniform_grid(a.domain().lo, a.domain().hi, kProbeGridSize);
  double sum = 0.0;
  for (double t : ts) {
    const auto [a2, a1, a0] = a.coeff_values(t);
    (void)a2;
    (void)a1;
    const double rhs = eval_value(printed, t, {});
    sum += rhs - (kPaper5K2 * a0 + kPaper5K1 * f_of(a, t));
  }
  return sum / static_cast<double>(ts.size());
}

}  // namespace commutant
