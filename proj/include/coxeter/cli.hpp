#pragma once

// Command front end shared by the coxeter tool and its tests.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/geom_rep.hpp"
#include "coxeter/json.hpp"
#include "coxeter/system.hpp"
#include "coxeter/tits_form.hpp"
#include "coxeter/verification.hpp"

namespace coxeter::cli {

enum class Command { Classify, Repr, Enumerate, Chamber, VerifyPaper };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Classify;
  std::size_t max_length = 10;
  std::size_t cap = kDefaultElementCap;
  std::uint64_t seed = 0;
  std::size_t samples = 32;
  int precision = 12;
  bool json = false;
  unsigned workers = 1;
  std::optional<IntMatrix> basis;
};

inline std::optional<Command> parse_command(std::string_view name) {
  if (name == "classify") return Command::Classify;
  if (name == "repr") return Command::Repr;
  if (name == "enumerate") return Command::Enumerate;
  if (name == "chamber") return Command::Chamber;
  if (name == "verify-paper") return Command::VerifyPaper;
  return std::nullopt;
}

inline bool needs_input(Command c) { return c != Command::VerifyPaper; }

/// Whitespace-separated integer rows; '#' starts a comment.
inline IntMatrix parse_int_matrix(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(line_no, 1, "expected an integer, found '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(line_no, 1, "empty matrix");
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ParseError(i + 1, 1, "basis matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace detail {

using json::Json;

inline std::string render_matrix(const FieldMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

inline void print_report_text(std::ostream& out, const Report& r) {
  out << r.title << "\n";
  for (const auto& c : r.checks) {
    out << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name;
    if (!c.pass) out << "\n         expected " << c.expected << "\n         computed " << c.computed;
    out << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  out << (r.overall() ? "PASS" : "FAIL") << " (" << r.passed() << "/" << r.checks.size() << " checks)\n";
}

inline void print_system_text(std::ostream& out, const CoxeterSystem& s) {
  out << "rank " << s.rank() << "\n";
  for (const auto& row : s.orders()) {
    out << " ";
    for (const auto& m : row) out << " " << m.to_string();
    out << "\n";
  }
}

inline int classify(const RunConfig& cfg, const CoxeterSystem& system, std::ostream& out) {
  const FormMatrix form = build_tits_form(system);
  const Signature sig = signature(form);
  const Classification cls = classify(sig);
  const unsigned level = system.field_level();
  if (cfg.json) {
    Json j{{"system", json::system(system)},
           {"irreducible", is_irreducible(system)},
           {"field_level", level},
           {"tits_form", json::matrix(form.entries, level, cfg.precision)},
           {"signature", json::signature(sig)},
           {"classification", to_string(cls)}};
    out << j.dump(2) << "\n";
  } else {
    print_system_text(out, system);
    out << "irreducible: " << (is_irreducible(system) ? "yes" : "no") << "\n";
    out << "field level: " << level << " (minimal polynomial " << field_for_level(level)->minpoly() << ")\n";
    out << "Tits form:\n" << render_matrix(form.entries);
    out << "signature (p,q,z): " << sig << "\n";
    out << "classification: " << to_string(cls) << "\n";
  }
  return kExitOk;
}

inline int repr(const RunConfig& cfg, const CoxeterSystem& system, std::ostream& out) {
  const FormMatrix form = build_tits_form(system);
  const unsigned level = system.field_level();
  const auto gens = generator_matrices(form);
  if (cfg.basis && cfg.basis->rows() != system.rank()) {
    throw std::invalid_argument("basis matrix size does not match the rank");
  }
  Json j{{"system", json::system(system)}, {"field_level", level}};
  Json jg = Json::array();
  Json jb = Json::array();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    jg.push_back(Json{{"generator", i + 1}, {"matrix", json::matrix(gens[i].entries, level, cfg.precision)}});
    if (cfg.basis) {
      const RepMatrix changed = change_basis(gens[i], *cfg.basis);
      jb.push_back(Json{{"generator", i + 1}, {"matrix", json::matrix(changed.entries, level, cfg.precision)}});
    }
  }
  j["generators"] = std::move(jg);
  std::optional<FormMatrix> changed_form;
  if (cfg.basis) {
    changed_form = change_basis(form, *cfg.basis);
    Json basis = Json::array();
    for (std::size_t r = 0; r < cfg.basis->rows(); ++r) basis.push_back(cfg.basis->row(r));
    j["basis"] = std::move(basis);
    j["generators_in_basis"] = std::move(jb);
    j["form_in_basis"] = json::matrix(changed_form->entries, level, cfg.precision);
  }
  if (cfg.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) out << "sigma_" << i + 1 << ":\n" << render_matrix(gens[i].entries);
  if (cfg.basis) {
    out << "in the basis given by the columns of\n";
    for (std::size_t r = 0; r < cfg.basis->rows(); ++r) {
      out << "  [";
      for (std::size_t c = 0; c < cfg.basis->cols(); ++c) out << (c ? ", " : "") << (*cfg.basis)(r, c);
      out << "]\n";
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out << "sigma_" << i + 1 << ":\n" << render_matrix(change_basis(gens[i], *cfg.basis).entries);
    }
    out << "form:\n" << render_matrix(changed_form->entries);
  }
  return kExitOk;
}

inline int enumerate(const RunConfig& cfg, const CoxeterSystem& system, std::ostream& out) {
  const ElementTable table = enumerate_elements(system, cfg.max_length, cfg.cap, cfg.workers);
  const unsigned level = system.field_level();
  const auto counts = table.counts_by_length();
  if (cfg.json) {
    for (const auto& rec : table.records) out << json::element_record(rec, level).dump() << "\n";
    Json summary{{"system", json::system(system)},
                 {"field_level", level},
                 {"elements", table.records.size()},
                 {"stop", to_string(table.stop)},
                 {"elements_by_length", counts}};
    out << summary.dump() << "\n";
    return kExitOk;
  }
  for (const auto& rec : table.records) {
    out << rec.length() << " " << render_word(rec.word) << " " << rec.matrix << "\n";
  }
  out << "elements: " << table.records.size() << " (stopped: " << to_string(table.stop) << ")\n";
  out << "elements by length:";
  for (auto c : counts) out << " " << c;
  out << "\n";
  return kExitOk;
}

inline int chamber(const RunConfig& cfg, const CoxeterSystem& system, std::ostream& out) {
  const FormMatrix form = build_tits_form(system);
  const unsigned level = system.field_level();
  const Vector v0 = canonical_chamber_point(form);
  const FieldElement q0 = form.apply(v0, v0);
  const auto samples = sample_chamber_points(form, cfg.seed, cfg.samples);
  std::size_t inside = 0;
  std::size_t negative = 0;
  for (const auto& v : samples) {
    inside += chamber_contains(form, v) ? 1 : 0;
    negative += form.apply(v, v).sign() < 0 ? 1 : 0;
  }
  Report report;
  try {
    report = theorem3_check(system, cfg.samples, cfg.seed);
  } catch (const PreconditionUnmet& e) {
    report.title = "chamber signature check";
    report.add("precondition: " + e.hypothesis(), "holds", "fails", false);
  }
  if (cfg.json) {
    Json j{{"system", json::system(system)},
           {"field_level", level},
           {"chamber",
            Json{{"canonical_point", json::vector(v0, level, cfg.precision)},
                 {"canonical_value", json::element(q0, level, cfg.precision)},
                 {"canonical_in_chamber", chamber_contains(form, v0)},
                 {"samples", samples.size()},
                 {"samples_in_chamber", inside},
                 {"samples_negative", negative},
                 {"seed", cfg.seed}}},
           {"checks", json::report(report, level, cfg.precision)}};
    out << j.dump(2) << "\n";
  } else {
    out << "canonical chamber point v0 = " << coxeter::detail::render(v0) << "\n";
    out << "B(v0,v0) = " << q0 << " ~ " << q0.to_decimal(cfg.precision) << "\n";
    out << "samples: " << samples.size() << " (seed " << cfg.seed << "), in chamber " << inside << ", B(v,v) < 0 "
        << negative << "\n";
    print_report_text(out, report);
  }
  return report.overall() ? kExitOk : kExitCheckFailed;
}

inline int verify_paper(const RunConfig& cfg, std::ostream& out) {
  const Report report = verify::verify_all();
  if (cfg.json) {
    out << Json{{"checks", json::report(report, 1, cfg.precision)}}.dump(2) << "\n";
  } else {
    print_report_text(out, report);
  }
  return report.overall() ? kExitOk : kExitCheckFailed;
}

}  // namespace detail

/// Runs one command against the system document `input`. Returns the exit
/// status: 0 success, 1 failed check, 2 usage or parse error.
inline int run(const RunConfig& cfg, std::string_view input, std::ostream& out, std::ostream& err) {
  if (cfg.precision < 1) {
    err << "error: precision must be at least 1\n";
    return kExitUsage;
  }
  try {
    if (cfg.command == Command::VerifyPaper) return detail::verify_paper(cfg, out);
    const CoxeterSystem system = parse_coxeter_spec(input);
    switch (cfg.command) {
      case Command::Classify: return detail::classify(cfg, system, out);
      case Command::Repr: return detail::repr(cfg, system, out);
      case Command::Enumerate: return detail::enumerate(cfg, system, out);
      case Command::Chamber: return detail::chamber(cfg, system, out);
      case Command::VerifyPaper: break;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SingularMatrix& e) {
    err << "usage error: basis matrix is singular\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace coxeter::cli
