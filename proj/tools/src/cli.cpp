// Copyright 2026 The entshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "entshare/code_io.hpp"
#include "entshare/error.hpp"
#include "entshare/hybrid.hpp"
#include "entshare/qrss.hpp"
#include "entshare/schemes.hpp"
#include "entshare/version.hpp"

namespace entshare::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string code = "builtin:code_4_2_2";
  std::string format = "json";
  std::optional<int> t;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string out;
  std::string resource = "bell";
  std::string input = "+";
  bool no_corrections = false;
};

struct Loaded {
  StabilizerCode code;
  std::string source;
};

Loaded load_code(const std::string& source) {
  const auto colon = source.find(':');
  if (colon == std::string::npos) throw InputError("--code expects builtin:<name> or file:<path>");
  const std::string kind = source.substr(0, colon);
  const std::string value = source.substr(colon + 1);
  if (kind == "builtin") return {builtin(value), source};
  if (kind == "file") return {load_code_file(value), source};
  throw InputError("--code expects builtin:<name> or file:<path>");
}

Tolerances tolerances(const Options& opt) {
  Tolerances tol = default_tolerances();
  tol.compare = opt.tol;
  return tol;
}

// ---------------------------------------------------------------------------
// JSON helpers

Json complex_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json set_json(ShareSet s) { return Json(s.members()); }

template <typename T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json envelope(const std::string& command, const Options& opt, const std::optional<Loaded>& code,
              bool seeded, Json payload) {
  const Tolerances tol = tolerances(opt);
  Json env;
  env["schema"] = "entshare/1";
  env["tool_version"] = kVersion;
  env["command"] = command;
  if (code) env["code"] = Json{{"name", code->code.name}, {"source", code->source}};
  if (seeded) env["seed"] = opt.seed;
  env["config"] = Json{{"tol", tol.compare},
                       {"hermiticity", tol.hermiticity},
                       {"trace", tol.trace},
                       {"psd_floor", tol.psd_floor},
                       {"entropy_floor", tol.entropy_floor},
                       {"correlation", tol.correlation}};
  env["payload"] = std::move(payload);
  return env;
}

Json witnesses_json(const Witnesses& w) {
  Json j;
  j["recovery_fidelity"] = opt_json(w.recovery_fidelity);
  j["negativity"] = w.negativity;
  j["mutual_information_bits"] = w.mutual_information_bits;
  j["product_distance"] = opt_json(w.product_distance);
  j["decomposition_residual"] = opt_json(w.decomposition_residual);
  j["certificate"] = w.certificate.empty() ? Json(nullptr) : Json(w.certificate);
  return j;
}

Json report_json(const SchemeReport& r) {
  Json counts;
  for (auto s : {SubsetStatus::Authorized, SubsetStatus::Intermediate, SubsetStatus::Forbidden,
                 SubsetStatus::PPTUndetermined, SubsetStatus::EntangledLeak}) {
    counts[to_string(s)] = r.count(s);
  }
  Json subsets = Json::array();
  for (const auto& c : r.subsets) {
    subsets.push_back(Json{{"subset", set_json(c.subset)},
                           {"status", to_string(c.status)},
                           {"witnesses", witnesses_json(c.witnesses)}});
  }
  Json access = Json::array();
  for (ShareSet s : r.access_structure) access.push_back(set_json(s));
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["counts"] = counts;
  j["perfect"] = r.perfect();
  j["access_structure"] = access;
  j["structure"] = Json{{"monotone", r.structure.monotone},
                        {"no_disjoint_pair", r.structure.no_disjoint_pair},
                        {"complements_unauthorized", r.structure.complements_unauthorized},
                        {"violations", r.structure.violations}};
  j["important_shares"] = Json{{"shares", set_json(r.important.shares)}, {"q", opt_json(r.important.q)}};
  j["share_bound"] = Json{{"ebits", r.bound.ebits},
                          {"q", opt_json(r.bound.q)},
                          {"bound", opt_json(r.bound.bound)},
                          {"saturated", r.bound.saturated},
                          {"leak_predicted", r.bound.leak_predicted},
                          {"leak_confirmed", r.bound.leak_confirmed},
                          {"undetermined_sets", r.bound.undetermined_sets},
                          {"consistent", r.bound.consistent},
                          {"summary", r.bound.summary}};
  j["subsets"] = subsets;
  return j;
}

// ---------------------------------------------------------------------------
// Table helpers

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string num(const std::optional<double>& v) { return v ? num(*v) : "-"; }

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t i = 0; i < rows_[r].size(); ++i) {
        if (i + 1 == rows_[r].size()) {
          os << rows_[r][i] << "\n";
        } else {
          os << std::left << std::setw(static_cast<int>(width[i])) << rows_[r][i] << "  ";
        }
      }
      if (r == 0) {
        for (std::size_t i = 0; i < width.size(); ++i) {
          os << std::string(width[i], '-') << (i + 1 == width.size() ? "\n" : "  ");
        }
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void print_matrix(std::ostream& os, const std::string& title, const Matrix& m) {
  os << title << "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << "  ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      os << num(z.real()) << (z.imag() < 0 ? "-" : "+") << num(std::abs(z.imag())) << "i"
         << (c + 1 == m.cols() ? "\n" : "  ");
    }
  }
}

// ---------------------------------------------------------------------------
// Commands. Each returns the exit code and writes to `os`.

int cmd_classify(const Options& opt, std::ostream& os) {
  const Loaded code = load_code(opt.code);
  const auto scheme = build_scheme(code.code);
  ClassifyOptions copts;
  copts.tol = tolerances(opt);
  const SchemeReport r = classify_all(scheme, copts);
  const bool ok = r.structure.ok() && r.bound.consistent;

  if (opt.format == "json") {
    os << envelope("classify", opt, code, false, report_json(r)).dump(2) << "\n";
  } else {
    os << code.code.name << " [[" << r.n << "," << r.k << "," << code.code.d << "]]  " << r.subsets.size() << " subsets\n\n";
    Table t({"subset", "status", "fidelity", "negativity", "mutual_info", "product_dist", "residual", "certificate"});
    for (const auto& c : r.subsets) {
      const auto& w = c.witnesses;
      t.add({c.subset.to_string(), to_string(c.status), num(w.recovery_fidelity), num(w.negativity),
             num(w.mutual_information_bits), num(w.product_distance), num(w.decomposition_residual),
             w.certificate.empty() ? "-" : w.certificate});
    }
    t.print(os);
    os << "\n";
    for (auto s : {SubsetStatus::Authorized, SubsetStatus::Intermediate, SubsetStatus::Forbidden,
                   SubsetStatus::PPTUndetermined, SubsetStatus::EntangledLeak}) {
      os << to_string(s) << ": " << r.count(s) << "\n";
    }
    os << "access structure: " << (r.structure.ok() ? "ok" : "violated") << "\n";
    for (const auto& v : r.structure.violations) os << "  " << v << "\n";
    os << "share bound: " << r.bound.summary << "\n";
  }
  return ok ? kSuccess : kVerificationFailure;
}

struct Check {
  std::string name;
  bool passed = false;
  std::optional<double> value;
  std::string detail;
};

int cmd_verify(const Options& opt, std::ostream& os) {
  const Loaded code = load_code(opt.code);
  const auto scheme = build_scheme(code.code);
  const Tolerances tol = tolerances(opt);
  ClassifyOptions copts;
  copts.tol = tol;
  const SchemeReport r = classify_all(scheme, copts);

  std::vector<Check> checks;
  checks.push_back({"access_structure", r.structure.ok(), std::nullopt,
                    r.structure.ok() ? "monotone, no disjoint authorized pair, complements unauthorized"
                                     : std::to_string(r.structure.violations.size()) + " violations"});

  double min_fid = 1.0, max_res = 0.0, max_prod = 0.0;
  for (const auto& c : r.subsets) {
    if (c.witnesses.recovery_fidelity) min_fid = std::min(min_fid, *c.witnesses.recovery_fidelity);
    if (c.witnesses.decomposition_residual) max_res = std::max(max_res, *c.witnesses.decomposition_residual);
    if (c.status == SubsetStatus::Forbidden && c.witnesses.product_distance) {
      max_prod = std::max(max_prod, *c.witnesses.product_distance);
    }
  }
  checks.push_back({"recovery", min_fid >= 1.0 - tol.compare, min_fid, "minimum fidelity over authorized sets"});
  checks.push_back({"separability_certificates", max_res < tol.compare, max_res,
                    "maximum decomposition residual"});
  checks.push_back({"forbidden_product", max_prod < tol.compare, max_prod,
                    "maximum product distance over forbidden sets"});
  checks.push_back({"share_bound", r.bound.consistent, std::nullopt, r.bound.summary});

  if (code.code.name == "shor_9_1_3" && scheme.shares() == 9) {
    const ShorTripletReport shor = verify_shor_triplet_classes(scheme, r, tol);
    for (const auto& c : shor.classes) {
      checks.push_back({"triplet_class " + c.name, c.passed, c.max_residual,
                        std::to_string(c.members) + " subsets in orbit"});
    }
    checks.push_back({"triplet_classes_exhaustive", shor.exhaustive, std::nullopt,
                      std::to_string(shor.class_union_size) + " covered of " +
                          std::to_string(shor.non_correctable_unauthorized)});
  }

  const LeakageReport leak = qrss_leakage_report(scheme, r, tol);
  const std::string verdict = r.perfect() ? "perfect" : (r.bound.undetermined_sets ? "undetermined" : "non-perfect");
  const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });

  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& c : checks) {
      arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"value", opt_json(c.value)}, {"detail", c.detail}});
    }
    Json payload;
    payload["verdict"] = verdict;
    payload["leakage"] = leak.verdict;
    payload["passed"] = all_pass;
    payload["checks"] = arr;
    os << envelope("verify", opt, code, false, payload).dump(2) << "\n";
  } else {
    Table t({"check", "result", "value", "detail"});
    for (const auto& c : checks) t.add({c.name, c.passed ? "pass" : "FAIL", num(c.value), c.detail});
    t.print(os);
    os << "\nscheme: " << verdict << "\nleakage: " << leak.verdict << "\n";
  }
  return all_pass ? kSuccess : kVerificationFailure;
}

int cmd_hybrid(const Options& opt, std::ostream& os) {
  if (!opt.t) throw InputError("hybrid needs --t");
  const Loaded code = load_code(opt.code);
  const auto scheme = build_scheme(code.code);
  const Tolerances tol = tolerances(opt);
  const HybridReport h = hybrid_analyze(scheme, *opt.t, opt.seed, std::nullopt, tol);
  const bool ok = h.secure(tol.compare);

  if (opt.format == "json") {
    Json subsets = Json::array();
    for (const auto& s : h.subsets) {
      subsets.push_back(Json{{"subset", set_json(s.subset)},
                             {"quantum_authorized", s.quantum_authorized},
                             {"key_shares", s.key_shares},
                             {"key_known", s.key_known},
                             {"reconstructed_key", opt_json(s.reconstructed_key)},
                             {"recovery_fidelity", opt_json(s.recovery_fidelity)},
                             {"key_unknown_residual", s.key_unknown_residual},
                             {"key_unknown_separable", s.key_unknown_separable}});
    }
    const nlohmann::json classical = h.classical;
    Json payload;
    payload["n"] = h.n;
    payload["k"] = h.k;
    payload["q"] = h.q;
    payload["t"] = h.t;
    payload["key"] = h.key.l;
    payload["classical_shares"] = Json::parse(classical.dump());
    payload["secure"] = ok;
    payload["subsets"] = subsets;
    os << envelope("hybrid", opt, code, true, payload).dump(2) << "\n";
  } else {
    os << code.code.name << "  q=" << h.q << "  t=" << h.t << "  p=" << h.classical.p << "  seed=" << h.seed
       << "  key=" << h.key.l << "\n\n";
    Table t({"subset", "quantum", "key_shares", "key_known", "fidelity", "key_unknown_residual", "separable"});
    for (const auto& s : h.subsets) {
      t.add({s.subset.to_string(), s.quantum_authorized ? "yes" : "no", std::to_string(s.key_shares),
             s.key_known ? "yes" : "no", num(s.recovery_fidelity), num(s.key_unknown_residual),
             s.key_unknown_separable ? "yes" : "no"});
    }
    t.print(os);
    os << "\nsecure: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_teleport(const Options& opt, std::ostream& os) {
  const DensityMatrix input = named_qubit_state(opt.input);
  const DensityMatrix resource = named_resource(opt.resource);
  const TeleportOutcome t = teleport(input, resource, !opt.no_corrections);
  const double distance = trace_distance(DensityMatrix(t.output.layout(), input.matrix()), t.output);

  // Choi matrix of the identity channel for comparison.
  Matrix identity_choi = Matrix::Zero(4, 4);
  identity_choi(0, 0) = identity_choi(0, 3) = identity_choi(3, 0) = identity_choi(3, 3) = 1.0;
  const bool identity = (t.choi - identity_choi).cwiseAbs().maxCoeff() < opt.tol;

  if (opt.format == "json") {
    Json payload;
    payload["resource"] = opt.resource;
    payload["input"] = opt.input;
    payload["corrections"] = !opt.no_corrections;
    payload["input_state"] = matrix_json(input.matrix());
    payload["output_state"] = matrix_json(t.output.matrix());
    payload["choi"] = matrix_json(t.choi);
    payload["cptp"] = t.cptp;
    payload["identity_channel"] = identity;
    payload["trace_distance_to_input"] = distance;
    os << envelope("teleport", opt, std::nullopt, false, payload).dump(2) << "\n";
  } else {
    os << "resource: " << opt.resource << "  input: " << opt.input
       << "  corrections: " << (opt.no_corrections ? "off" : "on") << "\n";
    print_matrix(os, "output:", t.output.matrix());
    os << "trace distance to input: " << num(distance) << "\n";
    os << "channel: " << (identity ? "identity" : "not identity") << ", " << (t.cptp ? "CPTP" : "NOT CPTP") << "\n";
  }
  return t.cptp ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement sharing schemes from stabilizer codes", "entshare"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--tol", opt.tol, "comparison tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", opt.out, "write the report to this file");
  };
  auto add_code = [&opt](CLI::App* sub) {
    sub->add_option("--code", opt.code, "builtin:<name> or file:<path>");
  };

  auto* classify = app.add_subcommand("classify", "classify every subset of shares");
  add_code(classify);
  add_common(classify);
  auto* verify = app.add_subcommand("verify", "run the scheme checks");
  add_code(verify);
  add_common(verify);
  auto* hybrid = app.add_subcommand("hybrid", "classical-key hybrid analysis");
  add_code(hybrid);
  add_common(hybrid);
  hybrid->add_option("--t", opt.t, "classical threshold");
  hybrid->add_option("--seed", opt.seed, "key and share seed");
  auto* tele = app.add_subcommand("teleport", "averaged teleportation channel");
  add_common(tele);
  tele->add_option("--resource", opt.resource, "bell, classical or product");
  tele->add_option("--input", opt.input, "0, 1, +, -, +i or -i");
  tele->add_flag("--no-corrections", opt.no_corrections, "skip the Pauli corrections");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    if (classify->parsed()) code = cmd_classify(opt, buffer);
    else if (verify->parsed()) code = cmd_verify(opt, buffer);
    else if (hybrid->parsed()) code = cmd_hybrid(opt, buffer);
    else code = cmd_teleport(opt, buffer);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (opt.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << opt.out << "\n";
      return kInputError;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace entshare::cli
