// Copyright 2026 The cycletrace Authors
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

// Command-line front end: cycletrace <command> [graph] [options]

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cycletrace/cycletrace.hpp"

namespace {

using namespace cycletrace;

const std::vector<std::string> kCommands = {"betti",         "perm",        "faces",      "genus",
                                            "rotation-of",   "decide-fcp",  "construct-fcp", "max-genus",
                                            "upper-embeddable", "eden-check", "find-identity", "verify-eden12"};

enum class Format { Human, Machine };

// Collects key/value records; human mode prints "key value" followed by
// "# " prose notes, machine mode prints "key<TAB>value" only.
class Report {
 public:
  void add(std::string key, std::string value) { records_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void note(std::string prose) { notes_.push_back(std::move(prose)); }

  void print(std::ostream& out, Format format) const {
    const char sep = format == Format::Machine ? '\t' : ' ';
    for (const auto& [key, value] : records_) out << key << sep << value << '\n';
    if (format == Format::Human)
      for (const auto& n : notes_) out << "# " << n << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> records_;
  std::vector<std::string> notes_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "@name" or a missing "<name>.g" resolves to a built-in fixture.
std::string load_graph_text(const std::string& source) {
  if (!source.empty() && source.front() == '@') {
    if (auto text = fixtures::by_name(source.substr(1))) return std::string(*text);
    throw Error(ErrorKind::InvalidArgument, "no built-in fixture '" + source.substr(1) + "'");
  }
  namespace fs = std::filesystem;
  if (!fs::exists(source)) {
    const fs::path p(source);
    if (p.extension() == ".g")
      if (auto text = fixtures::by_name(p.stem().string())) return std::string(*text);
  }
  return read_file(source);
}

std::uint64_t parse_budget(const std::string& text, const std::string& source) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value <= 0)
    throw Error(ErrorKind::InvalidArgument, source + " must be a positive integer, got '" + text + "'");
  return static_cast<std::uint64_t>(value);
}

std::string join(const std::vector<std::string>& items, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

struct Invocation {
  std::string command;
  std::string graph_path;
  std::string order;
  std::string order_file;
  std::string rotation_path;
  std::string budget;
  std::string format = "human";
  std::string emit_dot;
  unsigned jobs = 1;
};

class Runner {
 public:
  explicit Runner(Invocation inv) : inv_(std::move(inv)) {}

  int run(std::ostream& out) {
    options_.jobs = inv_.jobs;
    if (!inv_.budget.empty()) {
      options_.budget = parse_budget(inv_.budget, "--budget");
    } else if (const char* env = std::getenv("CYCLETRACE_BUDGET"); env && *env) {
      options_.budget = parse_budget(env, "CYCLETRACE_BUDGET");
    }

    const std::string& c = inv_.command;
    if (c == "verify-eden12") {
      verify_eden12();
    } else {
      if (inv_.graph_path.empty()) throw Error(ErrorKind::InvalidArgument, "'" + c + "' needs a graph argument");
      graph_ = parse_graph(load_graph_text(inv_.graph_path));
      if (c == "betti") betti_cmd();
      else if (c == "perm") perm_cmd();
      else if (c == "faces") faces_cmd(true);
      else if (c == "genus") faces_cmd(false);
      else if (c == "rotation-of") rotation_of_cmd();
      else if (c == "decide-fcp") decide_fcp_cmd();
      else if (c == "construct-fcp") construct_fcp_cmd();
      else if (c == "max-genus") max_genus_cmd();
      else if (c == "upper-embeddable") upper_embeddable_cmd();
      else if (c == "eden-check") eden_check_cmd();
      else if (c == "find-identity") find_identity_cmd();
    }
    report_.print(out, inv_.format == "machine" ? Format::Machine : Format::Human);
    return 0;
  }

 private:
  EdgeOrdering ordering() const {
    if (!inv_.order.empty()) return parse_ordering_list(inv_.order);
    if (!inv_.order_file.empty()) return parse_ordering(read_file(inv_.order_file));
    throw Error(ErrorKind::InvalidArgument, "'" + inv_.command + "' needs --order or --order-file");
  }

  RotationSystem rotation() const {
    if (!inv_.rotation_path.empty()) return parse_rotation(read_file(inv_.rotation_path));
    return rotation_from_ordering(graph_, ordering());
  }

  void add_rotation(const RotationSystem& rho) {
    std::istringstream lines(write_rotation(graph_, rho));
    for (std::string line; std::getline(lines, line);) report_.add("rot", line.substr(4));
  }

  void emit_dot(const FaceTrace& faces) {
    if (inv_.emit_dot.empty()) return;
    std::ofstream dot(inv_.emit_dot);
    if (!dot) throw Error(ErrorKind::InvalidArgument, "cannot write '" + inv_.emit_dot + "'");
    dot << write_dot(graph_, faces);
  }

  void betti_cmd() {
    report_.add("vertices", graph_.vertex_count());
    report_.add("edges", graph_.edge_count());
    report_.add("connected", graph_.connected());
    report_.add("betti", betti(graph_));
  }

  void perm_cmd() {
    const Permutation pi = permutation_of_ordering(graph_, ordering());
    std::vector<std::string> type;
    for (std::size_t len : pi.cycle_type()) type.push_back(std::to_string(len));
    report_.add("pi", format_permutation(graph_, pi));
    report_.add("orbits", orbit_count(graph_, pi));
    report_.add("cycle_type", join(type, ","));
    report_.add("full_cyclic", pi.is_full_cycle());
    report_.add("identity", pi.is_identity());
    report_.note(pi.is_full_cycle() ? "The ordering is a full cyclic permutation ordering."
                                    : "The ordering is not a full cyclic permutation ordering.");
  }

  void faces_cmd(bool list_faces) {
    const RotationSystem rho = rotation();
    const FaceTrace faces = trace_faces(graph_, rho);
    if (list_faces) {
      std::istringstream lines(write_faces(faces));
      for (std::string line; std::getline(lines, line);) report_.add("face", line.substr(5));
    }
    report_.add("face_count", faces.face_count());
    if (!list_faces || graph_.connected()) report_.add("genus", genus_of(graph_, rho));
    emit_dot(faces);
  }

  void rotation_of_cmd() { add_rotation(rotation_from_ordering(graph_, ordering())); }

  void decide_fcp_cmd() {
    const FcpDecision d = decide_fcp(graph_);
    report_.add("betti", betti(graph_));
    report_.add("fcp", d.has_ordering);
    report_.add("reason", std::string(fcp_reason_name(d.reason)));
    if (d.witness) report_.add("witness_tree", join(d.witness->edges));
    report_.note(d.has_ordering ? "A full cyclic permutation ordering exists."
                                : "No full cyclic permutation ordering exists.");
  }

  void construct_fcp_cmd() {
    const auto built = construct_fcp_ordering(graph_, options_);
    report_.add("fcp", built.has_value());
    if (!built) {
      report_.add("reason", std::string(fcp_reason_name(decide_fcp(graph_).reason)));
      return;
    }
    report_.add("order", join(built->sequence));
    report_.add("pi", format_permutation(graph_, permutation_of_ordering(graph_, *built)));
    report_.add("full_cyclic", is_full_cyclic_ordering(graph_, *built));
  }

  void max_genus_cmd() {
    const MaxGenusResult r = max_genus_bruteforce(graph_, options_);
    const std::size_t beta = betti(graph_);
    report_.add("betti", beta);
    report_.add("gamma_max", r.gamma_max);
    report_.add("face_count", r.face_count);
    report_.add("upper_embeddable", r.gamma_max == beta / 2);
    add_rotation(r.witness);
    emit_dot(trace_faces(graph_, r.witness));
  }

  void upper_embeddable_cmd() {
    const UpperEmbeddability ue = is_upper_embeddable(graph_);
    report_.add("betti", betti(graph_));
    report_.add("upper_embeddable", ue.upper_embeddable);
    report_.add("odd_components", ue.odd_components);
    if (ue.witness) report_.add("witness_tree", join(ue.witness->edges));
  }

  void eden_check_cmd() {
    const EdenReport r = check_eden_conditions(graph_, ordering());
    for (const auto& [vertex, edges] : r.trail_map) report_.add("trail", vertex + ": " + join(edges));
    report_.add("m_even", r.m_even);
    report_.add("closed_trails", r.closed_trails);
    report_.add("bijective", r.bijective);
    report_.add("owner_on_trail", r.owner_on_trail);
    report_.add("total_is_2m", r.total_is_2m);
    report_.add("each_edge_twice", r.each_edge_twice);
    report_.add("euler_feasible", r.euler_feasible);
    report_.add("conditions_hold", r.conditions_hold());
  }

  void find_identity_cmd() {
    const bool feasible = identity_ordering_feasible(graph_);
    report_.add("feasible", feasible);
    const auto found = find_identity_ordering(graph_, options_);
    report_.add("found", found.has_value());
    if (found) report_.add("order", join(found->sequence));
    if (!feasible) report_.note("Parity or the Euler bound rules out an identity ordering.");
  }

  void verify_eden12() {
    const Eden12Report r = verify_eden12_fixture();
    for (const auto& c : r.checks) report_.add("check_" + c.name, std::string(c.passed ? "pass" : "fail"));
    report_.add("all_checks_pass", r.all_passed());
    report_.add("identity_ordering_exists", r.identity_ordering_feasible);
    report_.note("The trail conditions hold, but 12 - 20 + 12 = 4 would force genus -2.");
  }

  Invocation inv_;
  SearchOptions options_;
  Multigraph graph_;
  Report report_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Full cyclic and identity permutation orderings of multigraphs"};
  Invocation inv;
  app.add_option("command", inv.command, "Operation to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("graph", inv.graph_path, "Graph file, or @name for a built-in fixture");
  app.add_option("--order", inv.order, "Edge ordering as a comma-separated list");
  app.add_option("--order-file", inv.order_file, "File holding an 'order' line");
  app.add_option("--rotation", inv.rotation_path, "Rotation system file");
  app.add_option("--budget", inv.budget, "Maximum rotation systems to examine (default $CYCLETRACE_BUDGET or 1e7)");
  app.add_option("--format", inv.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--jobs", inv.jobs, "Worker threads for maximum-genus search")->check(CLI::PositiveNumber);
  app.add_option("--emit-dot", inv.emit_dot, "Write a Graphviz file with face boundaries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return Runner(inv).run(std::cout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::BudgetExceeded) return 2;
    if (e.kind() == ErrorKind::InternalVerificationFailure) return 3;
    return 1;
  }
}
