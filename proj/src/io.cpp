// Copyright 2026 The Authors.
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

#include "ses/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace ses {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

Scalar parse_scalar(const std::string& s, int line_no) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw ParseError("expected a number, got '" + s + "'", line_no);
  return v;
}

int parse_int(const std::string& s, int line_no) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0')
    throw ParseError("expected an integer, got '" + s + "'", line_no);
  return static_cast<int>(v);
}

// Maps external string ids to dense indices in first-appearance order.
class NameTable {
 public:
  int declare(const std::string& name, int line_no, const char* kind) {
    auto [it, inserted] = index_.emplace(name, names_.size());
    if (!inserted)
      throw ParseError(std::string("duplicate ") + kind + " id '" + name + "'",
                       line_no);
    names_.push_back(name);
    return static_cast<int>(it->second);
  }
  int resolve(const std::string& name, int line_no, const char* kind) const {
    const auto it = index_.find(name);
    if (it == index_.end())
      throw ParseError(std::string("unknown ") + kind + " id '" + name + "'",
                       line_no);
    return static_cast<int>(it->second);
  }
  int get_or_declare(const std::string& name) {
    const auto it = index_.find(name);
    if (it != index_.end()) return static_cast<int>(it->second);
    index_.emplace(name, names_.size());
    names_.push_back(name);
    return static_cast<int>(names_.size()) - 1;
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> names_;
};

struct Triplet {
  int row;
  int col;
  Scalar value;
};

void fill_matrix(ArrayXXs& m, Eigen::Index rows, Eigen::Index cols,
                 const std::vector<Triplet>& entries) {
  m = ArrayXXs::Zero(rows, cols);
  for (const Triplet& e : entries) m(e.row, e.col) = e.value;
}

}  // namespace

std::string format_scalar(Scalar v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ProblemInstance read_instance(std::istream& in) {
  ProblemInstance inst;
  NameTable intervals, events, competing, users, locations;
  // Interval lines reference competing ids ahead of their declaration.
  std::vector<std::vector<std::pair<std::string, int>>> interval_competing;
  std::vector<Triplet> activity, interest, competing_interest;
  bool have_resources = false, have_k = false;
  int current_user = -1;

  enum Section { kNone, kHeader, kIntervals, kEvents, kCompeting, kUsers };
  Section section = kNone;
  int expected_section = 0;  // sections must appear in the canonical order
  bool saw_magic = false;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::vector<std::string> tok = tokenize(raw);
    if (tok.empty()) continue;

    if (!saw_magic) {
      if (tok.size() != 2 || tok[0] != "ses-instance" || tok[1] != "v1")
        throw ParseError("expected magic line 'ses-instance v1'", line_no);
      saw_magic = true;
      continue;
    }

    if (tok[0][0] == '[') {
      const std::string want[] = {"[header]", "[intervals]", "[events]",
                                  "[competing]", "[users]"};
      if (expected_section >= 5 || tok.size() != 1 ||
          tok[0] != want[expected_section])
        throw ParseError("unexpected section '" + tok[0] + "' (sections: " +
                             "[header] [intervals] [events] [competing] "
                             "[users], in order)",
                         line_no);
      section = static_cast<Section>(kHeader + expected_section);
      ++expected_section;
      continue;
    }

    switch (section) {
      case kNone:
        throw ParseError("content before [header]", line_no);
      case kHeader: {
        if (tok.size() != 2)
          throw ParseError("header lines are '<key> <value>'", line_no);
        if (tok[0] == "available_resources") {
          if (have_resources)
            throw ParseError("duplicate available_resources", line_no);
          inst.available_resources = parse_scalar(tok[1], line_no);
          have_resources = true;
        } else if (tok[0] == "k") {
          if (have_k) throw ParseError("duplicate k", line_no);
          inst.k = parse_int(tok[1], line_no);
          have_k = true;
        } else {
          throw ParseError("unknown header field '" + tok[0] + "'", line_no);
        }
        break;
      }
      case kIntervals: {
        intervals.declare(tok[0], line_no, "interval");
        interval_competing.emplace_back();
        for (std::size_t i = 1; i < tok.size(); ++i)
          interval_competing.back().push_back({tok[i], line_no});
        break;
      }
      case kEvents: {
        if (tok.size() != 3)
          throw ParseError("event lines are '<id> <location> <resources>'",
                           line_no);
        const int e = events.declare(tok[0], line_no, "event");
        CandidateEvent ev;
        ev.id = e;
        ev.location = locations.get_or_declare(tok[1]);
        ev.required_resources = parse_scalar(tok[2], line_no);
        inst.events.push_back(ev);
        break;
      }
      case kCompeting: {
        if (tok.size() != 2)
          throw ParseError("competing lines are '<id> <interval>'", line_no);
        const int c = competing.declare(tok[0], line_no, "competing");
        const int t = intervals.resolve(tok[1], line_no, "interval");
        inst.competing.push_back(
            {static_cast<CompetingId>(c), static_cast<IntervalId>(t)});
        break;
      }
      case kUsers: {
        if (tok[0] == "user") {
          if (tok.size() != 2)
            throw ParseError("user lines are 'user <id>'", line_no);
          current_user = users.declare(tok[1], line_no, "user");
        } else if (tok[0] == "activity" || tok[0] == "interest" ||
                   tok[0] == "competing_interest") {
          if (current_user < 0)
            throw ParseError("'" + tok[0] + "' before any 'user' line",
                             line_no);
          if (tok.size() != 3)
            throw ParseError("'" + tok[0] + "' lines are '" + tok[0] +
                                 " <id> <value>'",
                             line_no);
          const Scalar v = parse_scalar(tok[2], line_no);
          if (v < 0 || v > 1)
            throw ParseError("value " + tok[2] + " outside [0,1]", line_no);
          if (tok[0] == "activity")
            activity.push_back(
                {current_user, intervals.resolve(tok[1], line_no, "interval"),
                 v});
          else if (tok[0] == "interest")
            interest.push_back(
                {current_user, events.resolve(tok[1], line_no, "event"), v});
          else
            competing_interest.push_back(
                {current_user,
                 competing.resolve(tok[1], line_no, "competing"), v});
        } else {
          throw ParseError("unknown user directive '" + tok[0] + "'", line_no);
        }
        break;
      }
      default:
        throw ParseError("unknown directive '" + tok[0] + "'", line_no);
    }
  }

  if (!saw_magic) throw ParseError("empty instance file", 1);
  if (expected_section < 5)
    throw ParseError("missing sections (file ends after " +
                         std::to_string(expected_section) + " of 5)",
                     line_no);
  if (!have_resources || !have_k)
    throw ParseError("header must set available_resources and k", line_no);

  // Resolve the interval -> competing lists recorded before [competing].
  inst.intervals.resize(interval_competing.size());
  for (std::size_t t = 0; t < interval_competing.size(); ++t) {
    inst.intervals[t].id = static_cast<IntervalId>(t);
    for (const auto& [name, line] : interval_competing[t])
      inst.intervals[t].competing.push_back(
          static_cast<CompetingId>(competing.resolve(name, line, "competing")));
  }

  const auto num_u = static_cast<Eigen::Index>(users.names().size());
  fill_matrix(inst.activity, num_u, inst.num_intervals(), activity);
  fill_matrix(inst.event_interest, num_u, inst.num_events(), interest);
  fill_matrix(inst.competing_interest, num_u, inst.num_competing(),
              competing_interest);

  inst.interval_names = intervals.names();
  inst.event_names = events.names();
  inst.competing_names = competing.names();
  inst.user_names = users.names();
  inst.location_names = locations.names();

  inst.validate();  // partition consistency, bounds, cross references
  return inst;
}

ProblemInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'", 0);
  return read_instance(in);
}

void write_instance(const ProblemInstance& inst, std::ostream& out) {
  out << "ses-instance v1\n";
  out << "[header]\n";
  out << "available_resources " << format_scalar(inst.available_resources)
      << "\n";
  out << "k " << inst.k << "\n";
  out << "[intervals]\n";
  for (const TimeInterval& t : inst.intervals) {
    out << inst.interval_name(t.id);
    for (CompetingId c : t.competing) out << ' ' << inst.competing_name(c);
    out << '\n';
  }
  out << "[events]\n";
  for (const CandidateEvent& e : inst.events)
    out << inst.event_name(e.id) << ' ' << inst.location_name(e.location)
        << ' ' << format_scalar(e.required_resources) << '\n';
  out << "[competing]\n";
  for (const CompetingEvent& c : inst.competing)
    out << inst.competing_name(c.id) << ' ' << inst.interval_name(c.interval)
        << '\n';
  out << "[users]\n";
  for (Eigen::Index u = 0; u < inst.num_users(); ++u) {
    out << "user " << inst.user_name(static_cast<UserId>(u)) << '\n';
    for (int t = 0; t < inst.num_intervals(); ++t)
      if (inst.activity(u, t) != 0)
        out << "activity " << inst.interval_name(t) << ' '
            << format_scalar(inst.activity(u, t)) << '\n';
    for (int e = 0; e < inst.num_events(); ++e)
      if (inst.event_interest(u, e) != 0)
        out << "interest " << inst.event_name(e) << ' '
            << format_scalar(inst.event_interest(u, e)) << '\n';
    for (int c = 0; c < inst.num_competing(); ++c)
      if (inst.competing_interest(u, c) != 0)
        out << "competing_interest " << inst.competing_name(c) << ' '
            << format_scalar(inst.competing_interest(u, c)) << '\n';
  }
}

void write_instance_file(const ProblemInstance& inst,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw ParseError("cannot open output file '" + path + "'", 0);
  write_instance(inst, out);
}

void write_schedule(const Schedule& s, const ProblemInstance& inst,
                    std::ostream& out) {
  for (const Assignment& a : s.assignments())
    out << inst.event_name(a.event) << ',' << inst.interval_name(a.interval)
        << '\n';
}

void write_schedule_file(const Schedule& s, const ProblemInstance& inst,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw ParseError("cannot open output file '" + path + "'", 0);
  write_schedule(s, inst, out);
}

std::string solve_csv_header() {
  return "solver,k,E,T,U,utility,score_computations,assignments_examined,"
         "elapsed_ms,seed";
}

std::string solve_csv_row(const SolverReport& r) {
  std::ostringstream out;
  out << r.solver << ',' << r.k << ',' << r.num_events << ','
      << r.num_intervals << ',' << r.num_users << ','
      << format_scalar(r.utility) << ',' << r.score_computations << ','
      << r.assignments_examined << ',' << r.elapsed_us / 1000 << ',' << r.seed;
  return out.str();
}

}  // namespace ses
