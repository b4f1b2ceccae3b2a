#include "jobshop/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace jobshop {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Next line that carries data, with CRLF and '#' comments stripped. A
// "# name <x>" comment is the serializer's name carrier and is surfaced
// through `found_name`.
bool next_data_line(std::istream& in, std::string& line, std::string* found_name) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos) continue;
    if (line[i] == '#') {
      std::istringstream comment(line.substr(i + 1));
      std::string key, value;
      if (found_name && comment >> key >> value && key == "name" && found_name->empty()) {
        *found_name = value;
      }
      continue;
    }
    line.erase(0, i);
    return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, Errc on_garbage,
                                  const std::string& context) {
  std::vector<long long> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      fail(on_garbage, context + ": token '" + tok + "' is not an integer");
    }
    if (pos != tok.size())
      fail(on_garbage, context + ": token '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

}  // namespace

JsspInstance parse_instance(std::istream& in, std::string name) {
  std::string comment_name;
  std::string line;
  if (!next_data_line(in, line, &comment_name))
    fail(Errc::malformed_header, "no data lines found");

  const auto header = parse_ints(line, Errc::malformed_header, "header");
  if (header.size() != 2 || header[0] <= 0 || header[1] <= 0)
    fail(Errc::malformed_header,
         "first data line must be two positive integers, got '" + line + "'");
  const int n = static_cast<int>(header[0]);
  const int m = static_cast<int>(header[1]);

  JsspInstance inst;
  inst.name = name.empty() ? comment_name : std::move(name);
  inst.n_jobs = n;
  inst.n_machines = m;
  inst.routing.resize(static_cast<std::size_t>(n));

  for (int j = 0; j < n; ++j) {
    if (!next_data_line(in, line, nullptr))
      fail(Errc::row_arity, "job " + std::to_string(j) + ": row missing");
    const auto row = parse_ints(line, Errc::row_arity, "job " + std::to_string(j));
    if (row.size() != static_cast<std::size_t>(2 * m))
      fail(Errc::row_arity, "job " + std::to_string(j) + ": expected " +
                                std::to_string(2 * m) + " integers, got " +
                                std::to_string(row.size()));
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    auto& route = inst.routing[static_cast<std::size_t>(j)];
    route.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      const long long machine = row[static_cast<std::size_t>(2 * k)];
      const long long time = row[static_cast<std::size_t>(2 * k + 1)];
      if (machine < 0 || machine >= m)
        fail(Errc::machine_index_out_of_range,
             "job " + std::to_string(j) + " step " + std::to_string(k) +
                 ": machine " + std::to_string(machine) + " not in [0, " +
                 std::to_string(m) + ")");
      if (seen[static_cast<std::size_t>(machine)])
        fail(Errc::duplicate_machine_in_route,
             "job " + std::to_string(j) + ": machine " + std::to_string(machine) +
                 " visited twice");
      seen[static_cast<std::size_t>(machine)] = 1;
      if (time < 0)
        fail(Errc::negative_processing_time,
             "job " + std::to_string(j) + " step " + std::to_string(k) +
                 ": processing time " + std::to_string(time));
      route.push_back(Step{static_cast<int>(machine), static_cast<int>(time)});
    }
  }
  return inst;
}

JsspInstance parse_instance(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  return parse_instance(in, std::move(name));
}

std::string serialize_instance(const JsspInstance& inst) {
  std::ostringstream out;
  if (!inst.name.empty()) out << "# name " << inst.name << "\n";
  out << inst.n_jobs << " " << inst.n_machines << "\n";
  for (const auto& route : inst.routing) {
    for (std::size_t k = 0; k < route.size(); ++k) {
      if (k) out << " ";
      out << route[k].machine << " " << route[k].time;
    }
    out << "\n";
  }
  return out.str();
}

JsspInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  std::string stem = path;
  if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
    stem.erase(0, slash + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.erase(dot);
  return parse_instance(in, stem);
}

JsspInstance load_builtin(std::string_view name) {
  const std::string key = lower(name);
  for (std::size_t i = 0; i < detail::kBuiltinInstanceCount; ++i) {
    if (key == detail::kBuiltinInstances[i].name)
      return parse_instance(std::string_view(detail::kBuiltinInstances[i].text),
                            detail::kBuiltinInstances[i].name);
  }
  fail(Errc::unknown_instance, "no builtin instance named '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  names.reserve(detail::kBuiltinInstanceCount);
  for (std::size_t i = 0; i < detail::kBuiltinInstanceCount; ++i)
    names.emplace_back(detail::kBuiltinInstances[i].name);
  return names;
}

long long total_work(const JsspInstance& inst) {
  long long sum = 0;
  for (const auto& route : inst.routing)
    for (const auto& step : route) sum += step.time;
  return sum;
}

std::vector<long long> machine_loads(const JsspInstance& inst) {
  std::vector<long long> loads(static_cast<std::size_t>(inst.n_machines), 0);
  for (const auto& route : inst.routing)
    for (const auto& step : route)
      loads[static_cast<std::size_t>(step.machine)] += step.time;
  return loads;
}

std::vector<long long> job_loads(const JsspInstance& inst) {
  std::vector<long long> loads(static_cast<std::size_t>(inst.n_jobs), 0);
  for (std::size_t j = 0; j < inst.routing.size(); ++j)
    for (const auto& step : inst.routing[j]) loads[j] += step.time;
  return loads;
}

long long load_lower_bound(const JsspInstance& inst) {
  long long bound = 0;
  for (long long v : machine_loads(inst)) bound = std::max(bound, v);
  for (long long v : job_loads(inst)) bound = std::max(bound, v);
  return bound;
}

}  // namespace jobshop
