#include "commutant/io.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace commutant {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& msg) {
  throw IoError(origin + ":" + std::to_string(line) + ": " + msg);
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

LtvSystem parse_system_text(const std::string& text,
                            const std::string& origin) {
  std::optional<std::string> name, a2, a1, a0, rhs;
  std::optional<Domain> domain;
  Params params;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(origin, lineno, "expected '<key> = <value>'");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) fail(origin, lineno, "empty value for '" + key + "'");

    if (key.rfind("param ", 0) == 0 || key.rfind("param\t", 0) == 0) {
      const std::string id = trim(key.substr(6));
      if (id.empty()) fail(origin, lineno, "param line without a name");
      if (params.count(id))
        fail(origin, lineno, "duplicate param '" + id + "'");
      try {
        params[id] = parse_real(value);
      } catch (const std::exception& ex) {
        fail(origin, lineno, std::string("bad param value: ") + ex.what());
      }
      continue;
    }

    auto set_once = [&](std::optional<std::string>& slot) {
      if (slot) fail(origin, lineno, "duplicate key '" + key + "'");
      slot = value;
    };
    if (key == "name") {
      set_once(name);
    } else if (key == "a2") {
      set_once(a2);
    } else if (key == "a1") {
      set_once(a1);
    } else if (key == "a0") {
      set_once(a0);
    } else if (key == "rhs") {
      set_once(rhs);
    } else if (key == "domain") {
      if (domain) fail(origin, lineno, "duplicate key 'domain'");
      const auto comma = value.find(',');
      if (comma == std::string::npos)
        fail(origin, lineno, "domain needs '<lo>, <hi>'");
      try {
        domain = Domain{parse_real(trim(value.substr(0, comma))),
                        parse_real(trim(value.substr(comma + 1)))};
      } catch (const std::exception& ex) {
        fail(origin, lineno, std::string("bad domain value: ") + ex.what());
      }
    } else {
      fail(origin, lineno, "unknown key '" + key + "'");
    }
  }

  const std::pair<const char*, const std::optional<std::string>*> required[] =
      {{"a2", &a2}, {"a1", &a1}, {"a0", &a0}};
  for (const auto& [key, slot] : required)
    if (!*slot) throw IoError(origin + ": missing key " + key);
  if (!domain) throw IoError(origin + ": missing key domain");

  try {
    return make_system(name.value_or("unnamed"), *a2, *a1, *a0, rhs,
                       std::move(params), *domain);
  } catch (const ParseError& ex) {
    throw IoError(origin + ": " + ex.what());
  } catch (const SystemError& ex) {
    throw IoError(origin + ": " + ex.what());
  }
}

LtvSystem load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system_text(buf.str(), path.string());
}

std::string system_to_text(const LtvSystem& sys) {
  std::ostringstream os;
  os << "# commutant-v1\n";
  os << "name = " << sys.name() << "\n";
  os << "a2 = " << to_string(sys.a2()) << "\n";
  os << "a1 = " << to_string(sys.a1()) << "\n";
  os << "a0 = " << to_string(sys.a0()) << "\n";
  if (sys.forcing()) os << "rhs = " << to_string(*sys.forcing()) << "\n";
  for (const auto& [k, v] : sys.params())
    os << "param " << k << " = " << fmt17(v) << "\n";
  os << "domain = " << fmt17(sys.domain().lo) << ", " << fmt17(sys.domain().hi)
     << "\n";
  return os.str();
}

void save_system(const LtvSystem& sys, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << system_to_text(sys);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string trajectory_to_csv(const Trajectory& traj) {
  std::ostringstream os;
  os << "t";
  for (const std::string& n : traj.names) os << "," << n;
  os << "\n";
  char buf[40];
  for (std::size_t i = 0; i < traj.rows(); ++i) {
    std::snprintf(buf, sizeof buf, "%.15g", traj.time_at(i));
    os << buf;
    for (const auto& col : traj.columns) {
      std::snprintf(buf, sizeof buf, "%.15g", col[i]);
      os << "," << buf;
    }
    os << "\n";
  }
  return os.str();
}

void write_trajectory(const Trajectory& traj,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << trajectory_to_csv(traj);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace commutant
