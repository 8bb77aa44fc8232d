#pragma once

#include <filesystem>
#include <string>

#include "commutant/sim.hpp"
#include "commutant/system.hpp"

namespace commutant {

/// System-definition file or trajectory I/O failure; messages carry line
/// numbers for parse problems.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Line-oriented system file:
///   # comment                 (optional '# commutant-v1' header)
///   name = <string>
///   a2 = <expr>   a1 = <expr>   a0 = <expr>      (required)
///   rhs = <expr>                                  (optional)
///   param <id> = <real or constant expression>
///   domain = <lo>, <hi>                           (required)
/// Unknown keys and duplicate non-param keys are rejected.
LtvSystem load_system(const std::filesystem::path& path);

/// Parses system-file text; `origin` names the source in error messages.
LtvSystem parse_system_text(const std::string& text,
                            const std::string& origin = "<string>");

void save_system(const LtvSystem& sys, const std::filesystem::path& path);
std::string system_to_text(const LtvSystem& sys);

/// CSV with header "t,<col>,...", 15 significant digits, LF endings.
void write_trajectory(const Trajectory& traj, const std::filesystem::path& path);
std::string trajectory_to_csv(const Trajectory& traj);

}  // namespace commutant
