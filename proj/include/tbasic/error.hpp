#pragma once

#include <stdexcept>
#include <string>

namespace tbasic {

// Bad or missing input (files, flags, malformed records). Maps to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A pipeline stage failed after inputs were accepted. Maps to exit code 3.
struct StageError : std::runtime_error {
  StageError(const std::string& stage, const std::string& cause)
      : std::runtime_error("stage '" + stage + "' failed: " + cause), stage_name(stage) {}
  std::string stage_name;
};

}  // namespace tbasic
