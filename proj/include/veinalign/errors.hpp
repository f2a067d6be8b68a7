#pragma once

#include <stdexcept>
#include <string>

namespace vein {

/// Domain error classes. Each maps to a documented CLI exit code.
enum class ErrorCode {
  NonPositiveDepth,   // point at or behind the camera plane
  DegenerateRays,     // back-projected rays near-parallel
  DegeneratePlanes,   // back-projection planes coincide or are parallel
  SceneOutOfFrame,    // rendered subject does not intersect the image
  EmptyAoI,           // area of interest empty or outside image bounds
  NoConsensus,        // RANSAC found no acceptable inlier set
  NoSilhouette,       // no dark connected region of sufficient size
  AmbiguousShaft,     // shaft boundary lines could not be fit
  NotConverged,       // solver hit the iteration cap
  DegenerateDataset,  // calibration dataset fails identifiability checks
  UnreachablePose,    // requested move exceeds stage travel limits
  IoError,            // file read/write failure
  ConfigError,        // malformed configuration or report file
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vein
