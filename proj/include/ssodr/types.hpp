#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ssodr {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
// Row-major float matrix used at the file-format boundary (sidecars are f32).
using MatF = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Learned state (centroids, detector weights) is kept f32-valued so the f32
// file payloads round-trip without loss. Arithmetic stays in double.
inline Mat round_to_f32(const Mat& m) { return m.cast<float>().cast<double>(); }
inline Vec round_to_f32(const Vec& v) { return v.cast<float>().cast<double>(); }

// Error hierarchy; exit_code matches the CLI contract
// (2 config, 3 data/format, 4 numerical, 5 stage).
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, int exit_code)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(w, 2) {}
};
struct FormatError : Error {
  explicit FormatError(const std::string& w) : Error(w, 3) {}
};
struct ValidationError : Error {
  explicit ValidationError(const std::string& w) : Error(w, 3) {}
};
struct NumericalError : Error {
  explicit NumericalError(const std::string& w) : Error(w, 4) {}
};
struct StageError : Error {
  explicit StageError(const std::string& w) : Error(w, 5) {}
};

}  // namespace ssodr
