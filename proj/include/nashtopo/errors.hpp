#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace nashtopo {

/// Base class for every error raised by this library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class invalid_resolution_error : public error {
public:
  using error::error;
};

class invalid_argument_error : public error {
public:
  using error::error;
};

class invalid_point_error : public error {
public:
  using error::error;
};

class unsupported_space_error : public error {
public:
  using error::error;
};

class invalid_dimension_error : public error {
public:
  using error::error;
};

class invalid_complex_error : public error {
public:
  using error::error;
};

class unsupported_torsion_error : public error {
public:
  using error::error;
};

class utility_domain_error : public error {
public:
  using error::error;
};

class incompatible_tables_error : public error {
public:
  using error::error;
};

class resolution_cap_error : public error {
public:
  using error::error;
};

/// Raised when sampled data is too coarse to lift angles unambiguously.
class insufficient_resolution_error : public error {
public:
  using error::error;
};

/// Raised when a sampled invariant disagrees between two basepoints or a
/// correspondence is too thick to select through continuously.
class not_well_defined_error : public error {
public:
  using error::error;
};

/// A contour sample came too close to a polynomial zero; carries the point.
class root_on_contour_error : public error {
public:
  root_on_contour_error(const std::string& msg, std::complex<double> root)
      : error(msg), root(root) {}
  std::complex<double> root;
};

/// A no-root hypothesis failed; carries the offending (approximate) root.
class hypothesis_violated_error : public error {
public:
  hypothesis_violated_error(const std::string& msg, std::complex<double> root)
      : error(msg), root(root) {}
  std::complex<double> root;
};

class localization_failure_error : public error {
public:
  localization_failure_error(const std::string& msg, double x0, double x1,
                             double y0, double y1)
      : error(msg), x0(x0), x1(x1), y0(y0), y1(y1) {}
  double x0, x1, y0, y1;
};

/// Text-level failure while reading an expression or game file.
class parse_error : public error {
public:
  parse_error(const std::string& msg, int line, int column)
      : error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line), column(column) {}
  int line;
  int column;
};

} // namespace nashtopo
