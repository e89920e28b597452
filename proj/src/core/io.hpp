#pragma once

// JSON problem and result files, and the text form of points.
//
// Numbers are JSON integers or strings: "p/q", decimals such as "0.5", and
// "-inf" for epsilon.

#include <stdexcept>
#include <string>
#include <string_view>

#include "reach.hpp"

namespace mpr {

/// Malformed or inconsistent input. The message starts with the JSON path of
/// the offending field when there is one.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Problem {
  std::size_t n = 0;
  /// False when the file has no "A"/"B" (a bare set for `approx`).
  bool has_dynamics = false;
  MplSystem sys;
  SetExpr target;
  unsigned steps = 1;
  StepMode mode = StepMode::one_shot;
};

Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);
std::string problem_to_json(const Problem& p);

struct ResultFile {
  UnionOfPolyhedra set;
  Stats stats;
};

std::string result_to_json(const UnionOfPolyhedra& set, const Stats& stats);
ResultFile parse_result(std::string_view text);

/// "0,-inf,1/2" -> (0, eps, 1/2). Throws InputError on a bad entry or length.
MpVector parse_point(std::string_view text, std::size_t n);
std::string format_point(const MpVector& x, char sep = ',');

}  // namespace mpr
