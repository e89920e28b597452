// mpreach: command-line front end over the C API.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 oracle cap exceeded,
// 4 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mpreach/mpreach.h"

namespace {

struct ProblemDeleter {
  void operator()(mpr_problem* p) const { mpr_problem_free(p); }
};
struct ResultDeleter {
  void operator()(mpr_result* r) const { mpr_result_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { mpr_string_free(s); }
};
using ProblemPtr = std::unique_ptr<mpr_problem, ProblemDeleter>;
using ResultPtr = std::unique_ptr<mpr_result, ResultDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Failure {
  mpr_status status;
};

void check(mpr_status s) {
  if (s != MPR_OK) throw Failure{s};
}

struct Common {
  std::string file;
  std::optional<unsigned> steps;
  std::string mode = "one-shot";
  std::string output;
  bool conic = false;
};

ProblemPtr load(const Common& c) {
  mpr_problem* p = nullptr;
  check(mpr_problem_load(c.file.c_str(), &p));
  ProblemPtr owned(p);
  if (c.steps || c.mode != "one-shot")
    check(mpr_problem_set_steps(p, c.steps.value_or(1), c.mode == "iterated" ? MPR_ITERATED : MPR_ONE_SHOT));
  return owned;
}

// Reachable set for problems with dynamics, closure of the target otherwise.
ResultPtr compute(const mpr_problem* p, bool conic) {
  mpr_result* r = nullptr;
  if (mpr_problem_has_dynamics(p) && !conic)
    check(mpr_reach(p, &r));
  else
    check(mpr_approx(p, conic ? 1 : 0, &r));
  return ResultPtr(r);
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) {
    std::cerr << "mpreach: cannot write " << c.output << "\n";
    throw Failure{MPR_ERR_INPUT};
  }
  out << text;
}

std::string take(char* s) {
  StringPtr owned(s);
  return s ? std::string(s) : std::string();
}

void add_problem_options(CLI::App* cmd, Common& c, bool with_steps) {
  cmd->add_option("file", c.file, "problem file (JSON)")->required()->check(CLI::ExistingFile);
  if (with_steps) {
    cmd->add_option("--steps", c.steps, "number of backward steps")->check(CLI::PositiveNumber);
    cmd->add_option("--mode", c.mode, "one-shot or iterated")->check(CLI::IsMember({"one-shot", "iterated"}));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Backward reachable sets of max-plus linear systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mpr_version()));

  Common c;
  std::string point, box = "-5,5", random_out;
  unsigned res = 11;
  bool extract = false, with_oracle = false, with_eps = false, closed_only = false;
  std::uint64_t samples = 1000, seed = 1;
  std::optional<std::uint64_t> random_seed;

  auto* approx = app.add_subcommand("approx", "closure of the target set as a union of polyhedra");
  add_problem_options(approx, c, false);
  approx->add_flag("--conic", c.conic, "read half-spaces as cones (no constants, no homogenization)");
  approx->add_option("-o,--output", c.output, "write the result here instead of stdout");

  auto* reach = app.add_subcommand("reach", "backward reachable set");
  add_problem_options(reach, c, true);
  reach->add_option("-o,--output", c.output, "write the result here instead of stdout");

  auto* member = app.add_subcommand("member", "is a point in the computed set?");
  add_problem_options(member, c, true);
  member->add_option("--point", point, "comma-separated coordinates, e.g. 0,-inf,1/2")->required();
  member->add_flag("--extract-control", extract, "also print a control that realizes the step");
  member->add_flag("--conic", c.conic, "closure of a conic target set");

  auto* sample = app.add_subcommand("sample", "membership on a grid, as CSV");
  add_problem_options(sample, c, true);
  sample->add_option("--box", box, "lo,hi bounds of every coordinate");
  sample->add_option("--res", res, "grid points per coordinate")->check(CLI::PositiveNumber);
  sample->add_flag("--oracle", with_oracle, "add an in_oracle column from the exact DBM oracle");
  sample->add_flag("--eps", with_eps, "include -inf in every coordinate's grid");
  sample->add_flag("--conic", c.conic, "closure of a conic target set");
  sample->add_option("-o,--output", c.output, "write the CSV here instead of stdout");

  auto* compare = app.add_subcommand("compare-oracle", "compare with the exact DBM oracle on random points");
  compare->add_option("file", c.file, "problem file (JSON)")->check(CLI::ExistingFile);
  compare->add_option("--random-problem", random_seed, "use the random instance with this seed instead");
  compare->add_option("--samples", samples, "number of random points");
  compare->add_option("--seed", seed, "seed of the sample points");
  compare->add_option("--steps", c.steps, "number of backward steps")->check(CLI::PositiveNumber);
  compare->add_option("--mode", c.mode, "one-shot or iterated")->check(CLI::IsMember({"one-shot", "iterated"}));

  auto* random = app.add_subcommand("random-problem", "print a random small problem file");
  random->add_option("--seed", seed, "random seed");
  random->add_flag("--closed", closed_only, "no complemented literals in the target");
  random->add_option("-o,--output", c.output, "write the problem here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*approx) {
      ProblemPtr p = load(c);
      mpr_result* r = nullptr;
      check(mpr_approx(p.get(), c.conic ? 1 : 0, &r));
      ResultPtr owned(r);
      char* text = nullptr;
      check(mpr_result_to_json(r, &text));
      emit(c, take(text));
    } else if (*reach) {
      ProblemPtr p = load(c);
      mpr_result* r = nullptr;
      check(mpr_reach(p.get(), &r));
      ResultPtr owned(r);
      char* text = nullptr;
      check(mpr_result_to_json(r, &text));
      emit(c, take(text));
    } else if (*member) {
      ProblemPtr p = load(c);
      ResultPtr r = compute(p.get(), c.conic);
      int inside = 0;
      check(mpr_result_member(r.get(), point.c_str(), &inside));
      std::cout << (inside ? "inside" : "outside") << "\n";
      if (extract && inside) {
        char* u = nullptr;
        int guaranteed = 0;
        check(mpr_extract_control(r.get(), point.c_str(), &u, &guaranteed));
        std::string control = take(u);
        std::cout << "control " << control << (guaranteed ? "" : " (reaches the closure of the target only)")
                  << "\n";
      }
    } else if (*sample) {
      auto comma = box.find(',');
      if (comma == std::string::npos) {
        std::cerr << "mpreach: --box expects lo,hi\n";
        return 1;
      }
      std::string lo = box.substr(0, comma), hi = box.substr(comma + 1);
      ProblemPtr p = load(c);
      ResultPtr r = compute(p.get(), c.conic);
      mpr_sample_options opt{lo.c_str(), hi.c_str(), res, with_eps ? 1 : 0, with_oracle ? 1 : 0};
      char* csv = nullptr;
      check(mpr_sample(p.get(), r.get(), &opt, &csv));
      emit(c, take(csv));
    } else if (*compare) {
      ProblemPtr p;
      if (random_seed) {
        mpr_problem* raw = nullptr;
        check(mpr_problem_random(*random_seed, 0, &raw));
        p.reset(raw);
        if (c.steps || c.mode != "one-shot")
          check(mpr_problem_set_steps(raw, c.steps.value_or(1), c.mode == "iterated" ? MPR_ITERATED : MPR_ONE_SHOT));
      } else if (!c.file.empty()) {
        p = load(c);
      } else {
        std::cerr << "mpreach: compare-oracle needs a problem file or --random-problem\n";
        return 1;
      }
      ResultPtr r = compute(p.get(), false);
      char* report = nullptr;
      check(mpr_compare_oracle(p.get(), r.get(), samples, seed, &report));
      std::cout << take(report);
    } else if (*random) {
      mpr_problem* raw = nullptr;
      check(mpr_problem_random(seed, closed_only ? 1 : 0, &raw));
      ProblemPtr p(raw);
      char* text = nullptr;
      check(mpr_problem_to_json(raw, &text));
      emit(c, take(text));
    }
  } catch (const Failure& f) {
    if (const char* msg = mpr_last_error(); msg && *msg) std::cerr << "mpreach: " << msg << "\n";
    return static_cast<int>(f.status);
  }
  return 0;
}
