#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trop/trop.hpp"

namespace trop::cli {

/// Reads an ideal file: a `vars:` line, then one generator per line.
inline IdealSpec parseIdealText(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::vector<std::string>> vars;
  std::vector<Polynomial> gens;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      if (!vars) {
        auto start = line.find_first_not_of(" \t");
        if (line.compare(start, 5, "vars:") != 0)
          throw Error(ErrorKind::Parse, "expected a `vars:` line");
        vars = parseVariableList(line.substr(start + 5));
        continue;
      }
      gens.push_back(parsePolynomial(line, *vars));
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(lineNo) + ": " + e.message());
    }
  }
  if (!vars)
    throw Error(ErrorKind::Parse, "missing `vars:` line");
  if (gens.empty())
    throw Error(ErrorKind::Parse, "no generators");
  return IdealSpec(*vars, std::move(gens));
}

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline RatVec parsePoint(const std::string& text) {
  static const std::regex number(R"(\s*(-?\d+(/\d+)?)\s*)");
  RatVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, number))
      throw Error(ErrorKind::Parse, "bad coordinate `" + item + "`");
    Rational q(m[1].str());
    if (q.get_den() == 0)
      throw Error(ErrorKind::Parse, "zero denominator in `" + item + "`");
    q.canonicalize();
    out.push_back(q);
  }
  if (out.empty())
    throw Error(ErrorKind::Parse, "empty point");
  return out;
}

/// Integer matrix with right-aligned columns, one `| ... |` row per line.
inline std::string formatMatrix(const std::vector<IntVec>& columns, std::size_t rows) {
  if (columns.empty() || rows == 0)
    return "0\n";
  std::vector<std::size_t> width(columns.size(), 1);
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const Integer& x : columns[j])
      width[j] = std::max(width[j], x.get_str().size());
  std::ostringstream out;
  for (std::size_t i = 0; i < rows; ++i) {
    out << "|";
    for (std::size_t j = 0; j < columns.size(); ++j)
      out << " " << std::setw(static_cast<int>(width[j])) << columns[j][i].get_str();
    out << " |\n";
  }
  return out.str();
}

template <class T>
std::string braceList(const std::vector<T>& xs) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i)
      out << ", ";
    if constexpr (std::is_same_v<T, std::vector<int>>)
      out << braceList(xs[i]);
    else
      out << xs[i];
  }
  out << "}";
  return out.str();
}

inline std::string formatCycleText(const WeightedFan& w) {
  const Fan& f = w.fan();
  std::ostringstream out;
  out << "convention: " << conventionName(w.convention()) << "\n";
  out << "rays:\n" << formatMatrix(f.rays(), f.ambientDim());
  out << "linealitySpace:\n" << formatMatrix(f.lineality(), f.ambientDim());
  out << "maxCones: " << braceList(f.maxCones()) << "\n";
  out << "multiplicities: " << braceList(w.multiplicities()) << "\n";
  out << "dim: " << w.dim() << "\n";
  out << "pure: " << (w.isPure() ? "true" : "false") << "\n";
  if (w.isPure())
    out << "balanced: " << (isBalanced(w) ? "true" : "false") << "\n";
  else
    out << "balanced: n/a\n";
  return out.str();
}

struct Options {
  bool max = false;
  std::string format = "text";
  std::string outPath;
  std::optional<std::uint64_t> seed;
  bool time = false;
  Convention convention() const { return max ? Convention::Max : Convention::Min; }
};

inline std::string renderCycle(const WeightedFan& w, const Options& o) {
  return o.format == "json" ? cycleToString(w) : formatCycleText(w);
}

inline std::string renderBool(bool b) { return b ? "true\n" : "false\n"; }

inline WeightedFan readCycleChecked(const std::string& path, Convention expected) {
  WeightedFan w = readCycle(path);
  if (w.convention() != expected)
    throw Error(ErrorKind::ConventionMismatch,
                path + " uses the " + conventionName(w.convention()) +
                    " convention but the run uses " + conventionName(expected));
  return w;
}

inline std::uint64_t resolveSeed(const Options& o) {
  if (o.seed)
    return *o.seed;
  if (const char* env = std::getenv("TROP_SEED")) {
    static const std::regex digits(R"(\d+)");
    if (!std::regex_match(env, digits))
      throw Error(ErrorKind::Parse, std::string("TROP_SEED is not an unsigned integer: ") + env);
    try {
      return std::stoull(env);
    } catch (const std::out_of_range&) {
      throw Error(ErrorKind::Parse, std::string("TROP_SEED out of range: ") + env);
    }
  }
  return 0;
}

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 domain error, 2 parse or usage error.
inline int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical geometry over the rationals", "trop"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--max", o.max, "Use the max convention (default min)");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.outPath, "Write output to a file");
  app.add_option("--seed", o.seed, "Seed for stable-intersection genericity");
  app.add_flag("--time", o.time, "Print elapsed wall time on stderr");

  std::string poly, varsText, pointText, file, fileB;
  bool notPrime = false;

  auto* hyper = app.add_subcommand("hypersurface", "Tropical hypersurface of a polynomial");
  hyper->add_option("poly", poly)->required();
  hyper->add_option("--vars", varsText)->required();

  auto* variety = app.add_subcommand("variety", "Tropical variety of an ideal");
  variety->add_option("ideal-file", file)->required();
  variety->add_flag("--not-prime", notPrime, "The ideal is not known to be prime");

  auto* prevariety = app.add_subcommand("prevariety", "Intersection of the generators' hypersurfaces");
  prevariety->add_option("ideal-file", file)->required();

  auto* basis = app.add_subcommand("is-tropical-basis", "Whether the generators are a tropical basis");
  basis->add_option("ideal-file", file)->required();

  auto* balanced = app.add_subcommand("is-balanced", "Check the balancing condition");
  balanced->add_option("cycle", file)->required();

  auto* stable = app.add_subcommand("stable-intersection", "Stable intersection of two cycles");
  stable->add_option("A", file)->required();
  stable->add_option("B", fileB)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate the tropicalization at a point");
  eval->add_option("poly", poly)->required();
  eval->add_option("--vars", varsText)->required();
  eval->add_option("--point", pointText)->required();

  for (CLI::App* sub : app.get_subcommands({}))
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string result;
  try {
    const Convention conv = o.convention();
    if (*hyper) {
      std::vector<std::string> vars = parseVariableList(varsText);
      result = renderCycle(tropicalHypersurface(parsePolynomial(poly, vars), conv).weighted(), o);
    } else if (*variety) {
      IdealSpec ideal = parseIdealText(readFile(file));
      result = renderCycle(asWeightedFan(tropicalVariety(ideal, !notPrime, conv)), o);
    } else if (*prevariety) {
      IdealSpec ideal = parseIdealText(readFile(file));
      Fan f = tropicalPrevariety(ideal.generators, conv);
      result = renderCycle(WeightedFan(f, std::vector<std::int64_t>(f.cones().size(), 1), conv), o);
    } else if (*basis) {
      IdealSpec ideal = parseIdealText(readFile(file));
      result = renderBool(isTropicalBasis(ideal.generators, conv));
    } else if (*balanced) {
      result = renderBool(isBalanced(readCycleChecked(file, conv)));
    } else if (*stable) {
      TropicalCycle a(readCycleChecked(file, conv));
      TropicalCycle b(readCycleChecked(fileB, conv));
      result = renderCycle(stableIntersection(a, b, resolveSeed(o)).weighted(), o);
    } else if (*eval) {
      std::vector<std::string> vars = parseVariableList(varsText);
      Rational v = tropicalEvaluate(parsePolynomial(poly, vars), parsePoint(pointText), conv);
      result = o.format == "json" ? "\"" + v.get_str() + "\"\n" : v.get_str() + "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.isInputError() ? 2 : 1;
  }

  if (o.outPath.empty()) {
    out << result;
  } else {
    std::ofstream file(o.outPath, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.outPath << " for writing\n";
      return 2;
    }
    file << result;
  }
  if (o.time) {
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    err << "-- " << elapsed.count() << " seconds elapsed\n";
  }
  return 0;
}

} // namespace trop::cli
