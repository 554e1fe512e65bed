#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "llv/algebra_io.hpp"
#include "llv/errors.hpp"
#include "llv/report.hpp"
#include "llv/suites.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 7;

int emit(const llv::Report& report, bool json) {
  std::cout << (json ? report.to_json() : report.to_text());
  return report.all_passed() ? 0 : 1;
}

/// Seed for witness sampling; LLV_LAB_SEED overrides the default.
std::optional<std::uint64_t> witness_seed() {
  const char* env = std::getenv("LLV_LAB_SEED");
  if (env == nullptr) return kDefaultSeed;
  const std::string text(env);
  if (text.empty() || text.size() > 19) return std::nullopt;
  for (const char c : text)
    if (c < '0' || c > '9') return std::nullopt;
  return std::stoull(text);
}

/// A builtin name, or a readable algebra file.  Exit code 2 when the file
/// cannot be opened, 1 when it cannot be parsed.
std::optional<llv::BuiltinModel> resolve_model(const std::string& spec, int& exit_code) {
  if (auto builtin = llv::make_builtin(spec)) return builtin;
  std::ifstream in(spec);
  if (!in) {
    std::cerr << "error: cannot open '" << spec << "' (not a builtin model or readable file)\n";
    exit_code = 2;
    return std::nullopt;
  }
  try {
    llv::GradedFrobeniusAlgebra algebra = llv::load_algebra_stream(in, false);
    std::optional<llv::QuadraticSpace> q = llv::derive_quadratic_form(algebra);
    return llv::BuiltinModel{spec, std::move(algebra), std::move(q), std::nullopt};
  } catch (const llv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    exit_code = 1;
    return std::nullopt;
  }
}

llv::RationalMatrix parse_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw llv::SchemaError("cannot open gram file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw llv::SchemaError(std::string("gram file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty())
    throw llv::SchemaError("gram file must hold a nonempty JSON array of rows");
  const std::size_t n = doc.size();
  llv::RationalMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!doc[i].is_array() || doc[i].size() != n)
      throw llv::SchemaError("gram file must hold a square matrix");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cell = doc[i][j];
      if (cell.is_number_integer())
        gram.at(i, j) = llv::Rational(static_cast<long>(cell.get<long long>()));
      else if (cell.is_string())
        gram.at(i, j) = llv::parse_rational(cell.get<std::string>());
      else
        throw llv::SchemaError("gram entries must be integers or rational strings");
    }
  }
  return gram;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"llv-lab: exact verification of graded Frobenius algebras and their Lie algebras"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit the report as JSON");

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "check the algebra axioms of a JSON file");
  validate->add_option("file", validate_path, "algebra JSON file")->required();

  std::string llv_spec;
  std::string generators = "auto";
  CLI::App* llv_cmd = app.add_subcommand("llv", "closure of the sl2 triples of an algebra");
  llv_cmd->add_option("algebra", llv_spec, "algebra JSON file or builtin name")->required();
  llv_cmd->add_option("--generators", generators, "auto (searched family) or list (all classes)")
      ->check(CLI::IsMember({"auto", "list"}));

  CLI::App* quaternion = app.add_subcommand("quaternion", "quaternionic exterior model suite");

  int rank = 0;
  int weight = 0;
  std::string gram_path;
  bool with_closure = false;
  CLI::App* verbitsky = app.add_subcommand("verbitsky", "component of a quadratic form");
  verbitsky->add_option("--rank", rank, "rank of the form")->required();
  verbitsky->add_option("--n", weight, "half the top degree")->required();
  verbitsky->add_option("--gram", gram_path, "JSON file with a custom Gram matrix");
  verbitsky->add_flag("--closure", with_closure, "also close the component's Lie algebra");

  std::string prim_spec;
  CLI::App* prim = app.add_subcommand("prim", "primitive decomposition and parity suite");
  prim->add_option("algebra", prim_spec, "algebra JSON file or builtin name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::optional<std::uint64_t> seed = witness_seed();
  if (!seed) {
    std::cerr << "error: LLV_LAB_SEED must be a decimal integer\n";
    return 2;
  }

  try {
    if (*validate) {
      std::ifstream in(validate_path);
      if (!in) {
        std::cerr << "error: cannot open '" << validate_path << "'\n";
        return 2;
      }
      llv::GradedFrobeniusAlgebra algebra;
      try {
        algebra = llv::load_algebra_stream(in, false);
      } catch (const llv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
      return emit(llv::validate_suite(algebra), json);
    }
    if (*llv_cmd) {
      int exit_code = 0;
      const auto model = resolve_model(llv_spec, exit_code);
      if (!model) return exit_code;
      const llv::GeneratorMode mode =
          generators == "auto" ? llv::GeneratorMode::Auto : llv::GeneratorMode::List;
      return emit(llv::llv_suite(model->algebra, model->q, mode), json);
    }
    if (*quaternion) return emit(llv::quaternion_suite(), json);
    if (*verbitsky) {
      if (rank < 1 || weight < 1) {
        std::cerr << "error: --rank and --n must be positive\n";
        return 2;
      }
      llv::QuadraticSpace q;
      if (gram_path.empty()) {
        if (rank < 2) {
          std::cerr << "error: the default form needs --rank at least 2\n";
          return 2;
        }
        q = llv::standard_form(rank);
      } else {
        llv::RationalMatrix gram;
        try {
          gram = parse_gram_file(gram_path);
        } catch (const llv::SchemaError& e) {
          std::cerr << "error: " << e.what() << "\n";
          return 2;
        }
        if (gram.rows() != static_cast<std::size_t>(rank)) {
          std::cerr << "error: gram matrix has rank " << gram.rows() << ", --rank says " << rank
                    << "\n";
          return 2;
        }
        q = llv::QuadraticSpace(std::move(gram));
      }
      return emit(llv::verbitsky_suite(q, weight, with_closure), json);
    }
    if (*prim) {
      int exit_code = 0;
      const auto model = resolve_model(prim_spec, exit_code);
      if (!model) return exit_code;
      return emit(llv::prim_suite(*model, *seed), json);
    }
  } catch (const llv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
