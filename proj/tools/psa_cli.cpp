// Command line front end. Talks to the core exclusively through the C API.
//
// Exit codes: 0 = all requested laws hold / construction succeeded,
//             1 = violations found,
//             2 = usage, parse, or precondition error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include <psa.h>

namespace {

int fail_with(char* err) {
  if (err) {
    std::fputs(err, stderr);
    std::fputc('\n', stderr);
    psa_str_free(err);
  }
  return 2;
}

/// Print a suite/ybe result: reports go to stdout, errors (rc 2) to stderr.
int emit_result(int rc, char* text) {
  if (text) {
    std::fputs(text, rc == 2 ? stderr : stdout);
    if (rc == 2) std::fputc('\n', stderr);
    psa_str_free(text);
  }
  return rc;
}

std::string make_options(const std::string& pairing, const std::string& format,
                         const std::string& t_spec, const std::string& weight,
                         long long bound) {
  nlohmann::json j;
  j["pairing"] = pairing;
  if (!format.empty()) j["format"] = format;
  if (!t_spec.empty()) j["T"] = t_spec;
  if (!weight.empty()) j["weight"] = weight;
  if (bound >= 0) j["bound"] = bound;
  return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("Exact checker for graded Poisson structures (v") +
               psa_version() + ")"};
  app.require_subcommand(1);

  std::string pairing = "koszul";
  app.add_option("--pairing", pairing, "Tensor pairing convention")
      ->check(CLI::IsMember({"koszul", "plain"}));

  auto* verify = app.add_subcommand("verify", "Run a named law suite on a file");
  verify->fallthrough();
  std::string suite, verify_file, verify_format = "text";
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--format", verify_format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("file", verify_file, "Structure file")->required();

  auto* construct =
      app.add_subcommand("construct", "Build a derived structure and print it");
  construct->fallthrough();
  std::string what, construct_file, t_spec, weight, out_path;
  construct->add_option("what", what, "Construction name")
      ->required()
      ->check(CLI::IsMember({"double", "semidirect", "bowtie", "dualize", "post",
                             "post-quasi"}));
  construct->add_option("--T", t_spec, "Operator shorthand for post")
      ->check(CLI::IsMember({"id", "zero"}));
  construct->add_option("--weight", weight, "Weight scalar for post");
  construct->add_option("-o,--output", out_path, "Write the result here");
  construct->add_option("file", construct_file, "Structure file")->required();

  auto* ybe = app.add_subcommand("ybe", "Evaluate Yang-Baxter equations of r");
  ybe->fallthrough();
  std::string which, ybe_file, ybe_format = "text";
  ybe->add_option("--which", which, "Equation")
      ->required()
      ->check(CLI::IsMember({"cybe", "aybe", "pybe"}));
  ybe->add_option("--format", ybe_format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  ybe->add_option("file", ybe_file, "Structure file")->required();

  auto* search = app.add_subcommand("search", "Grid search over the parameter family");
  search->fallthrough();
  std::string grid_file;
  long long bound = -1;
  search->add_option("--grid", grid_file, "Grid file")->required();
  search->add_option("--bound", bound, "Tuple count bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*verify) {
    psa_handle* h = nullptr;
    char* err = nullptr;
    if (psa_parse_file(verify_file.c_str(), &h, &err) != 0) return fail_with(err);
    char* report = nullptr;
    int rc = psa_verify(h, suite.c_str(),
                        make_options(pairing, verify_format, "", "", -1).c_str(),
                        &report);
    psa_free(h);
    return emit_result(rc, report);
  }

  if (*construct) {
    psa_handle* h = nullptr;
    char* err = nullptr;
    if (psa_parse_file(construct_file.c_str(), &h, &err) != 0) return fail_with(err);
    psa_handle* built = nullptr;
    int rc = psa_construct(what.c_str(), h,
                           make_options(pairing, "", t_spec, weight, -1).c_str(),
                           &built, &err);
    psa_free(h);
    if (rc != 0) return fail_with(err);
    char* text = psa_serialize(built);
    psa_free(built);
    if (!text) return fail_with(nullptr);
    if (out_path.empty()) {
      std::fputs(text, stdout);
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out << text;
      if (!out) {
        psa_str_free(text);
        std::fprintf(stderr, "cannot write file: %s\n", out_path.c_str());
        return 2;
      }
    }
    psa_str_free(text);
    return 0;
  }

  if (*ybe) {
    psa_handle* h = nullptr;
    char* err = nullptr;
    if (psa_parse_file(ybe_file.c_str(), &h, &err) != 0) return fail_with(err);
    char* result = nullptr;
    int rc = psa_ybe(h, which.c_str(),
                     make_options(pairing, ybe_format, "", "", -1).c_str(), &result);
    psa_free(h);
    return emit_result(rc, result);
  }

  if (*search) {
    std::ifstream in(grid_file, std::ios::binary);
    if (!in) {
      std::fprintf(stderr, "cannot read file: %s\n", grid_file.c_str());
      return 2;
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    char* result = nullptr;
    char* err = nullptr;
    int rc = psa_grid_search(text.c_str(),
                             make_options(pairing, "", "", "", bound).c_str(), &result,
                             &err);
    if (rc != 0) {
      if (result) psa_str_free(result);
      return fail_with(err);
    }
    if (result) {
      std::fputs(result, stdout);
      psa_str_free(result);
    }
    return 0;
  }

  return 2;
}
