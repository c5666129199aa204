#include "psa.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "psa/io.hpp"

struct psa_handle {
  psa::AlgebraFile f;
};

namespace {

char* dup_str(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_str(char** slot, const std::string& s) {
  if (slot) *slot = dup_str(s);
}

struct ParsedOptions {
  psa::Options o;
  bool text = true;
};

ParsedOptions parse_options(const char* options_json) {
  ParsedOptions po;
  if (!options_json || !*options_json) return po;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(options_json);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("options: syntax error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("options: expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    auto str_value = [&]() {
      if (!it->is_string())
        throw std::invalid_argument("options." + key + ": expected a string");
      return it->get<std::string>();
    };
    if (key == "pairing") {
      std::string v = str_value();
      if (v == "koszul")
        po.o.pairing = psa::Pairing::koszul;
      else if (v == "plain")
        po.o.pairing = psa::Pairing::plain;
      else
        throw std::invalid_argument("options.pairing: expected \"koszul\" or \"plain\"");
    } else if (key == "format") {
      std::string v = str_value();
      if (v == "text")
        po.text = true;
      else if (v == "json")
        po.text = false;
      else
        throw std::invalid_argument("options.format: expected \"json\" or \"text\"");
    } else if (key == "T") {
      po.o.t_spec = str_value();
    } else if (key == "weight") {
      po.o.weight = str_value();
    } else if (key == "bound") {
      if (!it->is_number_integer() || it->get<long long>() < 0)
        throw std::invalid_argument("options.bound: expected a non-negative integer");
      po.o.bound = it->get<long long>();
    } else {
      throw std::invalid_argument("options: unknown key \"" + key + "\"");
    }
  }
  return po;
}

int parse_into(const std::string& text, psa_handle** out, char** err_out) {
  try {
    psa::AlgebraFile f = psa::parse_algebra(text);
    if (out) *out = new psa_handle{std::move(f)};
    return 0;
  } catch (const std::exception& e) {
    set_str(err_out, e.what());
    return 2;
  }
}

}  // namespace

extern "C" {

int psa_parse(const char* json_text, psa_handle** out, char** err_out) {
  if (out) *out = nullptr;
  if (err_out) *err_out = nullptr;
  if (!json_text) {
    set_str(err_out, "null input text");
    return 2;
  }
  return parse_into(json_text, out, err_out);
}

int psa_parse_file(const char* path, psa_handle** out, char** err_out) {
  if (out) *out = nullptr;
  if (err_out) *err_out = nullptr;
  if (!path) {
    set_str(err_out, "null path");
    return 2;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    set_str(err_out, std::string("cannot read file: ") + path);
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_into(buf.str(), out, err_out);
}

void psa_free(psa_handle* h) { delete h; }

char* psa_serialize(const psa_handle* h) {
  if (!h) return nullptr;
  return dup_str(psa::serialize_algebra(h->f));
}

int psa_verify(const psa_handle* h, const char* suite, const char* options_json,
               char** report_out) {
  if (report_out) *report_out = nullptr;
  if (!h || !suite) {
    set_str(report_out, "null argument");
    return 2;
  }
  try {
    ParsedOptions po = parse_options(options_json);
    psa::Report rep = psa::run_suite(h->f, suite, po.o);
    set_str(report_out, po.text ? psa::report_text(rep) : psa::report_json(rep));
    return rep.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    set_str(report_out, e.what());
    return 2;
  }
}

int psa_construct(const char* what, const psa_handle* h, const char* options_json,
                  psa_handle** out, char** err_out) {
  if (out) *out = nullptr;
  if (err_out) *err_out = nullptr;
  if (!h || !what) {
    set_str(err_out, "null argument");
    return 2;
  }
  try {
    ParsedOptions po = parse_options(options_json);
    psa::AlgebraFile built = psa::run_construct(h->f, what, po.o);
    if (out) *out = new psa_handle{std::move(built)};
    return 0;
  } catch (const std::exception& e) {
    set_str(err_out, e.what());
    return 2;
  }
}

int psa_ybe(const psa_handle* h, const char* which, const char* options_json,
            char** result_out) {
  if (result_out) *result_out = nullptr;
  if (!h || !which) {
    set_str(result_out, "null argument");
    return 2;
  }
  try {
    ParsedOptions po = parse_options(options_json);
    psa::Report rep = psa::run_ybe(h->f, which);
    set_str(result_out, po.text ? psa::report_text(rep) : psa::report_json(rep));
    return rep.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    set_str(result_out, e.what());
    return 2;
  }
}

int psa_grid_search(const char* grid_json, const char* options_json, char** result_out,
                    char** err_out) {
  if (result_out) *result_out = nullptr;
  if (err_out) *err_out = nullptr;
  if (!grid_json) {
    set_str(err_out, "null grid");
    return 2;
  }
  try {
    ParsedOptions po = parse_options(options_json);
    set_str(result_out, psa::grid_search(grid_json, po.o));
    return 0;
  } catch (const std::exception& e) {
    set_str(err_out, e.what());
    return 2;
  }
}

void psa_str_free(char* s) { std::free(s); }

const char* psa_version(void) { return "0.1.0"; }

}  // extern "C"
