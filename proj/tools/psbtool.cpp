// Copyright 2026 The psb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// psbtool: command-line front end over the psb C interface.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psb/psb.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 20260101;

// Domain failures carry the library diagnostic verbatim.
struct DomainError {
  std::string message;
};
struct UsageError {
  std::string message;
};

void check(psb_status status)
{
  if (status != PSB_OK)
    throw DomainError{psb_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Tuple = std::unique_ptr<psb_tuple, Deleter<psb_tuple, psb_tuple_free>>;
using GemPtr = std::unique_ptr<psb_gem, Deleter<psb_gem, psb_gem_free>>;
using Bordism = std::unique_ptr<psb_bordism, Deleter<psb_bordism, psb_bordism_free>>;
using ComplexPtr = std::unique_ptr<psb_complex, Deleter<psb_complex, psb_complex_free>>;
using State = std::unique_ptr<psb_state, Deleter<psb_state, psb_state_free>>;
using Matrix = std::unique_ptr<psb_matrix, Deleter<psb_matrix, psb_matrix_free>>;

std::string take(char* s)
{
  std::string out(s);
  psb_string_free(s);
  return out;
}

struct Options {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  std::uint32_t gamma = 0;
  std::optional<std::size_t> n_colors;
  std::uint64_t seed = kDefaultSeed;
  std::string state_path;
  std::string dims;
  std::string format = "text";
  std::uint64_t cap = 10'000'000;
  std::uint32_t size = 1;
};

// An input argument: "inline:<tuple>" or a path to a file holding JSON or tuple text.
struct Input {
  std::string text;
  bool json = false;
};

Input read_input(const std::string& arg)
{
  Input in;
  if (arg.rfind("inline:", 0) == 0) {
    in.text = arg.substr(7);
  } else {
    std::ifstream file(arg);
    if (!file)
      throw UsageError{"cannot read input file '" + arg + "'"};
    std::ostringstream buf;
    buf << file.rdbuf();
    in.text = buf.str();
  }
  const auto first = in.text.find_first_not_of(" \t\r\n");
  in.json = first != std::string::npos && in.text[first] == '{';
  return in;
}

Tuple tuple_of(const Input& in, const Options& opt)
{
  if (in.json)
    throw UsageError{"expected a tuple, got JSON"};
  psb_tuple* t = nullptr;
  check(psb_tuple_parse(in.text.c_str(), &t));
  Tuple out(t);
  if (opt.n_colors && psb_tuple_colors(t) != *opt.n_colors)
    throw DomainError{"tuple has " + std::to_string(psb_tuple_colors(t)) + " colors, --n-colors is " +
                      std::to_string(*opt.n_colors)};
  return out;
}

GemPtr gem_of(const Input& in, const Options& opt)
{
  psb_gem* g = nullptr;
  if (in.json) {
    check(psb_gem_from_json(in.text.c_str(), &g));
  } else {
    auto t = tuple_of(in, opt);
    check(psb_gem_from_tuple(t.get(), opt.size, &g));
  }
  return GemPtr(g);
}

Bordism bordism_of(const Input& in, const Options& opt, std::uint32_t target, std::uint32_t source)
{
  psb_bordism* b = nullptr;
  if (in.json) {
    check(psb_bordism_from_json(in.text.c_str(), &b));
  } else {
    auto t = tuple_of(in, opt);
    check(psb_bordism_from_tuple(t.get(), target, source, &b));
  }
  return Bordism(b);
}

std::vector<std::size_t> parse_dims(const std::string& text)
{
  std::vector<std::size_t> dims;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v == 0)
      throw UsageError{"--dims expects positive integers separated by commas, got '" + text + "'"};
    dims.push_back(v);
  }
  return dims;
}

State state_of(const Options& opt, std::size_t colors)
{
  psb_state* s = nullptr;
  if (!opt.state_path.empty()) {
    auto in = read_input(opt.state_path);
    check(psb_state_from_json(in.text.c_str(), &s));
    return State(s);
  }
  auto dims = opt.dims.empty() ? std::vector<std::size_t>(colors, 2) : parse_dims(opt.dims);
  check(psb_state_uniform(dims.data(), dims.size(), &s));
  return State(s);
}

std::string format_complex(double re, double im)
{
  if (re == 0)
    re = 0;
  if (im == 0)
    im = 0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12f %c %.12fi", re, std::signbit(im) ? '-' : '+', std::fabs(im));
  return buf;
}

std::string json_escape(const std::string& s)
{
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

void emit_bordism(const psb_bordism* b, const Options& opt)
{
  if (opt.format == "json") {
    char* s = nullptr;
    check(psb_bordism_to_json(b, &s));
    std::cout << take(s) << '\n';
  } else if (opt.format == "dot") {
    psb_gem* g = nullptr;
    check(psb_bordism_gem(b, &g));
    GemPtr gem(g);
    char* s = nullptr;
    check(psb_gem_to_dot(g, &s));
    std::cout << take(s);
  } else {
    char* key = nullptr;
    check(psb_bordism_canonical_hex(b, &key));
    std::cout << "source: " << psb_bordism_source(b) << '\n'
              << "target: " << psb_bordism_target(b) << '\n'
              << "canonical: " << take(key) << '\n';
  }
}

int run(CLI::App& app, const Options& opt, const std::vector<std::string>& inputs,
        std::uint32_t random_size)
{
  const std::string cmd = app.get_subcommands().front()->get_name();

  if (cmd == "random") {
    psb_tuple* t = nullptr;
    check(psb_tuple_random(random_size, opt.n_colors.value_or(2), opt.seed, &t));
    Tuple g(t);
    char* s = nullptr;
    check(psb_tuple_format(t, &s));
    std::cout << take(s) << '\n';
    return 0;
  }

  if (cmd == "product") {
    auto g = tuple_of(read_input(inputs.at(0)), opt);
    auto h = tuple_of(read_input(inputs.at(1)), opt);
    psb_tuple* p = nullptr;
    check(psb_tuple_product(g.get(), h.get(), opt.alpha, opt.beta, opt.gamma, &p));
    Tuple prod(p);
    psb_bordism* b = nullptr;
    check(psb_bordism_from_tuple(p, opt.alpha, opt.gamma, &b));
    Bordism bord(b);
    char* text = nullptr;
    check(psb_tuple_format(p, &text));
    const auto tuple_text = take(text);
    char* key = nullptr;
    check(psb_bordism_canonical_hex(b, &key));
    const auto hex = take(key);
    if (opt.format == "json")
      std::cout << "{\"tuple\":\"" << json_escape(tuple_text) << "\",\"source\":" << opt.gamma
                << ",\"target\":" << opt.alpha << ",\"canonical\":\"" << hex << "\"}\n";
    else
      std::cout << "tuple: " << tuple_text << '\n' << "canonical: " << hex << '\n';
    return 0;
  }

  if (cmd == "compose") {
    auto sigma = bordism_of(read_input(inputs.at(0)), opt, opt.alpha, opt.beta);
    auto lambda = bordism_of(read_input(inputs.at(1)), opt, opt.beta, opt.gamma);
    psb_bordism* b = nullptr;
    check(psb_bordism_compose(sigma.get(), lambda.get(), &b));
    Bordism out(b);
    emit_bordism(b, opt);
    return 0;
  }

  if (cmd == "canon") {
    auto sigma = bordism_of(read_input(inputs.at(0)), opt, opt.alpha, opt.beta);
    char* key = nullptr;
    check(psb_bordism_canonical_hex(sigma.get(), &key));
    std::cout << take(key) << '\n';
    return 0;
  }

  if (cmd == "iso") {
    auto a = bordism_of(read_input(inputs.at(0)), opt, opt.alpha, opt.beta);
    auto b = bordism_of(read_input(inputs.at(1)), opt, opt.alpha, opt.beta);
    int equal = 0;
    check(psb_bordism_equal(a.get(), b.get(), &equal));
    std::cout << (equal ? "equal" : "different") << '\n';
    return 0;
  }

  if (cmd == "build" || cmd == "export-dot") {
    auto gem = gem_of(read_input(inputs.at(0)), opt);
    char* s = nullptr;
    if (cmd == "export-dot" || opt.format == "dot") {
      check(psb_gem_to_dot(gem.get(), &s));
      std::cout << take(s);
    } else {
      check(psb_gem_to_json(gem.get(), &s));
      std::cout << take(s) << '\n';
    }
    return 0;
  }

  if (cmd == "complex" || cmd == "normalize") {
    const auto in = read_input(inputs.at(0));
    psb_complex* c = nullptr;
    if (in.json && in.text.find("\"faces\"") != std::string::npos) {
      check(psb_complex_from_json(in.text.c_str(), &c));
    } else {
      auto gem = gem_of(in, opt);
      check(psb_complex_from_gem(gem.get(), &c));
    }
    ComplexPtr cx(c);
    if (cmd == "normalize") {
      psb_complex* n = nullptr;
      check(psb_complex_normalize(c, &n));
      cx.reset(n);
    }
    char* s = nullptr;
    if (cmd == "normalize" || opt.format == "json") {
      check(psb_complex_to_json(cx.get(), &s));
      std::cout << take(s) << '\n';
    } else {
      check(psb_complex_report(cx.get(), &s));
      std::cout << take(s);
    }
    return 0;
  }

  if (cmd == "spherical") {
    const auto in = read_input(inputs.at(0));
    auto gem = gem_of(in, opt);
    psb_tuple* t = nullptr;
    if (in.json)
      check(psb_gem_complete_to_tuple(gem.get(), &t));
    else
      check(psb_tuple_parse(in.text.c_str(), &t));
    Tuple g(t);
    auto xi = state_of(opt, psb_tuple_colors(t));
    double dre = 0, dim = 0, cre = 0, cim = 0;
    check(psb_spherical_direct(t, xi.get(), &dre, &dim));
    check(psb_spherical_combinatorial(gem.get(), xi.get(), opt.cap, &cre, &cim));
    const double diff = std::hypot(dre - cre, dim - cim);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", diff);
    if (opt.format == "json") {
      char num[256];
      std::snprintf(num, sizeof num,
                    "{\"direct\":{\"re\":%.17g,\"im\":%.17g},\"combinatorial\":{\"re\":%.17g,"
                    "\"im\":%.17g},\"difference\":%.17g}",
                    dre, dim, cre, cim, diff);
      std::cout << num << '\n';
    } else {
      std::cout << "direct:        " << format_complex(dre, dim) << '\n'
                << "combinatorial: " << format_complex(cre, cim) << '\n'
                << "difference:    " << buf << '\n';
    }
    return 0;
  }

  if (cmd == "rhobar") {
    const auto in = read_input(inputs.at(0));
    psb_matrix* m = nullptr;
    if (in.json) {
      auto b = bordism_of(in, opt, opt.alpha, opt.beta);
      psb_gem* raw = nullptr;
      check(psb_bordism_gem(b.get(), &raw));
      GemPtr gem(raw);
      // Colors of the state follow the gem: dimension + 1.
      auto xi = state_of(opt, psb_gem_dimension(raw) + 1);
      check(psb_rho_bar_bordism(b.get(), xi.get(), opt.cap, &m));
    } else {
      auto g = tuple_of(in, opt);
      auto xi = state_of(opt, psb_tuple_colors(g.get()));
      check(psb_rho_bar(g.get(), opt.alpha, opt.beta, xi.get(), opt.cap, &m));
    }
    Matrix mat(m);
    char* s = nullptr;
    if (opt.format == "json") {
      check(psb_matrix_to_json(m, &s));
      std::cout << take(s) << '\n';
    } else {
      check(psb_matrix_to_text(m, &s));
      std::cout << psb_matrix_rows(m) << " x " << psb_matrix_cols(m) << '\n' << take(s);
    }
    return 0;
  }

  throw UsageError{"unknown subcommand " + cmd};
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Pseudobordisms, double cosets of products of symmetric groups, and their "
               "spherical functions"};
  app.require_subcommand(1);
  Options opt;
  std::vector<std::string> inputs;
  std::uint32_t random_size = 0;

  app.add_option("--n-colors", opt.n_colors, "Number of colors n+1 (random; checks tuple inputs)")
      ->check(CLI::Range(2, 64));
  app.add_option("--alpha", opt.alpha, "Target object alpha");
  app.add_option("--beta", opt.beta, "Source object beta (middle object for compose/product)");
  app.add_option("--gamma", opt.gamma, "Source object gamma of the second factor");
  app.add_option("--seed", opt.seed, "Seed for random");
  app.add_option("--state", opt.state_path, "State JSON file {dims, re, im}");
  app.add_option("--dims", opt.dims, "Dimensions of the uniform default state, e.g. 2,2,2");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--cap", opt.cap, "Entry cap for operators and intermediate tensors")
      ->check(CLI::PositiveNumber);
  app.add_option("--size", opt.size, "Minimum chambers per sign when a tuple becomes a gem (default 1)");
  app.fallthrough();

  auto inputs_for = [&](CLI::App* sub, std::size_t count, const char* what) {
    sub->add_option("inputs", inputs, what)->required()->expected(static_cast<int>(count));
  };
  inputs_for(app.add_subcommand("product", "Double-coset product of two tuples and its canonical key"),
             2, "Tuples g and h");
  inputs_for(app.add_subcommand("compose", "Compose two morphisms sigma o lambda"), 2,
             "Morphisms sigma (beta -> alpha) and lambda (gamma -> beta)");
  inputs_for(app.add_subcommand("canon", "Canonical key of a morphism"), 1, "Morphism");
  inputs_for(app.add_subcommand("iso", "Decide whether two morphisms are equal"), 2, "Morphisms");
  inputs_for(app.add_subcommand("build", "Tuple to gem JSON"), 1, "Tuple or gem");
  inputs_for(app.add_subcommand("complex", "f-vector, Euler characteristic and normality report"),
             1, "Gem, tuple, or complex JSON");
  inputs_for(app.add_subcommand("normalize", "Normalize a face-poset complex"), 1,
             "Complex JSON, gem, or tuple");
  inputs_for(app.add_subcommand("spherical", "Spherical function by both formulas"), 1,
             "Tuple or gem");
  inputs_for(app.add_subcommand("rhobar", "Operator matrix of a double coset"), 1,
             "Tuple (with --alpha, --beta) or morphism JSON");
  app.add_subcommand("random", "Seeded random tuple")
      ->add_option("size", random_size, "Degree bound L")
      ->required();
  inputs_for(app.add_subcommand("export-dot", "Gem as Graphviz DOT"), 1, "Tuple or gem");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(app, opt, inputs, random_size);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.message << '\n';
    return 1;
  }
}
