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

#include "psb/psb.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "psb/canonical.hpp"
#include "psb/colored_tuple.hpp"
#include "psb/error.hpp"
#include "psb/gem.hpp"
#include "psb/io.hpp"
#include "psb/pseudobordism.hpp"
#include "psb/rep.hpp"
#include "psb/topology.hpp"

struct psb_tuple {
  psb::ColoredTuple value;
};
struct psb_gem {
  psb::Gem value;
};
struct psb_bordism {
  psb::Pseudobordism value;
};
struct psb_complex {
  psb::SimplicialCellComplex value;
};
struct psb_state {
  psb::TensorState value;
};
struct psb_matrix {
  psb::OperatorMatrix value;
};

namespace {

thread_local std::string last_error;

psb_status fail(psb_status status, const char* message)
{
  last_error = message;
  return status;
}

// Runs f, mapping library exceptions onto status codes.
template <class F>
psb_status guarded(F&& f)
{
  try {
    last_error.clear();
    f();
    return PSB_OK;
  } catch (const psb::ParseError& e) {
    return fail(PSB_ERR_PARSE, e.what());
  } catch (const psb::StructuralError& e) {
    return fail(PSB_ERR_STRUCTURE, e.what());
  } catch (const psb::PreconditionError& e) {
    return fail(PSB_ERR_PRECONDITION, e.what());
  } catch (const psb::CapExceeded& e) {
    return fail(PSB_ERR_CAP, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PSB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PSB_ERR_INTERNAL, e.what());
  }
}

template <class... Ptrs>
psb_status require(Ptrs... ptrs)
{
  if (((ptrs == nullptr) || ...))
    return fail(PSB_ERR_ARGUMENT, "null argument");
  return PSB_OK;
}

char* copy_string(const std::string& s)
{
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::uint64_t effective_cap(std::uint64_t cap)
{
  return cap == 0 ? psb::kDefaultCap : cap;
}

} // namespace

extern "C" {

const char* psb_last_error(void)
{
  return last_error.c_str();
}

const char* psb_version(void)
{
  return "0.1.0";
}

void psb_string_free(char* s)
{
  std::free(s);
}

// Tuples ------------------------------------------------------------------

psb_status psb_tuple_parse(const char* text, psb_tuple** out)
{
  if (auto s = require(text, out))
    return s;
  return guarded([&] { *out = new psb_tuple{psb::parse_tuple(text)}; });
}

psb_status psb_tuple_format(const psb_tuple* g, char** out)
{
  if (auto s = require(g, out))
    return s;
  return guarded([&] { *out = copy_string(psb::format_tuple(g->value)); });
}

psb_status psb_tuple_random(uint32_t size, size_t colors, uint64_t seed, psb_tuple** out)
{
  if (auto s = require(out))
    return s;
  return guarded([&] { *out = new psb_tuple{psb::random_tuple(size, colors, seed)}; });
}

size_t psb_tuple_colors(const psb_tuple* g)
{
  return g ? g->value.colors() : 0;
}

uint32_t psb_tuple_degree(const psb_tuple* g)
{
  return g ? g->value.degree() : 0;
}

psb_status psb_tuple_product(const psb_tuple* g, const psb_tuple* h, uint32_t alpha, uint32_t beta,
                             uint32_t gamma, psb_tuple** out)
{
  if (auto s = require(g, h, out))
    return s;
  return guarded([&] {
    *out = new psb_tuple{psb::dc_product(g->value, h->value, alpha, beta, gamma)};
  });
}

psb_status psb_tuple_involution(const psb_tuple* g, psb_tuple** out)
{
  if (auto s = require(g, out))
    return s;
  return guarded([&] { *out = new psb_tuple{psb::dc_involution(g->value)}; });
}

void psb_tuple_free(psb_tuple* g)
{
  delete g;
}

// Gems ----------------------------------------------------------------------

psb_status psb_gem_from_tuple(const psb_tuple* g, uint32_t min_size, psb_gem** out)
{
  if (auto s = require(g, out))
    return s;
  return guarded([&] { *out = new psb_gem{psb::from_tuple(g->value, min_size)}; });
}

psb_status psb_gem_from_json(const char* json, psb_gem** out)
{
  if (auto s = require(json, out))
    return s;
  return guarded([&] { *out = new psb_gem{psb::gem_from_json(json)}; });
}

psb_status psb_gem_to_json(const psb_gem* gem, char** out)
{
  if (auto s = require(gem, out))
    return s;
  return guarded([&] { *out = copy_string(psb::gem_to_json(gem->value)); });
}

psb_status psb_gem_complete_to_tuple(const psb_gem* gem, psb_tuple** out)
{
  if (auto s = require(gem, out))
    return s;
  return guarded([&] {
    const auto& src = gem->value;
    auto complete = [](std::vector<psb::Label> labels) {
      psb::Label next = 0;
      for (auto l : labels)
        next = std::max(next, l);
      for (auto& l : labels)
        if (l == psb::kNoLabel)
          l = ++next;
      return labels;
    };
    std::vector<std::vector<std::uint32_t>> matchings;
    for (std::size_t c = 0; c < src.colors(); ++c)
      matchings.push_back(src.matching(c));
    const psb::Gem full(src.dimension(), std::move(matchings), complete(src.plus_labels()),
                        complete(src.minus_labels()));
    *out = new psb_tuple{psb::to_tuple(full)};
  });
}

psb_status psb_gem_to_dot(const psb_gem* gem, char** out)
{
  if (auto s = require(gem, out))
    return s;
  return guarded([&] { *out = copy_string(psb::gem_to_dot(gem->value)); });
}

psb_status psb_gem_to_tuple(const psb_gem* gem, psb_tuple** out)
{
  if (auto s = require(gem, out))
    return s;
  return guarded([&] { *out = new psb_tuple{psb::to_tuple(gem->value)}; });
}

unsigned psb_gem_dimension(const psb_gem* gem)
{
  return gem ? gem->value.dimension() : 0;
}

uint32_t psb_gem_size(const psb_gem* gem)
{
  return gem ? gem->value.size() : 0;
}

void psb_gem_free(psb_gem* gem)
{
  delete gem;
}

// Bordisms --------------------------------------------------------------------

psb_status psb_bordism_from_tuple(const psb_tuple* g, uint32_t target, uint32_t source,
                                  psb_bordism** out)
{
  if (auto s = require(g, out))
    return s;
  return guarded([&] {
    *out = new psb_bordism{psb::from_double_coset(psb::DoubleCoset{target, source, g->value})};
  });
}

psb_status psb_bordism_from_json(const char* json, psb_bordism** out)
{
  if (auto s = require(json, out))
    return s;
  return guarded([&] { *out = new psb_bordism{psb::bordism_from_json(json)}; });
}

psb_status psb_bordism_to_json(const psb_bordism* b, char** out)
{
  if (auto s = require(b, out))
    return s;
  return guarded([&] { *out = copy_string(psb::bordism_to_json(b->value)); });
}

psb_status psb_bordism_to_tuple(const psb_bordism* b, psb_tuple** out)
{
  if (auto s = require(b, out))
    return s;
  return guarded([&] { *out = new psb_tuple{psb::to_double_coset(b->value).representative}; });
}

psb_status psb_bordism_identity(unsigned dimension, uint32_t alpha, psb_bordism** out)
{
  if (auto s = require(out))
    return s;
  if (dimension < 1)
    return fail(PSB_ERR_ARGUMENT, "dimension must be at least 1");
  return guarded([&] { *out = new psb_bordism{psb::identity(dimension, alpha)}; });
}

psb_status psb_bordism_compose(const psb_bordism* sigma, const psb_bordism* lambda, psb_bordism** out)
{
  if (auto s = require(sigma, lambda, out))
    return s;
  return guarded([&] { *out = new psb_bordism{psb::compose(sigma->value, lambda->value)}; });
}

psb_status psb_bordism_involution(const psb_bordism* b, psb_bordism** out)
{
  if (auto s = require(b, out))
    return s;
  return guarded([&] { *out = new psb_bordism{psb::involution(b->value)}; });
}

psb_status psb_bordism_canonical_hex(const psb_bordism* b, char** out)
{
  if (auto s = require(b, out))
    return s;
  return guarded([&] { *out = copy_string(psb::to_hex(psb::canonical_form(b->value))); });
}

psb_status psb_bordism_equal(const psb_bordism* a, const psb_bordism* b, int* out)
{
  if (auto s = require(a, b, out))
    return s;
  return guarded([&] { *out = psb::is_isomorphic(a->value, b->value) ? 1 : 0; });
}

uint32_t psb_bordism_source(const psb_bordism* b)
{
  return b ? b->value.source() : 0;
}

uint32_t psb_bordism_target(const psb_bordism* b)
{
  return b ? b->value.target() : 0;
}

psb_status psb_bordism_gem(const psb_bordism* b, psb_gem** out)
{
  if (auto s = require(b, out))
    return s;
  return guarded([&] { *out = new psb_gem{b->value.gem()}; });
}

void psb_bordism_free(psb_bordism* b)
{
  delete b;
}

// Complexes -------------------------------------------------------------------

psb_status psb_complex_from_gem(const psb_gem* gem, psb_complex** out)
{
  if (auto s = require(gem, out))
    return s;
  return guarded([&] { *out = new psb_complex{psb::build_complex(gem->value)}; });
}

psb_status psb_complex_from_json(const char* json, psb_complex** out)
{
  if (auto s = require(json, out))
    return s;
  return guarded([&] { *out = new psb_complex{psb::complex_from_json(json)}; });
}

psb_status psb_complex_to_json(const psb_complex* cx, char** out)
{
  if (auto s = require(cx, out))
    return s;
  return guarded([&] { *out = copy_string(psb::complex_to_json(cx->value)); });
}

psb_status psb_complex_report(const psb_complex* cx, char** out)
{
  if (auto s = require(cx, out))
    return s;
  return guarded([&] {
    std::ostringstream text;
    text << "dimension: " << cx->value.dimension() << '\n';
    text << "f-vector:";
    for (auto count : psb::f_vector(cx->value))
      text << ' ' << count;
    text << '\n';
    text << "euler characteristic: " << psb::euler_characteristic(cx->value) << '\n';
    const auto report = psb::is_pseudomanifold(cx->value);
    text << "pseudomanifold: " << (report.ok ? "yes" : "no") << '\n';
    if (!report.ok)
      text << "  " << report.diagnostic << '\n';
    for (const auto& note : report.notes)
      text << "  note: " << note << '\n';
    if (report.ok) {
      const auto defects = psb::normality_defects(cx->value);
      text << "normal: " << (defects.empty() ? "yes" : "no") << '\n';
      for (const auto& [face, parts] : defects)
        text << "  link of face " << face << " has " << parts << " components\n";
    }
    *out = copy_string(text.str());
  });
}

psb_status psb_complex_normalize(const psb_complex* cx, psb_complex** out)
{
  if (auto s = require(cx, out))
    return s;
  return guarded([&] { *out = new psb_complex{psb::normalize(cx->value)}; });
}

psb_status psb_complex_f_vector(const psb_complex* cx, size_t* counts, size_t capacity, size_t* count)
{
  if (auto s = require(cx, count))
    return s;
  if (capacity > 0 && counts == nullptr)
    return fail(PSB_ERR_ARGUMENT, "null counts buffer");
  return guarded([&] {
    const auto f = psb::f_vector(cx->value);
    *count = f.size();
    for (std::size_t i = 0; i < f.size() && i < capacity; ++i)
      counts[i] = f[i];
  });
}

psb_status psb_complex_euler(const psb_complex* cx, int64_t* out)
{
  if (auto s = require(cx, out))
    return s;
  return guarded([&] { *out = psb::euler_characteristic(cx->value); });
}

psb_status psb_complex_is_pseudomanifold(const psb_complex* cx, int* out)
{
  if (auto s = require(cx, out))
    return s;
  return guarded([&] { *out = psb::is_pseudomanifold(cx->value).ok ? 1 : 0; });
}

psb_status psb_complex_is_normal(const psb_complex* cx, int* out)
{
  if (auto s = require(cx, out))
    return s;
  return guarded([&] { *out = psb::is_normal(cx->value) ? 1 : 0; });
}

void psb_complex_free(psb_complex* cx)
{
  delete cx;
}

// States and representations ------------------------------------------------------

psb_status psb_state_create(const size_t* dims, size_t colors, const double* re, const double* im,
                            psb_state** out)
{
  if (auto s = require(dims, re, out))
    return s;
  return guarded([&] {
    std::vector<std::size_t> d(dims, dims + colors);
    std::size_t total = 1;
    for (auto x : d)
      total *= x;
    std::vector<psb::Complex> coeffs(total);
    for (std::size_t i = 0; i < total; ++i)
      coeffs[i] = {re[i], im ? im[i] : 0.0};
    *out = new psb_state{psb::TensorState(std::move(d), std::move(coeffs))};
  });
}

psb_status psb_state_uniform(const size_t* dims, size_t colors, psb_state** out)
{
  if (auto s = require(dims, out))
    return s;
  return guarded([&] {
    *out = new psb_state{psb::TensorState::uniform(std::vector<std::size_t>(dims, dims + colors))};
  });
}

psb_status psb_state_from_json(const char* json, psb_state** out)
{
  if (auto s = require(json, out))
    return s;
  return guarded([&] { *out = new psb_state{psb::state_from_json(json)}; });
}

psb_status psb_state_to_json(const psb_state* xi, char** out)
{
  if (auto s = require(xi, out))
    return s;
  return guarded([&] { *out = copy_string(psb::state_to_json(xi->value)); });
}

void psb_state_free(psb_state* xi)
{
  delete xi;
}

psb_status psb_spherical_direct(const psb_tuple* g, const psb_state* xi, double* re, double* im)
{
  if (auto s = require(g, xi, re, im))
    return s;
  return guarded([&] {
    const auto z = psb::spherical_direct(g->value, xi->value);
    *re = z.real();
    *im = z.imag();
  });
}

psb_status psb_spherical_combinatorial(const psb_gem* gem, const psb_state* xi, uint64_t cap,
                                       double* re, double* im)
{
  if (auto s = require(gem, xi, re, im))
    return s;
  return guarded([&] {
    const auto z = psb::spherical_combinatorial(gem->value, xi->value, effective_cap(cap));
    *re = z.real();
    *im = z.imag();
  });
}

psb_status psb_rho_bar(const psb_tuple* g, uint32_t alpha, uint32_t beta, const psb_state* xi,
                       uint64_t cap, psb_matrix** out)
{
  if (auto s = require(g, xi, out))
    return s;
  return guarded([&] {
    *out = new psb_matrix{psb::rho_bar(g->value, alpha, beta, xi->value, effective_cap(cap))};
  });
}

psb_status psb_rho_bar_bordism(const psb_bordism* b, const psb_state* xi, uint64_t cap,
                               psb_matrix** out)
{
  if (auto s = require(b, xi, out))
    return s;
  return guarded([&] { *out = new psb_matrix{psb::rho_bar(b->value, xi->value, effective_cap(cap))}; });
}

size_t psb_matrix_rows(const psb_matrix* m)
{
  return m ? m->value.rows : 0;
}

size_t psb_matrix_cols(const psb_matrix* m)
{
  return m ? m->value.cols : 0;
}

psb_status psb_matrix_entry(const psb_matrix* m, size_t row, size_t col, double* re, double* im)
{
  if (auto s = require(m, re, im))
    return s;
  if (row >= m->value.rows || col >= m->value.cols)
    return fail(PSB_ERR_ARGUMENT, "matrix index out of range");
  const auto z = m->value(row, col);
  *re = z.real();
  *im = z.imag();
  return PSB_OK;
}

psb_status psb_matrix_to_json(const psb_matrix* m, char** out)
{
  if (auto s = require(m, out))
    return s;
  return guarded([&] { *out = copy_string(psb::matrix_to_json(m->value)); });
}

psb_status psb_matrix_to_text(const psb_matrix* m, char** out)
{
  if (auto s = require(m, out))
    return s;
  return guarded([&] { *out = copy_string(psb::matrix_to_text(m->value)); });
}

void psb_matrix_free(psb_matrix* m)
{
  delete m;
}

} // extern "C"
