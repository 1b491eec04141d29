// Copyright 2026 The localroots Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "localroots/cli.hpp"
#include "localroots/oracle.hpp"
#include "localroots/parse.hpp"
#include "localroots/report.hpp"
#include "localroots/svg.hpp"

namespace py = pybind11;
using namespace localroots;

namespace {

FieldContext make_field(std::uint32_t p, const std::string& mode, unsigned rdeg) {
    if (mode == "padic") {
        if (rdeg != 1) throw Error(ErrorCode::InvalidField, "Q_p has residue degree 1");
        return FieldContext::padic(p);
    }
    if (mode == "laurent") return FieldContext::laurent(p, rdeg);
    throw Error(ErrorCode::InvalidField, "mode must be padic or laurent", mode);
}

// Each entry point takes the polynomial as text and returns a JSON string;
// the Python side decodes it.
template <class Fn>
auto with_poly(Fn fn) {
    return [fn](const std::string& text, std::uint32_t p, const std::string& mode, unsigned rdeg) {
        const FieldContext F = make_field(p, mode, rdeg);
        return fn(parse_poly(text, F)).dump();
    };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Root counting and root finding over local fields";

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr ptr) {
        try {
            if (ptr) std::rethrow_exception(ptr);
        } catch (const Error& e) {
            py::set_error(error, error_json(e).dump().c_str());
        }
    });


    m.def("polygon", with_poly([](const Poly& f) { return polygon_json(f); }),
          py::arg("f"), py::arg("p"), py::arg("mode") = "padic", py::arg("rdeg") = 1u);
    m.def("regularity", with_poly([](const Poly& f) { return regularity_json(is_regular(f)); }),
          py::arg("f"), py::arg("p"), py::arg("mode") = "padic", py::arg("rdeg") = 1u);
    m.def("count", with_poly([](const Poly& f) { return count_json(count_roots(f)); }),
          py::arg("f"), py::arg("p"), py::arg("mode") = "padic", py::arg("rdeg") = 1u);
    m.def("discriminant", with_poly([](const Poly& f) { return discriminant_json(f); }),
          py::arg("f"), py::arg("p"), py::arg("mode") = "padic", py::arg("rdeg") = 1u);
    m.def("roots",
          [](const std::string& text, std::uint32_t p, const std::string& mode, unsigned rdeg, int precision,
             std::uint64_t budget) {
              const FieldContext F = make_field(p, mode, rdeg);
              return roots_json(find_roots(parse_poly(text, F), precision, budget), F).dump();
          },
          py::arg("f"), py::arg("p"), py::arg("mode") = "padic", py::arg("rdeg") = 1u,
          py::arg("precision") = 10, py::arg("budget") = kDefaultBudget);
    m.def("oracle_count",
          [](const std::string& text, std::uint32_t p, const std::string& mode, unsigned rdeg,
             std::uint64_t budget) {
              const FieldContext F = make_field(p, mode, rdeg);
              return count_roots_oracle(parse_poly(text, F), budget);
          },
          py::arg("f"), py::arg("p"), py::arg("mode") = "padic", py::arg("rdeg") = 1u,
          py::arg("budget") = kDefaultBudget);
    m.def("check_bounds",
          [](const std::string& text, std::uint32_t p, const std::string& mode, unsigned rdeg,
             std::uint64_t budget) {
              const FieldContext F = make_field(p, mode, rdeg);
              return bounds_json(check_bounds(parse_poly(text, F), budget)).dump();
          },
          py::arg("f"), py::arg("p"), py::arg("mode") = "padic", py::arg("rdeg") = 1u,
          py::arg("budget") = kDefaultBudget);
    m.def("newton_svg",
          [](const std::string& text, std::uint32_t p, const std::string& mode, unsigned rdeg) {
              const FieldContext F = make_field(p, mode, rdeg);
              return newton_svg(newton_polygon(parse_poly(text, F)));
          },
          py::arg("f"), py::arg("p"), py::arg("mode") = "padic", py::arg("rdeg") = 1u);
    m.def("normalize",
          [](const std::string& text, std::uint32_t p, const std::string& mode, unsigned rdeg) {
              return format_poly(parse_poly(text, make_field(p, mode, rdeg)));
          },
          py::arg("f"), py::arg("p"), py::arg("mode") = "padic", py::arg("rdeg") = 1u);
    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"));
}
