#include "filtadm/commands.hpp"
#include "filtadm/frobenius.hpp"
#include "filtadm/special_pairs.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace filtadm;

namespace {

// Rationals cross the boundary as "num/den" strings; the Python side turns
// them into fractions.Fraction.
std::vector<Rat> parse_all(const std::vector<std::string>& xs) {
    std::vector<Rat> out;
    for (const auto& x : xs) out.push_back(parse_rational(x));
    return out;
}

std::vector<std::string> show_all(const std::vector<Rat>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

SpecialPair make_pair(const std::vector<std::string>& a, const std::vector<std::string>& c) {
    return {parse_all(a), parse_all(c)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact admissibility checks for block-model filtered (phi, N)-modules";

    m.def(
        "run",
        [](const std::string& command, const std::string& spec, const std::string& weights, std::uint64_t seed,
           bool no_modify, std::size_t trials, std::optional<std::size_t> cap) {
            CommandOptions o;
            o.command = command;
            o.spec_text = spec;
            o.weights_text = weights;
            o.seed = seed;
            o.no_modify = no_modify;
            o.trials = trials;
            o.cap = cap;
            CommandResult r;
            {
                py::gil_scoped_release release;
                r = run_command(o);
            }
            return py::make_tuple(r.exit, without_timing(r.report).dump());
        },
        py::arg("command"), py::arg("spec") = "", py::arg("weights") = "", py::arg("seed") = 0,
        py::arg("no_modify") = false, py::arg("trials") = 10000, py::arg("cap") = py::none());

    m.def("t_n", [](const std::string& spec) { return to_string(tN(spec_from_json(parse_json_text(spec, "spec")))); },
          py::arg("spec"));

    m.def(
        "is_special",
        [](const std::vector<std::string>& a, const std::vector<std::string>& c) {
            const auto chk = is_special(make_pair(a, c));
            return py::make_tuple(chk.ok, chk.clause);
        },
        py::arg("a"), py::arg("c"));

    m.def(
        "solve_t",
        [](const std::vector<std::string>& a, const std::vector<std::string>& c) {
            const auto s = solve_t(make_pair(a, c));
            return py::make_tuple(show_all(s.t), to_string(s.r));
        },
        py::arg("a"), py::arg("c"));

    m.def(
        "omega",
        [](const std::vector<std::string>& a, const std::vector<std::string>& c) { return omega_of(make_pair(a, c)); },
        py::arg("a"), py::arg("c"));

    m.def(
        "weighted_inequality",
        [](const std::vector<long>& omega, const std::vector<std::string>& m_, const std::vector<std::string>& n_) {
            const auto mv = parse_all(m_), nv = parse_all(n_);
            const auto chk = check_weighted_inequality(omega, mv, nv);
            return py::make_tuple(std::string(to_string(chk.status)), to_string(chk.lhs), to_string(chk.rhs));
        },
        py::arg("omega"), py::arg("m"), py::arg("n"));

    py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);
}
