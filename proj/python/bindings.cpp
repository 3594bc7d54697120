// Python module ghcode._core: a thin layer over the library returning plain lists and dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ghcode/classification.hpp"
#include "ghcode/equivalence.hpp"
#include "ghcode/gray.hpp"
#include "ghcode/gray_code.hpp"
#include "ghcode/invariants.hpp"

namespace py = pybind11;
using namespace ghcode;

namespace {

ResourceLimits limits_from(std::optional<std::uint64_t> budget) {
  ResourceLimits l;
  if (budget) l.budget_bytes = *budget;
  return l;
}

py::dict chain_dict(const ChainPosition& c) {
  py::dict d;
  d["representative"] = c.representative.ts();
  d["position"] = c.position;
  d["sigma"] = c.sigma;
  d["chain_length"] = c.chain_length;
  return d;
}

py::dict bound_dict(const BoundValue& b) {
  py::dict d;
  d["value"] = b.value;
  d["published"] = b.reference ? py::cast(*b.reference) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Z_{p^s}-linear generalized Hadamard codes";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);
  (void)input_error;

  m.def(
      "gray",
      [](std::uint32_t p, unsigned s, Residue u) {
        const auto w = gray(u, RingParams(p, s));
        return std::vector<unsigned>(w.begin(), w.end());
      },
      py::arg("p"), py::arg("s"), py::arg("value"), "Gray image of one residue of Z_{p^s}.");

  m.def(
      "tau",
      [](std::uint32_t p, unsigned s, Residue u) {
        const auto v = tau(u, RingParams(p, s));
        return std::vector<Residue>(v.entries().begin(), v.entries().end());
      },
      py::arg("p"), py::arg("s"), py::arg("value"));

  m.def(
      "generator",
      [](std::uint32_t p, std::vector<unsigned> type) {
        const auto code = build_generator_matrix(TypeSignature(p, std::move(type)));
        std::vector<std::vector<Residue>> rows;
        for (const auto& r : code.generator) rows.emplace_back(r.entries().begin(), r.entries().end());
        return rows;
      },
      py::arg("p"), py::arg("type"), "Generator matrix rows over Z_{p^s}.");

  m.def(
      "is_linear", [](std::uint32_t p, std::vector<unsigned> type) { return is_linear_type(p, type); },
      py::arg("p"), py::arg("type"));

  m.def(
      "invariants",
      [](std::uint32_t p, std::vector<unsigned> type, std::optional<std::uint64_t> budget) {
        const auto limits = limits_from(budget);
        const auto pair = invariant_pair(build_generator_matrix(validate_type(p, std::move(type), limits)), limits);
        return py::make_tuple(pair.rank, pair.kernel_dim);
      },
      py::arg("p"), py::arg("type"), py::arg("budget_bytes") = py::none(), "(rank, kernel dimension)");

  m.def(
      "chain",
      [](std::uint32_t p, std::vector<unsigned> type) {
        const auto c = chain_of(TypeSignature(p, std::move(type)));
        py::dict d = chain_dict(c);
        std::vector<std::vector<unsigned>> members;
        for (const auto& x : chain_members(c.representative)) members.push_back(x.ts());
        d["members"] = members;
        return d;
      },
      py::arg("p"), py::arg("type"));

  m.def(
      "equiv_check",
      [](std::uint32_t p, std::vector<unsigned> a, std::vector<unsigned> b, std::optional<std::uint64_t> budget) {
        const auto r = verify_equivalence(TypeSignature(p, std::move(a)), TypeSignature(p, std::move(b)),
                                          limits_from(budget));
        py::dict d;
        d["verdict"] = to_string(r.verdict);
        d["representative"] = py::make_tuple(r.a ? py::cast(r.a->representative.ts()) : py::none(),
                                             r.b ? py::cast(r.b->representative.ts()) : py::none());
        d["positions"] = py::make_tuple(r.a ? py::cast(r.a->position) : py::none(),
                                        r.b ? py::cast(r.b->position) : py::none());
        d["witness"] = r.witness ? py::cast(r.witness->one_based()) : py::none();
        d["mode"] = r.mode;
        d["reason"] = r.reason;
        return d;
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("budget_bytes") = py::none());

  m.def(
      "bounds",
      [](unsigned t, std::uint32_t p) {
        const auto b = bounds(t, p);
        py::dict d;
        d["p"] = b.p;
        d["t"] = b.t;
        d["previous_types"] = bound_dict(b.previous_types);
        d["previous_classes"] = bound_dict(b.previous_classes);
        d["improved"] = bound_dict(b.improved);
        d["improved_classes"] = bound_dict(b.improved_classes);
        d["class_count_assumption"] = b.class_count_assumption;
        d["notes"] = b.notes;
        return d;
      },
      py::arg("t"), py::arg("p"));

  m.def(
      "census",
      [](unsigned t, std::uint32_t p, bool with_invariants, std::optional<std::uint64_t> budget) {
        py::list out;
        for (const auto& row : census(t, p, with_invariants, limits_from(budget))) {
          py::dict d;
          d["type"] = row.type.ts();
          d["s"] = row.type.s();
          d["linear"] = row.linear;
          d["chain"] = row.chain ? py::object(chain_dict(*row.chain)) : py::none();
          d["invariants"] = row.invariants ? py::cast(std::make_pair(row.invariants->rank, row.invariants->kernel_dim))
                                           : py::none();
          d["skipped"] = row.skipped;
          out.append(d);
        }
        return out;
      },
      py::arg("t"), py::arg("p"), py::arg("invariants") = false, py::arg("budget_bytes") = py::none());

  m.def(
      "isolated_types",
      [](unsigned t_max, std::uint32_t p, unsigned t_min) {
        std::map<unsigned, std::vector<std::vector<unsigned>>> out;
        for (const auto& [t, v] : isolated_types(t_max, p, t_min)) {
          for (const auto& s : v) out[t].push_back(s.ts());
        }
        return out;
      },
      py::arg("t_max"), py::arg("p"), py::arg("t_min") = 4);

  m.def(
      "is_gh_code",
      [](std::uint32_t p, std::vector<unsigned> type) {
        const auto code = materialize_gray(build_generator_matrix(TypeSignature(p, std::move(type))));
        return is_gh_code(code, GhCheckMode::automatic(code.size())).passed;
      },
      py::arg("p"), py::arg("type"));
}
