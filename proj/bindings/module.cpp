#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "oafrac/cli.hpp"
#include "oafrac/constructions.hpp"
#include "oafrac/errors.hpp"
#include "oafrac/io.hpp"
#include "oafrac/search.hpp"

namespace py = pybind11;
using namespace oafrac;

namespace {

// Bound values can exceed 64 bits; hand them to python as exact ints.
py::object py_int(Wide v) {
    return py::module_::import("builtins").attr("int")(oafrac::to_string(v));
}

Row1Ordering ordering_from(const std::string& name) {
    if (name == "default") return Row1Ordering::CaseDefault;
    if (name == "first") return Row1Ordering::First;
    if (name == "second") return Row1Ordering::Second;
    throw UsageError("ordering must be 'default', 'first' or 'second'");
}

SearchOptions options_from(std::uint64_t limit, std::uint64_t budget, bool exclude_complete) {
    SearchOptions o;
    o.limit = limit;
    o.budget = budget;
    o.exclude_complete = exclude_complete;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "mixed-level orthogonal arrays: size bounds, group-based constructions, "
              "verification and exhaustive search";
    m.attr("__version__") = kToolVersion;

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ArrayParseError", PyExc_ValueError);
    py::register_exception<CatalogError>(m, "CatalogError", PyExc_RuntimeError);

    py::class_<FactorSpec>(m, "FactorSpec")
        .def(py::init<std::vector<int>>(), py::arg("orders"))
        .def_property_readonly("orders", &FactorSpec::orders)
        .def_property_readonly("factor_count", &FactorSpec::factor_count)
        .def_property_readonly("product", [](const FactorSpec& s) { return py_int(s.product()); })
        .def("__repr__", [](const FactorSpec& s) {
            std::string r = "FactorSpec([";
            for (int i = 0; i < s.factor_count(); ++i) {
                if (i) r += ", ";
                r += std::to_string(s.order(i));
            }
            return r + "])";
        });
    py::implicitly_convertible<py::list, FactorSpec>();
    py::implicitly_convertible<py::tuple, FactorSpec>();

    py::class_<BoundProfile>(m, "BoundProfile")
        .def_property_readonly("levels",
                               [](const BoundProfile& p) {
                                   py::list out;
                                   for (Wide v : p.levels) out.append(py_int(v));
                                   return out;
                               })
        .def_readonly("d", &BoundProfile::threshold_d)
        .def("level", [](const BoundProfile& p, int t) { return py_int(p.level(t)); }, py::arg("t"));

    m.def("lcm_set", [](const std::vector<std::uint64_t>& v) { return py_int(lcm_set(v)); },
          py::arg("values"));
    m.def("ord_p", &ord_p, py::arg("p"), py::arg("b"));
    m.def("lcm_of_leave_one_out_products",
          [](const std::vector<std::uint64_t>& v) { return py_int(lcm_of_leave_one_out_products(v)); },
          py::arg("values"));
    m.def("compute_L", [](const FactorSpec& s, int t) { return py_int(compute_L(s, t)); },
          py::arg("spec"), py::arg("t"));
    m.def("compute_d", &compute_d, py::arg("spec"));
    m.def("bound_profile", &bound_profile, py::arg("spec"));
    m.def("proper_fraction_feasible", &proper_fraction_feasible, py::arg("spec"), py::arg("t"));

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_readonly("name", &FiniteGroup::name)
        .def_readonly("elements", &FiniteGroup::elements)
        .def_readonly("identity", &FiniteGroup::identity)
        .def_property_readonly("order", &FiniteGroup::order)
        .def("mul", &FiniteGroup::mul, py::arg("a"), py::arg("b"))
        .def("inverse", &FiniteGroup::inverse, py::arg("a"))
        .def("__repr__", [](const FiniteGroup& g) {
            return "<FiniteGroup " + g.name + " of order " + std::to_string(g.order()) + ">";
        });

    m.def("make_cyclic", &make_cyclic, py::arg("n"));
    m.def("make_dihedral", &make_dihedral, py::arg("n"));
    m.def("group_from_tag", &group_from_tag, py::arg("tag"));
    m.def("direct_product", &direct_product, py::arg("groups"));
    m.def("is_abelian", &is_abelian, py::arg("group"));
    m.def("conjugacy_classes",
          [](const FiniteGroup& g) { return conjugacy_classes(g).classes; }, py::arg("group"),
          "conjugacy classes as lists of element indices, in discovery order");
    m.def("conjugacy_class_labels",
          [](const FiniteGroup& g) {
              std::vector<std::vector<std::string>> out;
              for (const auto& cls : conjugacy_classes(g).classes) {
                  std::vector<std::string> labels;
                  for (int e : cls) labels.push_back(g.elements[static_cast<size_t>(e)]);
                  out.push_back(std::move(labels));
              }
              return out;
          },
          py::arg("group"));

    py::class_<StrengthWitness>(m, "StrengthWitness")
        .def_readonly("factors", &StrengthWitness::factors)
        .def_readonly("cell_a", &StrengthWitness::cell_a)
        .def_readonly("cell_b", &StrengthWitness::cell_b)
        .def_readonly("count_a", &StrengthWitness::count_a)
        .def_readonly("count_b", &StrengthWitness::count_b);

    py::class_<StrengthReport>(m, "StrengthReport")
        .def_readonly("claimed_t", &StrengthReport::claimed_t)
        .def_readonly("holds", &StrengthReport::holds)
        .def_property_readonly("lambda_map",
                               [](const StrengthReport& r) {
                                   py::dict out;
                                   for (const auto& [subset, lambda] : r.lambda)
                                       out[py::tuple(py::cast(subset))] = lambda;
                                   return out;
                               })
        .def_readonly("witness", &StrengthReport::witness);

    py::class_<ConjugacyWitness>(m, "ConjugacyWitness")
        .def_readonly("run_a", &ConjugacyWitness::run_a)
        .def_readonly("run_b", &ConjugacyWitness::run_b)
        .def_readonly("count_a", &ConjugacyWitness::count_a)
        .def_readonly("count_b", &ConjugacyWitness::count_b);

    py::class_<ConjugacyReport>(m, "ConjugacyReport")
        .def_readonly("holds", &ConjugacyReport::holds)
        .def_readonly("witness", &ConjugacyReport::witness);

    py::class_<OrthogonalArray>(m, "OrthogonalArray")
        .def_property_readonly("spec", &OrthogonalArray::spec)
        .def_property_readonly("factor_count", &OrthogonalArray::factor_count)
        .def_property_readonly("size", &OrthogonalArray::size)
        .def_property_readonly("tags", &OrthogonalArray::tags)
        .def_property_readonly("symbol_sets", &OrthogonalArray::symbol_sets)
        .def("entry", &OrthogonalArray::entry, py::arg("factor"), py::arg("column"))
        .def("column", &OrthogonalArray::column, py::arg("column"))
        .def("to_text", [](const OrthogonalArray& d) { return format_array(d); })
        .def("to_json", [](const OrthogonalArray& d) { return array_to_json(d); })
        .def("__eq__", [](const OrthogonalArray& a, const OrthogonalArray& b) { return a == b; })
        .def("__repr__", [](const OrthogonalArray& d) {
            return "<OrthogonalArray " + std::to_string(d.factor_count()) + " x " +
                   std::to_string(d.size()) + ">";
        });

    m.def("complete_factorial", &complete_factorial, py::arg("spec"),
          py::arg("capacity") = kDefaultCapacity);
    m.def("verify_strength", &verify_strength, py::arg("array"), py::arg("t"));
    m.def("max_strength", &max_strength, py::arg("array"));
    m.def("verify_conjugacy", &verify_conjugacy, py::arg("array"), py::arg("groups"));
    m.def("is_proper_fraction", &is_proper_fraction, py::arg("array"));
    m.def("is_complete_multiple", &is_complete_multiple, py::arg("array"));
    m.def("divisibility_check", &divisibility_check, py::arg("array"), py::arg("t"));
    m.def("strength1_noncomplete", &strength1_noncomplete, py::arg("spec"), py::arg("seed"),
          py::arg("capacity") = kDefaultCapacity);
    m.def("format_array", &format_array, py::arg("array"));
    m.def("parse_array", &parse_array, py::arg("text"));
    m.def("groups_for_array", &groups_for_array, py::arg("array"));

    py::class_<Fraction>(m, "Fraction")
        .def_readonly("num", &Fraction::num)
        .def_readonly("den", &Fraction::den)
        .def("__str__", &Fraction::str)
        .def("__repr__", [](const Fraction& f) { return "Fraction(" + f.str() + ")"; });

    py::class_<ConstructionRecipe>(m, "ConstructionRecipe")
        .def_readonly("spec", &ConstructionRecipe::spec)
        .def_property_readonly("case_name",
                               [](const ConstructionRecipe& r) { return std::string(to_string(r.recipe_case)); })
        .def_readonly("v", &ConstructionRecipe::v)
        .def_readonly("size", &ConstructionRecipe::size)
        .def_readonly("row1_tag", &ConstructionRecipe::row1_tag)
        .def_readonly("in_catalog", &ConstructionRecipe::in_catalog);

    m.def("select_recipe",
          [](const FactorSpec& spec, const std::string& ordering) {
              return select_recipe(spec, ordering_from(ordering));
          },
          py::arg("spec"), py::arg("ordering") = "default");
    m.def("construct",
          [](const FactorSpec& spec, const std::string& ordering) {
              return construct(spec, ordering_from(ordering));
          },
          py::arg("spec"), py::arg("ordering") = "default");

    py::class_<CatalogRow>(m, "CatalogRow")
        .def_readonly("design", &CatalogRow::design)
        .def_readonly("spec", &CatalogRow::spec)
        .def_readonly("complete_size", &CatalogRow::complete_size)
        .def_readonly("array_size", &CatalogRow::array_size)
        .def_readonly("note", &CatalogRow::note)
        .def_readonly("fraction", &CatalogRow::fraction)
        .def_readonly("array", &CatalogRow::array)
        .def_readonly("strength", &CatalogRow::strength)
        .def_readonly("conjugacy", &CatalogRow::conjugacy)
        .def_readonly("max_strength", &CatalogRow::observed_max_strength)
        .def_readonly("repetition_free", &CatalogRow::repetition_free);

    m.def("build_catalog", &build_catalog);
    m.def("render_catalog_table", &render_catalog_table, py::arg("rows"));

    py::class_<SearchOutcome>(m, "SearchOutcome")
        .def_readonly("arrays", &SearchOutcome::arrays)
        .def_readonly("explored", &SearchOutcome::explored)
        .def_readonly("exhausted", &SearchOutcome::exhausted)
        .def_readonly("budget_hit", &SearchOutcome::budget_hit)
        .def_readonly("note", &SearchOutcome::note);

    m.def("search_arrays",
          [](const FactorSpec& spec, std::uint64_t n, int t, std::uint64_t limit,
             std::uint64_t budget, bool exclude_complete) {
              return search_arrays(spec, n, t, options_from(limit, budget, exclude_complete));
          },
          py::arg("spec"), py::arg("size"), py::arg("t"), py::arg("limit") = 1,
          py::arg("budget") = SearchOptions{}.budget, py::arg("exclude_complete") = false);

    py::class_<UniquenessReport>(m, "UniquenessReport")
        .def_property_readonly("status",
                               [](const UniquenessReport& r) { return std::string(to_string(r.status)); })
        .def_readonly("witness", &UniquenessReport::witness)
        .def_readonly("explored", &UniquenessReport::explored)
        .def_readonly("exhausted", &UniquenessReport::exhausted);

    m.def("uniqueness_probe",
          [](const FactorSpec& spec, int t, std::uint64_t budget) {
              SearchOptions o;
              o.budget = budget;
              return uniqueness_probe(spec, t, o);
          },
          py::arg("spec"), py::arg("t"), py::arg("budget") = SearchOptions{}.budget);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "run a CLI invocation in-process; returns (exit_code, stdout, stderr)");
}
