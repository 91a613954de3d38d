#include "brane/brane_ops.hpp"
#include "brane/commands.hpp"
#include "brane/model_file.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace brane;

namespace {

py::object fraction(const Q& q) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(to_string(q));
}

// A parsed model keeps its optional m / mbar overrides next to the DGA.
struct PyModel {
    ModelPtr model;
    std::optional<int> m;
    std::optional<int> mbar;
};

PyModel wrap(ModelPtr p) { return PyModel{std::move(p), std::nullopt, std::nullopt}; }

PyModel from_file(const ModelFile& f) { return PyModel{f.model(), f.m, f.mbar}; }

py::list generators(const PyModel& M) {
    py::list out;
    for (const auto& g : M.model->algebra()->generators()) out.append(py::make_tuple(g.name, g.degree));
    return out;
}

std::string differential(const PyModel& M, const std::string& expr) {
    return M.model->differential(parse_element(M.model->algebra(), expr)).str();
}

bool homology_kind(const BraneOperation& op) {
    return op.kind == BraneOperation::Kind::HomologyProduct || op.kind == BraneOperation::Kind::HomologyCoproduct;
}

std::string basis_label(const BraneOperation& op, int i) {
    return homology_kind(op) ? "σ(" + op.H->label(i) + ")*" : op.H->label(i);
}

py::tuple labels_of(const BraneOperation& op, const Tuple& t) {
    py::tuple out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = basis_label(op, t[i]);
    return out;
}

int index_of(const BraneOperation& op, const std::string& label) {
    for (int i = 0; i < op.H->size(); ++i)
        if (basis_label(op, i) == label) return i;
    throw py::key_error("no basis element '" + label + "'");
}

const char* kind_name(BraneOperation::Kind k) {
    switch (k) {
        case BraneOperation::Kind::ProductDual: return "product_dual";
        case BraneOperation::Kind::CoproductDual: return "coproduct_dual";
        case BraneOperation::Kind::HomologyProduct: return "homology_product";
        case BraneOperation::Kind::HomologyCoproduct: return "homology_coproduct";
    }
    return "";
}

py::list basis(const BraneOperation& op) {
    py::list out;
    for (int i = 0; i < op.H->size(); ++i) {
        int deg = homology_kind(op) ? op.shifted_degree[i] : op.H->degree[i];
        out.append(py::make_tuple(basis_label(op, i), deg, op.H->reps[i].str()));
    }
    return out;
}

py::dict apply_labels(const BraneOperation& op, const std::vector<std::string>& src) {
    if (static_cast<int>(src.size()) != op.op.src_arity) throw py::value_error("wrong number of tensor factors");
    Tuple t;
    for (const auto& s : src) t.push_back(index_of(op, s));
    py::dict out;
    for (const auto& [tgt, c] : op.op.column(t)) out[labels_of(op, tgt)] = fraction(c);
    return out;
}

py::list entries(const BraneOperation& op) {
    py::list out;
    for (const auto& [src, col] : op.op.cols)
        for (const auto& [tgt, c] : col) out.append(py::make_tuple(labels_of(op, src), labels_of(op, tgt), fraction(c)));
    return out;
}

py::dict report(const CheckReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["passed"] = r.pass;
    d["checked"] = r.checked;
    d["sign"] = fraction(r.sign);
    d["witness"] = r.witness;
    return d;
}

GorensteinInfo info_for(const PyModel& V, int k, std::optional<int> m, std::optional<int> mbar) {
    return gorenstein_info(*V.model, k, m ? m : V.m, mbar ? mbar : V.mbar);
}

int cutoff_for(const GorensteinInfo& info, int n) { return n + std::max({info.m, info.mbar, 0}); }

py::dict sphere_table(const PyModel& V, int max_degree) {
    GorensteinInfo info = info_for(V, 2, std::nullopt, std::nullopt);
    BraneEngine engine(V.model, 2, info, cutoff_for(info, max_degree));
    SphereTable tab = odd_sphere_table(dualize_to_homology(engine.product_dual()), dualize_to_homology(engine.coproduct_dual()));
    py::dict d;
    d["deg_y"] = tab.deg_y;
    d["deg_z"] = tab.deg_z;
    d["exterior"] = tab.exterior;
    d["normalization"] = tab.exterior ? fraction(tab.normalization) : py::none();
    d["product"] = tab.product_lines;
    py::list eqs;
    for (const auto& e : tab.coproduct) {
        py::dict q;
        q["lhs"] = e.lhs;
        q["expected"] = e.expected;
        q["computed"] = e.computed;
        q["match"] = e.match;
        eqs.append(q);
    }
    d["coproduct"] = eqs;
    d["passed"] = tab.pass();
    return d;
}

py::tuple run(const std::string& command, const std::string& model_path, int k, int max_degree,
              bool homology, bool tsv, const std::string& suite) {
    CommandOptions opt;
    opt.command = command;
    opt.model_path = model_path;
    opt.k = k;
    opt.max_degree = max_degree;
    opt.homology = homology;
    opt.tsv = tsv;
    opt.suite = suite;
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = run_command(opt, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_brane, m) {
    m.doc() = "Brane operations on Sullivan models of sphere mapping spaces.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ModelError>(m, "ModelError", PyExc_RuntimeError);

    py::class_<PyModel>(m, "Model")
        .def_property_readonly("name", [](const PyModel& M) { return M.model->name(); })
        .def_property_readonly("generators", &generators)
        .def_property_readonly("m", [](const PyModel& M) { return M.m; })
        .def_property_readonly("mbar", [](const PyModel& M) { return M.mbar; })
        .def("d", &differential, py::arg("expr"))
        .def("check_d_squared",
             [](const PyModel& M, int cutoff) -> py::object {
                 auto w = check_d_squared(*M.model, cutoff);
                 if (!w) return py::none();
                 py::dict d;
                 d["degree"] = w->degree;
                 d["input"] = w->input;
                 d["value"] = w->value;
                 return d;
             },
             py::arg("cutoff"))
        .def("cohomology",
             [](const PyModel& M, int n) {
                 std::vector<std::string> reps;
                 for (const auto& r : cohomology_basis(*M.model, n).representatives) reps.push_back(r.str());
                 return reps;
             },
             py::arg("degree"), py::call_guard<py::gil_scoped_release>())
        .def("betti", [](const PyModel& M, int n) { return cohomology_basis(*M.model, n).dimension(); }, py::arg("degree"),
             py::call_guard<py::gil_scoped_release>())
        .def("__str__", [](const PyModel& M) {
            ModelFile f = model_file_of(*M.model);
            f.m = M.m;
            f.mbar = M.mbar;
            return print_model(f);
        })
        .def("__repr__", [](const PyModel& M) {
            return "<brane.Model " + M.model->name() + " with " + std::to_string(M.model->algebra()->size()) + " generators>";
        });

    m.def("parse_model", [](const std::string& text) { return from_file(parse_model(text)); }, py::arg("text"));
    m.def("read_model", [](const std::string& path) { return from_file(read_model_file(path)); }, py::arg("path"));
    m.def("sphere_model", [](const PyModel& V, int k) { return wrap(sphere_model(V.model, k)); }, py::arg("V"), py::arg("k") = 2);
    m.def("disk_model", [](const PyModel& V, int k, bool reversed) { return wrap(disk_model(V.model, k, reversed)); },
          py::arg("V"), py::arg("k") = 2, py::arg("reversed") = false);
    m.def("path_model", [](const PyModel& V) { return wrap(path_model(V.model)); }, py::arg("V"));

    m.def("gorenstein_info",
          [](const PyModel& V, int k, std::optional<int> mm, std::optional<int> mbar) {
              GorensteinInfo i = info_for(V, k, mm, mbar);
              py::dict d;
              d["p"] = i.p;
              d["q"] = i.q;
              d["m"] = i.m;
              d["mbar"] = i.mbar;
              return d;
          },
          py::arg("V"), py::arg("k") = 2, py::arg("m") = py::none(), py::arg("mbar") = py::none());

    py::class_<BraneOperation>(m, "Operation")
        .def_property_readonly("kind", [](const BraneOperation& op) { return kind_name(op.kind); })
        .def_readonly("k", &BraneOperation::k)
        .def_readonly("shift", &BraneOperation::shift)
        .def_property_readonly("m", [](const BraneOperation& op) { return op.info.m; })
        .def_property_readonly("mbar", [](const BraneOperation& op) { return op.info.mbar; })
        .def_property_readonly("arity", [](const BraneOperation& op) { return py::make_tuple(op.op.src_arity, op.op.tgt_arity); })
        .def_property_readonly("max_source_degree", [](const BraneOperation& op) { return op.op.max_src_degree; })
        .def_property_readonly("basis", &basis)
        .def("entries", &entries)
        .def("__call__", &apply_labels, py::arg("source"))
        .def("__repr__", [](const BraneOperation& op) {
            return std::string("<brane.Operation ") + kind_name(op.kind) + " shift=" + std::to_string(op.shift) + ">";
        });

    auto build = [](bool product) {
        return [product](const PyModel& V, int k, int max_degree) {
            GorensteinInfo info = info_for(V, k, std::nullopt, std::nullopt);
            py::gil_scoped_release release;
            BraneEngine engine(V.model, k, info, max_degree);
            return product ? engine.product_dual() : engine.coproduct_dual();
        };
    };
    m.def("product_dual", build(true), py::arg("V"), py::arg("k") = 2, py::arg("max_degree") = 8);
    m.def("coproduct_dual", build(false), py::arg("V"), py::arg("k") = 2, py::arg("max_degree") = 8);
    m.def("to_homology", &dualize_to_homology, py::arg("op"));
    m.def("perturb", [](const BraneOperation& op, unsigned seed, long delta, int n) { return perturb(op, seed, Q(delta), n); },
          py::arg("op"), py::arg("seed"), py::arg("delta") = 1, py::arg("max_source_degree") = -1);

    m.def("check_associativity", [](const BraneOperation& op, int n) { return report(check_associativity(op, n)); },
          py::arg("op"), py::arg("max_degree"));
    m.def("check_commutativity", [](const BraneOperation& op, int n) { return report(check_commutativity(op, n)); },
          py::arg("op"), py::arg("max_degree"));
    m.def("check_frobenius",
          [](const BraneOperation& p, const BraneOperation& c, int n) { return report(check_frobenius(p, c, n)); },
          py::arg("product"), py::arg("coproduct"), py::arg("max_degree"));
    m.def("check_zero", [](const BraneOperation& op) { return report(check_zero_operation(op)); }, py::arg("op"));

    m.def("odd_sphere_table", &sphere_table, py::arg("V"), py::arg("max_degree") = 8);
    m.def("transposition_sign_loop", [](const PyModel& V, int cutoff) { return fraction(transposition_sign_loop(V.model, cutoff)); },
          py::arg("V"), py::arg("cutoff") = 8);

    m.def("run", &run, py::arg("command"), py::arg("model_path"), py::arg("k") = 2, py::arg("max_degree") = 8,
          py::arg("homology") = false, py::arg("tsv") = false, py::arg("suite") = "");
}
