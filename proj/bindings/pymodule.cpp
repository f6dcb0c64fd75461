#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dg/catalog.hpp"
#include "dg/derangement.hpp"
#include "dg/group.hpp"
#include "dg/search.hpp"

namespace py = pybind11;

namespace {

dg::Perm to_perm(const std::vector<int>& img) { return dg::Perm(img); }

py::dict report_dict(const dg::AnalyzeReport& rep) {
    py::dict d;
    d["name"] = rep.name;
    d["degree"] = rep.degree;
    d["transitive"] = rep.transitive;
    d["order"] = rep.order;
    d["derangements"] = rep.derangement_count;
    d["omega"] = rep.omega;
    d["omega_exact"] = rep.omega_exact;
    d["alpha_known"] = rep.alpha_known;
    d["alpha"] = rep.alpha;
    d["rho"] = rep.rho.str();
    d["classification"] = rep.classification;
    d["notes"] = rep.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(dgcore, m) {
    m.doc() = "derangement graph verification core";
    py::register_exception<dg::Error>(m, "DgError");

    m.def("compose",
          [](const std::vector<int>& p, const std::vector<int>& q) {
              return dg::compose(to_perm(p), to_perm(q)).images();
          },
          "apply the first permutation, then the second");
    m.def("inverse", [](const std::vector<int>& p) {
        return dg::inverse(to_perm(p)).images();
    });
    m.def("cycles", [](const std::vector<int>& p) {
        return dg::format_cycles(to_perm(p));
    });
    m.def("perm_order",
          [](const std::vector<int>& p) { return dg::perm_order(to_perm(p)); });
    m.def("is_derangement", [](const std::vector<int>& p) {
        return dg::is_derangement(to_perm(p));
    });

    py::class_<dg::PermGroup>(m, "PermGroup")
        .def(py::init([](int degree, const std::vector<std::vector<int>>& gens) {
                 std::vector<dg::Perm> ps;
                 ps.reserve(gens.size());
                 for (const auto& g : gens) ps.push_back(to_perm(g));
                 return dg::generate_group(degree, std::move(ps));
             }),
             py::arg("degree"), py::arg("generators"))
        .def("degree", &dg::PermGroup::degree)
        .def("order", &dg::PermGroup::order)
        .def("is_transitive",
             [](const dg::PermGroup& g) { return dg::is_transitive(g); })
        .def("elements",
             [](const dg::PermGroup& g) {
                 std::vector<std::vector<int>> out;
                 out.reserve(g.order());
                 for (const dg::Perm& x : g.elements()) out.push_back(x.images());
                 return out;
             })
        .def("derangement_count",
             [](const dg::PermGroup& g) { return dg::derangements(g).size(); })
        .def("clique_number",
             [](const dg::PermGroup& g) {
                 return dg::clique_number(dg::DerangementGraph(g)).omega;
             })
        .def("has_kclique",
             [](const dg::PermGroup& g, std::size_t k) {
                 return dg::has_kclique(dg::DerangementGraph(g), k).has_value();
             },
             py::arg("k"))
        .def("max_coclique_size",
             [](const dg::PermGroup& g) {
                 return dg::max_coclique(dg::DerangementGraph(g)).size();
             })
        .def("intersection_density", [](const dg::PermGroup& g) {
            return dg::intersection_density(g).rho.str();
        });

    m.def("group_from_file", [](const std::string& path) {
        return dg::group_of(dg::load_group_file(path));
    });
    m.def("analyze_file", [](const std::string& path) {
        return report_dict(dg::analyze(dg::load_group_file(path)));
    });
    m.def(
        "search_exceptional",
        [](int p, std::uint64_t budget, std::uint64_t seed,
           std::size_t stop_after) {
            dg::SearchOutcome out =
                dg::search_exceptional(p, budget, seed, stop_after);
            py::list results;
            for (std::size_t i = 0; i < out.records.size(); ++i) {
                py::dict d;
                d["name"] = out.records[i].name;
                d["degree"] = out.records[i].degree;
                d["order"] = out.fingerprints[i].order;
                d["derangements"] = out.fingerprints[i].derangement_count;
                d["omega"] = out.fingerprints[i].omega;
                results.append(d);
            }
            return results;
        },
        py::arg("p"), py::arg("budget") = 10000, py::arg("seed") = 0,
        py::arg("stop_after") = 0);
    m.def("verify_catalog", [](const std::string& dir) {
        dg::CatalogSummary sum = dg::verify_catalog(dir);
        return py::make_tuple(sum.records.size(), sum.failures);
    });
}
