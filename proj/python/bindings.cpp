#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rankrange/builtin.hpp"
#include "rankrange/compressions.hpp"
#include "rankrange/error.hpp"
#include "rankrange/rank_range.hpp"
#include "rankrange/witness.hpp"

namespace py = pybind11;
using namespace rankrange;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& arr) {
    if (arr.ndim() != 2) throw DimensionError("expected a 2-D array");
    const auto r = static_cast<std::size_t>(arr.shape(0));
    const auto c = static_cast<std::size_t>(arr.shape(1));
    return ComplexMatrix(r, c, std::vector<cplx>(arr.data(), arr.data() + r * c));
}

CArray to_array(const ComplexMatrix& m) {
    CArray out({m.rows(), m.cols()});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

py::dict region_dict(const ConvexRegion& region) {
    py::dict d;
    d["kind"] = to_string(region.kind());
    d["vertices"] = region.vertices();
    return d;
}

IsometryFamily family_from(const py::object& members) {
    std::vector<ComplexMatrix> ms;
    for (const auto& m : members) ms.push_back(to_matrix(m.cast<CArray>()));
    return IsometryFamily::from_members(std::move(ms));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rank-k numerical ranges of complex matrices";

    py::register_exception<EmptinessError>(m, "EmptinessError", PyExc_ValueError);
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("hermitian_part",
          [](const CArray& a, double theta) { return to_array(hermitian_part(to_matrix(a), theta)); },
          py::arg("a"), py::arg("theta") = 0.0);
    m.def("eig_hermitian_desc", [](const CArray& h) {
        HermitianEigen e = eig_hermitian_desc(to_matrix(h));
        return py::make_tuple(e.values, to_array(e.vectors));
    });
    m.def("spectral_norm", [](const CArray& a) { return spectral_norm(to_matrix(a)); });
    m.def("support_value", [](const CArray& a, std::size_t k, double theta) {
        return support_value(to_matrix(a), k, theta);
    });

    m.def(
        "compute_range",
        [](const CArray& a, std::size_t k, std::size_t grid) {
            const RangeResult r = compute_range(RangeRequest{to_matrix(a), k, grid});
            py::dict d = region_dict(r.region);
            d["r_k"] = r.radii ? py::cast(r.radii->outer) : py::none();
            d["r_tilde_k"] = r.radii ? py::cast(r.radii->inner) : py::none();
            d["violated_angle"] = r.certificate ? py::cast(r.certificate->angle) : py::none();
            return d;
        },
        py::arg("a"), py::arg("k") = 1, py::arg("grid") = kDefaultGrid);
    m.def(
        "k_rank_radii",
        [](const CArray& a, std::size_t k, std::size_t grid) {
            const RadiiPair r = k_rank_radii(RangeRequest{to_matrix(a), k, grid});
            return py::make_tuple(r.outer, r.inner);
        },
        py::arg("a"), py::arg("k"), py::arg("grid") = kDefaultGrid);
    m.def(
        "membership",
        [](const CArray& a, std::size_t k, cplx lambda, std::size_t grid) {
            return membership(to_matrix(a), k, lambda, grid);
        },
        py::arg("a"), py::arg("k"), py::arg("lam"), py::arg("grid") = kDefaultGrid);

    m.def(
        "sample_family",
        [](std::size_t n, std::size_t d, std::size_t count, std::uint64_t seed) {
            py::list out;
            for (const auto& iso : sample_family(n, d, count, seed).members) out.append(to_array(iso));
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("count"), py::arg("seed") = 42);
    m.def(
        "intersection_trace",
        [](const CArray& a, std::size_t k, const py::object& members, std::size_t grid) {
            const ConvergenceTrace t =
                intersection_trace(to_matrix(a), k, family_from(members), TraceOptions{grid, 0.0});
            std::vector<double> q, tt, h;
            for (const auto& rec : t.records) {
                q.push_back(rec.q);
                tt.push_back(rec.t);
                h.push_back(rec.hausdorff_to_range);
            }
            py::dict d;
            d["q"] = q;
            d["t"] = tt;
            d["hausdorff"] = h;
            d["range"] = region_dict(t.range.region);
            return d;
        },
        py::arg("a"), py::arg("k"), py::arg("family"), py::arg("grid") = kDefaultGrid);
    m.def(
        "proposition_bounds",
        [](const CArray& a, std::size_t k, const py::object& members, std::size_t grid) {
            const BoundsReport b = proposition_bounds(to_matrix(a), k, family_from(members), grid);
            py::dict d;
            d["r_k"] = b.r_k;
            d["min_compression_radius"] = b.min_compression_radius;
            d["outer_bound_holds"] = b.outer_bound_holds;
            d["origin_in_range"] = b.origin_in_range;
            d["r_tilde_k"] = b.r_tilde_k;
            d["min_compression_inner_radius"] = b.min_compression_inner_radius;
            d["inner_bound_holds"] = b.inner_bound_holds;
            return d;
        },
        py::arg("a"), py::arg("k"), py::arg("family"), py::arg("grid") = kDefaultGrid);

    m.def(
        "find_witness",
        [](const CArray& a, std::size_t k, cplx lambda, double tol, std::size_t max_iters,
           std::size_t restarts, std::uint64_t seed) {
            const WitnessResult w =
                find_witness(to_matrix(a), k, lambda, WitnessOptions{tol, max_iters, restarts, seed});
            py::dict d;
            d["found"] = w.found;
            d["residual"] = w.residual;
            d["iterations"] = w.iterations;
            d["restarts_used"] = w.restarts_used;
            d["N"] = to_array(w.isometry);
            return d;
        },
        py::arg("a"), py::arg("k"), py::arg("lam"), py::arg("tol") = 1e-9,
        py::arg("max_iters") = 5000, py::arg("restarts") = 10, py::arg("seed") = 42);
    m.def(
        "verify_witness",
        [](const CArray& a, const CArray& n, cplx lambda, double tol) {
            return verify_witness(to_matrix(a), to_matrix(n), lambda, tol);
        },
        py::arg("a"), py::arg("N"), py::arg("lam"), py::arg("tol") = 1e-9);

    m.def("paper_example", [] { return to_array(paper_example()); });
    m.def("jordan_block", [](std::size_t n) { return to_array(jordan_block(n)); });
}
