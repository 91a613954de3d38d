#include "brane/cohomology.hpp"

namespace brane {

SparseVec to_sparse(const Element& e, const GradedAlgebra::DegreeBasis& basis) {
    SparseVec v;
    v.reserve(e.size());
    for (const auto& [m, c] : e.terms()) {
        auto it = basis.index.find(m);
        if (it == basis.index.end()) throw AlgebraError("element is not homogeneous of the expected degree");
        v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

Element from_sparse(const SparseVec& v, const AlgPtr& alg, int degree) {
    const auto& monos = alg->basis(degree);
    Element e(alg);
    for (const auto& [i, c] : v) e.add_term(monos.at(i), c);
    return e;
}

static std::shared_ptr<const std::vector<SparseVec>> d_columns(const DgaModel& m, int n) {
    auto& cache = m.cohomology_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.d_columns.find(n);
        if (it != cache.d_columns.end()) return it->second;
    }
    auto cols = std::make_shared<std::vector<SparseVec>>();
    const auto& alg = m.algebra();
    const auto& target = alg->basis_data(n + 1);
    for (const auto& mono : alg->basis(n)) cols->push_back(to_sparse(m.d().apply(mono), target));
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.d_columns.emplace(n, std::move(cols)).first->second;
}

std::shared_ptr<const CohomologyData> cohomology_data(const DgaModel& m, int n) {
    auto& cache = m.cohomology_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.data.find(n);
        if (it != cache.data.end()) return it->second;
    }
    auto data = std::make_shared<CohomologyData>();
    data->degree = n;
    const auto& alg = m.algebra();
    data->chain_dim = static_cast<int>(alg->basis(n).size());
    if (n >= 0) {
        KernelImage ki = kernel_image(*d_columns(m, n));
        data->kernel_dim = static_cast<int>(ki.kernel.size());
        if (n >= 1)
            for (const auto& col : *d_columns(m, n - 1)) data->boundaries.add(col);
        data->image_rank = data->boundaries.rank();
        for (const auto& z : ki.kernel) data->classes.add(data->boundaries.reduce(z));
        for (const auto& [p, row] : data->classes.rows()) {
            data->pivots.push_back(p);
            data->representatives.push_back(from_sparse(row, alg, n));
        }
    }
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.data.emplace(n, std::move(data)).first->second;
}

CohomologyBasis cohomology_basis(const DgaModel& m, int n) {
    auto data = cohomology_data(m, n);
    return {n, data->representatives};
}

std::vector<Q> class_coordinates(const DgaModel& m, const Element& cocycle, int n) {
    auto data = cohomology_data(m, n);
    if (cocycle.is_zero()) return std::vector<Q>(data->representatives.size());
    auto deg = cocycle.degree();
    if (!deg || *deg != n) throw ModelError("element is not homogeneous of degree " + std::to_string(n));
    Element dz = m.differential(cocycle);
    if (!dz.is_zero()) throw ModelError("not a cocycle in degree " + std::to_string(n) + ": d(" + cocycle.str() + ") = " + dz.str());
    SparseVec r = data->boundaries.reduce(to_sparse(cocycle, m.algebra()->basis_data(n)));
    std::vector<Q> coords;
    for (const auto& [p, row] : data->classes.rows()) {
        Q c = entry(r, p);
        coords.push_back(c);
        r = axpy(-c, row, r);
    }
    if (!r.empty()) throw ModelError("cocycle is not spanned by the cohomology basis in degree " + std::to_string(n));
    return coords;
}

Element class_representative(const DgaModel& m, int n, const std::vector<Q>& coords) {
    auto data = cohomology_data(m, n);
    if (coords.size() != data->representatives.size()) throw std::invalid_argument("coordinate vector has wrong length");
    Element e = m.algebra()->zero();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        Element t = data->representatives[i];
        t *= coords[i];
        e += t;
    }
    return e;
}

Matrix induced_map(const LinearChainMap& f, const DgaModel& source, const DgaModel& target, int n, int shift,
                   bool check_boundaries) {
    auto src = cohomology_data(source, n);
    auto tgt = cohomology_data(target, n + shift);
    Matrix mat(tgt->dimension(), src->dimension());
    for (int j = 0; j < src->dimension(); ++j) {
        Element img = f(src->representatives[j]);
        std::vector<Q> c;
        try {
            c = class_coordinates(target, img, n + shift);
        } catch (const ModelError& e) {
            throw ModelError("map is not a chain map at degree " + std::to_string(n) + ", witness " +
                             src->representatives[j].str() + ": " + e.what());
        }
        for (int i = 0; i < tgt->dimension(); ++i) mat(i, j) = c[i];
    }
    if (check_boundaries) {
        for (const auto& [p, row] : src->boundaries.rows()) {
            Element b = from_sparse(row, source.algebra(), n);
            Element img = f(b);
            std::vector<Q> c;
            bool ok = true;
            try {
                c = class_coordinates(target, img, n + shift);
            } catch (const ModelError&) {
                ok = false;
            }
            for (const auto& x : c)
                if (x != 0) ok = false;
            if (!ok)
                throw ModelError("map sends the coboundary " + b.str() + " (degree " + std::to_string(n) +
                                 ") to a non-coboundary");
        }
    }
    return mat;
}

Matrix induced_map(const DgaMorphism& f, int n) {
    return induced_map([&](const Element& e) { return f.apply(e); }, *f.source(), *f.target(), n, 0);
}

Matrix invert_on_cohomology(const DgaMorphism& f, int n) {
    Matrix m = induced_map(f, n);
    auto inv = m.inverse();
    if (!inv)
        throw ModelError("'" + f.source()->name() + "' -> '" + f.target()->name() +
                         "' is not invertible on cohomology in degree " + std::to_string(n));
    return *inv;
}

std::optional<int> quasi_isomorphism_failure(const DgaMorphism& f, int cutoff) {
    for (int n = 0; n <= cutoff; ++n) {
        Matrix m = induced_map(f, n);
        if (!m.inverse()) return n;
    }
    return std::nullopt;
}

}  // namespace brane
