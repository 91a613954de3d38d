#pragma once

#include "brane/dga.hpp"
#include "brane/linalg.hpp"

#include <functional>

namespace brane {

SparseVec to_sparse(const Element& e, const GradedAlgebra::DegreeBasis& basis);
Element from_sparse(const SparseVec& v, const AlgPtr& alg, int degree);

struct CohomologyData {
    int degree = 0;
    int chain_dim = 0;
    int kernel_dim = 0;
    int image_rank = 0;  // rank of d into this degree
    Echelon boundaries;  // B^n in basis(n) coordinates
    Echelon classes;     // representatives, reduced modulo B^n and against each other
    std::vector<int> pivots;
    std::vector<Element> representatives;
    int dimension() const { return static_cast<int>(representatives.size()); }
};

struct CohomologyCache {
    std::mutex mu;
    std::map<int, std::shared_ptr<const std::vector<SparseVec>>> d_columns;
    std::map<int, std::shared_ptr<const CohomologyData>> data;
};

struct CohomologyBasis {
    int degree = 0;
    std::vector<Element> representatives;
    int dimension() const { return static_cast<int>(representatives.size()); }
};

std::shared_ptr<const CohomologyData> cohomology_data(const DgaModel& m, int n);
CohomologyBasis cohomology_basis(const DgaModel& m, int n);

class ModelError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Coordinates of the class of a homogeneous cocycle of degree n (zero element: pass n explicitly).
std::vector<Q> class_coordinates(const DgaModel& m, const Element& cocycle, int n);
Element class_representative(const DgaModel& m, int n, const std::vector<Q>& coords);

using LinearChainMap = std::function<Element(const Element&)>;

// Matrix (target dim x source dim) of the map H^n(source) -> H^(n+shift)(target).
// Every image of a representative is checked to be a cocycle; when `check_boundaries` is set the images of
// the boundary basis are checked to be boundaries as well.
Matrix induced_map(const LinearChainMap& f, const DgaModel& source, const DgaModel& target, int n, int shift = 0,
                   bool check_boundaries = true);
Matrix induced_map(const DgaMorphism& f, int n);
Matrix invert_on_cohomology(const DgaMorphism& f, int n);

// Is f an isomorphism on H^n for every n <= cutoff? Returns the first failing degree.
std::optional<int> quasi_isomorphism_failure(const DgaMorphism& f, int cutoff);

}  // namespace brane
