#pragma once

// Degeneracy bookkeeping: group sorted eigenvalues into classes by
// single-linkage -- a new class starts exactly where an adjacent gap
// reaches the tolerance.  The partition is total and deterministic.

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexamer/eigen.hpp"
#include "hexamer/matrix.hpp"

namespace hexamer {

struct DegeneracyClass {
    double energy = 0.0;  // mean of the members
    int multiplicity = 0;
    std::vector<int> members;  // eigenvalue indices, ascending
};

struct DegeneracyClasses {
    std::vector<DegeneracyClass> classes;  // ascending in energy
    double tol = 0.0;

    // Multiplicities bottom-to-top, e.g. "3|1|2".
    std::string pattern() const {
        std::ostringstream os;
        for (size_t i = 0; i < classes.size(); ++i) {
            if (i) os << '|';
            os << classes[i].multiplicity;
        }
        return os.str();
    }

    int class_of(int eigen_index) const {
        for (size_t c = 0; c < classes.size(); ++c)
            for (int m : classes[c].members)
                if (m == eigen_index) return static_cast<int>(c);
        throw std::invalid_argument("class_of: index not covered");
    }
};

inline DegeneracyClasses cluster_degeneracies(const std::vector<double>& eigenvalues,
                                              double tol) {
    if (!std::isfinite(tol) || tol <= 0.0)
        throw std::invalid_argument("cluster_degeneracies: tol must be positive");
    if (eigenvalues.empty())
        throw std::invalid_argument("cluster_degeneracies: empty spectrum");
    for (size_t i = 1; i < eigenvalues.size(); ++i)
        if (eigenvalues[i] < eigenvalues[i - 1])
            throw std::invalid_argument("cluster_degeneracies: eigenvalues must ascend");

    DegeneracyClasses out;
    out.tol = tol;
    DegeneracyClass cur;
    cur.members.push_back(0);
    for (size_t i = 1; i < eigenvalues.size(); ++i) {
        if (eigenvalues[i] - eigenvalues[i - 1] < tol) {
            cur.members.push_back(static_cast<int>(i));
        } else {
            out.classes.push_back(cur);
            cur = DegeneracyClass{};
            cur.members.push_back(static_cast<int>(i));
        }
    }
    out.classes.push_back(cur);

    for (auto& c : out.classes) {
        c.multiplicity = static_cast<int>(c.members.size());
        double sum = 0.0;
        for (int m : c.members) sum += eigenvalues[m];
        c.energy = sum / c.multiplicity;
    }
    return out;
}

inline DegeneracyClasses cluster_degeneracies(const Spectrum& s, double tol) {
    return cluster_degeneracies(s.eigenvalues, tol);
}

// Orthonormal basis of a class's eigenspace, Gram-Schmidt in member order.
// Jacobi already returns orthonormal columns; this pins the within-class
// basis deterministically regardless of how the solver resolved it.
inline std::vector<Cvec> class_basis(const Spectrum& s, const DegeneracyClass& cls) {
    std::vector<Cvec> basis;
    for (int m : cls.members) {
        Cvec v = s.eigenvector(m);
        for (const auto& b : basis) {
            const Complex proj = inner(b, v);
            for (size_t i = 0; i < v.size(); ++i) v[i] -= proj * b[i];
        }
        basis.push_back(normalized(std::move(v)));
    }
    return basis;
}

}  // namespace hexamer
