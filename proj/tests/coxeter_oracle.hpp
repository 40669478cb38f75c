// Floating-point and brute-force references for Coxeter diagrams (needs Eigen).
#ifndef ACTDIM_TESTS_COXETER_ORACLE_HPP
#define ACTDIM_TESTS_COXETER_ORACLE_HPP

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "actdim/coxart.hpp"

namespace oracle {

using actdim::CoxeterSystem;
using actdim::GeneratorSet;

/// W_T is finite iff the cosine matrix (1 on the diagonal, -cos(pi/m_st)
/// off it, -1 for infinity) is positive definite.
inline bool positive_definite(const CoxeterSystem& w, const GeneratorSet& t)
{
    const auto k = static_cast<Eigen::Index>(t.size());
    Eigen::MatrixXd b(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) {
            const int m = w.m(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
            b(i, j) = i == j ? 1.0 : (m == 0 ? -1.0 : -std::cos(M_PI / m));
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    return es.eigenvalues().minCoeff() > 1e-9;
}

/// Connected induced subgraphs of the diagram (edges where m != 2) inside t.
inline std::size_t connected_subdiagrams(const CoxeterSystem& w, const GeneratorSet& t)
{
    std::size_t count = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << t.size()); ++mask) {
        std::vector<int> vs;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (mask >> i & 1)
                vs.push_back(t[i]);
        std::set<int> reached{vs[0]};
        std::vector<int> stack{vs[0]};
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : vs)
                if (!reached.count(b) && w.m(a, b) != 2) {
                    reached.insert(b);
                    stack.push_back(b);
                }
        }
        if (reached.size() == vs.size())
            ++count;
    }
    return count;
}

}  // namespace oracle

#endif
