// Test-side oracle: dense exact linear algebra over Q for checking syzygy
// generators at bounded degree. Deliberately independent of the Groebner
// engine; everything here is plain Gaussian elimination.
#pragma once

#include <span>
#include <vector>

#include "dloc/groebner.hpp"

namespace dloc::oracle {

inline std::vector<ExpVec> monomials_up_to(int deg) {
    std::vector<ExpVec> out;
    for (int d = 0; d <= deg; ++d)
        for (int i = d; i >= 0; --i) {
            ExpVec m(2);
            m[0] = i;
            m[1] = d - i;
            out.push_back(m);
        }
    return out;
}

using Row = std::vector<Rational>;

// reduce to row echelon form in place, return rank
inline size_t echelonize(std::vector<Row>& m) {
    size_t rank = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = 1 / m[rank][col];
        for (auto& x : m[rank]) x *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    m.resize(rank);
    return rank;
}

inline bool in_row_space(const std::vector<Row>& echelon, Row v) {
    for (const auto& row : echelon) {
        size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) continue;
        if (v[lead] != 0) {
            Rational factor = v[lead];
            for (size_t c = lead; c < v.size(); ++c) v[c] -= factor * row[c];
        }
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// basis of {c in R^N : sum c_i v_i = 0, deg c_i <= D} from the nullspace of
// the multiplication map's coefficient matrix
inline std::vector<ModuleVector> kernel_slice(std::span<const Poly> v, int D) {
    const Ring ring = v[0].ring();
    const int n = static_cast<int>(v.size());
    auto cmons = monomials_up_to(D);
    int vdeg = 0;
    for (const auto& f : v)
        if (!f.is_zero()) vdeg = std::max(vdeg, static_cast<int>(f.degree_info().total));
    auto emons = monomials_up_to(D + vdeg);
    auto eindex = [&](const ExpVec& m) {
        for (size_t i = 0; i < emons.size(); ++i)
            if (emons[i] == m) return i;
        throw std::logic_error("monomial out of range");
    };

    const size_t unknowns = static_cast<size_t>(n) * cmons.size();
    std::vector<Row> mat(emons.size(), Row(unknowns, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (size_t cm = 0; cm < cmons.size(); ++cm)
            for (const auto& t : v[static_cast<size_t>(i)].terms())
                mat[eindex(t.mono + cmons[cm])][static_cast<size_t>(i) * cmons.size() + cm] += t.coeff;

    std::vector<Row> work = mat;
    size_t rank = echelonize(work);
    std::vector<int> lead_col(rank);
    std::vector<bool> is_lead(unknowns, false);
    for (size_t r = 0; r < rank; ++r) {
        size_t c = 0;
        while (work[r][c] == 0) ++c;
        lead_col[r] = static_cast<int>(c);
        is_lead[c] = true;
    }
    std::vector<ModuleVector> kernel;
    for (size_t free_col = 0; free_col < unknowns; ++free_col) {
        if (is_lead[free_col]) continue;
        Row sol(unknowns, Rational(0));
        sol[free_col] = 1;
        for (size_t r = 0; r < rank; ++r) sol[static_cast<size_t>(lead_col[r])] = -work[r][free_col];
        ModuleVector c{ring, {}};
        for (int i = 0; i < n; ++i) {
            std::vector<Term> terms;
            for (size_t cm = 0; cm < cmons.size(); ++cm) {
                const Rational& x = sol[static_cast<size_t>(i) * cmons.size() + cm];
                if (x != 0) terms.push_back({cmons[cm], x});
            }
            c.components.push_back(Poly::from_terms(ring, std::move(terms)));
        }
        kernel.push_back(std::move(c));
    }
    return kernel;
}

inline Row vector_coords(const ModuleVector& v, const std::vector<ExpVec>& mons) {
    Row row(v.components.size() * mons.size(), Rational(0));
    for (size_t i = 0; i < v.components.size(); ++i)
        for (const auto& t : v.components[i].terms()) {
            size_t j = 0;
            while (!(mons[j] == t.mono)) ++j;
            row[i * mons.size() + j] = t.coeff;
        }
    return row;
}

inline int vec_degree(const ModuleVector& v) {
    int d = 0;
    for (const auto& c : v.components)
        if (!c.is_zero()) d = std::max(d, static_cast<int>(c.degree_info().total));
    return d;
}

// soundness + bounded-degree completeness of `gens` as syzygies of v.
// Every kernel element of multiplier degree <= D must be a combination of
// generator multiples; combinations may pass through higher degrees before
// cancelling, so the multiplier bound escalates until a certificate is found
// or a generous cap is hit.
inline bool syzygy_generators_complete(std::span<const Poly> v,
                                       std::span<const ModuleVector> gens) {
    auto dot = [&](const ModuleVector& c) {
        Poly sum = Poly::zero(v[0].ring());
        for (size_t i = 0; i < v.size(); ++i) sum = sum + c.components[i] * v[i];
        return sum;
    };
    for (const auto& g : gens)
        if (!dot(g).is_zero()) return false;

    int gdeg = 0;
    for (const auto& g : gens) gdeg = std::max(gdeg, vec_degree(g));
    const int D = std::max(2, gdeg + 1);

    auto kernel = kernel_slice(v, D);
    for (const auto& k : kernel)
        if (!dot(k).is_zero()) return false; // oracle self-check

    std::vector<char> placed(kernel.size(), 0);
    for (int slack = 3; slack <= 15; slack += 4) {
        const int Dbig = D + slack;
        auto ambient = monomials_up_to(Dbig);
        std::vector<Row> span;
        for (const auto& g : gens) {
            int gd = vec_degree(g);
            for (const auto& mu : monomials_up_to(Dbig - gd)) {
                ModuleVector shifted{g.ring, {}};
                for (const auto& comp : g.components)
                    shifted.components.push_back(comp.monomial_multiple(Rational(1), mu));
                span.push_back(vector_coords(shifted, ambient));
            }
        }
        echelonize(span);
        bool all = true;
        for (size_t i = 0; i < kernel.size(); ++i) {
            if (placed[i]) continue;
            if (in_row_space(span, vector_coords(kernel[i], ambient)))
                placed[i] = 1;
            else
                all = false;
        }
        if (all) return true;
    }
    return false;
}

} // namespace dloc::oracle
