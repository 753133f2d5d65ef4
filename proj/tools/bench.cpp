// Compares the serial reference paths with their OpenMP counterparts:
// batch normal forms against a fixed basis, and experiment-cell fan-out.
// Outputs must match exactly; the tool reports wall times for both.

#include <chrono>
#include <iostream>
#include <random>

#include "dloc/experiment.hpp"
#include "dloc/groebner.hpp"
#include "dloc/parse.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace dloc;

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Poly random_poly(const Ring& ring, std::mt19937& rng, int max_deg, int terms) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        ExpVec m(ring->arity());
        for (int i = 0; i < ring->arity(); ++i) m[i] = deg(rng);
        ts.push_back({m, Rational(coeff(rng))});
    }
    return Poly::from_terms(ring, std::move(ts));
}

} // namespace

int main() {
    int threads = 2;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "threads available: " << threads << "\n\n";

    // --- batch normal form ---------------------------------------------------
    Ring ring = ring_xy();
    Poly f = parse_poly("x^6+y^7+x*y^6", ring);
    std::vector<Poly> basis_gens{f, f.partial_derivative(0), f.partial_derivative(1)};
    auto gb = groebner_basis(std::span<const Poly>(basis_gens), MonomialOrder::grevlex());

    std::mt19937 rng(20240611);
    std::vector<Poly> batch;
    for (int i = 0; i < 200; ++i) batch.push_back(random_poly(ring, rng, 14, 24));

    auto t0 = std::chrono::steady_clock::now();
    auto serial = normal_form_batch(batch, gb, MonomialOrder::grevlex(), 1);
    double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto parallel = normal_form_batch(batch, gb, MonomialOrder::grevlex(), threads);
    double parallel_ms = ms_since(t0);

    std::cout << "normal_form_batch, 200 polynomials vs " << gb.size() << "-element basis\n";
    std::cout << "  serial:   " << serial_ms << " ms\n";
    std::cout << "  parallel: " << parallel_ms << " ms (jobs=" << threads << ")\n";
    std::cout << "  identical results: " << (serial == parallel ? "yes" : "NO") << "\n\n";

    // --- experiment fan-out ---------------------------------------------------
    auto q_rule = [](int p) { return p + 1; };
    t0 = std::chrono::steady_clock::now();
    auto table_serial = run_experiment(4, 5, q_rule, 1);
    serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto table_parallel = run_experiment(4, 5, q_rule, threads);
    parallel_ms = ms_since(t0);

    bool same = table_serial.rows.size() == table_parallel.rows.size();
    for (size_t i = 0; same && i < table_serial.rows.size(); ++i) {
        const auto& a = table_serial.rows[i];
        const auto& b = table_parallel.rows[i];
        same = a.ok == b.ok && a.kappa == b.kappa && a.m_trace.size() == b.m_trace.size();
        for (size_t k = 0; same && k < a.m_trace.size(); ++k) same = a.m_trace[k] == b.m_trace[k];
    }
    std::cout << "experiment cells p=4..5 (q=p+1)\n";
    std::cout << "  serial:   " << serial_ms << " ms\n";
    std::cout << "  parallel: " << parallel_ms << " ms (jobs=" << threads << ")\n";
    std::cout << "  identical tables: " << (same ? "yes" : "NO") << "\n";
    return (serial == parallel && same) ? 0 : 1;
}
