#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dloc/groebner.hpp"
#include "dloc/weyl.hpp"

namespace dloc {

// local intersection multiplicity: a natural number, infinite, or undefined
// (a positive-dimensional component passes through the origin)
struct Multiplicity {
    enum class Kind { Finite, Infinite, Undefined };
    Kind kind = Kind::Undefined;
    long long value = 0;

    static Multiplicity finite(long long v) { return {Kind::Finite, v}; }
    static Multiplicity infinite() { return {Kind::Infinite, 0}; }
    static Multiplicity undefined() { return {Kind::Undefined, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool operator==(const Multiplicity& o) const {
        return kind == o.kind && (kind != Kind::Finite || value == o.value);
    }
};

std::string to_string(const Multiplicity& m);

struct TruncationReport {
    int d = 0;
    std::vector<WeylElement> generators;
    std::vector<Poly> char_generators; // in (x,y,xi,eta)
    Multiplicity m;
    Rational point_a, point_b;
    double wall_ms = 0; // informational only
};

struct KappaResult {
    int kappa = 0;
    WeylIdeal annihilator;
    int curve_multiplicity = 0;
    std::vector<TruncationReport> trace;
    Rational point_a, point_b;
    bool smooth_curve = false;
    double total_ms = 0;
};

enum class CurveErrorCode {
    ConstantPoly = 2,
    NotSquarefree = 3,
    MissingOrigin = 4,
    OffOriginSingularity = 5,
};

struct CurveError : std::runtime_error {
    CurveError(CurveErrorCode code, const std::string& what, std::string witness = {})
        : std::runtime_error(what), code(code), witness(std::move(witness)) {}
    CurveErrorCode code;
    std::string witness; // e.g. the saturated singular-locus ideal
};

struct OrderCapExceeded : std::runtime_error {
    explicit OrderCapExceeded(int cap)
        : std::runtime_error("order cap " + std::to_string(cap) + " exceeded"), cap(cap) {}
    int cap;
};

struct NoGenericityPoint : std::runtime_error {
    explicit NoGenericityPoint(const std::string& what) : std::runtime_error(what) {}
};

struct CurveInput {
    Poly f;
    int a = -1;
    bool origin_singular = false;
};

// rejects constant, non-squarefree, origin-missing and off-origin-singular
// curves with distinct error codes; classifies the origin
CurveInput validate_curve(const Poly& f);

// numerators N_alpha with d^alpha f^a = N_alpha f^(a-d), |alpha| <= d,
// enumerated by total degree and lexicographically within a degree
std::vector<std::pair<ExpVec, Poly>> derivative_numerators(const Poly& f, int a, int d);

// left ideal generated by the annihilating operators of order <= d; every
// generator is checked against the twisted-power action on construction.
// When `seed` syzygies from the previous order are given they are reused;
// `out_syzygies` receives this order's syzygy generators.
WeylIdeal truncated_annihilator(const Poly& f, int a, int d,
                                std::span<const ModuleVector> seed = {},
                                std::vector<ModuleVector>* out_syzygies = nullptr);

// order of vanishing at the origin
int curve_multiplicity(const Poly& f);

// true iff (0,0,a,b) avoids the closure of the conormal to the smooth part
// of the curve, computed through syzygies of the gradient and a saturation
bool check_genericity(const Poly& f, const Rational& a, const Rational& b);

// multiplicity of the origin-primary component of J in Q[x,y]
Multiplicity local_multiplicity_at_origin(const Ideal& J);

// multiplicity of the conormal fiber over the origin in the characteristic
// cycle of the d-th truncation, through the plane (xi,eta)=(a,b)
Multiplicity m_d(const Poly& f, int a, int d, const Rational& pa, const Rational& pb);

// x^p + y^q + x*y^(q-1), p >= 4, q >= p+1
Poly reiffen(int p, int q);

// deterministic small-integer candidate planes, (0,1) first
const std::vector<std::pair<Rational, Rational>>& genericity_ladder();

struct KappaConfig {
    int max_d = 50;
    std::optional<std::pair<Rational, Rational>> point; // overrides the ladder
    bool reuse_syzygies = false;
};

// the main iteration: stops at the first d with m^(d) = multiplicity - 1
KappaResult kappa_and_annihilator(const Poly& f, const KappaConfig& config = {});

} // namespace dloc
