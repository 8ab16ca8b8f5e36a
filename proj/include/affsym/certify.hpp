#pragma once
#include <string>
#include <vector>
#include "affsym/family.hpp"
#include "affsym/induced.hpp"
#include "affsym/measure.hpp"

namespace affsym {

struct GridSpec {
    double t0 = 0, t1 = 1;
    int nt = 1;
    double v0 = 0, v1 = 1;
    int nv = 1;
    double w0 = 0, w1 = 1;
    int nw = 1;

    size_t total() const { return size_t(nt) * nv * nw; }
    double t_at(int i) const { return nt < 2 ? t0 : t0 + (t1 - t0) * i / double(nt - 1); }
    double v_at(int i) const { return nv < 2 ? v0 : v0 + (v1 - v0) * i / double(nv - 1); }
    double w_at(int i) const { return nw < 2 ? w0 : w0 + (w1 - w0) * i / double(nw - 1); }
    std::array<double, 3> midpoint() const {
        return {(t0 + t1) / 2, (v0 + v1) / 2, (w0 + w1) / 2};
    }
};

// every tolerance the pipeline uses; reports echo these values
struct Tolerances {
    double shape = 1e-10;            // ||S - H Id||_inf
    double tangentiality = 1e-8;     // xi-component of D xi
    double blaschke = 1e-6;          // volume-condition residual
    double blaschke_fraction = 0.99; // fraction of points required under it
    double condition = 1e-6;         // curve-condition relative residual
    double class_threshold = 1e-3;   // a4/a6/b4 significance
    double class_residual = 1e-2;    // canonical-form residual cap
    double nu = 1e-4;                // |nu| cutoff for cases 2/3
    double classify_step = 1e-2;     // FD step for K measurement
};

struct PointRecord {
    double t, v, w;
    bool transversal = false;
    double S_residual = 0;
    double blaschke = 0;
    double decomposition = 0;
    double tangentiality = 0;
    Signature sig = Signature::Degenerate;
    std::string error;
    // filled when the run asks for per-point classification
    bool classified = false;
    double a4 = 0, a6 = 0, b4 = 0, nu = 0;
    SymClass cls = SymClass::Unknown;
    int nu_case = 0;
    std::string classify_error;
};

struct CertifySummary {
    size_t total = 0, transversal = 0, lorentz = 0, blaschke_ok = 0;
    double max_S_residual = 0;
    double max_blaschke = 0;
    double max_decomposition = 0;
    double max_tangentiality = 0;
    double blaschke_fraction = 0; // among transversal points
    bool pass = false;
    std::string fail_reason;
};

CertifySummary certify_grid(const FamilyInstance& inst, const GridSpec& grid,
                            const Tolerances& tol, int threads = 0,
                            std::vector<PointRecord>* points = nullptr,
                            bool with_classification = false);

struct ClassifyRecord {
    double t, v, w;
    double a4 = 0, a6 = 0, b4 = 0, residual = 0;
    SymClass cls = SymClass::Unknown;
    std::string error;
};

std::vector<ClassifyRecord> classify_grid(const FamilyInstance& inst, const GridSpec& grid,
                                          const Tolerances& tol, int threads = 0);

} // namespace affsym
