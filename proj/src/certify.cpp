#include "affsym/certify.hpp"
#include <cmath>
#include <thread>

namespace affsym {

namespace {

int worker_count(int requested, size_t work) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 4;
    return int(std::min<size_t>(hw, std::max<size_t>(1, work / 64)));
}

template <class Fn>
void parallel_over(size_t n, int threads, Fn&& fn) {
    int tc = worker_count(threads, n);
    if (tc <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(tc);
    for (int w = 0; w < tc; ++w)
        pool.emplace_back([&, w] {
            for (size_t i = w; i < n; i += tc) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace

CertifySummary certify_grid(const FamilyInstance& inst, const GridSpec& grid,
                            const Tolerances& tol, int threads,
                            std::vector<PointRecord>* points_out, bool with_classification) {
    size_t n = grid.total();
    std::vector<PointRecord> pts(n);

    parallel_over(n, threads, [&](size_t idx) {
        size_t rem = idx;
        int iw = int(rem % grid.nw);
        rem /= grid.nw;
        int iv = int(rem % grid.nv);
        int it = int(rem / grid.nv);
        PointRecord& p = pts[idx];
        p.t = grid.t_at(it);
        p.v = grid.v_at(iv);
        p.w = grid.w_at(iw);
        try {
            Jet2Point jet = inst.jet(p.t, p.v, p.w);
            Vec4d xi = inst.normal(p.t, p.v, p.w);
            InducedData d = induce(jet, xi);
            p.transversal = true;
            p.decomposition = d.decomposition_residual;
            p.blaschke = blaschke_residual(d);
            p.sig = signature_check(d.h);
            Mat3d S = shape_operator(inst.normal_d1(p.t, p.v, p.w), jet, d, &p.tangentiality);
            double sr = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    sr = std::max(sr, std::fabs(S[i][j] - (i == j ? inst.H() : 0.0)));
            p.S_residual = sr;
        } catch (const std::exception& e) {
            p.error = e.what();
        }
        if (with_classification && p.transversal) {
            try {
                AuditResult a =
                    structure_equation_audit(inst, p.t, p.v, p.w, tol.classify_step, tol.nu);
                p.classified = true;
                p.a4 = a.k.a4;
                p.a6 = a.k.a6;
                p.b4 = a.k.b4;
                p.nu = a.nu;
                p.nu_case = a.nu_case;
                p.cls = classify_symmetry(a.k, tol.class_threshold, tol.class_residual);
            } catch (const std::exception& e) {
                p.classify_error = e.what();
            }
        }
    });

    CertifySummary s;
    s.total = n;
    for (const auto& p : pts) {
        if (!p.transversal) continue;
        ++s.transversal;
        s.max_S_residual = std::max(s.max_S_residual, p.S_residual);
        s.max_blaschke = std::max(s.max_blaschke, p.blaschke);
        s.max_decomposition = std::max(s.max_decomposition, p.decomposition);
        s.max_tangentiality = std::max(s.max_tangentiality, p.tangentiality);
        if (p.sig == Signature::LorentzOK) ++s.lorentz;
        if (p.blaschke < tol.blaschke) ++s.blaschke_ok;
    }
    s.blaschke_fraction = s.transversal ? double(s.blaschke_ok) / double(s.transversal) : 0.0;

    if (s.transversal != s.total)
        s.fail_reason = "transversality failed at " + std::to_string(s.total - s.transversal) +
                        " points";
    else if (s.max_S_residual > tol.shape)
        s.fail_reason = "shape-operator residual " + std::to_string(s.max_S_residual);
    else if (s.max_tangentiality > tol.tangentiality)
        s.fail_reason = "normal not equiaffine";
    else if (s.lorentz != s.transversal)
        s.fail_reason = "signature not Lorentz at " + std::to_string(s.transversal - s.lorentz) +
                        " points";
    else if (s.blaschke_fraction < tol.blaschke_fraction)
        s.fail_reason = "blaschke residual above tolerance at too many points";
    s.pass = s.fail_reason.empty();

    if (points_out) *points_out = std::move(pts);
    return s;
}

std::vector<ClassifyRecord> classify_grid(const FamilyInstance& inst, const GridSpec& grid,
                                          const Tolerances& tol, int threads) {
    size_t n = grid.total();
    std::vector<ClassifyRecord> recs(n);
    parallel_over(n, threads, [&](size_t idx) {
        size_t rem = idx;
        int iw = int(rem % grid.nw);
        rem /= grid.nw;
        int iv = int(rem % grid.nv);
        int it = int(rem / grid.nv);
        ClassifyRecord& r = recs[idx];
        r.t = grid.t_at(it);
        r.v = grid.v_at(iv);
        r.w = grid.w_at(iw);
        try {
            MeasuredK m = measure_difference_tensor(inst, r.t, r.v, r.w, tol.classify_step);
            r.a4 = m.a4;
            r.a6 = m.a6;
            r.b4 = m.b4;
            r.residual = m.residual;
            r.cls = classify_symmetry(m, tol.class_threshold, tol.class_residual);
        } catch (const std::exception& e) {
            r.error = e.what();
        }
    });
    return recs;
}

} // namespace affsym
