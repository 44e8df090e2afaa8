#pragma once
// Command implementations behind the CLI surface: spectrum | wavefunction |
// audit | oracle | special. Each takes a resolved RunConfig and returns a
// process exit code; argv handling lives in the tool, not here.

#include <string>
#include <vector>

#include "io.hpp"
#include "parallel.hpp"
#include "wavefunction.hpp"

namespace scarf {

enum ExitCode : int {
    ExitOk = 0,
    ExitNoRoot = 2,    // a requested state has no admissible root
    ExitOutliers = 3,  // audit found rows outside tolerance
    ExitUsage = 64,    // bad flags or config
    ExitData = 65,     // malformed input data
    ExitIo = 74,       // filesystem failure
};

namespace detail {

struct SweepPoint {
    int D = 3;
    int n = 1;
    double alpha = 0.01;
};

/// Lexicographic sweep order (D, then n, then alpha) — the frozen row order.
inline std::vector<SweepPoint> sweep_points(const RunConfig& cfg) {
    std::vector<SweepPoint> pts;
    pts.reserve(cfg.D_list.size() * cfg.n_list.size() * cfg.alpha_list.size());
    for (int D : cfg.D_list)
        for (int n : cfg.n_list)
            for (double a : cfg.alpha_list) pts.push_back({D, n, a});
    return pts;
}

inline EnergyEquationSpec spec_for(const RunConfig& cfg, const SweepPoint& pt) {
    EnergyEquationSpec s;
    s.params = cfg.model_params(pt.alpha);
    s.qn.D = pt.D;
    s.qn.n = pt.n;
    s.qn.l = cfg.l;
    s.qn.n_r = cfg.n_r;
    s.qn.aligned = cfg.aligned;
    s.qn.kappa = kappa_of(cfg.l, pt.D, cfg.aligned);
    s.variant = cfg.variant;
    if (is_nonpt_variant(cfg.variant)) s.complex_depths = cfg.depths;
    return s;
}

/// First admissible root of the real-spectrum solve, or nullptr semantics via
/// the flag: found=false covers both "no sign change" and "no admissible root".
struct PickedRoot {
    EnergyRoot root;
    bool found = false;
};

inline PickedRoot pick_real_root(const EnergyEquationSpec& s, const RunConfig& cfg) {
    PickedRoot out;
    try {
        const std::vector<EnergyRoot> roots =
            solve_real(s, cfg.scan_lo, cfg.scan_hi, cfg.scan_points, cfg.tol);
        for (const EnergyRoot& r : roots) {
            if (!r.normalizable) continue;
            out.root = r;
            out.found = true;
            break;
        }
    } catch (const NoRootInInterval&) {
    }
    return out;
}

inline std::string bool01(bool b) { return b ? "1" : "0"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

inline int cmd_spectrum(const RunConfig& cfg) {
    cfg.validate();
    if (!is_real_spectrum(cfg.variant))
        throw ConfigError("spectrum solves the real-spectrum variants; use 'special' for " +
                          to_string(cfg.variant));
    const std::vector<detail::SweepPoint> pts = detail::sweep_points(cfg);
    std::vector<detail::PickedRoot> picked(pts.size());
    parallel_for_indexed(pts.size(), [&](size_t i) {
        picked[i] = detail::pick_real_root(detail::spec_for(cfg, pts[i]), cfg);
    });

    bool any_missing = false;
    std::string payload;
    if (cfg.format == OutputFormat::Csv) {
        payload = "variant,D,n,alpha,E,abs_residual,radicand_ok,normalizable,converged\n";
        for (size_t i = 0; i < pts.size(); ++i) {
            const detail::SweepPoint& pt = pts[i];
            const detail::PickedRoot& pk = picked[i];
            if (!pk.found) any_missing = true;
            payload += to_string(cfg.variant) + "," + std::to_string(pt.D) + "," +
                       std::to_string(pt.n) + "," + fmt_g(pt.alpha) + ",";
            if (pk.found) {
                payload += fmt_g(pk.root.E.real()) + "," + fmt_g(std::abs(pk.root.residual)) +
                           "," + detail::bool01(pk.root.radicand_ok) + "," +
                           detail::bool01(pk.root.normalizable) + "," +
                           detail::bool01(pk.root.bracket_converged);
            } else {
                payload += ",,0,0,0";
            }
            payload += "\n";
        }
    } else {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "spectrum";
        j["rows"] = nlohmann::ordered_json::array();
        for (size_t i = 0; i < pts.size(); ++i) {
            const detail::SweepPoint& pt = pts[i];
            const detail::PickedRoot& pk = picked[i];
            if (!pk.found) any_missing = true;
            nlohmann::ordered_json row;
            row["variant"] = to_string(cfg.variant);
            row["D"] = pt.D;
            row["n"] = pt.n;
            row["alpha"] = jnum(pt.alpha);
            row["E"] = pk.found ? jnum(pk.root.E.real()) : nlohmann::ordered_json(nullptr);
            row["abs_residual"] =
                pk.found ? jnum(std::abs(pk.root.residual)) : nlohmann::ordered_json(nullptr);
            row["radicand_ok"] = pk.found && pk.root.radicand_ok;
            row["normalizable"] = pk.found && pk.root.normalizable;
            row["converged"] = pk.found && pk.root.bracket_converged;
            j["rows"].push_back(row);
        }
        payload = j.dump(2) + "\n";
    }
    emit_output(cfg, "spectrum", payload);
    return any_missing ? ExitNoRoot : ExitOk;
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

inline int cmd_audit(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.table.empty()) throw ConfigError("audit requires --table <csv>");
    if (!is_real_spectrum(cfg.variant))
        throw ConfigError("audit applies to the real-spectrum variants");
    const std::vector<TableRow> rows = read_table_csv(cfg.table);

    EnergyEquationSpec base;
    base.params = cfg.model_params(cfg.alpha_list.front());
    base.qn.l = cfg.l;
    base.qn.n_r = cfg.n_r;
    base.qn.aligned = cfg.aligned;
    base.variant = cfg.variant;
    const TableAuditReport rep = audit_table(rows, base, cfg.tol_table);

    std::string payload;
    if (cfg.format == OutputFormat::Csv) {
        payload = "D,n,alpha,E_published,E_computed,abs_delta,residual_published,matched\n";
        for (const TableEntryAudit& e : rep.entries) {
            payload += std::to_string(e.row.D) + "," + std::to_string(e.row.n) + "," +
                       fmt_g(e.row.alpha) + "," + fmt_g(e.row.E_published) + "," +
                       fmt_g_or_empty(e.E_computed) + "," + fmt_g_or_empty(e.abs_delta) + "," +
                       fmt_g_or_empty(e.residual_of_published) + "," + detail::bool01(e.matched) +
                       "\n";
        }
        payload += "# rows=" + std::to_string(rep.entries.size()) +
                   " matches=" + std::to_string(rep.n_match) +
                   " outliers=" + std::to_string(rep.n_outlier) +
                   " tol=" + fmt_g(rep.tol_table) +
                   " max_abs_delta_matched=" + fmt_g(rep.max_abs_delta_matched) +
                   " mean_signed_delta_outliers=" + fmt_g(rep.mean_signed_delta_outliers) + "\n";
    } else {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "audit";
        j["entries"] = nlohmann::ordered_json::array();
        for (const TableEntryAudit& e : rep.entries) {
            nlohmann::ordered_json row;
            row["D"] = e.row.D;
            row["n"] = e.row.n;
            row["alpha"] = jnum(e.row.alpha);
            row["E_published"] = jnum(e.row.E_published);
            row["E_computed"] = jnum(e.E_computed);
            row["abs_delta"] = jnum(e.abs_delta);
            row["residual_published"] = jnum(e.residual_of_published);
            row["matched"] = e.matched;
            row["no_root"] = e.no_root;
            j["entries"].push_back(row);
        }
        nlohmann::ordered_json summary;
        summary["rows"] = rep.entries.size();
        summary["matches"] = rep.n_match;
        summary["outliers"] = rep.n_outlier;
        summary["tol"] = jnum(rep.tol_table);
        summary["max_abs_delta_matched"] = jnum(rep.max_abs_delta_matched);
        summary["mean_signed_delta_outliers"] = jnum(rep.mean_signed_delta_outliers);
        j["summary"] = summary;
        payload = j.dump(2) + "\n";
    }
    emit_output(cfg, "audit", payload);
    return rep.n_outlier > 0 ? ExitOutliers : ExitOk;
}

// ---------------------------------------------------------------------------
// wavefunction
// ---------------------------------------------------------------------------

inline int cmd_wavefunction(const RunConfig& cfg) {
    cfg.validate();
    if (!is_real_spectrum(cfg.variant))
        throw ConfigError("wavefunction needs a real-spectrum variant");
    const double alpha = cfg.alpha_list.front();
    const int D = cfg.D_list.front();
    const QuantumNumbers qn = make_quantum_numbers(D, cfg.n_r, cfg.l, cfg.aligned);
    EnergyEquationSpec s;
    s.params = cfg.model_params(alpha);
    s.qn = qn;
    s.variant = cfg.variant;
    const detail::PickedRoot pk = detail::pick_real_root(s, cfg);
    if (!pk.found) return ExitNoRoot;

    const SpinorState st = normalize(make_spinor_state(s.params, qn, pk.root.E.real()));
    const std::vector<SpinorSample> samples = sample_grid(st, cfg.samples);

    nlohmann::ordered_json meta;
    meta["M"] = jnum(st.params.M);
    meta["C"] = jnum(st.params.C);
    meta["V0"] = jnum(st.params.V0);
    meta["S0"] = jnum(st.params.S0);
    meta["alpha"] = jnum(st.params.alpha);
    meta["symmetry"] = to_string(st.params.symmetry);
    meta["D"] = qn.D;
    meta["n"] = qn.n;
    meta["n_r"] = qn.n_r;
    meta["l"] = qn.l;
    meta["kappa"] = jnum(qn.kappa);
    meta["E"] = jnum(st.E);
    meta["nu"] = jnum(st.nu);
    meta["lambda"] = jnum(st.lambda_cap);
    meta["norm"] = jnum(st.norm);

    std::string payload;
    if (cfg.format == OutputFormat::Csv) {
        payload = "r,z,Re_F,Im_F,Re_G,Im_G\n";
        for (const SpinorSample& sm : samples) {
            payload += fmt_g(sm.r) + "," + fmt_g(sm.z) + "," + fmt_g(sm.F.real()) + "," +
                       fmt_g(sm.F.imag()) + "," + fmt_g(sm.G.real()) + "," + fmt_g(sm.G.imag()) +
                       "\n";
        }
        if (!cfg.out.empty())
            write_text_file(cfg.out + ".meta.json", meta.dump(2) + "\n");
    } else {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "wavefunction";
        j["metadata"] = meta;
        j["samples"] = nlohmann::ordered_json::array();
        for (const SpinorSample& sm : samples) {
            nlohmann::ordered_json row;
            row["r"] = jnum(sm.r);
            row["z"] = jnum(sm.z);
            row["F"] = {jnum(sm.F.real()), jnum(sm.F.imag())};
            row["G"] = {jnum(sm.G.real()), jnum(sm.G.imag())};
            j["samples"].push_back(row);
        }
        payload = j.dump(2) + "\n";
    }
    emit_output(cfg, "wavefunction", payload);
    return ExitOk;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

inline int cmd_oracle(const RunConfig& cfg) {
    cfg.validate();
    if (!is_real_spectrum(cfg.variant))
        throw ConfigError("oracle verifies the real-spectrum variants");
    const double alpha = cfg.alpha_list.front();
    const int D = cfg.D_list.front();
    const QuantumNumbers qn = make_quantum_numbers(D, cfg.n_r, cfg.l, cfg.aligned);
    const ModelParams params = cfg.model_params(alpha);

    OperatorConfig oc;
    oc.centrifugal_mode = cfg.centrifugal;
    oc.grid_points = cfg.grid_points;
    oc.boundary_offset = cfg.boundary_offset;
    oc.richardson = cfg.richardson;

    double blo = cfg.bracket_lo, bhi = cfg.bracket_hi;
    if (std::isnan(blo) || std::isnan(bhi)) {
        // Default bracket: straddle the closed-form root (a convenience; pass
        // explicit brackets for a fully independent run).
        EnergyEquationSpec s;
        s.params = params;
        s.qn = qn;
        s.variant = cfg.variant;
        const detail::PickedRoot pk = detail::pick_real_root(s, cfg);
        if (!pk.found) return ExitNoRoot;
        const double width = 0.2 * std::max(1.0, std::abs(pk.root.E.real()));
        blo = pk.root.E.real() - width;
        bhi = pk.root.E.real() + width;
    }

    const std::vector<ConvergencePoint> pts =
        convergence_study(params, qn, oc, blo, bhi, cfg.grids);

    std::string payload;
    if (cfg.format == OutputFormat::Csv) {
        payload = "grid_points,E,estimated_error\n";
        for (const ConvergencePoint& p : pts)
            payload += std::to_string(p.grid_points) + "," + fmt_g(p.E) + "," +
                       fmt_g_or_empty(p.estimated_error) + "\n";
    } else {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "oracle";
        j["bracket"] = {jnum(blo), jnum(bhi)};
        j["rows"] = nlohmann::ordered_json::array();
        for (const ConvergencePoint& p : pts) {
            nlohmann::ordered_json row;
            row["grid_points"] = p.grid_points;
            row["E"] = jnum(p.E);
            row["estimated_error"] = jnum(p.estimated_error);
            j["rows"].push_back(row);
        }
        if (pts.size() >= 2 && cfg.richardson) {
            const double e_fine = pts.back().E, e_coarse = pts[pts.size() - 2].E;
            j["extrapolated"] = jnum((4.0 * e_fine - e_coarse) / 3.0);
        }
        payload = j.dump(2) + "\n";
    }
    emit_output(cfg, "oracle", payload);
    return ExitOk;
}

// ---------------------------------------------------------------------------
// special (complex-spectrum variants)
// ---------------------------------------------------------------------------

inline int cmd_special(const RunConfig& cfg) {
    cfg.validate();
    if (is_real_spectrum(cfg.variant))
        throw ConfigError("special solves the complex-spectrum variants; use 'spectrum' for " +
                          to_string(cfg.variant));
    const std::vector<detail::SweepPoint> pts = detail::sweep_points(cfg);
    std::vector<EnergyRoot> roots(pts.size());
    const complex seed(std::isnan(cfg.seed_re) ? cfg.M : cfg.seed_re, cfg.seed_im);
    parallel_for_indexed(pts.size(), [&](size_t i) {
        roots[i] = solve_complex(detail::spec_for(cfg, pts[i]), seed);
    });

    bool any_unconverged = false;
    std::string payload;
    if (cfg.format == OutputFormat::Csv) {
        payload = "variant,D,n,alpha,q,Re_E,Im_E,abs_residual,converged\n";
        for (size_t i = 0; i < pts.size(); ++i) {
            const detail::SweepPoint& pt = pts[i];
            const EnergyRoot& r = roots[i];
            if (!r.bracket_converged) any_unconverged = true;
            payload += to_string(cfg.variant) + "," + std::to_string(pt.D) + "," +
                       std::to_string(pt.n) + "," + fmt_g(pt.alpha) + "," + fmt_g(cfg.q) + "," +
                       fmt_g(r.E.real()) + "," + fmt_g(r.E.imag()) + "," +
                       fmt_g(std::abs(r.residual)) + "," + detail::bool01(r.bracket_converged) +
                       "\n";
        }
    } else {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "special";
        j["rows"] = nlohmann::ordered_json::array();
        for (size_t i = 0; i < pts.size(); ++i) {
            const detail::SweepPoint& pt = pts[i];
            const EnergyRoot& r = roots[i];
            if (!r.bracket_converged) any_unconverged = true;
            nlohmann::ordered_json row;
            row["variant"] = to_string(cfg.variant);
            row["D"] = pt.D;
            row["n"] = pt.n;
            row["alpha"] = jnum(pt.alpha);
            row["q"] = jnum(cfg.q);
            row["E"] = {jnum(r.E.real()), jnum(r.E.imag())};
            row["abs_residual"] = jnum(std::abs(r.residual));
            row["converged"] = r.bracket_converged;
            j["rows"].push_back(row);
        }
        payload = j.dump(2) + "\n";
    }
    emit_output(cfg, "special", payload);
    return any_unconverged ? ExitNoRoot : ExitOk;
}

/// Exception-to-exit-code boundary shared by the tool and in-process tests.
template <class Fn>
int run_command(Fn&& fn) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return ExitUsage;
    } catch (const CsvError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return ExitData;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return ExitIo;
    } catch (const NoRootInInterval& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return ExitNoRoot;
    } catch (const NoBracket& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return ExitNoRoot;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return ExitUsage;
    } catch (const Error& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 70;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 70;
    }
}

}  // namespace scarf
