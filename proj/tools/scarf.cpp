// Command-line front end: argv handling and config resolution only; all
// behavior lives in the library headers.

#include <cmath>
#include <string>

#include "CLI11.hpp"

#include "scarf/scarf.hpp"

namespace {

constexpr double kUnsetD = std::numeric_limits<double>::quiet_NaN();

// Flag values gathered per subcommand; "unset" markers keep config-file
// values intact unless the flag was actually passed.
struct Overrides {
    std::string config, format, out, variant, centrifugal, table;
    double alpha = kUnsetD, q = kUnsetD;
    double M = kUnsetD, C = kUnsetD, V0 = kUnsetD, S0 = kUnsetD;
    double V1 = kUnsetD, V2 = kUnsetD, S1 = kUnsetD, S2 = kUnsetD;
    double seed_re = kUnsetD, seed_im = kUnsetD;
    double bracket_lo = kUnsetD, bracket_hi = kUnsetD;
    double scan_lo = kUnsetD, scan_hi = kUnsetD;
    double tol_table = kUnsetD, boundary_offset = kUnsetD;
    int dim = -1, n = -1, n_r = -1, l = -1;
    int samples = -1, grid_points = -1, grids = -1, scan_points = -1;
    bool richardson_on = false, richardson_off = false;
};

void add_common_options(CLI::App* sub, Overrides& o) {
    sub->add_option("--config", o.config, "INI config file ([model]/[quantum]/[solver]/[output])");
    sub->add_option("--format", o.format, "output format: csv|json");
    sub->add_option("--out", o.out, "output path (stdout when omitted)");
    sub->add_option("--alpha", o.alpha, "screening parameter override");
    sub->add_option("--dim", o.dim, "spatial dimension override");
    sub->add_option("--n", o.n, "principal quantum number override");
    sub->add_option("--variant", o.variant, "energy-equation variant");
    sub->add_option("--M", o.M, "mass");
    sub->add_option("--C", o.C, "symmetry constant");
    sub->add_option("--V0", o.V0, "vector well depth");
    sub->add_option("--S0", o.S0, "scalar well depth");
    sub->add_option("--q", o.q, "deformation parameter");
    sub->add_option("--n-r", o.n_r, "radial quantum number");
    sub->add_option("--l", o.l, "orbital quantum number");
}

void apply_overrides(scarf::RunConfig& cfg, const Overrides& o) {
    if (!o.format.empty()) cfg.format = scarf::format_from_string(o.format);
    if (!o.out.empty()) cfg.out = o.out;
    if (!o.variant.empty()) cfg.variant = scarf::variant_from_string(o.variant);
    if (!std::isnan(o.alpha)) cfg.alpha_list = {o.alpha};
    if (o.dim >= 0) cfg.D_list = {o.dim};
    if (o.n >= 0) cfg.n_list = {o.n};
    if (!std::isnan(o.M)) cfg.M = o.M;
    if (!std::isnan(o.C)) cfg.C = o.C;
    if (!std::isnan(o.V0)) cfg.V0 = o.V0;
    if (!std::isnan(o.S0)) cfg.S0 = o.S0;
    if (!std::isnan(o.q)) cfg.q = o.q;
    if (!std::isnan(o.V1)) { cfg.depths.V1 = o.V1; cfg.has_depths = true; }
    if (!std::isnan(o.V2)) { cfg.depths.V2 = o.V2; cfg.has_depths = true; }
    if (!std::isnan(o.S1)) { cfg.depths.S1 = o.S1; cfg.has_depths = true; }
    if (!std::isnan(o.S2)) { cfg.depths.S2 = o.S2; cfg.has_depths = true; }
    if (o.n_r >= 0) cfg.n_r = o.n_r;
    if (o.l >= 0) cfg.l = o.l;
    if (!std::isnan(o.seed_re)) cfg.seed_re = o.seed_re;
    if (!std::isnan(o.seed_im)) cfg.seed_im = o.seed_im;
    if (!std::isnan(o.bracket_lo)) cfg.bracket_lo = o.bracket_lo;
    if (!std::isnan(o.bracket_hi)) cfg.bracket_hi = o.bracket_hi;
    if (!std::isnan(o.scan_lo)) cfg.scan_lo = o.scan_lo;
    if (!std::isnan(o.scan_hi)) cfg.scan_hi = o.scan_hi;
    if (!std::isnan(o.tol_table)) cfg.tol_table = o.tol_table;
    if (!std::isnan(o.boundary_offset)) cfg.boundary_offset = o.boundary_offset;
    if (o.samples >= 0) cfg.samples = o.samples;
    if (o.grid_points >= 0) cfg.grid_points = o.grid_points;
    if (o.grids >= 0) cfg.grids = o.grids;
    if (o.scan_points >= 0) cfg.scan_points = o.scan_points;
    if (!o.centrifugal.empty()) cfg.centrifugal = scarf::centrifugal_from_string(o.centrifugal);
    if (!o.table.empty()) cfg.table = o.table;
    if (o.richardson_on) cfg.richardson = true;
    if (o.richardson_off) cfg.richardson = false;
}

scarf::RunConfig resolve_config(const Overrides& o) {
    scarf::RunConfig cfg;
    if (!o.config.empty()) cfg = scarf::load_config_file(o.config);
    apply_overrides(cfg, o);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bound-state spectrum engine for trigonometric Scarf spinor problems"};
    app.require_subcommand(1);

    Overrides spectrum_o, wavefunction_o, audit_o, oracle_o, special_o;

    CLI::App* spectrum = app.add_subcommand("spectrum", "solve energy equations over a sweep");
    add_common_options(spectrum, spectrum_o);
    spectrum->add_option("--scan-lo", spectrum_o.scan_lo, "scan window lower edge");
    spectrum->add_option("--scan-hi", spectrum_o.scan_hi, "scan window upper edge");
    spectrum->add_option("--scan-points", spectrum_o.scan_points, "scan sample count");

    CLI::App* wavefunction =
        app.add_subcommand("wavefunction", "export normalized spinor components");
    add_common_options(wavefunction, wavefunction_o);
    wavefunction->add_option("--samples", wavefunction_o.samples, "interior grid samples");

    CLI::App* audit = app.add_subcommand("audit", "compare a published table against the solver");
    add_common_options(audit, audit_o);
    audit->add_option("--table", audit_o.table, "published table CSV (header D,n,alpha,E)");
    audit->add_option("--tol-table", audit_o.tol_table, "match tolerance");

    CLI::App* oracle =
        app.add_subcommand("oracle", "finite-difference eigenvalue verification");
    add_common_options(oracle, oracle_o);
    oracle->add_option("--grid-points", oracle_o.grid_points, "base grid size");
    oracle->add_option("--grids", oracle_o.grids, "doubling-grid count");
    oracle->add_option("--bracket-lo", oracle_o.bracket_lo, "energy bracket lower edge");
    oracle->add_option("--bracket-hi", oracle_o.bracket_hi, "energy bracket upper edge");
    oracle->add_option("--boundary-offset", oracle_o.boundary_offset,
                       "Dirichlet cutoff as a fraction of the domain");
    oracle->add_option("--centrifugal", oracle_o.centrifugal,
                       "centrifugal mode: paper_cos|sin_squared|exact");
    oracle->add_flag("--richardson", oracle_o.richardson_on, "enable Richardson error column");
    oracle->add_flag("--no-richardson", oracle_o.richardson_off, "disable Richardson");

    CLI::App* special =
        app.add_subcommand("special", "complex-spectrum variants (PT / q-deformed / non-Hermitian)");
    add_common_options(special, special_o);
    special->add_option("--seed-re", special_o.seed_re, "Newton seed, real part");
    special->add_option("--seed-im", special_o.seed_im, "Newton seed, imaginary part");
    special->add_option("--V1", special_o.V1, "complexified depth V1");
    special->add_option("--V2", special_o.V2, "complexified depth V2");
    special->add_option("--S1", special_o.S1, "complexified depth S1");
    special->add_option("--S2", special_o.S2, "complexified depth S2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : scarf::ExitUsage;
    }

    return scarf::run_command([&]() -> int {
        if (spectrum->parsed()) return scarf::cmd_spectrum(resolve_config(spectrum_o));
        if (wavefunction->parsed()) return scarf::cmd_wavefunction(resolve_config(wavefunction_o));
        if (audit->parsed()) return scarf::cmd_audit(resolve_config(audit_o));
        if (oracle->parsed()) return scarf::cmd_oracle(resolve_config(oracle_o));
        if (special->parsed()) return scarf::cmd_special(resolve_config(special_o));
        return scarf::ExitUsage;
    });
}
