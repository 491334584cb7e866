// Copyright 2026 The oikomplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OIKOMPLEX_CLI_HPP
#define OIKOMPLEX_CLI_HPP

// Command-line front end: oikomplex <command> [flags].

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "complexes.hpp"
#include "error.hpp"
#include "free_mod.hpp"
#include "io.hpp"
#include "multilinear.hpp"
#include "oi_algebra.hpp"
#include "verify.hpp"

namespace oikomplex::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int max_width = 12;

class usage_error : public error {
public:
    using error::error;
};

struct RunConfig {
    std::string command; ///< basis|tensor|wedge|sym|koszul|be|verify|identity
    std::string algebra = "1";
    std::string phi;
    std::string free;
    std::string free2;
    std::string spec;
    std::string kind;        ///< verify without --spec: koszul|be
    std::string of = "wedge"; ///< identity: wedge|sym|tensor
    int i = 0;
    std::optional<int> q;
    int width = 0;
    std::optional<int> wmax;
    std::optional<int> trunc;
    int trials = 3;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "text";
    bool strand = true;
    int strand_span = 1;
    bool algebra_given = false;

    static const std::vector<std::string> &commands()
    {
        static const std::vector<std::string> c{"basis", "tensor", "wedge", "sym", "koszul", "be", "verify", "identity"};
        return c;
    }

    int wmax_or(int fallback) const { return wmax.value_or(fallback); }

    void validate() const
    {
        if (std::find(commands().begin(), commands().end(), command) == commands().end())
            throw usage_error("unknown command '" + command + "'");
        if (wmax && *wmax > max_width)
            throw usage_error("--wmax " + std::to_string(*wmax) + " exceeds the limit of " + std::to_string(max_width));
        if (wmax && *wmax < 0) throw usage_error("--wmax must be non-negative");
        if (width < 0 || width > max_width) throw usage_error("--width must lie in 0.." + std::to_string(max_width));
        if (i < 0) throw usage_error("--i must be non-negative");
        if (q && *q < 0) throw usage_error("--q must be non-negative");
        if (trials < 1) throw usage_error("--trials must be at least 1");
        if (format != "text" && format != "json") throw usage_error("--format must be text or json");
        auto need = [&](const std::string &v, const char *flag) {
            if (v.empty()) throw usage_error(command + " requires " + flag);
        };
        if (command == "basis" || command == "tensor" || command == "wedge" || command == "sym" || command == "identity")
            need(free, "--free");
        if (command == "tensor" || (command == "identity" && of == "tensor")) need(free2, "--free2");
        if (command == "koszul" || command == "be") need(phi, "--phi");
        if (command == "verify" && spec.empty()) {
            need(phi, "--spec or --phi");
            if (kind != "koszul" && kind != "be") throw usage_error("verify with --phi requires --kind koszul|be");
        }
        if (command == "identity" && of != "wedge" && of != "sym" && of != "tensor")
            throw usage_error("--of must be wedge, sym or tensor");
    }
};

namespace detail {

inline std::string join(const std::vector<std::size_t> &v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
    return s + ")";
}

inline void print_identity(std::ostream &os, const IdentityReport &r)
{
    os << r.identity << "  [" << (r.passed ? "holds" : "FAILS") << " for 0 <= w <= " << r.rows.back().width;
    if (r.first_failure) os << "; first failure at w=" << *r.first_failure;
    os << "]\n";
}

inline int decomposition_command(const RunConfig &cfg, std::ostream &os, const AlgebraSignature &sig)
{
    auto F = FreeOIModule::parse(cfg.free, sig);
    Construction c;
    if (cfg.command == "tensor" || (cfg.command == "identity" && cfg.of == "tensor"))
        c = Construction::tensor(F, FreeOIModule::parse(cfg.free2, sig));
    else if (cfg.command == "sym" || (cfg.command == "identity" && cfg.of == "sym"))
        c = Construction::sym(F, cfg.q.value_or(cfg.i));
    else
        c = Construction::wedge(F, cfg.i);
    auto d = decompose(c);
    auto rep = certify_rank_identity(d, c, cfg.wmax_or(max_width));
    auto j = io::to_json(d, rep.identity);
    if (!cfg.out.empty()) {
        std::filesystem::create_directories(cfg.out);
        io::write_json(std::filesystem::path(cfg.out) / "decomposition.json", j);
    }
    if (cfg.format == "json") {
        j["certified"] = rep.passed;
        j["wmax"] = rep.rows.back().width;
        os << j.dump(2) << '\n';
    } else {
        os << d.summary() << '\n';
        print_identity(os, rep);
        if (cfg.command == "identity") {
            os << "w  lhs  rhs\n";
            for (const auto &row : rep.rows) os << row.width << "  " << row.lhs.get_str() << "  " << row.rhs.get_str() << '\n';
        }
    }
    return rep.passed ? exit_ok : exit_check_failed;
}

inline int basis_command(const RunConfig &cfg, std::ostream &os, const AlgebraSignature &sig)
{
    auto F = FreeOIModule::parse(cfg.free, sig);
    auto basis = F.basis_at_width(cfg.width);
    if (cfg.format == "json") {
        io::json keys = io::json::array();
        for (const auto &k : basis) keys.push_back(k.to_string());
        os << io::json{{"width", cfg.width}, {"rank", basis.size()}, {"basis", keys}}.dump(2) << '\n';
    } else {
        os << F.to_string() << " at width " << cfg.width << ": rank " << basis.size() << '\n';
        for (const auto &k : basis) os << "  " << k.to_string() << '\n';
    }
    return exit_ok;
}

inline OIComplexSpec spec_from_flags(const RunConfig &cfg, const AlgebraSignature &sig, ComplexKind kind)
{
    OIComplexSpec spec;
    spec.kind = kind;
    spec.phi = io::load_morphism(cfg.phi, sig);
    spec.i = cfg.i;
    spec.truncation = cfg.trunc;
    return spec;
}

inline int complex_command(const RunConfig &cfg, std::ostream &os, const AlgebraSignature &sig)
{
    auto spec = spec_from_flags(cfg, sig, cfg.command == "koszul" ? ComplexKind::Koszul : ComplexKind::BE);
    auto K = assemble_oi_complex(spec, cfg.wmax_or(3));
    if (!cfg.out.empty()) {
        std::filesystem::path dir(cfg.out);
        std::filesystem::create_directories(dir);
        for (const auto &C : K.widths) io::write_json(dir / ("width_" + std::to_string(C.width) + ".json"), io::to_json(C));
        io::write_json(dir / "spec.json", io::to_json(K.spec));
    }
    if (cfg.format == "json") {
        io::json widths = io::json::array();
        for (const auto &C : K.widths) widths.push_back(io::to_json(C));
        os << io::json{{"spec", io::to_json(K.spec)}, {"widths", widths}, {"warnings", K.warnings}}.dump(2) << '\n';
        return exit_ok;
    }
    os << (spec.kind == ComplexKind::Koszul ? "Koszul complex" : "BE^" + std::to_string(spec.i) + " complex") << " of "
       << spec.phi.domain().to_string() << " -> " << spec.phi.codomain().to_string() << '\n';
    for (const auto &C : K.widths) os << "  w=" << C.width << "  ranks " << join(C.ranks()) << '\n';
    for (const auto &w : K.warnings) os << "warning: " << w << '\n';
    if (!cfg.out.empty()) os << "wrote " << K.widths.size() << " width complexes and spec.json to " << cfg.out << '\n';
    return exit_ok;
}

inline const char *yes_no(bool b) { return b ? "yes" : "NO"; }

inline void print_report(std::ostream &os, const OIComplex &K, const VerificationReport &rep, bool strand)
{
    os << "verify " << io::kind_text(K.spec.kind) << (K.spec.kind == ComplexKind::BE ? "^" + std::to_string(K.spec.i) : "")
       << ", widths 0.." << K.widths.size() - 1 << ", acyclicity: " << rep.certificate << '\n';
    os << std::left << std::setw(7) << "width" << std::setw(22) << "ranks" << std::setw(7) << "d^2=0" << std::setw(8)
       << "graded" << std::setw(9) << "minimal" << std::setw(15) << "acyclic-probe";
    if (strand) os << "strand-exact";
    os << '\n';
    for (const auto &w : rep.widths) {
        os << std::setw(7) << w.width << std::setw(22) << join(w.ranks) << std::setw(7) << yes_no(w.dd_zero) << std::setw(8)
           << yes_no(w.graded) << std::setw(9) << yes_no(w.minimal) << std::setw(15) << yes_no(w.acyclic);
        if (strand) os << (w.strand_exact ? yes_no(*w.strand_exact) : "-");
        os << '\n';
    }
    for (const auto &c : rep.checks) {
        os << "  " << std::setw(22) << c.name << (c.passed ? "pass" : "FAIL");
        if (!c.passed) os << "  " << c.witness;
        os << '\n';
    }
    for (const auto &w : K.warnings) os << "warning: " << w << '\n';
    os << (rep.passed() ? "all checks passed" : "some checks failed") << '\n';
}

inline int verify_command(const RunConfig &cfg, std::ostream &os, const std::optional<AlgebraSignature> &sig)
{
    OIComplexSpec spec;
    if (!cfg.spec.empty()) {
        spec = io::load_spec(cfg.spec);
        if (sig && !(spec.phi.domain().algebra() == *sig))
            throw algebra_mismatch("spec is over " + spec.phi.domain().algebra().to_string() + " but --algebra gives " +
                                   sig->to_string());
        if (cfg.trunc) spec.truncation = cfg.trunc;
    } else {
        spec = spec_from_flags(cfg, sig.value_or(AlgebraSignature::parse(cfg.algebra)),
                               cfg.kind == "koszul" ? ComplexKind::Koszul : ComplexKind::BE);
    }
    auto K = assemble_oi_complex(spec, cfg.wmax_or(3));
    VerifyOptions opt;
    opt.trials = cfg.trials;
    opt.seed = cfg.seed;
    opt.strand = cfg.strand;
    opt.strand_span = cfg.strand_span;
    auto rep = verify_complex(K, opt);
    if (!cfg.out.empty()) {
        std::filesystem::create_directories(cfg.out);
        io::write_json(std::filesystem::path(cfg.out) / "report.json", io::to_json(rep));
    }
    if (cfg.format == "json") os << io::to_json(rep).dump(2) << '\n';
    else print_report(os, K, rep, cfg.strand);
    return rep.passed() ? exit_ok : exit_check_failed;
}

} // namespace detail

/// Runs one command; returns the process exit code. Errors go to `err`.
inline int run(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    try {
        cfg.validate();
        // A spec file carries its own algebra; --algebra is then only checked if given.
        std::optional<AlgebraSignature> sig;
        if (!(cfg.command == "verify" && !cfg.spec.empty() && !cfg.algebra_given)) sig = AlgebraSignature::parse(cfg.algebra);
        if (cfg.command == "basis") return detail::basis_command(cfg, out, *sig);
        if (cfg.command == "koszul" || cfg.command == "be") return detail::complex_command(cfg, out, *sig);
        if (cfg.command == "verify") return detail::verify_command(cfg, out, sig);
        return detail::decomposition_command(cfg, out, *sig);
    } catch (const usage_error &e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const parse_error &e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const error &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

/// Parses argv into a RunConfig and runs it.
inline int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"oikomplex: free OI-modules, OI Koszul and Buchsbaum-Eisenbud complexes, exact verification",
                 "oikomplex"};
    RunConfig cfg;
    bool no_strand = false;
    app.add_option("command", cfg.command, "basis | tensor | wedge | sym | koszul | be | verify | identity")->required();
    auto *algebra_opt = app.add_option("--algebra", cfg.algebra, "algebra signature, e.g. 1,1,1 (factor widths; d:deg sets degrees)")
        ->capture_default_str();
    app.add_option("--phi", cfg.phi, "morphism JSON file");
    app.add_option("--free", cfg.free, "free module, e.g. \"2,3\" or \"2:1,3:-1\" (width:shift)");
    app.add_option("--free2", cfg.free2, "second free module (tensor)");
    app.add_option("--i", cfg.i, "exterior power / BE index")->capture_default_str();
    app.add_option("--q", cfg.q, "symmetric power (sym; defaults to --i)");
    app.add_option("--width", cfg.width, "width for basis")->capture_default_str();
    app.add_option("--wmax", cfg.wmax, "largest width (at most 12; default 3 for complexes, 12 for identities)");
    app.add_option("--trunc", cfg.trunc, "Koszul truncation degree D (default rank F(wmax))");
    app.add_option("--trials", cfg.trials, "random points per width for the acyclicity probe")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed of the random points")->capture_default_str();
    app.add_option("--out", cfg.out, "output directory for JSON artifacts");
    app.add_option("--format", cfg.format, "text or json")->capture_default_str();
    app.add_option("--spec", cfg.spec, "complex spec JSON (written by koszul/be --out)");
    app.add_option("--kind", cfg.kind, "verify without --spec: koszul or be");
    app.add_option("--of", cfg.of, "identity: wedge, sym or tensor")->capture_default_str();
    app.add_flag("--no-strand", no_strand, "verify: skip the exact graded-strand homology check");
    app.add_option("--strand-span", cfg.strand_span, "verify: internal degrees searched above the lowest")
        ->capture_default_str();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n' << "run 'oikomplex --help' for the list of flags\n";
        return exit_usage;
    }
    cfg.strand = !no_strand;
    cfg.algebra_given = algebra_opt->count() > 0;
    return run(cfg, out, err);
}

} // namespace oikomplex::cli

#endif
