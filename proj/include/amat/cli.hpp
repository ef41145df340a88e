#pragma once

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amat/almost_commuting.hpp"
#include "amat/canonical.hpp"
#include "amat/experiment.hpp"
#include "amat/kramers.hpp"
#include "amat/matrix_io.hpp"
#include "amat/principal_vectors.hpp"
#include "amat/random_pairs.hpp"

namespace amat::cli {

inline std::string fmt7(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.7f", x);
    return buf;
}

namespace detail {

inline Field parse_field(const std::string& s) {
    if (s == "R" || s == "r") return Field::Real;
    if (s == "C" || s == "c") return Field::Complex;
    if (s == "H" || s == "h") return Field::Quaternion;
    throw InvalidSpec("unknown field '" + s + "' (expected R, C or H)");
}

template <class S>
std::pair<Projection<S>, Projection<S>> projections_from(const AmatFile& file) {
    if (file.matrices.size() < 2)
        throw InvalidSpec("input file must contain two matrices (P then Q)");
    const auto& pm = std::get<Matrix<S>>(file.matrices[0].mat);
    const auto& qm = std::get<Matrix<S>>(file.matrices[1].mat);
    return {validate_projection(pm), validate_projection(qm)};
}

template <class S>
void print_entry(std::ostream& os, const S& x);

template <>
inline void print_entry(std::ostream& os, const double& x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    os << buf;
}
template <>
inline void print_entry(std::ostream& os, const Cplx& x) {
    print_entry(os, x.real());
    os << ' ';
    print_entry(os, x.imag());
}
template <>
inline void print_entry(std::ostream& os, const Quat& x) {
    print_entry(os, x.a);
    os << ' ';
    print_entry(os, x.b);
    os << ' ';
    print_entry(os, x.c);
    os << ' ';
    print_entry(os, x.d);
}

template <class S>
void print_column(std::ostream& os, const char* label, const Matrix<S>& v) {
    os << label;
    for (int i = 0; i < v.rows(); ++i) {
        os << (i == 0 ? " " : " | ");
        print_entry(os, v(i, 0));
    }
    os << '\n';
}

// Per-field command bodies; the Run functor receives a type tag.
template <class Run>
void with_field(Field f, Run&& run) {
    switch (f) {
        case Field::Real: run(0.0); return;
        case Field::Complex: run(Cplx{}); return;
        case Field::Quaternion: run(Quat{}); return;
    }
    throw InvalidSpec("unknown field");
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 usage error, 2 numerical or data error.
inline int dispatch(std::vector<std::string> args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
    CLI::App app{"Two-projection analysis over R, C and H"};
    app.require_subcommand(1);

    // --- gen ---------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate a random projection pair file");
    std::string gen_field = "R";
    int gen_n = 8;
    double gen_delta = 0.0;
    uint64_t gen_seed = 0;
    std::string gen_out;
    std::vector<double> gen_angles;
    int gen_r = -1, gen_s = -1;
    gen->add_option("--field", gen_field, "Coefficient field: R, C or H");
    gen->add_option("--n", gen_n, "Matrix size");
    gen->add_option("--delta-max", gen_delta, "Commutator norm cap in [0, 1/2)");
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--angles", gen_angles, "Explicit block angles (radians)");
    gen->add_option("--r", gen_r, "Explicit count of range-Q-only directions");
    gen->add_option("--s", gen_s, "Explicit joint-kernel count");
    gen->add_option("--out", gen_out, "Output .amat path")->required();

    // --- angles ------------------------------------------------------
    auto* angles_cmd = app.add_subcommand("angles", "Print the principal angles of a pair");
    std::string angles_file;
    angles_cmd->add_option("file", angles_file, "Pair file (.amat with P, Q)")->required();

    // --- vectors -----------------------------------------------------
    auto* vectors_cmd = app.add_subcommand("vectors", "Print principal vector pairs");
    std::string vectors_file, vectors_method = "svd";
    vectors_cmd->add_option("file", vectors_file, "Pair file")->required();
    vectors_cmd->add_option("--method", vectors_method, "svd or polar")
        ->check(CLI::IsMember({"svd", "polar"}));

    // --- canonical ---------------------------------------------------
    auto* canonical_cmd = app.add_subcommand("canonical", "Canonical form summary");
    std::string canonical_file, canonical_out_u;
    canonical_cmd->add_option("file", canonical_file, "Pair file")->required();
    canonical_cmd->add_option("--out-u", canonical_out_u, "Write the unitary U to this path");

    // --- fix ---------------------------------------------------------
    auto* fix_cmd = app.add_subcommand("fix", "Replace a pair by commuting projections");
    std::string fix_file, fix_objective, fix_out;
    fix_cmd->add_option("file", fix_file, "Pair file")->required();
    fix_cmd->add_option("--objective", fix_objective, "max or sum")
        ->required()
        ->check(CLI::IsMember({"max", "sum"}));
    fix_cmd->add_option("--out", fix_out, "Write the fixed pair to this path");

    // --- experiment --------------------------------------------------
    auto* exp_cmd = app.add_subcommand("experiment", "Batch make-commute trials, CSV output");
    std::string exp_field = "R", exp_out;
    int exp_n = 200, exp_pairs = 100;
    double exp_delta = 0.49;
    uint64_t exp_seed = 1;
    exp_cmd->add_option("--field", exp_field, "Coefficient field: R, C or H");
    exp_cmd->add_option("--n", exp_n, "Matrix size");
    exp_cmd->add_option("--pairs", exp_pairs, "Number of trials");
    exp_cmd->add_option("--delta-max", exp_delta, "Commutator norm cap");
    exp_cmd->add_option("--seed", exp_seed, "Random seed");
    exp_cmd->add_option("--out", exp_out, "CSV path")->required();

    try {
        std::vector<const char*> argv;
        argv.push_back("amat");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (gen->parsed()) {
            PairSpec spec;
            spec.field = detail::parse_field(gen_field);
            spec.n = gen_n;
            spec.delta_max = gen_delta;
            spec.seed = gen_seed;
            if (!gen_angles.empty() || gen_r >= 0 || gen_s >= 0) {
                spec.angle_policy = AnglePolicy::ExplicitList;
                spec.angles = gen_angles;
                spec.r = gen_r;
                spec.s = gen_s;
            }
            AmatFile file;
            file.field = spec.field;
            file.rows = file.cols = spec.n;
            detail::with_field(spec.field, [&](auto tag) {
                using S = decltype(tag);
                const auto [p, q] = gen_pair<S>(spec);
                file.matrices.push_back({"P", p.mat});
                file.matrices.push_back({"Q", q.mat});
            });
            write_matrix_file(gen_out, file);
            out << "wrote " << gen_out << '\n';
        } else if (angles_cmd->parsed()) {
            const AmatFile file = read_matrix_file(angles_file);
            detail::with_field(file.field, [&](auto tag) {
                using S = decltype(tag);
                const auto [p, q] = detail::projections_from<S>(file);
                for (double a : principal_angles(p, q)) out << fmt7(a) << '\n';
            });
        } else if (vectors_cmd->parsed()) {
            const AmatFile file = read_matrix_file(vectors_file);
            detail::with_field(file.field, [&](auto tag) {
                using S = decltype(tag);
                const auto [p, q] = detail::projections_from<S>(file);
                const auto pairs = vectors_method == "svd" ? principal_vectors_svd(p, q)
                                                           : principal_vectors_polar(p, q);
                for (size_t k = 0; k < pairs.size(); ++k) {
                    out << "pair " << k << " angle " << fmt7(pairs[k].angle) << '\n';
                    detail::print_column(out, "  v:", pairs[k].v);
                    detail::print_column(out, "  w:", pairs[k].w);
                }
            });
        } else if (canonical_cmd->parsed()) {
            const AmatFile file = read_matrix_file(canonical_file);
            detail::with_field(file.field, [&](auto tag) {
                using S = decltype(tag);
                const auto [p, q] = detail::projections_from<S>(file);
                const auto cf = canonical_form(p, q);
                out << "angles:";
                for (double a : cf.angles) out << ' ' << fmt7(a);
                out << '\n';
                out << "r: " << cf.r << '\n';
                out << "s: " << cf.s << '\n';
                out << "swapped: " << (cf.swapped ? "true" : "false") << '\n';
                if (!canonical_out_u.empty()) {
                    AmatFile ufile;
                    ufile.field = file.field;
                    ufile.rows = ufile.cols = cf.n();
                    ufile.matrices.push_back({"U", cf.u});
                    write_matrix_file(canonical_out_u, ufile);
                    out << "wrote " << canonical_out_u << '\n';
                }
            });
        } else if (fix_cmd->parsed()) {
            const AmatFile file = read_matrix_file(fix_file);
            detail::with_field(file.field, [&](auto tag) {
                using S = decltype(tag);
                const auto [p, q] = detail::projections_from<S>(file);
                const bool want_max = fix_objective == "max";
                const FixResult<S> fix = want_max ? max_fix(p, q) : sum_fix(p, q);
                out << "delta " << fmt7(fix.delta) << '\n';
                out << "disp_p " << fmt7(fix.disp_p) << '\n';
                out << "disp_q " << fmt7(fix.disp_q) << '\n';
                if (want_max)
                    out << "max_disp " << fmt7(std::max(fix.disp_p, fix.disp_q)) << '\n';
                else
                    out << "sum_disp " << fmt7(fix.disp_p + fix.disp_q) << '\n';
                out << "bound " << fmt7(fix.bound) << '\n';
                out << "relation_residual " << format_full(fix.relation_residual) << '\n';
                if (!fix_out.empty()) {
                    AmatFile ofile;
                    ofile.field = file.field;
                    ofile.rows = ofile.cols = p.n();
                    ofile.matrices.push_back({"P_fixed", fix.p_fixed.mat});
                    ofile.matrices.push_back({"Q_fixed", fix.q_fixed.mat});
                    write_matrix_file(fix_out, ofile);
                    out << "wrote " << fix_out << '\n';
                }
            });
        } else if (exp_cmd->parsed()) {
            const Field field = detail::parse_field(exp_field);
            const auto records =
                run_commute_experiment(field, exp_n, exp_pairs, exp_delta, exp_seed, exp_out);
            out << "wrote " << exp_out << " (" << records.size() << " trials)\n";
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace amat::cli
