#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "amat/almost_commuting.hpp"
#include "amat/matrix_io.hpp"
#include "amat/random_pairs.hpp"

namespace amat {

/// One trial of the make-commute experiment: both fixes on one seeded
/// pair, with every quantity measured. Mirrors a row of the reference
/// Matlab run (100 pairs of 200x200 real projections, commutator cap
/// 0.49): (delta, max_disp) samples the optimal curve, relation_residual
/// tracks the defect of the computed pair.
struct ExperimentRecord {
    int index = 0;
    double delta = 0.0;
    double disp_p = 0.0;  // max-objective displacements
    double disp_q = 0.0;
    double max_disp = 0.0;
    double bound = 0.0;  // sin(arcsin(2 delta)/4)
    double relation_residual = 0.0;
    double sum_disp = 0.0;   // sum-objective total displacement
    double sum_bound = 0.0;  // sin(arcsin(2 delta)/2)
};

inline const char* kExperimentCsvHeader =
    "index,delta,disp_p,disp_q,max_disp,bound,relation_residual,sum_disp,sum_bound";

inline std::string experiment_csv(const std::vector<ExperimentRecord>& records) {
    std::ostringstream os;
    os << kExperimentCsvHeader << '\n';
    for (const auto& r : records) {
        os << r.index << ',' << format_full(r.delta) << ',' << format_full(r.disp_p) << ','
           << format_full(r.disp_q) << ',' << format_full(r.max_disp) << ','
           << format_full(r.bound) << ',' << format_full(r.relation_residual) << ','
           << format_full(r.sum_disp) << ',' << format_full(r.sum_bound) << '\n';
    }
    return os.str();
}

/// Runs `pairs` independent trials at size n with commutator cap
/// delta_max. Trial i draws its pair from the stream (seed, i), so the
/// records do not depend on evaluation order. Writes CSV to out_path
/// unless it is empty.
template <class S>
std::vector<ExperimentRecord> run_commute_experiment(int n, int pairs, double delta_max,
                                                     uint64_t seed,
                                                     const std::string& out_path = {}) {
    if (!(delta_max < 0.5)) throw InvalidSpec("experiment: delta_max must be below 1/2");
    std::vector<ExperimentRecord> records;
    records.reserve(pairs);
    for (int i = 0; i < pairs; ++i) {
        PairSpec spec;
        spec.field = field_of<S>;
        spec.n = n;
        spec.delta_max = delta_max;
        spec.seed = Rng::derive(seed, static_cast<uint64_t>(i));
        const auto [p, q] = gen_pair<S>(spec);
        const FixResult<S> mf = max_fix(p, q);
        const FixResult<S> sf = sum_fix(p, q);
        ExperimentRecord r;
        r.index = i;
        r.delta = mf.delta;
        r.disp_p = mf.disp_p;
        r.disp_q = mf.disp_q;
        r.max_disp = std::max(mf.disp_p, mf.disp_q);
        r.bound = mf.bound;
        r.relation_residual = mf.relation_residual;
        r.sum_disp = sf.disp_p + sf.disp_q;
        r.sum_bound = sf.bound;
        records.push_back(r);
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw IoError("cannot open '" + out_path + "' for writing");
        out << experiment_csv(records);
        if (!out) throw IoError("write to '" + out_path + "' failed");
    }
    return records;
}

/// Runtime-field dispatch used by the CLI.
inline std::vector<ExperimentRecord> run_commute_experiment(Field field, int n, int pairs,
                                                            double delta_max, uint64_t seed,
                                                            const std::string& out_path = {}) {
    switch (field) {
        case Field::Real:
            return run_commute_experiment<double>(n, pairs, delta_max, seed, out_path);
        case Field::Complex:
            return run_commute_experiment<Cplx>(n, pairs, delta_max, seed, out_path);
        case Field::Quaternion:
            return run_commute_experiment<Quat>(n, pairs, delta_max, seed, out_path);
    }
    throw InvalidSpec("experiment: unknown field");
}

}  // namespace amat
