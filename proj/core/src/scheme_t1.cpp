#include "sdc/scheme_t1.hpp"

#include <string>

namespace sdc::scheme {

T1Run place_t1(const pda::Pda& p, const gf::FieldSpec& spec, size_t L_sym, int eta,
               std::vector<gf::SymbolVec> files, RandomSource& key_rng) {
    const size_t expected = static_cast<size_t>(eta) * p.F();
    if (files.size() != expected)
        throw ConfigError("place_t1: expected " + std::to_string(expected) +
                          " files (eta*F), got " + std::to_string(files.size()));
    for (const auto& w : files)
        if (!(w.spec == spec) || w.size() != L_sym)
            throw ConfigError("place_t1: file payload does not match z/L_sym");

    T1Run run;
    run.p = p;
    run.occ = pda::occurrence_index(run.p);
    run.spec = spec;
    run.L_sym = L_sym;
    run.eta = eta;
    run.files = std::move(files);
    run.plan = ShufflePlan::make(run.p, run.occ, eta, L_sym * spec.z);

    run.keys = KeyTable::generate(run.plan, key_rng);

    // Global IV table; conceptually each v_{q,f}^m is computed by every
    // node whose column has a star in row f.
    run.items.K = p.K();
    run.items.F = p.F();
    run.items.eta = eta;
    run.items.items.resize(p.K());
    for (int q = 1; q <= p.K(); ++q) {
        const auto g = mr::MapFunction::for_node(q, spec);
        auto& row = run.items.items[q - 1];
        row.resize(static_cast<size_t>(p.F()) * eta);
        for (int f = 1; f <= p.F(); ++f) {
            for (int m = 1; m <= eta; ++m) {
                const auto& w = run.files[(f - 1) * eta + (m - 1)];
                row[(f - 1) * eta + (m - 1)] = symbols_to_bits(w.scaled(g.alpha));
            }
        }
    }

    for (int k = 1; k <= p.K(); ++k) {
        NodeStateT1 st;
        st.k = k;
        for (int f = 1; f <= p.F(); ++f) {
            if (p.at(f - 1, k - 1) != pda::kStar) continue;
            for (int m = 1; m <= eta; ++m)
                st.files[{f, m}] = run.files[(f - 1) * eta + (m - 1)];
        }
        // Node k stores every key of every instance present in its column.
        for (int s : run.occ.integers_in_column[k - 1])
            for (int kh : run.occ.columns_of[s - 1])
                for (int unit = 1; unit <= run.plan.units(); ++unit)
                    st.keys[{kh + 1, s, unit}] = run.keys.at(kh + 1, s, unit);
        run.states.push_back(std::move(st));
    }
    return run;
}

void run_shuffle_t1(T1Run& run) {
    run.transcript = run_shuffle(run.plan, run.items, run.keys);
}

std::map<std::pair<int, int>, BitVec> decode_t1_items(const T1Run& run, int k) {
    return decode_missing(run.plan, k, run.transcript, run.items, run.keys);
}

gf::SymbolVec decode_t1(const T1Run& run, int k) {
    const auto g = mr::MapFunction::for_node(k, run.spec);
    const auto missing = decode_t1_items(run, k);

    std::vector<mr::IntermediateValue> ivs;
    for (int f = 1; f <= run.p.F(); ++f) {
        for (int m = 1; m <= run.eta; ++m) {
            mr::IntermediateValue iv;
            iv.q = k;
            iv.file_index = f;
            iv.batch = m;
            if (run.p.at(f - 1, k - 1) == pda::kStar) {
                const auto& st = run.states[k - 1];
                iv.payload = st.files.at({f, m}).scaled(g.alpha);
            } else {
                iv.payload = bits_to_symbols(run.spec, missing.at({f, m}));
            }
            ivs.push_back(std::move(iv));
        }
    }
    return mr::reduce_output(k, ivs, run.p.F() * run.eta);
}

MeasuredLoads measured_loads_t1(const T1Run& run) {
    if (run.eta == 0 || run.files.empty())
        throw ConfigError("measured_loads_t1: empty job has no defined load");
    const long long w = static_cast<long long>(run.L_sym) * run.spec.z;
    const long long total_file_bits = static_cast<long long>(run.files.size()) * w;
    long long stored = 0;
    for (const auto& st : run.states)
        stored += static_cast<long long>(st.files.size()) * w;
    MeasuredLoads out;
    out.r = pda::Rational(stored, static_cast<long long>(run.p.K()) * total_file_bits);
    const long long iv_bits =
        static_cast<long long>(run.p.K()) * run.eta * run.p.F() * w;
    out.L = pda::Rational(static_cast<long long>(run.transcript.total_bits()), iv_bits);
    return out;
}

} // namespace sdc::scheme
