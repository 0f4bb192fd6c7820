#include "sdc/scheme_t2.hpp"

#include <string>

namespace sdc::scheme {

T2Run setup_t2(const pda::Pda& p, const gf::FieldSpec& spec, size_t L_sym, int eta,
               std::vector<gf::SymbolVec> files, RandomSource& rng,
               const ss::CauchyMatrix* D) {
    const int F = p.F();
    const int Z = p.Z();
    if (F <= Z) throw ConfigError("setup_t2: need F > Z");
    const size_t expected = static_cast<size_t>(eta) * (F - Z);
    if (files.size() != expected)
        throw ConfigError("setup_t2: expected " + std::to_string(expected) +
                          " files (eta*(F-Z)), got " + std::to_string(files.size()));
    for (const auto& w : files)
        if (!(w.spec == spec) || w.size() != L_sym)
            throw ConfigError("setup_t2: file payload does not match z/L_sym");

    T2Run run;
    run.p = p;
    run.occ = pda::occurrence_index(run.p);
    run.spec = spec;
    run.L_sym = L_sym;
    run.eta = eta;
    run.files = std::move(files);
    run.plan = ShufflePlan::make(run.p, run.occ, eta, L_sym * spec.z);
    run.D = D ? *D : ss::CauchyMatrix::build(F, spec);
    if (run.D.F() != F || !(run.D.spec() == spec))
        throw ConfigError("setup_t2: matrix dimensions or field do not match the PDA");

    // Ramp key vectors first, in batch order, so the audit tape layout
    // is [V bits][pad-key bits].
    for (int m = 1; m <= eta; ++m) {
        ss::KeyVector V;
        for (int j = 0; j < Z; ++j) {
            std::vector<uint64_t> vals(L_sym);
            for (auto& v : vals) v = rng.symbol(spec);
            V.keys.emplace_back(spec, std::move(vals));
        }
        run.ramp_keys.push_back(std::move(V));
    }
    for (int m = 1; m <= eta; ++m) {
        std::vector<gf::SymbolVec> W(run.files.begin() + (m - 1) * (F - Z),
                                     run.files.begin() + m * (F - Z));
        run.shares.push_back(ss::share(W, run.ramp_keys[m - 1], run.D));
    }
    return run;
}

void place_t2(T2Run& run, RandomSource& key_rng) {
    const pda::Pda& p = run.p;
    run.keys = KeyTable::generate(run.plan, key_rng);

    run.items.K = p.K();
    run.items.F = p.F();
    run.items.eta = run.eta;
    run.items.items.resize(p.K());
    for (int q = 1; q <= p.K(); ++q) {
        const auto g = mr::MapFunction::for_node(q, run.spec);
        auto& row = run.items.items[q - 1];
        row.resize(static_cast<size_t>(p.F()) * run.eta);
        for (int f = 1; f <= p.F(); ++f)
            for (int m = 1; m <= run.eta; ++m)
                row[(f - 1) * run.eta + (m - 1)] =
                    symbols_to_bits(run.shares[m - 1].shares[f - 1].scaled(g.alpha));
    }

    run.states.clear();
    for (int k = 1; k <= p.K(); ++k) {
        NodeStateT2 st;
        st.k = k;
        for (int f = 1; f <= p.F(); ++f) {
            if (p.at(f - 1, k - 1) != pda::kStar) continue;
            for (int m = 1; m <= run.eta; ++m)
                st.shares[{f, m}] = run.shares[m - 1].shares[f - 1];
        }
        for (int s : run.occ.integers_in_column[k - 1])
            for (int kh : run.occ.columns_of[s - 1])
                for (int unit = 1; unit <= run.plan.units(); ++unit)
                    st.keys[{kh + 1, s, unit}] = run.keys.at(kh + 1, s, unit);
        run.states.push_back(std::move(st));
    }
}

void run_shuffle_t2(T2Run& run) {
    run.transcript = run_shuffle(run.plan, run.items, run.keys);
}

T2Decoded decode_t2(const T2Run& run, int k) {
    const pda::Pda& p = run.p;
    const int F = p.F();
    const int Z = p.Z();
    const auto g = mr::MapFunction::for_node(k, run.spec);
    const auto missing = decode_missing(run.plan, k, run.transcript, run.items, run.keys);
    const ss::CauchyMatrix Dinv = run.D.inverse();

    T2Decoded out;
    std::vector<mr::IntermediateValue> ivs;
    for (int m = 1; m <= run.eta; ++m) {
        // Assemble the coded-IV vector C_k^m: own shares map locally,
        // the rest was decoded from the transcript.
        std::vector<gf::SymbolVec> C;
        const auto& st = run.states[k - 1];
        for (int f = 1; f <= F; ++f) {
            if (p.at(f - 1, k - 1) == pda::kStar)
                C.push_back(st.shares.at({f, m}).scaled(g.alpha));
            else
                C.push_back(bits_to_symbols(run.spec, missing.at({f, m})));
        }
        // D^{-1} C: rows [1..F-Z] are the IVs, the rest are g_k(V_j).
        for (int i = 0; i < F; ++i) {
            gf::SymbolVec acc = gf::SymbolVec::zero(run.spec, run.L_sym);
            for (int j = 0; j < F; ++j)
                for (size_t pos = 0; pos < run.L_sym; ++pos)
                    acc.vals[pos] ^=
                        gf::mul_raw(Dinv.at(i, j), C[j].vals[pos], run.spec);
            if (i < F - Z) {
                out.ivs[{i + 1, m}] = acc;
                mr::IntermediateValue iv;
                iv.q = k;
                iv.file_index = i + 1;
                iv.batch = m;
                iv.payload = std::move(acc);
                ivs.push_back(std::move(iv));
            } else {
                out.mapped_keys[{i - (F - Z) + 1, m}] = std::move(acc);
            }
        }
    }
    out.output = mr::reduce_output(k, ivs, (F - Z) * run.eta);
    return out;
}

MeasuredLoadsT2 measured_loads_t2(const T2Run& run) {
    if (run.eta == 0 || run.files.empty())
        throw ConfigError("measured_loads_t2: empty job has no defined load");
    const long long w = static_cast<long long>(run.L_sym) * run.spec.z;
    const long long total_file_bits = static_cast<long long>(run.files.size()) * w;
    long long stored = 0;
    for (const auto& st : run.states)
        stored += static_cast<long long>(st.shares.size()) * w;
    MeasuredLoadsT2 out;
    out.r = pda::Rational(stored, static_cast<long long>(run.p.K()) * total_file_bits);
    const long long iv_bits = static_cast<long long>(run.p.K()) * run.eta *
                              (run.p.F() - run.p.Z()) * w;
    out.L = pda::Rational(static_cast<long long>(run.transcript.total_bits()), iv_bits);
    return out;
}

} // namespace sdc::scheme
