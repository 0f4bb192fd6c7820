#include "sdc/shuffle.hpp"

#include <algorithm>
#include <sstream>

namespace sdc::scheme {

size_t Transcript::total_bits() const {
    size_t n = 0;
    for (const auto& rec : records) n += rec.payload.size();
    return n;
}

std::string Transcript::serialize() const {
    std::ostringstream os;
    os << "# sender instance batch bits payload\n";
    for (const auto& rec : records) {
        os << rec.sender << ' ' << rec.instance << ' ' << rec.batch << ' '
           << rec.payload.size() << ' ' << bits_to_hex(rec.payload) << '\n';
    }
    return os.str();
}

const MulticastRecord& Transcript::find(int sender, int instance, int batch) const {
    for (const auto& rec : records)
        if (rec.sender == sender && rec.instance == instance && rec.batch == batch)
            return rec;
    throw ProtocolError("transcript: missing transmission from node " +
                        std::to_string(sender) + " in instance " +
                        std::to_string(instance));
}

ShufflePlan ShufflePlan::make(const pda::Pda& p, const pda::OccurrenceIndex& occ,
                              int eta, size_t t_bits) {
    if (eta < 0) throw ConfigError("eta must be non-negative");
    ShufflePlan plan;
    plan.p = p;
    plan.occ = occ;
    plan.eta = eta;
    plan.t_bits = t_bits;

    bool per_batch = true, aggregated = true;
    for (int s = 1; s <= p.S(); ++s) {
        const size_t parts = static_cast<size_t>(occ.occurrences(s) - 1);
        if (t_bits % parts != 0) per_batch = false;
        if ((t_bits * eta) % parts != 0) aggregated = false;
        if (!per_batch && !aggregated)
            throw ConfigError("integer " + std::to_string(s) + " occurs g_s=" +
                              std::to_string(occ.occurrences(s)) +
                              " times but neither t=" + std::to_string(t_bits) +
                              " nor eta*t is divisible by g_s-1");
    }
    plan.granularity = per_batch ? Granularity::PerBatch : Granularity::AllBatches;
    return plan;
}

KeyTable KeyTable::generate(const ShufflePlan& plan, RandomSource& rng) {
    KeyTable table;
    for (int s = 1; s <= plan.p.S(); ++s) {
        const size_t len = plan.packet_bits(s);
        for (int k : plan.occ.columns_of[s - 1])
            for (int unit = 1; unit <= plan.units(); ++unit)
                table.keys[{k + 1, s, unit}] = rng.bits(len);
    }
    return table;
}

size_t KeyTable::total_bits(const ShufflePlan& plan) {
    size_t n = 0;
    for (int s = 1; s <= plan.p.S(); ++s)
        n += plan.packet_bits(s) * plan.occ.columns_of[s - 1].size() * plan.units();
    return n;
}

const BitVec& KeyTable::at(int k, int s, int unit) const {
    const auto it = keys.find({k, s, unit});
    if (it == keys.end())
        throw ProtocolError("missing key T_{" + std::to_string(k) + "," +
                            std::to_string(s) + "}");
    return it->second;
}

BitVec ItemTable::unit_item(const ShufflePlan& plan, int q, int f, int unit) const {
    if (plan.granularity == Granularity::PerBatch) return at(q, f, unit);
    BitVec out;
    for (int m = 1; m <= eta; ++m) out = concat_bits(out, at(q, f, m));
    return out;
}

BitVec packet_for(const ShufflePlan& plan, const BitVec& item, int s, int col,
                  int label) {
    const auto& cols = plan.occ.columns_of[s - 1];
    std::vector<int> others;
    for (int c : cols)
        if (c != col) others.push_back(c);
    const auto it = std::find(others.begin(), others.end(), label);
    if (it == others.end())
        throw ProtocolError("packet label column does not hold this integer");
    const size_t idx = static_cast<size_t>(it - others.begin());
    const size_t len = plan.packet_bits(s);
    return slice_bits(item, idx * len, len);
}

Transcript run_shuffle(const ShufflePlan& plan, const ItemTable& items,
                       const KeyTable& keys) {
    const pda::Pda& p = plan.p;
    Transcript transcript;
    for (int s = 1; s <= p.S(); ++s) {
        const auto& cells = plan.occ.positions[s - 1];
        for (int k : plan.occ.columns_of[s - 1]) {
            for (int unit = 1; unit <= plan.units(); ++unit) {
                BitVec payload = keys.at(k + 1, s, unit);
                for (const auto& [u, e] : cells) {
                    if (e == k) continue;
                    // Every term here is computable by the transmitter:
                    // p_{u,k} = * by A3-2.
                    const BitVec item = items.unit_item(plan, e + 1, u + 1, unit);
                    xor_inplace(payload, packet_for(plan, item, s, e, k));
                }
                transcript.records.push_back(
                    {k + 1, s, plan.batch_label(unit), std::move(payload)});
            }
        }
    }
    return transcript;
}

std::map<std::pair<int, int>, BitVec>
decode_missing(const ShufflePlan& plan, int k, const Transcript& transcript,
               const ItemTable& items, const KeyTable& keys) {
    const pda::Pda& p = plan.p;
    std::map<std::pair<int, int>, BitVec> recovered;
    for (int f = 1; f <= p.F(); ++f) {
        const int s = p.at(f - 1, k - 1);
        if (s == pda::kStar) continue;
        const auto& cells = plan.occ.positions[s - 1];
        std::vector<std::pair<int, BitVec>> units_out(plan.units());
        for (int unit = 1; unit <= plan.units(); ++unit) {
            BitVec assembled;
            for (int ki : plan.occ.columns_of[s - 1]) {
                if (ki == k - 1) continue;
                BitVec x = transcript.find(ki + 1, s, plan.batch_label(unit)).payload;
                // s is in S_k, so node k stores T_{k_i,s}.
                xor_inplace(x, keys.at(ki + 1, s, unit));
                for (const auto& [u, e] : cells) {
                    if (e == ki || e == k - 1) continue;
                    // p_{u,k} = * by A3-2: node k computes this item itself.
                    if (p.at(u, k - 1) != pda::kStar)
                        throw ProtocolError("PDA structure violated during decode");
                    const BitVec item = items.unit_item(plan, e + 1, u + 1, unit);
                    xor_inplace(x, packet_for(plan, item, s, e, ki));
                }
                assembled = concat_bits(assembled, x);
            }
            units_out[unit - 1] = {unit, std::move(assembled)};
        }
        // Re-split aggregated units back into per-batch items.
        if (plan.granularity == Granularity::PerBatch) {
            for (auto& [unit, item] : units_out)
                recovered[{f, unit}] = std::move(item);
        } else {
            const BitVec& joint = units_out[0].second;
            for (int m = 1; m <= plan.eta; ++m)
                recovered[{f, m}] = slice_bits(joint, (m - 1) * plan.t_bits, plan.t_bits);
        }
    }
    return recovered;
}

} // namespace sdc::scheme
