#ifndef SDC_SHUFFLE_HPP_
#define SDC_SHUFFLE_HPP_

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sdc/bits.hpp"
#include "sdc/pda.hpp"
#include "sdc/random.hpp"

namespace sdc::scheme {

/* One multicast on the broadcast channel. `batch` is 1-based; 0 means
   the message spans all batches (aggregated partitioning, below). */
struct MulticastRecord {
    int sender = 0;   // k, 1-based
    int instance = 0; // s
    int batch = 0;    // m, or 0
    BitVec payload;
};

struct Transcript {
    std::vector<MulticastRecord> records;

    size_t total_bits() const;
    // One line per record: sender instance batch bit-length hex-payload.
    std::string serialize() const;
    const MulticastRecord& find(int sender, int instance, int batch) const;
};

/* IVs (or coded IVs) are partitioned into g_s - 1 equal packets. That
   needs (g_s - 1) | t. When t itself is not divisible but eta*t is, the
   eta per-batch payloads are concatenated and partitioned as one unit,
   which transmits exactly the same number of bits. */
enum class Granularity { PerBatch, AllBatches };

struct ShufflePlan {
    pda::Pda p;
    pda::OccurrenceIndex occ;
    int eta = 1;
    size_t t_bits = 0;
    Granularity granularity = Granularity::PerBatch;

    static ShufflePlan make(const pda::Pda& p, const pda::OccurrenceIndex& occ,
                            int eta, size_t t_bits);

    int units() const { return granularity == Granularity::PerBatch ? eta : 1; }
    size_t unit_bits() const {
        return granularity == Granularity::PerBatch ? t_bits : t_bits * eta;
    }
    size_t packet_bits(int s) const {
        return unit_bits() / (occ.occurrences(s) - 1);
    }
    // Transcript batch field for a unit index (1-based unit).
    int batch_label(int unit) const {
        return granularity == Granularity::PerBatch ? unit : 0;
    }
};

/* Pad keys T_{k,s} indexed by (transmitter k, instance s, unit).
   Generation order is fixed (s, then k ascending in U_s, then unit) so a
   bit tape enumerates them deterministically. */
struct KeyTable {
    std::map<std::tuple<int, int, int>, BitVec> keys;

    static KeyTable generate(const ShufflePlan& plan, RandomSource& rng);
    static size_t total_bits(const ShufflePlan& plan);

    const BitVec& at(int k, int s, int unit) const;
};

/* Exchange items X_{q,f,m}: the t-bit value function q needs from row f
   of batch m (an IV under Theorem 1, a coded IV under Theorem 2).
   Indexed [q-1][(f-1)*eta + (m-1)]. */
struct ItemTable {
    int K = 0, F = 0, eta = 0;
    std::vector<std::vector<BitVec>> items;

    const BitVec& at(int q, int f, int m) const {
        return items[q - 1][(f - 1) * eta + (m - 1)];
    }
    // Item for one scheduling unit: the per-batch value, or the
    // concatenation over all batches.
    BitVec unit_item(const ShufflePlan& plan, int q, int f, int unit) const;
};

/* The packet of `item` destined to be recovered from column `label`'s
   message: cell (f, col) holds s; packets are ordered by the other
   s-columns ascending. */
BitVec packet_for(const ShufflePlan& plan, const BitVec& item, int s, int col,
                  int label);

// All S instances in order; within an instance, transmitters ascending,
// then units ascending.
Transcript run_shuffle(const ShufflePlan& plan, const ItemTable& items,
                       const KeyTable& keys);

/* Recovers, for node k, every missing item (k, f, m) with p_{f,k} != *.
   Cancels the stored key and the packets of items node k can compute
   itself (guaranteed computable by condition A3-2). */
std::map<std::pair<int, int>, BitVec>
decode_missing(const ShufflePlan& plan, int k, const Transcript& transcript,
               const ItemTable& items, const KeyTable& keys);

} // namespace sdc::scheme

#endif
