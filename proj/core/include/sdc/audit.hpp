#ifndef SDC_AUDIT_HPP_
#define SDC_AUDIT_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "sdc/bits.hpp"
#include "sdc/pda.hpp"
#include "sdc/secret_sharing.hpp"

namespace sdc::audit {

/* Exact joint-distribution bookkeeping over an exhaustively enumerated
   probability space. Zero mutual information is decided without
   floating point: I = 0 iff count(a,b) * N == count(a) * count(b)
   everywhere. The bit-valued MI estimate is for reporting only. */
class JointCounter {
public:
    void add(const BitVec& secret, const BitVec& observation);

    uint64_t total() const { return total_; }
    // Sum of |count(a,b)*N - count(a)*count(b)|; zero iff independent.
    unsigned long long defect() const;
    bool independent() const { return defect() == 0; }
    double mi_bits() const;

private:
    std::map<std::pair<std::string, std::string>, uint64_t> joint_;
    std::map<std::string, uint64_t> secret_counts_;
    std::map<std::string, uint64_t> obs_counts_;
    uint64_t total_ = 0;
};

struct IndependenceReport {
    uint64_t space_size = 0;
    unsigned long long defect = 0;
    double mi_bits = 0.0;
    bool independent() const { return defect == 0; }
    std::string describe(const std::string& what) const;
};

struct AuditConfig {
    pda::Pda pda;
    gf::FieldSpec spec;
    size_t L_sym = 1;
    int eta = 1;
    bool sabotage_zero_keys = false;
    bool sabotage_identity_matrix = false; // Theorem-2 audits only
    uint64_t budget = uint64_t{1} << 22;
};

/* Secure-data-shuffling check: exact independence of the full multicast
   transcript from the set of all IVs, over every (file, key)
   assignment. The adversary is assumed to know the PDA, the matrix and
   all public parameters. */
IndependenceReport audit_eavesdropper_t1(const AuditConfig& cfg);
IndependenceReport audit_eavesdropper_t2(const AuditConfig& cfg);

/* Secure-coded-computing check for node k: independence of the foreign
   IVs {v_{q,n}}_{q != k} from node k's storage plus the messages it
   receives from the other nodes. */
IndependenceReport audit_node_secrecy(const AuditConfig& cfg, int k);

// Harness sanity: I(X;X) = H(X) = 2 bits on a uniform 2-bit variable.
double mi_self_check();

} // namespace sdc::audit

#endif
