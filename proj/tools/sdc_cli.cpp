#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "sdc/audit.hpp"
#include "sdc/scheme_t1.hpp"
#include "sdc/scheme_t2.hpp"

namespace {

// Exit codes: 0 ok, 2 parse, 3 validation, 4 configuration, 5 protocol,
// 6 audit failure.
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitConfig = 4;
constexpr int kExitProtocol = 5;
constexpr int kExitAudit = 6;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sdc::ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string rational_str(const sdc::pda::Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    os << " (" << boost::rational_cast<double>(r) << ")";
    return os.str();
}

struct RunOptions {
    std::string scheme = "t2";
    std::string pda_path;
    std::string matrix_path; // empty = generated
    std::string files_path;  // empty = seeded random
    std::string transcript_path;
    int eta = 1;
    unsigned z = 0; // 0 = auto (field_for(F))
    size_t L_sym = 1;
    uint64_t seed = 1;
    bool entropy = false;
    bool sabotage_zero_keys = false;
    bool sabotage_identity_matrix = false;
};

std::unique_ptr<sdc::RandomSource> make_rng(const RunOptions& opt) {
    if (opt.entropy) return std::make_unique<sdc::OsSource>();
    return std::make_unique<sdc::SeededSource>(opt.seed);
}

sdc::gf::FieldSpec field_of(const RunOptions& opt, const sdc::pda::Pda& p) {
    return opt.z ? sdc::gf::FieldSpec::canonical(opt.z)
                 : sdc::gf::field_for(p.F());
}

std::vector<sdc::gf::SymbolVec> job_files(const RunOptions& opt,
                                          const sdc::gf::FieldSpec& spec,
                                          size_t count, sdc::RandomSource& rng) {
    if (!opt.files_path.empty()) {
        const std::string blob = read_file(opt.files_path);
        return sdc::mr::ingest_blob(
            std::vector<uint8_t>(blob.begin(), blob.end()), spec, count, opt.L_sym);
    }
    std::vector<sdc::gf::SymbolVec> files;
    for (size_t i = 0; i < count; ++i) {
        std::vector<uint64_t> vals(opt.L_sym);
        for (auto& v : vals) v = rng.symbol(spec);
        files.emplace_back(spec, std::move(vals));
    }
    return files;
}

void write_transcript(const RunOptions& opt, const sdc::scheme::Transcript& t,
                      const std::string& summary) {
    if (opt.transcript_path.empty()) return;
    std::ofstream out(opt.transcript_path);
    out << summary << t.serialize();
    std::cout << "transcript written to " << opt.transcript_path << "\n";
}

std::string hex_digest(const sdc::gf::SymbolVec& s) {
    return sdc::bits_to_hex(sdc::symbols_to_bits(s));
}

int cmd_validate(const std::string& pda_path) {
    const auto grid = sdc::pda::parse_pda(read_file(pda_path));
    const auto p = sdc::pda::Pda::validate(grid);
    const auto idx = sdc::pda::occurrence_index(p);
    std::cout << "(K,F,Z,S) = (" << p.K() << "," << p.F() << "," << p.Z() << ","
              << p.S() << ")\n";
    std::cout << "occurrence histogram:";
    for (const auto& [g, Sg] : idx.histogram)
        std::cout << " S_" << g << "=" << Sg;
    std::cout << "\n";
    const auto t1 = sdc::pda::load_shuffle(p);
    std::cout << "secure data shuffling:  r = " << rational_str(t1.r)
              << ", L = " << rational_str(t1.L) << "\n";
    if (p.F() > p.Z()) {
        const auto t2 = sdc::pda::load_coded(p);
        std::cout << "secure coded computing: r = " << rational_str(t2.r)
                  << ", L = " << rational_str(t2.L) << "\n";
    } else {
        std::cout << "secure coded computing: undefined (F = Z)\n";
    }
    return 0;
}

int cmd_gen_pda(int K, int t_param, const std::string& out_path) {
    const auto p = sdc::pda::generate_mn_pda(K, t_param);
    const std::string text = sdc::pda::serialize_pda(p);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
        std::cout << "(" << p.K() << "," << p.F() << "," << p.Z() << "," << p.S()
                  << ") PDA written to " << out_path << "\n";
    }
    return 0;
}

int cmd_run(const RunOptions& opt) {
    const auto p = sdc::pda::Pda::validate(sdc::pda::parse_pda(read_file(opt.pda_path)));
    const auto spec = field_of(opt, p);
    auto rng = make_rng(opt);
    std::unique_ptr<sdc::RandomSource> key_rng;
    if (opt.sabotage_zero_keys) key_rng = std::make_unique<sdc::ZeroSource>();

    std::ostringstream summary;
    summary << "# scheme=" << opt.scheme << " pda=" << opt.pda_path
            << " eta=" << opt.eta << " z=" << spec.z << " L_sym=" << opt.L_sym
            << "\n";

    if (opt.scheme == "t1") {
        auto files = job_files(opt, spec, static_cast<size_t>(opt.eta) * p.F(), *rng);
        auto run = sdc::scheme::place_t1(p, spec, opt.L_sym, opt.eta, std::move(files),
                                         key_rng ? *key_rng : *rng);
        sdc::scheme::run_shuffle_t1(run);
        for (int k = 1; k <= p.K(); ++k)
            std::cout << "node " << k << " output: " << hex_digest(decode_t1(run, k))
                      << "\n";
        const auto measured = sdc::scheme::measured_loads_t1(run);
        const auto formula = sdc::pda::load_shuffle(p);
        std::cout << "measured r = " << rational_str(measured.r)
                  << ", L = " << rational_str(measured.L) << "\n";
        if (measured.r != formula.r || measured.L != formula.L)
            throw sdc::ProtocolError("measured loads deviate from the closed-form "
                                     "values; transcript accounting is broken");
        std::cout << "loads match the closed-form values\n";
        write_transcript(opt, run.transcript, summary.str());
    } else if (opt.scheme == "t2") {
        auto files = job_files(opt, spec,
                               static_cast<size_t>(opt.eta) * (p.F() - p.Z()), *rng);
        std::unique_ptr<sdc::ss::CauchyMatrix> D;
        if (opt.sabotage_identity_matrix) {
            std::vector<std::vector<uint64_t>> id(p.F(),
                                                  std::vector<uint64_t>(p.F(), 0));
            for (int i = 0; i < p.F(); ++i) id[i][i] = 1;
            D = std::make_unique<sdc::ss::CauchyMatrix>(
                sdc::ss::CauchyMatrix::unaudited(id, spec));
        } else if (!opt.matrix_path.empty()) {
            D = std::make_unique<sdc::ss::CauchyMatrix>(
                sdc::ss::CauchyMatrix::parse(read_file(opt.matrix_path), spec));
        }
        auto run = sdc::scheme::setup_t2(p, spec, opt.L_sym, opt.eta, std::move(files),
                                         *rng, D.get());
        sdc::scheme::place_t2(run, key_rng ? *key_rng : *rng);
        sdc::scheme::run_shuffle_t2(run);
        for (int k = 1; k <= p.K(); ++k)
            std::cout << "node " << k
                      << " output: " << hex_digest(decode_t2(run, k).output) << "\n";
        const auto measured = sdc::scheme::measured_loads_t2(run);
        const auto formula = sdc::pda::load_coded(p);
        std::cout << "measured r = " << rational_str(measured.r)
                  << ", L = " << rational_str(measured.L) << "\n";
        if (measured.r != formula.r || measured.L != formula.L)
            throw sdc::ProtocolError("measured loads deviate from the closed-form "
                                     "values; transcript accounting is broken");
        std::cout << "loads match the closed-form values\n";
        write_transcript(opt, run.transcript, summary.str());
    } else {
        throw sdc::ConfigError("unknown scheme: " + opt.scheme);
    }
    return 0;
}

int cmd_audit(const RunOptions& opt, uint64_t budget, int node) {
    const auto p = sdc::pda::Pda::validate(sdc::pda::parse_pda(read_file(opt.pda_path)));
    sdc::audit::AuditConfig cfg;
    cfg.pda = p;
    cfg.spec = field_of(opt, p);
    cfg.L_sym = opt.L_sym;
    cfg.eta = opt.eta;
    cfg.sabotage_zero_keys = opt.sabotage_zero_keys;
    cfg.sabotage_identity_matrix = opt.sabotage_identity_matrix;
    cfg.budget = budget;

    bool leak = false;
    if (opt.scheme == "t1") {
        const auto rep = sdc::audit::audit_eavesdropper_t1(cfg);
        std::cout << rep.describe("eavesdropper (t1)") << "\n";
        leak = !rep.independent();
    } else if (opt.scheme == "t2") {
        const auto rep = sdc::audit::audit_eavesdropper_t2(cfg);
        std::cout << rep.describe("eavesdropper (t2)") << "\n";
        leak = !rep.independent();
        const int lo = node ? node : 1;
        const int hi = node ? node : p.K();
        for (int k = lo; k <= hi; ++k) {
            const auto nrep = sdc::audit::audit_node_secrecy(cfg, k);
            std::cout << nrep.describe("node " + std::to_string(k) + " view") << "\n";
            leak = leak || !nrep.independent();
        }
    } else {
        throw sdc::ConfigError("unknown scheme: " + opt.scheme);
    }
    return leak ? kExitAudit : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PDA-based secure coded distributed computing simulator"};
    app.require_subcommand(1);

    std::string pda_path;
    auto* validate = app.add_subcommand("validate", "check a PDA file and print loads");
    validate->add_option("pda", pda_path, "PDA text file")->required();

    int gen_K = 0, gen_t = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen-pda", "generate a Maddah-Ali-Niesen style PDA");
    gen->add_option("K", gen_K, "number of nodes")->required();
    gen->add_option("t", gen_t, "subset size parameter")->required();
    gen->add_option("-o,--output", gen_out, "output file (default: stdout)");

    RunOptions opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--scheme", opt.scheme, "t1 (data shuffling) or t2 (coded computing)");
        cmd->add_option("--pda", opt.pda_path, "PDA text file")->required();
        cmd->add_option("--eta", opt.eta, "number of batches per file group");
        cmd->add_option("--z", opt.z, "field degree (0 = auto)");
        cmd->add_option("--lsym", opt.L_sym, "symbols per file payload");
        cmd->add_flag("--sabotage-zero-keys", opt.sabotage_zero_keys,
                      "degenerate all pad keys to zero (demonstrates leakage)");
        cmd->add_flag("--sabotage-identity-matrix", opt.sabotage_identity_matrix,
                      "replace the sharing matrix with the identity");
    };

    auto* run = app.add_subcommand("run", "execute map/shuffle/reduce and report loads");
    add_common(run);
    run->add_option("--seed", opt.seed, "RNG seed (files, ramp keys, pad keys)");
    run->add_flag("--entropy", opt.entropy, "use OS entropy instead of a seed");
    run->add_option("--matrix", opt.matrix_path, "literal sharing-matrix file (t2)");
    run->add_option("--files", opt.files_path, "binary blob to split into input files");
    run->add_option("--transcript", opt.transcript_path, "write the transcript here");

    uint64_t budget = uint64_t{1} << 22;
    int node = 0;
    auto* audit = app.add_subcommand("audit", "exhaustive information-theoretic audits");
    add_common(audit);
    audit->add_option("--budget", budget, "max enumeration states");
    audit->add_option("--node", node, "audit a single node view (t2, default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(pda_path);
        if (gen->parsed()) return cmd_gen_pda(gen_K, gen_t, gen_out);
        if (run->parsed()) return cmd_run(opt);
        if (audit->parsed()) return cmd_audit(opt, budget, node);
    } catch (const sdc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const sdc::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const sdc::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const sdc::ProtocolError& e) {
        std::cerr << "protocol error: " << e.what() << "\n";
        return kExitProtocol;
    }
    return 0;
}
