// Command-line front end: key generation, encryption, decryption, key
// inspection and the chosen-ciphertext experiment runner.
//
// Exit codes: 0 success, 1 I/O failure, 2 usage or parameter error,
// 3 decryption reject.

#include "knaprsa/cca.hpp"
#include "knaprsa/errors.hpp"
#include "knaprsa/pke.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace {

using namespace knaprsa;

struct CliIoError : Error {
    explicit CliIoError(const std::string& msg) : Error(msg) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliIoError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw CliIoError("read failure on " + path);
    }
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw CliIoError("cannot create " + path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw CliIoError("write failure on " + path);
    }
}

std::uint64_t pick_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) {
        return *seed;
    }
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) | rd();
}

struct KeygenOpts {
    std::size_t k = 64;
    std::optional<std::size_t> nbits;
    std::optional<std::size_t> h;
    bool safe = true;
    std::optional<std::uint64_t> seed;
    std::string out_pub = "knaprsa.pub";
    std::string out_priv = "knaprsa.key";
};

int cmd_keygen(const KeygenOpts& opts) {
    SystemParams params;
    params.k = opts.k;
    params.n_bits = opts.nbits.value_or(2 * opts.k);
    params.h = opts.h.value_or(opts.k / 2);
    params.safe_primes = opts.safe;
    params.validate();
    if (opts.out_pub == opts.out_priv) {
        throw ParamError("public and private key paths must differ");
    }

    const std::uint64_t seed = pick_seed(opts.seed);
    SplitMix64Rng rng(seed);
    auto [pk, sk] = keygen(params, rng);

    write_file(opts.out_pub, serialize_key(pk));
    write_file(opts.out_priv, serialize_key(sk));

    std::printf("k=%zu nbits=%zu h=%zu safe=%d seed=%llu\n", params.k, params.n_bits,
                params.h, params.safe_primes ? 1 : 0,
                static_cast<unsigned long long>(seed));
    std::printf("density=%.4f\n", density(pk.knapsack));
    std::printf("wrote %s and %s\n", opts.out_pub.c_str(), opts.out_priv.c_str());
    return 0;
}

struct EncryptOpts {
    std::string pub;
    std::string in;
    std::string out;
    std::optional<std::uint64_t> seed;
    bool pad = false;
};

int cmd_encrypt(const EncryptOpts& opts) {
    if (opts.in == opts.out) {
        throw ParamError("input and output paths must differ");
    }
    const PublicKey pk = parse_public_key(read_file(opts.pub));
    BitString m = parse_message(read_file(opts.in));
    if (m.size() < pk.k() && opts.pad) {
        BitString padded(pk.k() - m.size());
        padded.append(m);
        m = std::move(padded);
    }
    if (m.size() != pk.k()) {
        throw ParamError("message length " + std::to_string(m.size()) +
                         " != k = " + std::to_string(pk.k()) +
                         (opts.pad ? "" : " (use --pad to left-pad shorter messages)"));
    }
    SplitMix64Rng rng(pick_seed(opts.seed));
    write_file(opts.out, serialize_ciphertext(encrypt(pk, m, rng)));
    return 0;
}

struct DecryptOpts {
    std::string priv;
    std::string in;
    std::string out;
};

int cmd_decrypt(const DecryptOpts& opts) {
    if (opts.in == opts.out) {
        throw ParamError("input and output paths must differ");
    }
    const PrivateKey sk = parse_private_key(read_file(opts.priv));
    const Ciphertext c = parse_ciphertext(read_file(opts.in));
    const DecryptResult res = decrypt(sk, c);
    if (!res.ok()) {
        std::printf("REJECT %s\n", std::string(to_string(res.reason)).c_str());
        return 3;
    }
    write_file(opts.out, serialize_message(*res.message));
    return 0;
}

int cmd_inspect(const std::string& path) {
    const std::string text = read_file(path);
    const bool is_private = text.rfind("KNAPRSA PRIVATE", 0) == 0;
    if (is_private) {
        const PrivateKey sk = parse_private_key(text);
        const PublicKey pk = sk.public_key();
        std::printf("type=private\n");
        std::printf("k=%zu nbits=%zu h=%zu\n", sk.k(), sk.n_bits(), sk.h);
        std::printf("density=%.4f\n", density(pk.knapsack));
        std::printf("superincreasing_b=%d\n",
                    is_superincreasing(std::span<const Nat>(sk.knapsack.b)) ? 1 : 0);
    } else {
        const PublicKey pk = parse_public_key(text);
        std::printf("type=public\n");
        std::printf("k=%zu nbits=%zu h=%zu\n", pk.k(), pk.n_bits(), pk.h);
        std::printf("density=%.4f\n", density(pk.knapsack));
        std::printf("superincreasing_a=%d\n",
                    is_superincreasing(std::span<const Nat>(pk.knapsack.a)) ? 1 : 0);
    }
    return 0;
}

struct SimulateOpts {
    std::string adversary;
    std::size_t k = 16;
    std::optional<std::size_t> nbits;
    std::optional<std::size_t> h;
    bool safe = false;
    std::size_t trials = 10000;
    std::optional<std::uint64_t> seed;
    std::string report;
    std::string csv;
    bool shared_key = false;
};

int cmd_simulate(const SimulateOpts& opts) {
    SystemParams params;
    params.k = opts.k;
    params.n_bits = opts.nbits.value_or(2 * opts.k);
    params.h = opts.h.value_or(opts.k / 2);
    params.safe_primes = opts.safe;
    params.validate();

    const std::uint64_t seed = pick_seed(opts.seed);
    std::string report;
    if (opts.adversary == "legitimacy-rate") {
        report = render_report(measure_legitimacy_rate(params, opts.trials, seed));
    } else if (opts.adversary == "case1" || opts.adversary == "case2") {
        const ProbeCase which =
            opts.adversary == "case1" ? ProbeCase::case1 : ProbeCase::case2;
        report = render_report(case_probe(which, params, opts.trials, seed));
    } else if (adversary_registered(opts.adversary)) {
        GameConfig cfg;
        cfg.params = params;
        cfg.trials = opts.trials;
        cfg.seed = seed;
        cfg.adversary = opts.adversary;
        cfg.shared_key = opts.shared_key;
        cfg.record_trials = !opts.csv.empty();
        const GameResult result = run_game(cfg);
        report = render_report(cfg, result.stats);
        if (!opts.csv.empty()) {
            write_file(opts.csv, render_csv(result.outcomes));
        }
    } else {
        throw ParamError("unknown adversary '" + opts.adversary +
                         "' (expected random-guess, maul-c2, case1, case2 or "
                         "legitimacy-rate)");
    }

    std::fputs(report.c_str(), stdout);
    if (!opts.report.empty()) {
        write_file(opts.report, report);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid RSA + disguised 2-adic knapsack public-key tool"};
    app.require_subcommand(1);
    // --h is a domain flag (mask weight), so help is long-form only.
    app.set_help_flag("--help", "Print help");

    KeygenOpts kg;
    CLI::App* keygen_cmd = app.add_subcommand("keygen", "Generate a keypair");
    keygen_cmd->set_help_flag("--help", "Print help");
    keygen_cmd->add_option("--k", kg.k, "Message/knapsack length in bits");
    keygen_cmd->add_option("--nbits", kg.nbits, "RSA modulus bits (default 2k)");
    keygen_cmd->add_option("--h", kg.h, "Mask weight (default k/2)");
    keygen_cmd->add_flag("--safe,!--no-safe", kg.safe, "Use safe primes (default on)");
    keygen_cmd->add_option("--seed", kg.seed, "Deterministic seed");
    keygen_cmd->add_option("--out-pub", kg.out_pub, "Public key output path");
    keygen_cmd->add_option("--out-priv", kg.out_priv, "Private key output path");

    EncryptOpts enc;
    CLI::App* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a message file");
    encrypt_cmd->add_option("--pub", enc.pub, "Public key path")->required();
    encrypt_cmd->add_option("--in", enc.in, "Message file")->required();
    encrypt_cmd->add_option("--out", enc.out, "Ciphertext output path")->required();
    encrypt_cmd->add_option("--seed", enc.seed, "Deterministic seed");
    encrypt_cmd->add_flag("--pad", enc.pad, "Left-pad short messages with zeros");

    DecryptOpts dec;
    CLI::App* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
    decrypt_cmd->add_option("--priv", dec.priv, "Private key path")->required();
    decrypt_cmd->add_option("--in", dec.in, "Ciphertext file")->required();
    decrypt_cmd->add_option("--out", dec.out, "Message output path")->required();

    std::string inspect_path;
    CLI::App* inspect_cmd = app.add_subcommand("inspect", "Print key parameters");
    inspect_cmd->add_option("--key", inspect_path, "Key file path")->required();

    SimulateOpts sim;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Run a chosen-ciphertext experiment");
    simulate_cmd->set_help_flag("--help", "Print help");
    simulate_cmd
        ->add_option("--adversary", sim.adversary,
                     "random-guess | maul-c2 | case1 | case2 | legitimacy-rate")
        ->required();
    simulate_cmd->add_option("--k", sim.k, "Message/knapsack length in bits");
    simulate_cmd->add_option("--nbits", sim.nbits, "RSA modulus bits (default 2k)");
    simulate_cmd->add_option("--h", sim.h, "Mask weight (default k/2)");
    simulate_cmd->add_flag("--safe,!--no-safe", sim.safe,
                           "Use safe primes (default off for experiments)");
    simulate_cmd->add_option("--trials", sim.trials, "Number of trials");
    simulate_cmd->add_option("--seed", sim.seed, "Deterministic seed");
    simulate_cmd->add_option("--report", sim.report, "Report output path");
    simulate_cmd->add_option("--csv", sim.csv, "Per-trial CSV output path");
    simulate_cmd->add_flag("--shared-key", sim.shared_key,
                           "One keypair for all trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*keygen_cmd) {
            return cmd_keygen(kg);
        }
        if (*encrypt_cmd) {
            return cmd_encrypt(enc);
        }
        if (*decrypt_cmd) {
            return cmd_decrypt(dec);
        }
        if (*inspect_cmd) {
            return cmd_inspect(inspect_path);
        }
        if (*simulate_cmd) {
            return cmd_simulate(sim);
        }
    } catch (const CliIoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
