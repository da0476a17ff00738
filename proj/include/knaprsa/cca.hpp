#pragma once

#include "knaprsa/pke.hpp"
#include "knaprsa/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace knaprsa {

// IND-CCA2 experiment configuration. With shared_key one keypair
// serves every trial (the experiment-faithful mode); otherwise each
// trial generates its own.
struct GameConfig {
    SystemParams params;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::string adversary = "random-guess";
    bool shared_key = false;
    bool record_trials = false;   // keep per-trial outcomes for CSV export
};

struct GameStats {
    std::size_t trials = 0;
    std::size_t wins = 0;
    std::size_t oracle_queries = 0;     // decryptions actually performed
    std::size_t rejects = 0;            // oracle answers that were reject
    std::size_t challenge_refusals = 0; // queries refused because c == C*
    std::size_t aborts = 0;             // trials lost to malformed messages

    double advantage() const;   // |wins/trials - 1/2|
    double ci95() const;        // binomial 95% half-width on the win rate

    bool operator==(const GameStats&) const = default;
};

struct TrialOutcome {
    std::size_t trial = 0;
    int challenge_bit = 0;
    int guess = 0;
    bool win = false;
    std::size_t queries = 0;
};

// Decryption oracle handed to adversaries. Queries matching the
// challenge ciphertext are refused before any decryption happens.
class DecryptionOracle {
public:
    explicit DecryptionOracle(const PrivateKey& sk) : sk_(&sk) {}

    void set_challenge(const Ciphertext& c) { challenge_ = c; }

    struct Answer {
        bool refused = false;
        DecryptResult result;
    };

    Answer query(const Ciphertext& c);

    std::size_t queries() const { return queries_; }
    std::size_t rejects() const { return rejects_; }
    std::size_t refusals() const { return refusals_; }

private:
    const PrivateKey* sk_;
    std::optional<Ciphertext> challenge_;
    std::size_t queries_ = 0;
    std::size_t rejects_ = 0;
    std::size_t refusals_ = 0;
};

// Two-phase CCA2 adversary.
class Adversary {
public:
    virtual ~Adversary() = default;

    virtual std::pair<BitString, BitString> choose_messages(const PublicKey& pk,
                                                            DecryptionOracle& oracle,
                                                            Rng& rng) = 0;

    virtual int guess(const PublicKey& pk, const Ciphertext& challenge,
                      const BitString& m0, const BitString& m1,
                      DecryptionOracle& oracle, Rng& rng) = 0;
};

// Registered adversaries: "random-guess", "maul-c2".
std::unique_ptr<Adversary> make_adversary(const std::string& name);
bool adversary_registered(const std::string& name);

struct GameResult {
    GameStats stats;
    std::vector<TrialOutcome> outcomes;   // filled when record_trials
};

// Runs the full experiment sequence per trial: adversary picks
// (m0, m1) with oracle access, the challenger encrypts m_b for a fresh
// coin b, phase 2 may query anything except the challenge, win iff the
// guess equals b. Deterministic under a fixed seed.
GameResult run_game(const GameConfig& cfg);

// One tampering probe: pick i uniformly, query (c1*, c2* + a_i). A
// reject leads to a coin flip; a returned plaintext is matched against
// m0/m1 up to a flip of bit i.
int maul_adversary_step(const PublicKey& pk, const Ciphertext& c_star,
                        const BitString& m0, const BitString& m1,
                        DecryptionOracle& oracle, Rng& rng);

// How often c2* + a_i survives (a) the knapsack checksum and (b) full
// decryption. For k <= 12 every (mask, i) pair is enumerated and an
// independent subset-sum search recomputes rate (a); above that the
// rates are sampled.
struct LegitimacyReport {
    SystemParams params;
    std::size_t keys = 0;
    std::size_t samples = 0;            // mauled ciphertexts examined
    double rate_knapsack_pass = 0.0;
    double rate_full_decrypt_pass = 0.0;
    std::optional<double> rate_exhaustive;   // k <= 12 only
    double rate_claimed = 0.0;           // 2^-(k-1)
};

LegitimacyReport measure_legitimacy_rate(const SystemParams& params,
                                         std::size_t trials, std::uint64_t seed);

enum class ProbeCase { case1, case2 };

// Oracle response statistics under the two tampering families from the
// security argument: Case 1 fixes c2* and randomizes c1, Case 2 fixes
// c1* and substitutes fresh valid c2 values.
struct CaseProbeReport {
    ProbeCase which = ProbeCase::case1;
    SystemParams params;
    std::size_t trials = 0;
    std::size_t answered = 0;            // oracle returned a plaintext
    std::size_t rejects = 0;

    // Case 1
    std::size_t mb_collisions = 0;       // output == m_b
    std::size_t ystar_collisions = 0;    // recovered y == y* (impossible)
    double collision_rate = 0.0;         // mb_collisions / answered
    double predicted_rate = 0.0;         // 2^-(n_bits - k)
    double ci95_halfwidth = 0.0;         // score interval at the predicted rate
    bool consistent = false;

    // Case 2
    double bit_agreement_rate = 0.0;     // aggregate agreement with m_b
    double chi_square = 0.0;             // per-bit agreement vs fair coin
    std::vector<double> per_bit_agreement;
};

CaseProbeReport case_probe(ProbeCase which, const SystemParams& params,
                           std::size_t trials, std::uint64_t seed);

// --- report rendering (key=value text, reproducible bytes) ---

std::string render_report(const GameConfig& cfg, const GameStats& stats);
std::string render_report(const LegitimacyReport& rep);
std::string render_report(const CaseProbeReport& rep);
std::string render_csv(const std::vector<TrialOutcome>& outcomes);

} // namespace knaprsa
