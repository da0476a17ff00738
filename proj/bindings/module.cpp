#include "knaprsa/cca.hpp"
#include "knaprsa/errors.hpp"
#include "knaprsa/numtheory.hpp"
#include "knaprsa/pke.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace knaprsa;

namespace {

Nat nat_from_py(const py::int_& v) {
    std::string dec = py::cast<std::string>(py::str(static_cast<py::handle>(v)));
    if (!dec.empty() && dec.front() == '-') {
        throw ParamError("negative integers are not representable");
    }
    Nat out;
    if (mpz_set_str(out.get_mpz_t(), dec.c_str(), 10) != 0) {
        throw ParamError("unparseable integer");
    }
    return out;
}

py::int_ nat_to_py(const Nat& v) {
    const std::string hex = to_hex(v);
    PyObject* obj = PyLong_FromString(hex.c_str(), nullptr, 16);
    if (obj == nullptr) {
        throw py::error_already_set();
    }
    return py::reinterpret_steal<py::int_>(obj);
}

SystemParams make_params(std::size_t k, std::size_t n_bits, std::size_t h, bool safe) {
    SystemParams params;
    params.k = k;
    params.n_bits = n_bits;
    params.h = h;
    params.safe_primes = safe;
    params.validate();
    return params;
}

} // namespace

PYBIND11_MODULE(_knaprsa, m) {
    m.doc() = "Hybrid RSA + disguised 2-adic knapsack cryptosystem with a "
              "chosen-ciphertext experiment harness";

    auto base = py::register_exception<Error>(m, "KnaprsaError");
    py::register_exception<ParamError>(m, "ParamError", base);
    py::register_exception<ParseError>(m, "ParseError", base);

    py::class_<PublicKey>(m, "PublicKey")
        .def_property_readonly("k", &PublicKey::k)
        .def_property_readonly("n_bits", &PublicKey::n_bits)
        .def_property_readonly("h", [](const PublicKey& pk) { return pk.h; })
        .def_property_readonly("weights",
                               [](const PublicKey& pk) {
                                   py::list out;
                                   for (const Nat& a : pk.knapsack.a) {
                                       out.append(nat_to_py(a));
                                   }
                                   return out;
                               })
        .def_property_readonly("n", [](const PublicKey& pk) { return nat_to_py(pk.rsa.n); })
        .def_property_readonly("e", [](const PublicKey& pk) { return nat_to_py(pk.rsa.e); })
        .def("density", [](const PublicKey& pk) { return density(pk.knapsack); })
        .def("serialize", [](const PublicKey& pk) { return serialize_key(pk); })
        .def("__repr__", [](const PublicKey& pk) {
            return "<PublicKey k=" + std::to_string(pk.k()) +
                   " n_bits=" + std::to_string(pk.n_bits()) + ">";
        });

    py::class_<PrivateKey>(m, "PrivateKey")
        .def_property_readonly("k", &PrivateKey::k)
        .def_property_readonly("n_bits", &PrivateKey::n_bits)
        .def_property_readonly("h", [](const PrivateKey& sk) { return sk.h; })
        .def("public_key", &PrivateKey::public_key)
        .def("serialize", [](const PrivateKey& sk) { return serialize_key(sk); })
        .def("__repr__", [](const PrivateKey& sk) {
            return "<PrivateKey k=" + std::to_string(sk.k()) +
                   " n_bits=" + std::to_string(sk.n_bits()) + ">";
        });

    py::class_<Ciphertext>(m, "Ciphertext")
        .def(py::init([](const py::int_& c1, const py::int_& c2) {
                 return Ciphertext{nat_from_py(c1), nat_from_py(c2)};
             }),
             py::arg("c1"), py::arg("c2"))
        .def_property_readonly("c1", [](const Ciphertext& c) { return nat_to_py(c.c1); })
        .def_property_readonly("c2", [](const Ciphertext& c) { return nat_to_py(c.c2); })
        .def("serialize", [](const Ciphertext& c) { return serialize_ciphertext(c); })
        .def("__eq__", [](const Ciphertext& a, const Ciphertext& b) { return a == b; })
        .def("__repr__", [](const Ciphertext& c) {
            return "<Ciphertext c1=0x" + to_hex(c.c1) + " c2=0x" + to_hex(c.c2) + ">";
        });

    py::class_<DecryptResult>(m, "DecryptResult")
        .def_property_readonly("ok", &DecryptResult::ok)
        .def_property_readonly("message",
                               [](const DecryptResult& r) -> py::object {
                                   if (!r.ok()) {
                                       return py::none();
                                   }
                                   return py::str(r.message->to_string());
                               })
        .def_property_readonly("reason",
                               [](const DecryptResult& r) {
                                   return std::string(to_string(r.reason));
                               })
        .def("__repr__", [](const DecryptResult& r) {
            return r.ok() ? "<DecryptResult " + r.message->to_string() + ">"
                          : "<DecryptResult REJECT " + std::string(to_string(r.reason)) + ">";
        });

    m.def(
        "keygen",
        [](std::size_t k, std::size_t n_bits, std::size_t h, bool safe_primes,
           std::uint64_t seed) {
            SplitMix64Rng rng(seed);
            return keygen(make_params(k, n_bits, h, safe_primes), rng);
        },
        py::arg("k"), py::arg("n_bits"), py::arg("h"), py::arg("safe_primes"),
        py::arg("seed"));

    m.def(
        "encrypt",
        [](const PublicKey& pk, const std::string& message, std::uint64_t seed) {
            SplitMix64Rng rng(seed);
            return encrypt(pk, BitString::from_string(message), rng);
        },
        py::arg("public_key"), py::arg("message"), py::arg("seed"));

    m.def("decrypt", &decrypt, py::arg("private_key"), py::arg("ciphertext"));

    m.def("serialize_public_key", [](const PublicKey& pk) { return serialize_key(pk); });
    m.def("serialize_private_key", [](const PrivateKey& sk) { return serialize_key(sk); });
    m.def("parse_public_key",
          [](const std::string& text) { return parse_public_key(text); });
    m.def("parse_private_key",
          [](const std::string& text) { return parse_private_key(text); });
    m.def("parse_ciphertext",
          [](const std::string& text) { return parse_ciphertext(text); });
    m.def("serialize_message", [](const std::string& bits) {
        return serialize_message(BitString::from_string(bits));
    });
    m.def("parse_message",
          [](const std::string& text) { return parse_message(text).to_string(); });

    m.def(
        "mod_pow",
        [](const py::int_& b, const py::int_& e, const py::int_& mod) {
            return nat_to_py(mod_pow(nat_from_py(b), nat_from_py(e), nat_from_py(mod)));
        },
        py::arg("base"), py::arg("exp"), py::arg("modulus"));

    m.def(
        "mod_inverse",
        [](const py::int_& a, const py::int_& mod) {
            return nat_to_py(mod_inverse(nat_from_py(a), nat_from_py(mod)));
        },
        py::arg("a"), py::arg("modulus"));

    m.def(
        "is_probable_prime",
        [](const py::int_& n, int rounds) {
            return is_probable_prime(nat_from_py(n), rounds);
        },
        py::arg("n"), py::arg("rounds") = kPrimeTestRounds);

    m.def(
        "gen_prime",
        [](std::size_t bits, bool safe, std::uint64_t seed) {
            SplitMix64Rng rng(seed);
            return nat_to_py(gen_prime(bits, safe, rng));
        },
        py::arg("bits"), py::arg("safe"), py::arg("seed"));

    m.def("is_superincreasing", [](const std::vector<py::int_>& seq) {
        std::vector<Nat> nats;
        nats.reserve(seq.size());
        for (const py::int_& v : seq) {
            nats.push_back(nat_from_py(v));
        }
        return is_superincreasing(std::span<const Nat>(nats));
    });

    m.def(
        "game_report",
        [](const std::string& adversary, std::size_t k, std::size_t n_bits,
           std::size_t h, std::size_t trials, std::uint64_t seed, bool shared_key) {
            GameConfig cfg;
            cfg.params = make_params(k, n_bits, h, false);
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.adversary = adversary;
            cfg.shared_key = shared_key;
            const GameResult result = run_game(cfg);
            return py::make_tuple(render_report(cfg, result.stats),
                                  result.stats.advantage());
        },
        py::arg("adversary"), py::arg("k"), py::arg("n_bits"), py::arg("h"),
        py::arg("trials"), py::arg("seed"), py::arg("shared_key") = false);

    m.def(
        "legitimacy_report",
        [](std::size_t k, std::size_t n_bits, std::size_t h, std::size_t trials,
           std::uint64_t seed) {
            return render_report(
                measure_legitimacy_rate(make_params(k, n_bits, h, false), trials, seed));
        },
        py::arg("k"), py::arg("n_bits"), py::arg("h"), py::arg("trials"),
        py::arg("seed"));

    m.def(
        "case_probe_report",
        [](int which, std::size_t k, std::size_t n_bits, std::size_t h,
           std::size_t trials, std::uint64_t seed) {
            if (which != 1 && which != 2) {
                throw ParamError("probe case must be 1 or 2");
            }
            return render_report(
                case_probe(which == 1 ? ProbeCase::case1 : ProbeCase::case2,
                           make_params(k, n_bits, h, false), trials, seed));
        },
        py::arg("which"), py::arg("k"), py::arg("n_bits"), py::arg("h"),
        py::arg("trials"), py::arg("seed"));
}
