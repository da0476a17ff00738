"""Hybrid RSA + disguised 2-adic knapsack cryptosystem.

Thin wrapper around the compiled ``_knaprsa`` extension: key
generation, encryption/decryption, key and ciphertext serialization,
number-theory helpers and the chosen-ciphertext experiment harness.
"""

from ._knaprsa import (  # noqa: F401
    Ciphertext,
    DecryptResult,
    KnaprsaError,
    ParamError,
    ParseError,
    PrivateKey,
    PublicKey,
    case_probe_report,
    decrypt,
    encrypt,
    game_report,
    gen_prime,
    is_probable_prime,
    is_superincreasing,
    keygen,
    legitimacy_report,
    mod_inverse,
    mod_pow,
    parse_ciphertext,
    parse_message,
    parse_private_key,
    parse_public_key,
    serialize_message,
    serialize_private_key,
    serialize_public_key,
)

__all__ = [
    "Ciphertext",
    "DecryptResult",
    "KnaprsaError",
    "ParamError",
    "ParseError",
    "PrivateKey",
    "PublicKey",
    "case_probe_report",
    "decrypt",
    "encrypt",
    "game_report",
    "gen_prime",
    "is_probable_prime",
    "is_superincreasing",
    "keygen",
    "legitimacy_report",
    "mod_inverse",
    "mod_pow",
    "parse_ciphertext",
    "parse_message",
    "parse_private_key",
    "parse_public_key",
    "serialize_message",
    "serialize_private_key",
    "serialize_public_key",
]

__version__ = "0.1.0"
