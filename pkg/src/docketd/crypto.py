"""Field-level XOR encryption, salted password digests, and public name masking.

Party names are stored XOR-encrypted (repeating key, lowercase hex) and shown
to the public only in masked form. The repeating-key XOR is a faithful
reproduction of the office's stated design and carries no claim of
cryptographic strength. Passwords never touch disk: only a salted PBKDF2
digest of fixed encoded length is stored.
"""

from __future__ import annotations

import hashlib
import hmac
import secrets
from dataclasses import dataclass


class CryptoError(Exception):
    """Base class for failures in this module."""


class EmptyKey(CryptoError):
    """XOR key has no bytes."""


class MalformedHex(CryptoError):
    """Ciphertext is not even-length lowercase hex."""


class PasswordTooShort(CryptoError):
    """Password is shorter than the minimum length."""


class MalformedDigest(CryptoError):
    """Stored password digest does not parse."""


class EmptyName(CryptoError):
    """Name to mask is empty or whitespace."""


# Ciphertext is plain lowercase hex so it can live in any text field.
CipherText = str
PasswordDigest = str

MIN_PASSWORD_LENGTH = 8
PBKDF2_ITERATIONS = 48_000
_SALT_BYTES = 16
_DIGEST_TAG = "pbkdf2-sha256"

# Tag, iteration count, salt hex and digest hex joined by "$". The iteration
# count is a build-time constant, so every encoding has this exact length.
ENCODED_DIGEST_LENGTH = (
    len(_DIGEST_TAG) + 1 + len(str(PBKDF2_ITERATIONS)) + 1 + _SALT_BYTES * 2 + 1 + 64
)

_HEX_DIGITS = frozenset("0123456789abcdef")


@dataclass(frozen=True)
class XorKey:
    """Repeating XOR key. Material must never reach the record store or logs."""

    material: bytes

    def __post_init__(self) -> None:
        if len(self.material) == 0:
            raise EmptyKey("XOR key must contain at least one byte")

    def __repr__(self) -> str:  # keep key material out of tracebacks and logs
        return f"XorKey(<{len(self.material)} bytes>)"

    @classmethod
    def from_hex(cls, text: str) -> "XorKey":
        try:
            material = bytes.fromhex(text)
        except ValueError as exc:
            raise MalformedHex(f"key is not valid hex: {exc}") from exc
        return cls(material)


def xor_transform(data: bytes, key: XorKey) -> bytes:
    """XOR byte i of the input with key byte (i mod key length).

    The transform is its own inverse: applying it twice with the same key
    returns the original bytes.
    """
    if not data:
        return b""
    material = key.material
    repeated = (material * (len(data) // len(material) + 1))[: len(data)]
    mixed = int.from_bytes(data, "big") ^ int.from_bytes(repeated, "big")
    return mixed.to_bytes(len(data), "big")


def encrypt_name(name: str, key: XorKey) -> CipherText:
    """Encrypt a UTF-8 name to lowercase hex ciphertext."""
    return xor_transform(name.encode("utf-8"), key).hex()


def decrypt_name(ciphertext: CipherText, key: XorKey) -> str:
    """Invert encrypt_name. Raises MalformedHex on odd-length or non-hex input."""
    if len(ciphertext) % 2 != 0 or not _HEX_DIGITS.issuperset(ciphertext):
        raise MalformedHex("ciphertext must be even-length lowercase hex")
    return xor_transform(bytes.fromhex(ciphertext), key).decode("utf-8")


def hash_password(password: str) -> PasswordDigest:
    """Digest a password with a fresh random salt.

    Two digests of the same password differ (salt freshness), but every
    encoding has length ENCODED_DIGEST_LENGTH.
    """
    if len(password) < MIN_PASSWORD_LENGTH:
        raise PasswordTooShort(
            f"password must be at least {MIN_PASSWORD_LENGTH} characters"
        )
    salt = secrets.token_bytes(_SALT_BYTES)
    derived = hashlib.pbkdf2_hmac(
        "sha256", password.encode("utf-8"), salt, PBKDF2_ITERATIONS
    )
    return f"{_DIGEST_TAG}${PBKDF2_ITERATIONS}${salt.hex()}${derived.hex()}"


def _parse_digest(digest: PasswordDigest) -> tuple[int, bytes, bytes]:
    parts = digest.split("$")
    if len(parts) != 4 or parts[0] != _DIGEST_TAG:
        raise MalformedDigest("unrecognized digest layout")
    tag, iterations, salt_hex, derived_hex = parts
    if len(salt_hex) != _SALT_BYTES * 2 or len(derived_hex) != 64:
        raise MalformedDigest("salt or digest field has the wrong length")
    try:
        return int(iterations), bytes.fromhex(salt_hex), bytes.fromhex(derived_hex)
    except ValueError as exc:
        raise MalformedDigest(f"digest fields are not hex: {exc}") from exc


def verify_password(password: str, digest: PasswordDigest) -> bool:
    """True iff password is the one originally digested. Constant-time compare."""
    iterations, salt, expected = _parse_digest(digest)
    candidate = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt, iterations)
    return hmac.compare_digest(candidate, expected)


def mask_name(name: str) -> str:
    """Keep the first character of each word, star out the rest.

    "Juan Dela Cruz" becomes "J*** D*** C***"; single-character words pass
    through unchanged. Inter-word whitespace collapses to single spaces.
    """
    words = name.split()
    if not words:
        raise EmptyName("cannot mask an empty name")
    return " ".join(word[0] + "*" * (len(word) - 1) for word in words)
