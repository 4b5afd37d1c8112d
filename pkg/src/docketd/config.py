"""Deployment configuration, read from the environment.

DOCKETD_PORT            HTTP port (default 8080)
DOCKETD_DATA_DIR        record store directory (default ./data)
DOCKETD_XOR_KEY         hex-encoded name-encryption key; required for any
                        command that touches the store, never sent over the
                        wire and never logged
DOCKETD_SESSION_TTL_MIN idle session expiry in minutes (default 30)
DOCKETD_WEB_ROOT        directory of built frontend assets (optional)
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional

from .crypto import XorKey


class ConfigError(Exception):
    """Missing or malformed environment configuration."""


@dataclass(frozen=True)
class Config:
    port: int
    data_dir: Path
    xor_key_hex: Optional[str]
    session_ttl_min: float
    web_root: Optional[Path]

    def require_key(self) -> XorKey:
        if not self.xor_key_hex:
            raise ConfigError(
                "DOCKETD_XOR_KEY must be set to a hex-encoded key, e.g. "
                "python -c 'import secrets; print(secrets.token_hex(16))'"
            )
        return XorKey.from_hex(self.xor_key_hex)


def from_env(environ: Optional[Mapping[str, str]] = None) -> Config:
    env = os.environ if environ is None else environ
    try:
        port = int(env.get("DOCKETD_PORT", "8080"))
        ttl = float(env.get("DOCKETD_SESSION_TTL_MIN", "30"))
    except ValueError as exc:
        raise ConfigError(f"bad numeric setting: {exc}") from exc
    web_root = env.get("DOCKETD_WEB_ROOT")
    return Config(
        port=port,
        data_dir=Path(env.get("DOCKETD_DATA_DIR", "data")),
        xor_key_hex=env.get("DOCKETD_XOR_KEY"),
        session_ttl_min=ttl,
        web_root=Path(web_root) if web_root else None,
    )
