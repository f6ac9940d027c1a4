"""Loader for the committed high-precision fixture file."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class Fixture:
    name: str
    inputs: dict
    value: str
    method: str

    @property
    def float_value(self) -> float:
        return float(self.value)


def load_fixtures(path) -> dict[str, Fixture]:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    out = {}
    for rec in payload["fixtures"]:
        fx = Fixture(rec["name"], rec["inputs"], rec["value"], rec["method"])
        if fx.name in out:
            raise ValueError(f"duplicate fixture {fx.name} in {path}")
        out[fx.name] = fx
    return out
