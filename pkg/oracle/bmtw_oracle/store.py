"""Fixture records and deterministic JSON serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass
class Fixture:
    name: str
    inputs: dict
    value: str
    method: str


class FixtureSet:
    """Named high-precision values, written as deterministic sorted JSON."""

    def __init__(self):
        self._by_name: dict[str, Fixture] = {}

    def add(self, name: str, inputs: dict, value, method: str, digits: int = 32):
        import mpmath

        if name in self._by_name:
            raise ValueError(f"duplicate fixture name: {name}")
        if isinstance(value, str):
            text = value
        else:
            text = mpmath.nstr(value, digits, strip_zeros=False)
        self._by_name[name] = Fixture(name, dict(inputs), text, method)

    def merge(self, other: "FixtureSet"):
        for fx in other._by_name.values():
            self.add(fx.name, fx.inputs, fx.value, fx.method)

    def names(self):
        return sorted(self._by_name)

    def to_json(self) -> str:
        records = [
            {
                "name": fx.name,
                "inputs": fx.inputs,
                "value": fx.value,
                "method": fx.method,
            }
            for _, fx in sorted(self._by_name.items())
        ]
        return json.dumps({"fixtures": records}, indent=1, sort_keys=True) + "\n"

    def write(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())
