"""Independent high-precision fixture generator for the bmtw test suite."""

from .orbit_fixtures import gen_orbit_fixtures
from .specfn_fixtures import gen_specfn_fixtures
from .store import Fixture, FixtureSet

__all__ = ["Fixture", "FixtureSet", "gen_specfn_fixtures", "gen_orbit_fixtures"]


def generate_all() -> FixtureSet:
    fs = gen_specfn_fixtures()
    fs.merge(gen_orbit_fixtures())
    return fs
