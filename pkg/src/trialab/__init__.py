"""Binary functions, mu-transforms and minors, alternating dimaps with
triality and reductions, small-map catalogs, and verification suites."""

from . import altmap, binfun, catalog, errors, minor, reductions, represent, transform, verify

__all__ = ["altmap", "binfun", "catalog", "errors", "minor", "reductions",
           "represent", "transform", "verify"]
