"""Odd spanning trees and connected odd factors.

Decide existence, construct witnesses, and verify them: exact criteria for
split graphs and complements of triangle-free graphs, a minimum-degree
greedy construction, spanning-tree packing with partition certificates,
parity repair for connected odd factors, and brute-force oracles that
cross-check all of it at small scale.
"""

from __future__ import annotations

__version__ = "0.1.0"
