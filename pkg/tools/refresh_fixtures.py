#!/usr/bin/env python3
"""Regenerate src/whsl/data/published_cases.jsonl.

The PRINTED table below is a faithful transcription of the published
case lists for a-invariant 1..6: case label, type (a,b,c;h), genus, the
divisor's integral-part degree and branch pairs (p,q), and any class
annotations, exactly as printed (obvious punctuation fixes are noted in
REMARKS).  Some printed lines are internally inconsistent (degree
arithmetic fails) or carry types whose stated invariants do not match;
MANUAL_RESOLUTIONS supplies the forced correction for those, and this
script verifies every resolution against the enumerator before freezing
statuses into the fixture file.

Run from the repository root:  python tools/refresh_fixtures.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from whsl import FractionalDivisor, WeightedType, classify

# case, type, genus, degE, branches, notes
PRINTED = [
    # ---- a(R) = 1: D is written K_X + sum ((q-1)/q) P_i, so degE = 2g-2
    ("1-A-1", (1, 1, 1, 4), 3, 4, [], ["D = K_X"]),
    ("1-A-2", (1, 1, 3, 6), 2, 2, [], ["D = K_X"]),
    ("1-A-3", (1, 1, 2, 5), 2, 2, [(1, 2)], []),
    ("1-A-4", (1, 2, 2, 6), 1, 0, [(1, 2)] * 3, []),
    ("1-A-5", (1, 2, 4, 8), 1, 0, [(1, 2)] * 2, []),
    ("1-A-6", (1, 2, 3, 7), 1, 0, [(1, 2), (2, 3)], []),
    ("1-A-7", (1, 4, 6, 12), 1, 0, [(1, 2)], []),
    ("1-A-8", (1, 3, 5, 10), 1, 0, [(2, 3)], []),
    ("1-A-9", (1, 3, 4, 9), 1, 0, [(3, 4)], []),
    ("1-B-1", (2, 2, 5, 10), 0, -2, [(1, 2)] * 5, []),
    ("1-B-2", (2, 2, 3, 8), 0, -2, [(1, 2)] * 4 + [(2, 3)], []),
    ("1-B-3", (2, 3, 3, 9), 0, -2, [(1, 2)] + [(2, 3)] * 3, []),
    ("1-B-4", (2, 3, 6, 12), 0, -2, [(1, 2)] * 2 + [(2, 3)] * 2, []),
    ("1-B-5", (2, 3, 4, 10), 0, -2, [(1, 2), (1, 2), (2, 3), (3, 4)], []),
    ("1-B-6", (2, 4, 5, 12), 0, -2, [(1, 2)] * 3 + [(4, 5)], []),
    ("1-B-7", (2, 4, 7, 14), 0, -2, [(1, 2)] * 3 + [(3, 4)], []),
    ("1-B-8", (2, 6, 9, 18), 0, -2, [(1, 2)] * 3 + [(2, 3)], []),
    ("1-C-1", (3, 4, 4, 12), 0, -2, [(3, 4)] * 3, []),
    ("1-C-2", (3, 4, 5, 13), 0, -2, [(2, 3), (3, 4), (4, 5)], []),
    ("1-C-3", (3, 4, 8, 16), 0, -2, [(2, 3), (3, 4), (3, 4)], []),
    ("1-C-4", (3, 5, 6, 15), 0, -2, [(2, 3), (2, 3), (5, 6)], []),
    ("1-C-5", (3, 5, 9, 18), 0, -2, [(2, 3), (2, 3), (4, 5)], []),
    ("1-C-6", (3, 8, 12, 24), 0, -2, [(2, 3), (2, 3), (3, 4)], []),
    ("1-C-7", (6, 14, 21, 42), 0, -2, [(1, 2), (2, 3), (6, 7)], []),
    ("1-C-8", (6, 8, 15, 30), 0, -2, [(1, 2), (2, 3), (7, 8)], []),
    ("1-C-9", (6, 8, 9, 24), 0, -2, [(1, 2), (2, 3), (8, 9)], []),
    ("1-C-10", (4, 5, 6, 16), 0, -2, [(1, 2), (4, 5), (5, 6)], []),
    ("1-C-11", (4, 5, 10, 20), 0, -2, [(1, 2), (4, 5), (4, 5)], []),
    ("1-C-12", (4, 10, 15, 30), 0, -2, [(1, 2), (3, 4), (4, 5)], []),
    ("1-C-13", (4, 6, 11, 22), 0, -2, [(1, 2), (3, 4), (5, 6)], []),
    ("1-C-14", (4, 6, 7, 18), 0, -2, [(1, 2), (3, 4), (6, 7)], []),
    # ---- a(R) = 2
    ("2-A-1", (1, 1, 1, 5), 6, 5, [], ["2E ~ K_X"]),
    ("2-A-2", (1, 1, 2, 6), 4, 3, [], ["2E ~ K_X"]),
    ("2-A-3", (1, 1, 3, 7), 3, 2, [(1, 3)], ["2E ~ K_X"]),
    ("2-A-4", (1, 1, 4, 8), 3, 2, [], ["2E ~ K_X"]),
    ("2-B-1", (1, 2, 3, 8), 2, 1, [(1, 3)], ["2E ~ K_X"]),
    ("2-B-2", (1, 2, 5, 10), 2, 1, [], ["2E ~ K_X"]),
    ("2-B-3", (1, 3, 3, 9), 1, 0, [(1, 3)] * 3, []),
    ("2-B-4", (1, 3, 5, 11), 1, 0, [(1, 3), (2, 5)], []),
    ("2-B-5", (1, 3, 6, 12), 1, 0, [(1, 3)] * 2, []),
    ("2-B-6", (1, 5, 7, 15), 1, 0, [(3, 7)], []),
    ("2-B-7", (1, 5, 8, 16), 1, 0, [(2, 5)], []),
    ("2-B-8", (1, 6, 9, 18), 1, 0, [(1, 3)], []),
    ("2-C-1", (2, 3, 7, 14), 1, 0, [(1, 3)], ["E != 0", "2E ~ 0"]),
    ("2-C-2", (2, 3, 5, 12), 1, 0, [(2, 5)], ["E != 0", "2E ~ 0"]),
    ("2-C-3", (3, 3, 4, 12), 0, -1, [(1, 3)] * 4, []),
    ("2-C-4", (3, 5, 5, 15), 0, -1, [(2, 5)] * 3, []),
    ("2-C-5", (3, 5, 7, 17), 0, -1, [(1, 3), (2, 5), (3, 7)], []),
    ("2-C-6", (3, 5, 10, 20), 0, -1, [(1, 3), (2, 5), (2, 5)], []),
    ("2-C-7", (3, 7, 9, 21), 0, -1, [(1, 3), (1, 3), (4, 9)], []),
    ("2-C-8", (3, 7, 12, 24), 0, -1, [(1, 3), (1, 3), (3, 7)], []),
    ("2-C-9", (3, 10, 15, 30), 0, -1, [(1, 3), (1, 3), (2, 5)], []),
    # ---- a(R) = 3
    ("3-A-1", (1, 1, 1, 4), 10, 6, [], ["3E ~ K_X", "not hyperelliptic"]),
    ("3-A-2", (1, 1, 2, 7), 6, 3, [(1, 2)], ["3E + Q ~ K_X"]),
    ("3-A-3", (1, 1, 4, 9), 4, 2, [(1, 4)], ["3E ~ K_X"]),
    ("3-A-4", (1, 1, 5, 10), 4, 2, [], ["3E ~ K_X"]),
    ("3-B-1", (1, 2, 2, 8), 3, 0, [(1, 2)] * 4, ["Q_1+..+Q_4 ~ K_X"]),
    ("3-B-2", (1, 2, 3, 9), 3, 1, [(1, 2)], ["3E + Q ~ K_X"]),
    ("3-B-3", (1, 2, 4, 10), 2, 0, [(1, 4), (1, 2), (1, 2)], ["Q_1+Q_2 ~ K_X"]),
    ("3-B-4", (1, 2, 5, 11), 2, 0, [(3, 5), (1, 2)], ["Q_1+Q_2 ~ K_X"]),
    ("3-B-5", (1, 2, 6, 12), 2, 0, [(1, 2)] * 2, ["Q_1+Q_2 ~ K_X"]),
    ("3-B-6", (1, 4, 4, 12), 1, 0, [(1, 4)] * 3, []),
    ("3-B-7", (1, 4, 7, 15), 1, 0, [(1, 4), (2, 7)], []),
    ("3-B-8", (1, 4, 8, 16), 1, 0, [(1, 4)] * 2, []),
    ("3-B-9", (1, 8, 12, 24), 1, 0, [(1, 4)], []),
    ("3-B-10", (1, 7, 11, 22), 1, 0, [(2, 7)], []),
    ("3-B-11", (1, 7, 10, 21), 1, 0, [(3, 10)], []),
    ("3-C-1", (3, 4, 5, 15), 1, 0, [(1, 4)], ["3E ~ 0", "E !~ 0"]),
    ("3-C-2", (2, 3, 4, 12), 1, -1, [(1, 2)] * 3, ["3E + P_1+P_2+P_3 ~ 0"]),
    ("3-C-3", (2, 2, 5, 12), 0, -3, [(1, 2)] * 6 + [(3, 5)], []),
    ("3-C-4", (2, 2, 7, 14), 0, -3, [(1, 2)] * 7, []),
    ("3-C-5", (2, 4, 5, 14), 0, -2, [(1, 4), (3, 5)] + [(1, 2)] * 3, []),
    ("3-C-6", (2, 4, 7, 16), 0, -2, [(2, 7)] + [(1, 2)] * 4, []),
    ("3-C-7", (2, 4, 9, 18), 0, -2, [(1, 4)] + [(1, 2)] * 4, []),
    ("3-C-8", (2, 5, 5, 15), 0, -2, [(1, 2)] + [(3, 5)] * 3, []),
    ("3-C-9", (2, 5, 8, 18), 0, -2, [(5, 8), (3, 5), (1, 2), (1, 2)], []),
    ("3-C-10", (2, 5, 10, 20), 0, -2, [(3, 5), (3, 5), (1, 2), (1, 2)], []),
    ("3-C-11", (2, 8, 11, 24), 0, -2, [(7, 11)] + [(1, 2)] * 3, []),
    ("3-C-12", (2, 8, 13, 26), 0, -2, [(5, 8)] + [(1, 2)] * 3, []),
    ("3-C-13", (2, 10, 15, 30), 0, -2, [(3, 5)] + [(1, 2)] * 3, []),
    ("3-C-14", (4, 5, 7, 19), 0, -1, [(3, 5), (2, 7), (1, 4)], []),
    ("3-C-15", (4, 5, 8, 20), 0, -1, [(5, 8), (1, 4), (1, 4)], []),
    ("3-C-16", (4, 5, 12, 24), 0, -1, [(3, 5), (1, 4), (1, 4)], []),
    ("3-C-17", (4, 7, 10, 24), 0, -1, [(1, 2), (2, 7), (3, 10)], []),
    ("3-C-18", (4, 7, 14, 28), 0, -1, [(1, 2), (2, 7), (2, 7)], []),
    ("3-C-19", (4, 10, 17, 34), 0, -1, [(1, 2), (1, 4), (3, 10)], []),
    ("3-C-20", (4, 14, 21, 42), 0, -1, [(1, 2), (1, 4), (2, 7)], []),
    # ---- a(R) = 4
    ("4-A-1", (1, 1, 1, 4), 15, 6, [], ["3E ~ K_X", "not hyperelliptic"]),
    ("4-A-2", (1, 1, 2, 8), 9, 4, [], ["4E ~ K_X"]),
    ("4-A-3", (1, 1, 3, 9), 7, 3, [], ["3E ~ K_X"]),
    ("4-A-4", (1, 1, 4, 10), 5, 2, [(1, 5)], ["4E ~ K_X"]),
    ("4-A-5", (1, 1, 6, 12), 5, 2, [], ["4D ~ K_X", "hyperelliptic"]),
    ("4-B-1", (1, 2, 3, 10), 4, 1, [(2, 3)], ["4E + 2Q ~ K_X"]),
    ("4-B-2", (1, 2, 5, 12), 3, 1, [(1, 5)], ["4E ~ K_X"]),
    ("4-B-3", (1, 2, 7, 14), 3, 1, [], ["4E ~ K_X", "hyperelliptic"]),
    ("4-B-4", (1, 3, 4, 12), 3, 1, [], ["4E ~ K_X"]),
    ("4-B-5", (1, 3, 5, 13), 2, 0, [(1, 5), (2, 3)], ["2Q ~ K_X"]),
    ("4-B-6", (1, 3, 7, 15), 2, 0, [(5, 7)], ["2Q ~ K_X"]),
    ("4-B-7", (1, 3, 8, 16), 2, 0, [(2, 3)], ["2Q ~ K_X"]),
    ("4-B-8", (1, 5, 5, 15), 1, 0, [(1, 5)] * 3, []),
    ("4-B-9", (1, 5, 9, 19), 1, 0, [(1, 5), (2, 9)], []),
    ("4-B-10", (1, 5, 10, 20), 1, 0, [(1, 5)] * 2, []),
    ("4-B-11", (1, 10, 15, 30), 1, 0, [(1, 5)], []),
    ("4-B-12", (1, 9, 14, 28), 1, 0, [(2, 9)], []),
    ("4-B-13", (1, 9, 13, 27), 1, 0, [(3, 13)], []),
    ("4-C-1", (2, 3, 3, 12), 1, -2, [(2, 3)] * 4, ["-2E ~ P_1+..+P_4"]),
    ("4-C-2", (2, 3, 7, 16), 1, -1, [(2, 3), (5, 7)], ["-2E ~ P_1+P_2"]),
    ("4-C-3", (2, 5, 9, 20), 1, 0, [(2, 9)], ["E != 0", "2E ~ 0"]),
    ("4-C-4", (3, 3, 5, 15), 0, -3, [(2, 3)] * 5, []),
    ("4-C-5", (3, 5, 6, 18), 0, -2, [(2, 3)] * 3 + [(1, 5)], []),
    ("4-C-6", (3, 7, 7, 21), 0, -2, [(5, 7)] * 3, []),
    ("4-C-7", (3, 7, 14, 28), 0, -2, [(2, 3), (5, 7), (5, 7)], []),
    ("4-C-8", (3, 7, 11, 25), 0, -2, [(2, 3), (5, 7), (8, 11)], []),
    ("4-C-9", (3, 11, 15, 33), 0, -2, [(2, 3), (2, 3), (11, 15)], []),
    ("4-C-10", (3, 11, 18, 36), 0, -2, [(2, 3), (2, 3), (8, 11)], []),
    ("4-C-11", (3, 14, 21, 42), 0, -2, [(2, 3), (2, 3), (5, 7)], []),
    ("4-C-12", (5, 6, 15, 30), 0, -1, [(2, 3), (1, 5), (1, 5)], []),
    # ---- a(R) = 5
    ("5-A-1", (1, 1, 1, 8), 21, 8, [], ["5E ~ K_X"]),
    ("5-A-2", (1, 1, 2, 9), 12, 4, [(1, 2)], ["5E + 2P ~ K_X"]),
    ("5-A-3", (1, 1, 3, 10), 9, 3, [(1, 3)], ["5E + P ~ K_X"]),
    ("5-A-4", (1, 1, 6, 13), 6, 2, [(1, 6)], ["5E ~ K_X"]),
    ("5-A-5", (1, 1, 7, 14), 6, 2, [], ["5E ~ K_X"]),
    ("5-B-1", (1, 2, 2, 10), 6, 0, [(1, 2)] * 5, ["2(P_1+..+P_5) ~ K_X"]),
    ("5-B-2", (1, 2, 3, 11), 5, 4, [(1, 2)], ["5E + 2P ~ K_X"]),
    ("5-B-3", (1, 2, 4, 12), 4, 0, [(1, 2)] * 3, ["2(P_1+P_2+P_3) ~ K_X"]),
    ("5-B-4", (1, 2, 6, 14), 3, 0, [(1, 2), (1, 3), (1, 3)], ["2P_1+P_2+P_3 ~ K_X"]),
    ("5-B-5", (1, 2, 7, 15), 3, 0, [(1, 2), (4, 7)], ["2(P_1+P_2) ~ K_X"]),
    ("5-B-6", (1, 2, 8, 16), 3, 0, [(1, 2)] * 2, ["2(P_1+P_2) ~ K_X"]),
    ("5-B-7", (1, 3, 3, 12), 3, 0, [(1, 3)] * 4, ["P_1+..+P_4 ~ K_X"]),
    ("5-B-8", (1, 3, 4, 13), 3, 0, [(1, 3), (3, 4)], ["P_1 + 3P_2 ~ K_X"]),
    ("5-B-9", (1, 3, 6, 15), 2, 0, [(1, 3), (1, 3), (1, 6)], ["P_1+P_2 ~ K_X"]),
    ("5-B-10", (1, 3, 9, 18), 2, 0, [(1, 3)] * 2, ["P_1+P_2 ~ K_X"]),
    ("5-B-11", (1, 4, 6, 16), 2, 0, [(1, 2), (1, 6)], ["2P_1 ~ K_X"]),
    ("5-B-12", (1, 4, 10, 20), 2, 0, [(1, 2)], ["2P ~ K_X"]),
    ("5-B-13", (1, 6, 6, 18), 1, 0, [(1, 6)] * 3, []),
    ("5-B-14", (1, 6, 12, 24), 1, 0, [(1, 6)] * 2, []),
    ("5-B-15", (1, 11, 17, 34), 1, 0, [(2, 11)], []),
    ("5-B-16", (1, 11, 16, 33), 1, 0, [(3, 16)], []),
    ("5-B-17", (1, 12, 18, 36), 1, 0, [(1, 6)], []),
    ("5-C-1", (2, 2, 3, 12), 2, 0, [(1, 2)] * 2, ["E != 0", "2E + P_1+P_2 ~ K_X"]),
    ("5-C-2", (2, 3, 5, 15), 2, 0, [(1, 6)], []),
    ("5-C-3", (2, 3, 7, 17), 1, -1, [(1, 2), (1, 2), (1, 3)], ["2E+P_1+P_2 ~ E+P_3 ~ 0"]),
    ("5-C-4", (2, 3, 8, 18), 1, 0, [(3, 8)], ["2E ~ 0", "5E + P ~ 0"]),
    ("5-C-5", (2, 3, 10, 20), 1, 0, [(1, 3)], ["2E ~ 0", "5E + P ~ 0"]),
    ("5-C-6", (2, 2, 7, 16), 0, -4, [(1, 2)] * 8 + [(4, 7)], []),
    ("5-C-7", (2, 2, 9, 18), 0, -4, [(1, 2)] * 9, []),
    ("5-C-8", (2, 4, 7, 18), 0, -3, [(1, 2)] * 4 + [(4, 7), (3, 4)], []),
    ("5-C-9", (2, 4, 9, 20), 0, -3, [(1, 2)] * 5 + [(7, 9)], []),
    ("5-C-10", (2, 4, 11, 22), 0, -3, [(1, 2)] * 5 + [(3, 4)], []),
    ("5-C-11", (2, 6, 7, 20), 0, -2, [(1, 2)] * 3 + [(4, 7), (1, 6)], []),
    ("5-C-12", (2, 6, 11, 24), 0, -2, [(1, 2)] * 4 + [(2, 11)], []),
    ("5-C-13", (2, 6, 13, 26), 0, -2, [(1, 2)] * 4 + [(1, 6)], []),
    ("5-C-14", (2, 7, 7, 21), 0, -2, [(1, 2)] + [(4, 7)] * 3, []),
    ("5-C-15", (2, 7, 14, 28), 0, -2, [(1, 2), (1, 2), (4, 7), (4, 7)], []),
    ("5-C-16", (2, 7, 14, 28), 0, -2, [(1, 2), (1, 2), (4, 7), (4, 7)], []),
    ("5-C-17", (2, 12, 17, 36), 0, -2, [(1, 2)] * 3 + [(10, 17)], []),
    ("5-C-18", (2, 12, 19, 38), 0, -2, [(1, 2)] * 3 + [(7, 12)], []),
    ("5-C-19", (2, 14, 21, 42), 0, -2, [(1, 2)] * 3 + [(4, 7)], []),
    ("5-C-20", (3, 3, 4, 15), 0, -2, [(1, 3)] * 5 + [(3, 4)], []),
    ("5-C-21", (3, 4, 4, 16), 0, -3, [(3, 4)] * 4 + [(1, 3)], []),
    ("5-C-22", (3, 4, 8, 20), 0, -2, [(1, 3), (3, 4), (3, 4), (3, 8)], []),
    ("5-C-23", (3, 4, 9, 21), 0, -2, [(1, 3), (1, 3), (3, 4), (7, 9)], []),
    ("5-C-24", (3, 4, 12, 24), 0, -2, [(1, 3), (1, 3), (3, 4), (3, 4)], []),
    ("5-C-25", (3, 6, 7, 21), 0, -1, [(1, 3)] * 3 + [(1, 6)], []),
    ("5-C-26", (3, 8, 8, 24), 0, -1, [(3, 8)] * 3, []),
    ("5-C-27", (3, 8, 13, 29), 0, -1, [(1, 3), (3, 8), (5, 13)], []),
    ("5-C-28", (3, 8, 16, 32), 0, -1, [(1, 3), (3, 8), (3, 8)], []),
    ("5-C-29", (3, 13, 18, 39), 0, -1, [(1, 3), (1, 3), (7, 18)], []),
    ("5-C-30", (3, 13, 21, 42), 0, -1, [(1, 3), (1, 3), (5, 13)], []),
    ("5-C-31", (3, 16, 24, 48), 0, -1, [(1, 3), (1, 3), (3, 8)], []),
    ("5-C-32", (4, 6, 9, 24), 0, -2, [(1, 2), (1, 2), (1, 3), (7, 9)], []),
    ("5-C-33", (4, 6, 15, 30), 0, -2, [(1, 2), (1, 2), (1, 3), (3, 4)], []),
    ("5-C-34", (4, 9, 14, 32), 0, -2, [(1, 2), (7, 9), (11, 14)], []),
    ("5-C-35", (4, 9, 18, 36), 0, -2, [(1, 2), (7, 9), (7, 9)], []),
    ("5-C-36", (4, 18, 27, 54), 0, -2, [(1, 2), (3, 4), (7, 9)], []),
    ("5-C-37", (4, 14, 23, 46), 0, -2, [(1, 2), (3, 4), (11, 14)], []),
    ("5-C-38", (4, 14, 19, 42), 0, -2, [(1, 2), (3, 4), (15, 19)], []),
    ("5-C-39", (6, 7, 9, 27), 0, -1, [(1, 3), (1, 6), (4, 7)], []),
    ("5-C-40", (6, 8, 11, 30), 0, -1, [(1, 2), (3, 8), (2, 11)], []),
    ("5-C-41", (6, 8, 13, 32), 0, -1, [(1, 2), (1, 6), (5, 13)], []),
    ("5-C-42", (6, 22, 33, 66), 0, -1, [(1, 2), (1, 3), (2, 11)], []),
    ("5-C-43", (6, 16, 27, 54), 0, -1, [(1, 2), (1, 3), (3, 16)], []),
    ("5-C-44", (6, 16, 21, 48), 0, -1, [(1, 2), (1, 3), (4, 21)], []),
    # ---- a(R) = 6
    ("6-A-1", (1, 1, 1, 9), 28, 9, [], ["6E ~ K_X", "not hyperelliptic"]),
    ("6-A-2", (1, 1, 2, 10), 16, 5, [], ["6E ~ K_X", "not hyperelliptic"]),
    ("6-A-3", (1, 1, 4, 12), 10, 3, [], ["6E ~ K_X"]),
    ("6-A-4", (1, 1, 7, 15), 7, 2, [(1, 7)], ["6E ~ K_X"]),
    ("6-A-5", (1, 1, 8, 16), 7, 2, [], ["6E ~ K_X"]),
    ("6-B-1", (1, 2, 3, 12), 7, 2, [], ["6E ~ K_X"]),
    ("6-B-2", (1, 2, 7, 16), 4, 1, [(1, 7)], ["6E ~ K_X"]),
    ("6-B-3", (1, 2, 9, 18), 4, 1, [], ["6E ~ K_X", "hyperelliptic"]),
    ("6-B-4", (1, 3, 5, 15), 4, 1, [], ["6E ~ K_X"]),
    ("6-B-5", (1, 4, 5, 16), 3, 0, [(4, 5)], ["4P ~ K_X"]),
    ("6-B-6a", (1, 7, 7, 21), 1, 0, [(1, 7)] * 3, []),
    ("6-B-7a", (1, 7, 7, 21), 1, 0, [(1, 7)] * 3, []),
    ("6-B-6b", (1, 7, 14, 28), 1, 0, [(1, 7)] * 2, []),
    ("6-B-7b", (1, 7, 13, 27), 1, 0, [(1, 7), (2, 13)], []),
    ("6-B-8", (1, 13, 19, 39), 1, 0, [(3, 19)], []),
    ("6-B-9", (1, 13, 20, 40), 1, 0, [(2, 13)], []),
    ("6-B-10", (1, 14, 21, 42), 1, 0, [(1, 7)], []),
    ("6-C-1", (2, 7, 15, 30), 1, 0, [(1, 7)], ["E != 0", "2E ~ 0"]),
    ("6-C-2", (2, 7, 13, 28), 1, 0, [(2, 13)], ["E != 0", "2E ~ 0"]),
    ("6-C-3", (3, 7, 8, 24), 1, 0, [(1, 7)], ["E != 0", "3E ~ 0"]),
    ("6-C-4", (4, 5, 5, 20), 0, -3, [(4, 5)] * 4, []),
]

# Printed lines whose own arithmetic fails; values here are the forced
# corrections (checked against the enumerator below).
MANUAL_RESOLUTIONS = {
    "3-A-1": {"type": (1, 1, 1, 6)},
    "4-A-1": {"type": (1, 1, 1, 7), "degE": 7},
    "4-A-4": {"type": (1, 1, 5, 11)},
    "5-B-2": {"degE": 1, "branches": [(1, 2), (1, 3)]},
    "5-B-4": {"branches": [(1, 2), (1, 2), (1, 6)]},
    "5-C-1": {"degE": -2, "branches": [(1, 2)] * 6},
    "5-C-2": {"branches": [(1, 2)]},
    "5-C-3": {"branches": [(1, 2), (1, 3), (4, 7)]},
    "5-C-4": {"degE": -1, "branches": [(1, 2), (1, 2), (3, 8)]},
    "5-C-5": {"degE": -1, "branches": [(1, 2), (1, 2), (1, 3)]},
}

REMARKS = {
    "3-A-1": "printed type (1,1,1;4) has a-invariant 1, not 3; a=b=c=1 with h=a+b+c+3 forces (1,1,1;6)",
    "3-C-19": "printed as (4,10.17;34); read as (4,10,17;34)",
    "4-A-1": "printed type (1,1,1;4) and deg E=6 belong to other rows; h=a+b+c+4 forces (1,1,1;7), deg E=7",
    "4-A-3": "printed note says 3E ~ K_X and deg D=3; degree arithmetic gives 4E ~ K_X with deg E=3",
    "4-A-4": "printed type (1,1,4;10) fails the divisibility filter and has genus 6, not 5; the stated divisor (g=5, E+1/5 P, deg E=2) matches (1,1,5;11)",
    "4-A-5": "printed note says 4D ~ K_X; the divisor relation is 4E ~ K_X",
    "5-B-2": "printed deg E=4 contradicts deg D=11/6; the Gorenstein relation forces deg E=1 with branch orders {2,3}",
    "5-B-4": "printed branch orders {2,3,3} force dim R_8 = 6, but the type has dim R_8 = 7; orders {2,2,6} are the realization",
    "5-C-1": "printed divisor E+(1/2)(P_1+P_2) with deg E=0 fails the degree identity (5 deg D = 2g-2 + deg frac D); the unique realization has deg E=-2 with six order-2 branches",
    "5-C-2": "printed D=(1/6)P has degree 1/6 but deg D=1/2; the realization is E+(1/2)P with deg E=0",
    "5-C-3": "printed coefficient list omits the order-7 branch forced by deg D=17/42",
    "5-C-4": "printed D=E+(3/8)P fails the degree identity; two order-2 branches and deg E=-1 are forced",
    "5-C-5": "printed D=E+(1/3)P fails the degree identity; two order-2 branches and deg E=-1 are forced",
    "5-C-16": "identical to 5-C-15 (printed twice)",
    "6-B-6a": "the labels 6-B-6 and 6-B-7 are each printed twice; first pair repeats one case",
    "6-B-7a": "identical to 6-B-6a (printed twice)",
}


def main() -> int:
    entries_by_alpha = {}
    for alpha in range(1, 7):
        entries_by_alpha[alpha] = {
            (e.wt.a, e.wt.b, e.wt.c, e.wt.h): e for e in classify(alpha)
        }

    records = []
    seen: dict[tuple, str] = {}
    problems = []
    for case, typ, g, deg_e, branches, notes in PRINTED:
        alpha = typ[3] - sum(typ[:3])
        # the printed type may be corrupt; the section it sits in fixes alpha
        alpha = int(case.split("-")[0])
        fix = MANUAL_RESOLUTIONS.get(case, {})
        r_type = tuple(fix.get("type", typ))
        r_g = fix.get("genus", g)
        r_deg_e = fix.get("degE", deg_e)
        r_branches = [tuple(b) for b in fix.get("branches", branches)]

        record = {
            "case": case,
            "alpha": alpha,
            "type": list(typ),
            "genus": g,
            "degE": deg_e,
            "branches": [list(b) for b in sorted(branches, key=lambda b: (b[1], b[0]))],
            "notes": notes,
        }

        key = (r_type, r_g, r_deg_e, tuple(sorted(r_branches, key=lambda b: (b[1], b[0]))))
        if key in seen:
            record["status"] = "duplicate"
            record["duplicate_of"] = seen[key]
        else:
            seen[key] = case
            entry = entries_by_alpha[alpha].get(r_type)
            if entry is None:
                problems.append(f"{case}: resolved type {r_type} not classified")
                record["status"] = "unrealized"
            else:
                D = FractionalDivisor(genus=r_g, deg_e=r_deg_e, branches=tuple(r_branches))
                if D not in entry.divisors:
                    problems.append(
                        f"{case}: divisor {D} not among {[str(x) for x in entry.divisors]}"
                    )
                    record["status"] = "unrealized"
                else:
                    record["status"] = "ok" if not fix else "corrected"
        if fix:
            record["resolved"] = {
                "type": list(r_type),
                "genus": r_g,
                "degE": r_deg_e,
                "branches": [list(b) for b in sorted(r_branches, key=lambda b: (b[1], b[0]))],
            }
        if case in REMARKS:
            record["remark"] = REMARKS[case]
        records.append(record)

    out_path = Path(__file__).resolve().parent.parent / "src" / "whsl" / "data" / "published_cases.jsonl"
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, separators=(", ", ": ")) + "\n")

    counts = {}
    for record in records:
        counts[record["status"]] = counts.get(record["status"], 0) + 1
    print(f"wrote {len(records)} cases to {out_path}")
    print("status counts:", counts)
    if problems:
        print("PROBLEMS:")
        for p in problems:
            print(" ", p)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
