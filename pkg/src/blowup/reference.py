"""Known invariant values used for regression checks.

Each row is (label, polynomial text, (l(Q), l(R^1), charge)).  Polynomial
text uses the eN shorthand of ``polyexpr``.
"""

ROWS_J2 = (
    ("e1", "e1", (1, 1, 2)),
    ("e2", "e2", (1, 1, 2)),
    ("e3", "e3", (2, 1, 3)),
    ("zero", "0", (3, 1, 4)),
)

ROWS_J3 = (
    ("e1", "e1", (3, 2, 5)),
    ("e2", "e2", (1, 2, 3)),
    ("e3", "e3", (1, 2, 3)),
    ("e4", "e4", (3, 2, 5)),
    ("e5", "e5", (3, 3, 6)),
    ("e6", "e6", (2, 3, 5)),
    ("e7", "e7", (3, 3, 6)),
    ("e8", "e8", (4, 3, 7)),
    ("e9", "e9", (4, 3, 7)),
    ("e10", "e10", (5, 3, 8)),
    ("zero", "0", (6, 3, 9)),
)

ROWS_J3_PAIRS = (
    ("e1+e4", "e1+e4", (1, 2, 3)),
    ("e4+e5", "e4+e5", (2, 2, 4)),
    ("e1+e7", "e1+e7", (2, 2, 4)),
)

ALL_ROWS = tuple((2, r) for r in ROWS_J2) + tuple((3, r) for r in ROWS_J3 + ROWS_J3_PAIRS)

# Rows whose relation-guard label and invariant-pair locus are known to disagree.
STRATUM_DISCREPANCIES = {(3, "e4+e5"), (3, "e1+e7")}

# j = 2, p = z*u^2: expected shape of the intermediate objects.
WORKED_EXAMPLE = {
    "j": 2,
    "poly": "z*u^2",
    "generators": 4,
    "relations": 2,
    "dual_generators": 3,
    "dual_relations": 1,
    "bidual_rank": 2,
    "lQ": 2,
    "h1": 1,
}

# A three-generator presentation of the dual for the same example, as values
# of each functional on (beta0, beta1, beta2, alpha0) in x, y exponents.
# The lifted generator alpha0 enters the exact relations with the opposite
# sign to the truncated ones these values were written for, hence the
# sign change applied by ``transported_dual``.
WORKED_EXAMPLE_DUAL = {
    "A": {"alpha0": {(1, 0): 1}, "beta2": {(0, 1): 1}},
    "B": {"beta2": {(0, 2): 1}, "beta0": {(2, 0): 1}, "beta1": {(1, 1): 1}},
    "C": {"alpha0": {(0, 1): -1}, "beta0": {(1, 0): 1}, "beta1": {(0, 1): 1}},
}
WORKED_EXAMPLE_DUAL_RELATION = {"A": {(0, 1): 1}, "B": {(0, 0): -1}, "C": {(1, 0): 1}}
WORKED_EXAMPLE_SIGNS = {"alpha0": -1}
