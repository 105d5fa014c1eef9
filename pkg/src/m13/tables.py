"""Published constants: labelling, depth censuses, generators, tetracode.

Everything transcribed from the literature lives here so it can be audited
in one place.  Cycle strings use the text format of :mod:`m13.perms`.
"""

# Self-dual labelling of the plane of order 3; entry x lists the points of
# line x, and the lines through point x carry the same labels.
CANONICAL_LINES = (
    (0, 1, 2, 3), (0, 4, 5, 6), (0, 9, 10, 11), (0, 7, 8, 12),
    (1, 4, 8, 9), (1, 6, 7, 11), (1, 5, 10, 12), (3, 5, 8, 11),
    (3, 4, 7, 10), (2, 4, 11, 12), (2, 6, 8, 10), (2, 5, 7, 9),
    (3, 6, 9, 12),
)

# Depth census, k = 0..9: elements fixing the hole (group) and all elements.
DEPTH_BASIC_GROUP = (1, 0, 0, 54, 540, 5184, 25173, 55044, 9036, 8)
DEPTH_BASIC_ALL = (1, 12, 108, 918, 7344, 57852, 344925, 733500, 90852, 8)

# Signed game, k = 0..12.
DEPTH_SIGNED_GROUP = (1, 0, 0, 54, 540, 5184, 25821, 85230, 72351, 898, 0, 0, 1)
DEPTH_SIGNED_ALL = (1, 12, 108, 918, 7344, 57852, 356949, 1192770, 843291,
                    11674, 108, 12, 1)

M12_ORDER = 95040
M13_SIZE = 1235520            # 13!/7!

# Generators of M12 and closed paths from 0 inducing them.
GENERATORS = {
    "alpha": "(1 6 4 2 11 3 8 9 10 7 5)",
    "gamma": "(1 12)(2 9)(3 4)(5 6)(7 8)(10 11)",
    "delta": "(4 5)(2 11)(3 7)(8 9)",
}
GENERATOR_PATHS = {
    "alpha": (0, 11, 7, 9, 8, 3, 0),
    "gamma": (0, 12, 1, 9, 0, 3, 8, 4, 0),
    "delta": (0, 1, 7, 0, 3, 6, 0, 1, 7, 0),
}

# Closed path whose signed permutation flips all twelve counters in place.
MINUS_ID_PATH = (0, 10, 7, 0, 4, 1, 2, 4, 3, 5, 6, 3, 0)

# Worked example path and its induced permutations.
EXAMPLE_PATH = (0, 6, 12, 1, 8, 0)
EXAMPLE_PERM = "(1 7 12 6 8)(3 4 10 5 9)"
EXAMPLE_FLIPS = frozenset({1, 7, 9, 10})

# The depth-9 elements come in inverse pairs; one of each pair with a path.
TETRACODE = (
    ("(1 3 2)(4 6 5)(7 8 12)", (0, 12, 1, 0, 9, 6, 11, 10, 5, 0)),
    ("(1 3 2)(4 5 6)(9 11 10)", (0, 1, 10, 0, 6, 12, 7, 4, 8, 0)),
    ("(1 2 3)(7 8 12)(9 11 10)", (0, 12, 1, 0, 9, 5, 6, 11, 4, 0)),
    ("(4 5 6)(7 8 12)(9 10 11)", (0, 12, 10, 0, 3, 4, 2, 1, 5, 0)),
)

# Outer automorphism data for the dualized game.
THETA_FIXED_PATHS = {
    "alpha1": ((0, 1, 4, 0), "(1 4)(2 3)(5 6)(8 9)"),
    "alpha2": ((0, 2, 10, 0), "(1 3)(2 10)(6 8)(9 11)"),
    "alpha3": ((0, 3, 12, 0), "(1 2)(3 12)(6 9)(7 8)"),
}
THETA_CENTRALIZER_WITNESS = "(1 6)(2 9)(3 8)(4 5)(7 12)(10 11)"
THETA_SWAP_PATH = (0, 1, 5, 0)
THETA_SWAP_PAIR = ("(1 5)(2 3)(4 6)(10 12)", "(1 6)(2 3)(4 5)(7 11)")
