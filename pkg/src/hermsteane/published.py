"""Parameter tables as printed in the literature this package reproduces.

Used as reference data by the table generators (discrepancy reporting) and
by the acceptance tests.
"""

# (n, k, d, dimension increase) per q, in printed order
TABLE1 = {
    2: [(8, 4, 3, 2)],
    3: [(27, 23, 3, 2), (27, 19, 4, 2), (27, 11, 7, 2)],
    4: [(64, 60, 3, 2), (64, 56, 4, 2), (64, 51, 5, 3), (64, 40, 9, 2),
        (64, 36, 10, 2), (64, 30, 13, 2)],
    5: [(125, 121, 3, 2), (125, 117, 4, 2), (125, 112, 5, 3), (125, 107, 6, 2),
        (125, 97, 9, 2), (125, 91, 11, 2), (125, 79, 16, 2), (125, 75, 17, 2),
        (125, 67, 21, 2)],
    7: [(343, 339, 3, 2), (343, 335, 4, 2), (343, 330, 5, 3), (343, 325, 6, 2),
        (343, 319, 7, 4), (343, 313, 8, 2), (343, 308, 9, 3), (343, 289, 15, 2),
        (343, 284, 16, 3), (343, 271, 21, 2), (343, 267, 22, 2), (343, 258, 25, 3),
        (343, 251, 29, 2), (343, 244, 31, 3), (343, 235, 36, 2), (343, 231, 37, 2),
        (343, 219, 43, 2)],
}

# q = 4, n = 64: k -> (Goppa one-point, order-bound one-point,
#                      improved CSS, improved Steane-enlarged)
TABLE2 = {
    30: (12, 13, 12, 13),
    32: (11, 11, 12, 11),
    34: (10, 10, 10, 10),
    36: (9, 9, 9, 10),
    38: (8, 9, 9, 9),
    39: (7, 9, 6, 9),
    40: (7, 8, 8, 9),
    42: (6, 6, 8, 7),
    44: (5, 5, 6, 7),
    45: (4, 5, 5, 6),
    46: (4, 5, 6, 5),
    48: (3, 5, 5, 5),
    50: (2, 4, 4, 5),
    51: (0, 4, 4, 5),
    54: (0, 4, 4, 3),
    56: (0, 3, 3, 4),
    58: (3, 3, 3, 3),
    60: (0, 2, 2, 3),
    62: (0, 2, 2, 2),
}

# printed star markers: k -> columns (0-based) marked as beating the row
TABLE2_STARS = {
    30: {1}, 32: {2}, 36: {3}, 38: {1}, 39: {1}, 40: {1, 3}, 42: {2},
    44: {2, 3}, 45: {1, 3}, 46: {1, 2}, 48: {1}, 50: {1, 3}, 51: {1, 3},
    54: {1}, 56: {1, 3}, 58: {1}, 60: {1, 3}, 62: {1},
}

TABLE2_COLUMNS = ("goppa", "order", "improved-css", "improved-steane")
