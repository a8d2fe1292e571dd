"""Frozen coefficient triangles for the two reference shapes.

Every row below was hand-checked by applying the row update
c(i, j) = j*(j-1)**d * c(i-1, j-1) - (j+1)*j**d * c(i-1, j) with the
appropriate difference exponents, so these fixtures are independent of the
implementation under test.
"""

# shape (7, 7, 7, 6, 4, 4, 2); difference exponents 0, 0, 1, 2, 0, 2
TRIANGLE_MIXED = (
    (-1, 1),
    (1, -3, 2),
    (-1, 7, -12, 6),
    (0, -14, 86, -144, 72),
    (0, 28, -1060, 6216, -10944, 5760),
    (0, -56, 3236, -28044, 79584, -89280, 34560),
    (0, 112, -38944, 1048416, -7376304, 19758720, -22101120, 8709120),
)

# shape (7, 6, 5, 4, 3, 2, 1); every difference exponent is 1
TRIANGLE_STAIRCASE7 = (
    (-1, 1),
    (0, -2, 2),
    (0, 4, -16, 12),
    (0, -8, 104, -240, 144),
    (0, 16, -640, 3504, -5760, 2880),
    (0, -32, 3872, -45888, 157248, -201600, 86400),
    (0, 64, -23296, 573888, -3695616, 9192960, -9676800, 3628800),
)

# row sums of j * c(r, j) over the staircase rows: the boolean numbers of
# unit staircases of heights 1..5
STAIRCASE_BETAS = (1, 2, 8, 56, 608)
