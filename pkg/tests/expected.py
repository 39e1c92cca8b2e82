# Frozen reference values for Sigma(2,3,5,7): rotation tuple -> (cs numerator over 840, index mod 8).
# The six tuples with every entry strictly inside (0, a_i) are 2-sphere components.
TABLE1 = {
    (1, 0, 2, 2): (681, 7), (1, 0, 2, 4): (561, 5), (1, 0, 2, 6): (81, 1), (1, 0, 4, 4): (729, 7),
    (1, 2, 0, 2): (625, 7), (1, 2, 0, 4): (505, 5), (1, 2, 2, 0): (721, 7), (1, 2, 4, 0): (49, 1),
    (0, 2, 2, 2): (16, 1), (0, 2, 2, 4): (736, 7), (0, 2, 2, 6): (256, 3), (0, 2, 4, 2): (184, 3),
    (2, 2, 2, 2): (436, 5), (2, 2, 2, 4): (316, 3), (2, 2, 4, 4): (484, 5), (2, 2, 4, 6): (4, 1),
    (1, 2, 2, 2): (121, 1), (1, 2, 2, 4): (1, 7), (1, 2, 2, 6): (361, 3), (1, 2, 4, 2): (289, 3),
    (1, 2, 4, 4): (169, 1), (1, 2, 4, 6): (529, 5),
}
SPHERES = {(1, 2, 2, 2), (1, 2, 2, 4), (1, 2, 2, 6), (1, 2, 4, 2), (1, 2, 4, 4), (1, 2, 4, 6)}


def brieskorn_spectrum_closed_form(k):
    """{(12(3k^2 - k + 3l^2) + 1) / (24(6k-1))} over even l in [k, 5k-1], plus 1."""
    from fractions import Fraction
    from csspectra.ratmod1 import ONE, Mod1Rational
    den = 24 * (6 * k - 1)
    vals = {Mod1Rational(Fraction(12 * (3 * k * k - k + 3 * l * l) + 1, den))
            for l in range(k, 5 * k) if l % 2 == 0}
    return sorted(vals | {ONE})
