"""Published reference values used by the verification suite and the CLI.

Fractions are exact.  BPG_TABLE fixes the alpha-numbering of the three
exceptional binary polyhedral groups: labels are assigned by matching each
computed (degree, first CCS, second CCS) vector against these columns.
"""

from fractions import Fraction as F

# degree, first CCS-number on the chosen H1 generator (None: trivial H1),
# second CCS-number; one row per irreducible, in alpha_1..alpha_n order
BPG_TABLE = {
    "BT": [
        ("alpha_1", 1, F(0), F(0)),
        ("alpha_2", 1, F(2, 3), F(0)),
        ("alpha_3", 1, F(1, 3), F(0)),
        ("alpha_4", 2, F(0), F(1, 24)),
        ("alpha_5", 2, F(1, 3), F(3, 8)),
        ("alpha_6", 2, F(2, 3), F(3, 8)),
        ("alpha_7", 3, F(0), F(1, 6)),
    ],
    "BO": [
        ("alpha_1", 1, F(0), F(0)),
        ("alpha_2", 1, F(1, 2), F(0)),
        ("alpha_3", 2, F(1, 2), F(1, 3)),
        ("alpha_4", 2, F(0), F(1, 48)),
        ("alpha_5", 2, F(0), F(25, 48)),
        ("alpha_6", 3, F(1, 2), F(7, 12)),
        ("alpha_7", 3, F(0), F(1, 12)),
        ("alpha_8", 4, F(0), F(5, 24)),
    ],
    "BI": [
        ("alpha_1", 1, None, F(0)),
        ("alpha_2", 2, None, F(1, 120)),
        ("alpha_3", 2, None, F(49, 120)),
        ("alpha_4", 3, None, F(19, 30)),
        ("alpha_5", 3, None, F(1, 30)),
        ("alpha_6", 4, None, F(5, 6)),
        ("alpha_7", 4, None, F(1, 12)),
        ("alpha_8", 5, None, F(1, 6)),
        ("alpha_9", 6, None, F(7, 24)),
    ],
}

# scaled first CCS-numbers 2^k * c1(rho_{t,s})(x) for the 2-group dihedral
# family, keyed by (k, r); cell [t][s]
D_C1_TABLES = {
    (2, 2): {"scale": 4, "cells": {
        (1, 0): 0, (1, 1): 1,
        (2, 0): 2, (2, 1): 3,
        (3, 0): 0, (3, 1): 1,
        (4, 0): 2, (4, 1): 3,
    }},
    (3, 2): {"scale": 8, "cells": {
        (1, 0): 0, (1, 1): 1, (1, 2): 2, (1, 3): 3,
        (2, 0): 4, (2, 1): 5, (2, 2): 6, (2, 3): 7,
        (3, 0): 0, (3, 1): 1, (3, 2): 2, (3, 3): 3,
        (4, 0): 4, (4, 1): 5, (4, 2): 6, (4, 3): 7,
    }},
    (3, 1): {"scale": 8, "cells": {
        (1, 0): 0, (1, 1): 1, (1, 2): 2, (1, 3): 3,
        (2, 0): 4, (2, 1): 5, (2, 2): 6, (2, 3): 7,
    }},
}

# scaled xi-invariants |G| * xi(rho_{t,s}) for the same groups; cell [t][s]
D_XI_TABLES = {
    (2, 2): {"scale": 40, "cells": {
        (1, 0): -4, (1, 1): -9,
        (2, 0): -16, (2, 1): -1,
        (3, 0): 4, (3, 1): -1,
        (4, 0): 16, (4, 1): -9,
    }},
    (3, 2): {"scale": 80, "cells": {
        (1, 0): 96, (1, 1): 31, (1, 2): 76, (1, 3): 71,
        (2, 0): 64, (2, 1): 39, (2, 2): 44, (2, 3): 79,
        (3, 0): 64, (3, 1): 79, (3, 2): 44, (3, 3): 39,
        (4, 0): 96, (4, 1): 71, (4, 2): 76, (4, 3): 31,
    }},
    (3, 1): {"scale": 48, "cells": {
        (1, 0): -32, (1, 1): -17, (1, 2): -20, (1, 3): -41,
        (2, 0): -32, (2, 1): -41, (2, 2): -20, (2, 3): -17,
    }},
}

# first CCS-numbers of the one-dimensional characters of the binary dihedral
# groups, per parity of q, on the generators (b) resp. (b, c)
BD_C1_TABLES = {
    "even": {
        "alpha_0": (F(0), F(0)),
        "alpha_1": (F(1, 2), F(0)),
        "alpha_2": (F(0), F(1, 2)),
        "alpha_3": (F(1, 2), F(1, 2)),
    },
    "odd": {
        "alpha_0": (F(0),),
        "alpha_1": (F(1, 4),),
        "alpha_2": (F(1, 2),),
        "alpha_3": (F(3, 4),),
    },
}
