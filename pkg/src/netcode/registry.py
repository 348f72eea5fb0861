class Marker:
    IMAGINARY = "$imag"
    SOURCE_TAIL = "$source"
    SUPER_SOURCE = "$super"
    SINK = "$sink"


class StepKind:
    HEAD_CUT = "head_cut"
    PARALLEL = "parallel"


class ExitCode:
    OK = 0
    NEGATIVE = 1
    INPUT_ERROR = 2


class Command:
    CHECK = "check"
    SOLVE = "solve"
    VERIFY = "verify"
    MATROID = "matroid"
    LIFT = "lift"
    VERIFY_TU = "verify-tu"
    SUITE = "suite"


class ConwayTable:
    """Monic irreducible moduli, coefficients highest degree first."""

    POLYNOMIALS = {
        (2, 2): (1, 1, 1),
        (2, 3): (1, 0, 1, 1),
        (2, 4): (1, 0, 0, 1, 1),
        (2, 5): (1, 0, 0, 1, 0, 1),
        (2, 6): (1, 0, 1, 1, 0, 1, 1),
        (2, 7): (1, 0, 0, 0, 0, 0, 1, 1),
        (2, 8): (1, 0, 0, 0, 1, 1, 1, 0, 1),
        (3, 2): (1, 2, 2),
        (3, 3): (1, 0, 2, 1),
        (3, 4): (1, 2, 0, 0, 2),
        (3, 5): (1, 0, 0, 0, 2, 1),
        (5, 2): (1, 4, 2),
        (5, 3): (1, 0, 3, 3),
        (7, 2): (1, 6, 3),
        (11, 2): (1, 7, 2),
        (13, 2): (1, 12, 2),
    }

    @staticmethod
    def get(characteristic, degree):
        return ConwayTable.POLYNOMIALS.get((characteristic, degree))
