"""Exception types shared across the package."""


class RingSpecError(ValueError):
    """A ring or ideal spec string could not be parsed or is invalid."""


class RingAxiomError(ValueError):
    """Operation tables violate a ring axiom; carries the axiom and a witness."""

    def __init__(self, axiom: str, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class RingMismatchError(ValueError):
    """Elements or ideals of different rings were combined."""


class NotAnIdealError(ValueError):
    """A member set fails one of the ideal closure conditions."""


class CapExceededError(RuntimeError):
    """An exact computation was requested above its configured size cap."""
