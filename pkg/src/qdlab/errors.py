"""Exception types raised by qdlab numerics and combinatorics."""


class QdlabError(Exception):
    """Base class for all qdlab errors."""


class NonConvergent(QdlabError):
    """A truncated integral or sum failed its self-consistency check."""


class PoleProximity(QdlabError):
    """An evaluation point is too close to a pole of the quantum dilogarithm."""


class SlowConvergence(QdlabError):
    """Im(theta^2) is below the configured floor; products converge too slowly."""


class Infeasible(QdlabError):
    """The pentagon charge-transfer equations have no positive solution."""


class TopologyError(QdlabError):
    """A triangulation operation was requested on incompatible gluing data."""


class PositivityViolation(QdlabError):
    """A shape perturbation left the positive-angle region."""


class SchemaError(QdlabError):
    """A triangulation document does not match the expected JSON schema."""


class ValidationError(QdlabError):
    """Structurally valid gluing data that violates a triangulation invariant."""


class UnknownName(QdlabError):
    """Unknown census entry name."""


class DegenerateFlip(QdlabError):
    """The flip denominator x1*y2 + x2 vanishes at this sample."""


class DegenerateQuad(QdlabError):
    """A Ptolemy quadrilateral with ac + bd = 0."""


class LevelMismatch(QdlabError):
    """Operator parameter b is inconsistent with the level k = 2 Re(b^2)."""


class DecayViolation(QdlabError):
    """A test vector does not decay below tolerance outside its window."""


class QuasiPeriodicityViolation(QdlabError):
    """A grid section fails the quasi-periodicity relations of the level-k space."""
