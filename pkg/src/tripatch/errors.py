"""Exception hierarchy shared by all tripatch modules."""


class TripatchError(Exception):
    """Base class for all library errors."""

    code = "error"

    def __init__(self, message, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_json(self):
        return {"code": self.code, "message": self.message, "context": self.context}


class UsageError(TripatchError):
    code = "usage"


# --- exact algebra -----------------------------------------------------------

class ZeroPolynomial(TripatchError):
    code = "zero-polynomial"


class ConstantInY(TripatchError):
    code = "constant-in-y"


class VanishesAtRoot(TripatchError):
    code = "vanishes-at-root"


# --- lattice geometry --------------------------------------------------------

class DegeneratePolygon(TripatchError):
    code = "degenerate-polygon"


class NotTrigonalSupport(TripatchError):
    code = "not-trigonal-support"


class Overlap(TripatchError):
    code = "overlap"


class Gap(TripatchError):
    code = "gap"


class NonFaceIntersection(TripatchError):
    code = "non-face-intersection"


class NonPositiveInput(TripatchError):
    code = "non-positive-input"


# --- patchwork model ---------------------------------------------------------

class NotAFace(TripatchError):
    code = "not-a-face"


class PerturbationFailed(TripatchError):
    code = "perturbation-failed"


class ParseError(TripatchError):
    code = "parse-error"


class ValidationError(TripatchError):
    code = "validation-error"


# --- scan order --------------------------------------------------------------

class TieUnresolved(TripatchError):
    code = "tie-unresolved"


class NonTerminatingChain(TripatchError):
    code = "non-terminating-chain"


class UnsupportedProfile(TripatchError):
    code = "unsupported-profile"


# --- sign arrays -------------------------------------------------------------

class NotMonicCubic(TripatchError):
    code = "not-monic-cubic"


class NotLNonsingular(TripatchError):
    code = "not-l-nonsingular"


class TripleRootFiber(TripatchError):
    code = "triple-root-fiber"


class DegenerateSite(TripatchError):
    code = "degenerate-site"


class DegenerateLeadingFiber(TripatchError):
    code = "degenerate-leading-fiber"


# --- rational graphs ---------------------------------------------------------

class IdenticallyDegenerate(TripatchError):
    code = "identically-degenerate"


class DegenerateConic(TripatchError):
    code = "degenerate-conic"


class Unbalanced(TripatchError):
    code = "unbalanced"


class UnmarkedSkeleton(TripatchError):
    code = "unmarked-skeleton"


# --- assembly ----------------------------------------------------------------

class SiteNotFound(TripatchError):
    code = "site-not-found"


class SignMismatch(TripatchError):
    code = "sign-mismatch"


class OrderMismatch(TripatchError):
    code = "order-mismatch"


class UnsupportedJunction(TripatchError):
    code = "unsupported-junction"


class AssemblyInvariantViolated(TripatchError):
    code = "assembly-invariant-violated"


# --- oracle ------------------------------------------------------------------

class IncompleteLifting(TripatchError):
    code = "incomplete-lifting"


class NotCertifiedConvex(TripatchError):
    code = "not-certified-convex"


class NoStabilization(TripatchError):
    code = "no-stabilization"


# --- harness -----------------------------------------------------------------

class GenerationFailed(TripatchError):
    code = "generation-failed"
