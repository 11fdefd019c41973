# ABOUTME: Exception hierarchy for every validator and construction
# ABOUTME: Each rejection names the violated law and carries a witness tuple

from typing import Optional, Tuple


class CrossedError(Exception):
    """Base class for rejections raised by the crossed package"""

    law: str = "law"

    def __init__(self, message: str = "", witness: Optional[Tuple] = None, law: Optional[str] = None):
        self.witness = tuple(witness) if witness is not None else None
        if law is not None:
            self.law = law
        detail = message or self.law
        if self.witness is not None:
            detail = f"{detail} at {self.witness}"
        super().__init__(detail)


class MalformedInput(CrossedError):
    """Raised when a table or map has the wrong shape or an index out of its domain"""

    law = "malformed input"


class IndexOutOfRange(CrossedError):
    """Raised when a table entry is not an element index"""

    law = "index out of range"


class BadIdentity(CrossedError):
    """Raised when the distinguished identity is not two-sided"""

    law = "identity"


class NotAssociative(CrossedError):
    """Raised when (ij)k differs from i(jk)"""

    law = "associativity"


class IdentityNotPreserved(CrossedError):
    law = "identity preserved"


class ProductNotPreserved(CrossedError):
    law = "product preserved"


class UnitActFails(CrossedError):
    law = "unit acts trivially"


class CompositionFails(CrossedError):
    law = "action composition"


class NotEndomorphism(CrossedError):
    law = "acts by endomorphisms"


class IdentityNotFixed(CrossedError):
    law = "identity fixed"


class AxiomFails(CrossedError):
    """Raised when a numbered structure axiom fails"""

    def __init__(self, axiom: str, witness: Optional[Tuple] = None, structure: str = "structure"):
        self.axiom = axiom
        super().__init__(f"{structure} axiom ({axiom}) fails", witness, law=f"axiom {axiom}")


class ExchangeLawFails(CrossedError):
    law = "exchange law"


class LambdaNotTrivial(CrossedError):
    law = "left action trivial"


class NotAGroup(CrossedError):
    """Raised when a component expected to be a group has a non-invertible element"""

    def __init__(self, which: str, witness: Optional[Tuple] = None):
        self.which = which
        super().__init__(f"{which} is not a group", witness, law="group")


class HypothesisFails(CrossedError):
    """Raised when a reconstruction hypothesis on the boundary map fails"""

    def __init__(self, hypothesis: str, witness: Optional[Tuple] = None):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis {hypothesis}) fails", witness, law=f"hypothesis {hypothesis}")


class ConditionFails(CrossedError):
    """Raised when a morphism or weak morphism condition fails"""

    def __init__(self, condition: str, witness: Optional[Tuple] = None, kind: str = "morphism"):
        self.condition = condition
        super().__init__(f"{kind} condition ({condition}) fails", witness, law=f"condition {condition}")


class NotComposable(CrossedError):
    law = "composable"


class NotCommutative(CrossedError):
    law = "commutative"


class CompatibilityFails(CrossedError):
    law = "actions compatible"


class ConstraintViolated(CrossedError):
    """Raised when pq + 2 is not zero modulo n"""

    def __init__(self, residue: int):
        self.residue = residue
        super().__init__(f"pq + 2 = {residue} (mod n), expected 0", law="pq + 2 = 0")


class BudgetExceeded(CrossedError):
    """Raised when a search visits more nodes than its budget allows"""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search budget exceeded after {nodes} nodes", law="node budget")


class MismatchWitness(CrossedError):
    """Raised when a structure lies on one side of a claimed bijection only"""

    def __init__(self, claim: str, structure: object):
        self.claim = claim
        self.structure = structure
        super().__init__(f"{claim}: unmatched structure", law=claim)


class ParseError(CrossedError):
    """Raised when a structure file cannot be parsed or resolved"""

    def __init__(self, file: str, line: int, message: str):
        self.file = file
        self.line = line
        super().__init__(f"{file}:{line}: {message}", law="parse")


class UnknownMonoid(CrossedError):
    law = "catalog"


class ConsistencyError(CrossedError):
    """Raised when a property guaranteed by a construction does not hold"""

    law = "consistency"
