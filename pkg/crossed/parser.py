"""
Reader and writer for the line-oriented structure file format

A file is a sequence of blocks. Each block starts with a header line whose
first token is one of the keywords below and continues with rows of
space-separated indices up to the next header. '#' starts a comment.

    monoid <name> <size> <identity>                      size rows of size indices
    action <left|right|set> <actor> <carrier> [<name>]   rows a, columns x
    hom <name> <source> <target>                         one row of images
    xbsmod <name> A=<monoid> K=<monoid> circ=<action> lambda=<action> rho=<action>
    xsmod <name> partial=<hom> rho=<action>
    xmod <name> partial=<hom> rho=<action>
    morphism <name> source=<xbsmod> target=<xbsmod> kappa=<hom> alpha=<hom>
    weakmorphism <name> source=<xbsmod> target=<xbsmod> kappa=<hom>   rows of γ

A set action `action set <K> <A>` has |A| rows of |K| entries. An unnamed
action takes the file stem as its name. Names are resolved in the file
itself, then in the other files of its directory with the same suffix
(sorted by file name), then, for monoids, in the built-in catalog.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from crossed.catalog import get_catalog
from crossed.errors import CrossedError, MalformedInput, ParseError
from crossed.monoid import (
    FiniteMonoid,
    MonoidAction,
    MonoidHom,
    SetAction,
    validate_hom,
    validate_monoid,
    validate_monoid_action,
    validate_set_action,
)
from crossed.report import CheckReport
from crossed.structures import (
    CrossedModule,
    CrossedSemiBimodule,
    CrossedSemiModule,
    WeakMorphism,
    XbsMorphism,
    validate_morphism,
    validate_weak_morphism,
    validate_xbsmod,
    validate_xmod,
    validate_xsmod,
)

logger = logging.getLogger(__name__)

KEYWORDS = ("monoid", "action", "hom", "xbsmod", "xsmod", "xmod", "morphism", "weakmorphism")

REQUIRED_FIELDS = {
    "xbsmod": ("A", "K", "circ", "lambda", "rho"),
    "xsmod": ("partial", "rho"),
    "xmod": ("partial", "rho"),
    "morphism": ("source", "target", "kappa", "alpha"),
    "weakmorphism": ("source", "target", "kappa"),
}


@dataclass
class Block:
    """One header line and the index rows that follow it"""

    kind: str
    name: str
    file: str
    line: int
    args: List[str] = field(default_factory=list)
    fields: Dict[str, str] = field(default_factory=dict)
    rows: List[List[int]] = field(default_factory=list)

    def error(self, message: str) -> ParseError:
        return ParseError(self.file, self.line, message)

    def matrix(self, rows: int, cols: int) -> np.ndarray:
        if len(self.rows) != rows or any(len(row) != cols for row in self.rows):
            raise self.error(f"{self.kind} {self.name}: expected {rows} rows of {cols} indices")
        return np.array(self.rows, dtype=np.int64).reshape(rows, cols)


@dataclass
class StructureDocument:
    """The blocks of one file, in order"""

    path: str
    blocks: List[Block] = field(default_factory=list)

    def find(self, name: str) -> Optional[Block]:
        for block in self.blocks:
            if block.name == name:
                return block
        return None


class StructureParser:
    """Parser for structure files"""

    def parse_file(self, filepath: str) -> StructureDocument:
        """
        Parse a structure file

        Args:
            filepath: Path to the file

        Returns:
            StructureDocument with the blocks in file order
        """
        path = Path(filepath)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ParseError(str(path), 0, f"cannot read file: {e.strerror}") from e
        return self.parse_string(text, str(path), path.stem)

    def parse_string(self, text: str, source: str = "<string>", stem: str = "input") -> StructureDocument:
        """Parse structure text; `stem` names unnamed actions"""
        document = StructureDocument(path=source)
        current: Optional[Block] = None
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if tokens[0] in KEYWORDS:
                current = self.parse_header(tokens, source, number, stem)
                if document.find(current.name) is not None:
                    raise ParseError(source, number, f"duplicate name {current.name!r}")
                document.blocks.append(current)
                continue
            if current is None:
                raise ParseError(source, number, "index row before any header")
            try:
                current.rows.append([int(token) for token in tokens])
            except ValueError:
                raise ParseError(source, number, f"expected integers, got {line!r}")
        logger.debug("parsed %d blocks from %s", len(document.blocks), source)
        return document

    def parse_header(self, tokens: List[str], source: str, number: int, stem: str) -> Block:
        kind = tokens[0]
        if kind == "monoid":
            if len(tokens) != 4:
                raise ParseError(source, number, "expected: monoid <name> <size> <identity>")
            return Block(kind, tokens[1], source, number, args=[self._integer(t, source, number) for t in tokens[2:]])
        if kind == "action":
            if len(tokens) not in (4, 5) or tokens[1] not in ("left", "right", "set"):
                raise ParseError(source, number, "expected: action <left|right|set> <actor> <carrier> [<name>]")
            name = tokens[4] if len(tokens) == 5 else stem
            return Block(kind, name, source, number, args=tokens[1:4])
        if kind == "hom":
            if len(tokens) != 4:
                raise ParseError(source, number, "expected: hom <name> <source> <target>")
            return Block(kind, tokens[1], source, number, args=tokens[2:4])

        if len(tokens) < 2 or "=" in tokens[1]:
            raise ParseError(source, number, f"{kind} header needs a name")
        fields: Dict[str, str] = {}
        for token in tokens[2:]:
            key, sep, value = token.partition("=")
            if not sep or not value:
                raise ParseError(source, number, f"expected key=value, got {token!r}")
            fields[key] = value
        missing = [key for key in REQUIRED_FIELDS[kind] if key not in fields]
        if missing:
            raise ParseError(source, number, f"{kind} header missing {', '.join(missing)}")
        return Block(kind, tokens[1], source, number, fields=fields)

    @staticmethod
    def _integer(token: str, source: str, number: int) -> int:
        try:
            return int(token)
        except ValueError:
            raise ParseError(source, number, f"expected an integer, got {token!r}")


class StructureLibrary:
    """Resolves and validates named values for one input file and its directory"""

    def __init__(self, document: StructureDocument, directory: Optional[Path] = None, suffix: str = ".txt"):
        self.document = document
        self.directory = directory
        self.suffix = suffix
        self.parser = StructureParser()
        self._siblings: Optional[List[StructureDocument]] = None
        self._cache: Dict[Tuple[str, str], object] = {}

    @classmethod
    def from_file(cls, filepath: str) -> "StructureLibrary":
        path = Path(filepath)
        document = StructureParser().parse_file(str(path))
        return cls(document, path.parent, path.suffix)

    @classmethod
    def from_string(cls, text: str) -> "StructureLibrary":
        return cls(StructureParser().parse_string(text))

    def _sibling_documents(self) -> List[StructureDocument]:
        if self._siblings is None:
            self._siblings = []
            if self.directory is not None:
                own = Path(self.document.path).resolve()
                for path in sorted(self.directory.glob(f"*{self.suffix}")):
                    if path.resolve() != own and path.is_file():
                        self._siblings.append(self.parser.parse_file(str(path)))
        return self._siblings

    def block(self, name: str, kind: str) -> Optional[Block]:
        for document in [self.document, *self._sibling_documents()]:
            block = document.find(name)
            if block is not None and block.kind == kind:
                return block
        return None

    def _resolve(self, kind: str, name: str, wanted_by: Optional[Block], build: Callable[[Block], object]) -> object:
        key = (kind, name)
        if key not in self._cache:
            block = self.block(name, kind)
            if block is None:
                if kind == "monoid" and get_catalog().is_valid_name(name):
                    self._cache[key] = get_catalog().get(name)
                    return self._cache[key]
                where = wanted_by or Block(kind, name, self.document.path, 0)
                raise where.error(f"unknown {kind} {name!r}")
            self._cache[key] = build(block)
        return self._cache[key]

    def monoid(self, name: str, wanted_by: Optional[Block] = None) -> FiniteMonoid:
        def build(block: Block) -> FiniteMonoid:
            size, identity = block.args
            return validate_monoid(block.matrix(size, size), identity, block.name)

        return self._resolve("monoid", name, wanted_by, build)  # type: ignore[return-value]

    def action(self, name: str, wanted_by: Optional[Block] = None):
        def build(block: Block):
            side, actor_name, carrier_name = block.args
            actor = self.monoid(actor_name, block)
            carrier = self.monoid(carrier_name, block)
            if side == "set":
                return validate_set_action(actor, carrier.size, block.matrix(carrier.size, actor.size))
            return validate_monoid_action(side, actor, carrier, block.matrix(actor.size, carrier.size))  # type: ignore[arg-type]

        return self._resolve("action", name, wanted_by, build)

    def hom(self, name: str, wanted_by: Optional[Block] = None) -> MonoidHom:
        def build(block: Block) -> MonoidHom:
            source = self.monoid(block.args[0], block)
            target = self.monoid(block.args[1], block)
            return validate_hom(block.matrix(1, source.size)[0], source, target)

        return self._resolve("hom", name, wanted_by, build)  # type: ignore[return-value]

    def xbsmod(self, name: str, wanted_by: Optional[Block] = None) -> CrossedSemiBimodule:
        def build(block: Block) -> CrossedSemiBimodule:
            f = block.fields
            A, K = self.monoid(f["A"], block), self.monoid(f["K"], block)
            circ = self.action(f["circ"], block)
            lam, rho = self.action(f["lambda"], block), self.action(f["rho"], block)
            if not isinstance(circ, SetAction) or not isinstance(lam, MonoidAction) or not isinstance(rho, MonoidAction):
                raise block.error("circ must be a set action, lambda and rho monoid actions")
            return validate_xbsmod(A, K, circ, lam, rho, block.name)

        return self._resolve("xbsmod", name, wanted_by, build)  # type: ignore[return-value]

    def _partial_and_rho(self, block: Block) -> Tuple[MonoidHom, MonoidAction]:
        rho = self.action(block.fields["rho"], block)
        if not isinstance(rho, MonoidAction):
            raise block.error("rho must be a monoid action")
        return self.hom(block.fields["partial"], block), rho

    def xsmod(self, name: str, wanted_by: Optional[Block] = None) -> CrossedSemiModule:
        def build(block: Block) -> CrossedSemiModule:
            return validate_xsmod(*self._partial_and_rho(block), name=block.name)

        return self._resolve("xsmod", name, wanted_by, build)  # type: ignore[return-value]

    def xmod(self, name: str, wanted_by: Optional[Block] = None) -> CrossedModule:
        def build(block: Block) -> CrossedModule:
            return validate_xmod(*self._partial_and_rho(block), name=block.name)

        return self._resolve("xmod", name, wanted_by, build)  # type: ignore[return-value]

    def endpoints(self, block: Block) -> Tuple[CrossedSemiBimodule, CrossedSemiBimodule]:
        return self.xbsmod(block.fields["source"], block), self.xbsmod(block.fields["target"], block)

    def morphism(self, name: str, wanted_by: Optional[Block] = None) -> XbsMorphism:
        def build(block: Block) -> XbsMorphism:
            X, Xp = self.endpoints(block)
            m = XbsMorphism(self.hom(block.fields["kappa"], block), self.hom(block.fields["alpha"], block))
            return validate_morphism(m, X, Xp)

        return self._resolve("morphism", name, wanted_by, build)  # type: ignore[return-value]

    def weakmorphism(self, name: str, wanted_by: Optional[Block] = None) -> WeakMorphism:
        def build(block: Block) -> WeakMorphism:
            X, Xp = self.endpoints(block)
            kappa = self.hom(block.fields["kappa"], block)
            w = WeakMorphism(kappa, block.matrix(X.A.size, X.K.size), X.K, Xp.K)
            return validate_weak_morphism(w, X, Xp)

        return self._resolve("weakmorphism", name, wanted_by, build)  # type: ignore[return-value]

    def resolve(self, block: Block) -> object:
        """Validate the value a block defines"""
        return getattr(self, block.kind)(block.name, block)

    def last(self, kind: str) -> Block:
        """The last block of `kind` in the input file"""
        blocks = [block for block in self.document.blocks if block.kind == kind]
        if not blocks:
            raise ParseError(self.document.path, 0, f"no {kind} block in file")
        return blocks[-1]


def check_document(library: StructureLibrary) -> CheckReport:
    """Validate every block of the input file; parse errors propagate"""
    report = CheckReport(title=library.document.path)
    for block in library.document.blocks:
        label = f"{block.kind} {block.name}"
        try:
            library.resolve(block)
            report.record(label)
        except ParseError:
            raise
        except CrossedError as e:
            report.record(label, e.witness, passed=False, detail=e.law)
    return report


def _rows(matrix: np.ndarray) -> List[str]:
    return [" ".join(str(int(v)) for v in row) for row in np.atleast_2d(matrix)]


class StructureWriter:
    """Accumulates blocks for one self-contained structure file"""

    def __init__(self):
        self.lines: List[str] = []
        self._written: Dict[str, Tuple[str, object]] = {}

    def _claim(self, kind: str, name: str, value: object) -> bool:
        """Record `name`; False when an equal value was already written"""
        if name in self._written:
            previous_kind, previous = self._written[name]
            if previous_kind == kind and previous == value:
                return False
            raise MalformedInput(f"name {name!r} used for two different values")
        self._written[name] = (kind, value)
        return True

    def monoid(self, M: FiniteMonoid) -> str:
        if self._claim("monoid", M.name, M):
            self.lines.append(f"monoid {M.name} {M.size} {M.identity}")
            self.lines.extend(_rows(M.full_table()))
        return M.name

    def action(self, action, name: str, points: Optional[FiniteMonoid] = None) -> str:
        """Write an action; a set action needs the monoid whose elements it moves"""
        if self._claim("action", name, action):
            if isinstance(action, SetAction):
                if points is None or points.size != action.carrier_size:
                    raise MalformedInput(f"set action {name} written without its carrier monoid")
                header = f"action set {self.monoid(action.actor)} {self.monoid(points)} {name}"
            else:
                actor, carrier = self.monoid(action.actor), self.monoid(action.carrier)
                header = f"action {action.side} {actor} {carrier} {name}"
            self.lines.append(header)
            self.lines.extend(_rows(action.table))
        return name

    def hom(self, h: MonoidHom, name: str) -> str:
        if self._claim("hom", name, h):
            source, target = self.monoid(h.source), self.monoid(h.target)
            self.lines.append(f"hom {name} {source} {target}")
            self.lines.extend(_rows(h.map))
        return name

    def xbsmod(self, X: CrossedSemiBimodule) -> str:
        if self._claim("xbsmod", X.name, X):
            A, K = self.monoid(X.A), self.monoid(X.K)
            circ = self.action(X.circ, f"{X.name}_circ", points=X.A)
            lam = self.action(X.lam, f"{X.name}_lambda")
            rho = self.action(X.rho, f"{X.name}_rho")
            self.lines.append(f"xbsmod {X.name} A={A} K={K} circ={circ} lambda={lam} rho={rho}")
        return X.name

    def xsmod(self, S, kind: str = "xsmod") -> str:
        if self._claim(kind, S.name, S):
            partial = self.hom(S.partial, f"{S.name}_partial")
            rho = self.action(S.rho, f"{S.name}_rho")
            self.lines.append(f"{kind} {S.name} partial={partial} rho={rho}")
        return S.name

    def xmod(self, M: CrossedModule) -> str:
        return self.xsmod(M, kind="xmod")

    def morphism(self, m: XbsMorphism, name: str, X: CrossedSemiBimodule, Xp: CrossedSemiBimodule) -> str:
        if self._claim("morphism", name, m):
            source, target = self.xbsmod(X), self.xbsmod(Xp)
            kappa = self.hom(m.kappa, f"{name}_kappa")
            alpha = self.hom(m.alpha, f"{name}_alpha")
            self.lines.append(f"morphism {name} source={source} target={target} kappa={kappa} alpha={alpha}")
        return name

    def weakmorphism(self, w: WeakMorphism, name: str, X: CrossedSemiBimodule, Xp: CrossedSemiBimodule) -> str:
        if self._claim("weakmorphism", name, w):
            source, target = self.xbsmod(X), self.xbsmod(Xp)
            kappa = self.hom(w.kappa, f"{name}_kappa")
            self.lines.append(f"weakmorphism {name} source={source} target={target} kappa={kappa}")
            self.lines.extend(_rows(w.gamma))
        return name

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def emit_xbsmod(X: CrossedSemiBimodule) -> str:
    writer = StructureWriter()
    writer.xbsmod(X)
    return writer.text()


def emit_xsmod(S: CrossedSemiModule) -> str:
    writer = StructureWriter()
    writer.xsmod(S)
    return writer.text()


def emit_xmod(M: CrossedModule) -> str:
    writer = StructureWriter()
    writer.xmod(M)
    return writer.text()


def emit_monoid(M: FiniteMonoid) -> str:
    writer = StructureWriter()
    writer.monoid(M)
    return writer.text()
